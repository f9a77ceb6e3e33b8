//! The ψ-encoding of a vertex against a transitive subset, the θ sign, and
//! covertex/revertex detection.
//!
//! For `u ∉ X` with `t[X]` transitive in the order `v_1 -> ... -> v_k`,
//! `psi(t, u, X)` is the maximal-run signed composition `(α_1, ..., α_t)` of
//! `k`: consecutive blocks of the order that `u` dominates (positive α) or is
//! dominated by (negative α), with strictly alternating signs.

use crate::error::{Error, Result};
use crate::tournament::{Tournament, VertexSet};

/// A signed run-length pattern with its block partition. `blocks[i]` holds
/// the vertices of the `i`-th run, in transitive order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiPattern {
    pub alphas: Vec<i32>,
    pub blocks: Vec<Vec<usize>>,
}

impl PsiPattern {
    pub fn runs(&self) -> usize {
        self.alphas.len()
    }

    pub fn width(&self) -> usize {
        self.alphas.iter().map(|a| a.unsigned_abs() as usize).sum()
    }

    /// The fully alternating pattern `(1,-1,1,...)` of the given width.
    pub fn full_alternation(width: usize) -> Vec<i32> {
        (0..width)
            .map(|i| if i % 2 == 0 { 1 } else { -1 })
            .collect()
    }

    /// Renders like `+1 -2 +1`.
    pub fn display(&self) -> String {
        self.alphas
            .iter()
            .map(|a| format!("{a:+}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Computes `ψ_t(u, x)`. Fails if `u ∈ x` or `t[x]` is not transitive.
pub fn psi(t: &Tournament, u: usize, x: VertexSet) -> Result<PsiPattern> {
    if x.contains(u) {
        return Err(Error::argument(format!("vertex {u} lies inside the set")));
    }
    if u < 1 || u > t.order() || !x.is_subset_of(t.full_set()) {
        return Err(Error::argument("vertex or set out of range"));
    }
    if x.is_empty() {
        return Err(Error::argument("psi needs a nonempty transitive set"));
    }
    let sub = t.induce(x)?;
    let order_rel = sub
        .transitive_order()
        .ok_or_else(|| Error::structure(format!("{x:?} does not induce a transitive set")))?;
    let xs = x.to_vec();
    let order: Vec<usize> = order_rel.into_iter().map(|k| xs[k - 1]).collect();

    let mut alphas: Vec<i32> = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        let sign = if t.dominates(u, v) { 1 } else { -1 };
        match alphas.last_mut() {
            Some(last) if last.signum() == sign => {
                *last += sign;
                blocks.last_mut().unwrap().push(v);
            }
            _ => {
                alphas.push(sign);
                blocks.push(vec![v]);
            }
        }
    }
    Ok(PsiPattern { alphas, blocks })
}

/// `+1` iff `u` dominates `v`.
pub fn theta(t: &Tournament, u: usize, v: usize) -> Result<i32> {
    Ok(if t.try_dominates(u, v)? { 1 } else { -1 })
}

/// True iff every third vertex relates to `u` and `v` identically.
pub fn covertices(t: &Tournament, u: usize, v: usize) -> Result<bool> {
    t.try_dominates(u, v)?;
    Ok(covertices_within(t, u, v, t.full_set()))
}

/// True iff every third vertex relates to `u` and `v` oppositely.
pub fn revertices(t: &Tournament, u: usize, v: usize) -> Result<bool> {
    t.try_dominates(u, v)?;
    Ok(revertices_within(t, u, v, t.full_set()))
}

/// Covertex test with the third vertices restricted to `scope`.
pub(crate) fn covertices_within(t: &Tournament, u: usize, v: usize, scope: VertexSet) -> bool {
    let uv = VertexSet::from_vertices([u, v]);
    let others = scope.difference(uv);
    let ou = t.out_set(u).intersection(others);
    let ov = t.out_set(v).intersection(others);
    ou == ov
}

/// Revertex test with the third vertices restricted to `scope`.
pub(crate) fn revertices_within(t: &Tournament, u: usize, v: usize, scope: VertexSet) -> bool {
    let uv = VertexSet::from_vertices([u, v]);
    let others = scope.difference(uv);
    let ou = t.out_set(u).intersection(others);
    let ov = t.out_set(v).intersection(others);
    ou == others.difference(ov)
}
