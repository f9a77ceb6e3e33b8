//! The switch operation and switching-equivalence testing.
//!
//! Switching with respect to `W` reverses every arc between `W` and its
//! complement and is an involution; `W` and its complement induce the same
//! switch. Labeled switching equivalence of two tournaments is decided
//! constructively through ±1 diagonal similarity of their skew matrices:
//! fix `d_1 = +1`, propagate `d_j = s2[1][j] * s1[1][j]`, verify all pairs.

use crate::canon::{canonical_form, MAX_CANON_VERTICES};
use crate::error::{Error, Result};
use crate::tournament::{Tournament, VertexSet};

/// Reverses all arcs between `w` and its complement.
pub fn switch(t: &Tournament, w: VertexSet) -> Tournament {
    let n = t.order();
    let mut bits = Vec::with_capacity(t.pair_count());
    for i in 1..=n {
        for j in i + 1..=n {
            let crossing = w.contains(i) != w.contains(j);
            bits.push(t.dominates(i, j) ^ crossing);
        }
    }
    Tournament::from_bits(n, &bits).expect("switch preserves shape")
}

/// Finds a switch set `W` with `switch(t1, W) = t2`, if the two labeled
/// tournaments are switching equivalent. The returned set never contains
/// vertex 1.
pub fn switching_equivalent_labeled(t1: &Tournament, t2: &Tournament) -> Option<VertexSet> {
    if t1.order() != t2.order() {
        return None;
    }
    let n = t1.order();
    if n == 1 {
        return Some(VertexSet::EMPTY);
    }
    // d[v] = +1 keeps v out of W, -1 puts it in; d1 is pinned to +1.
    let mut w = VertexSet::EMPTY;
    for j in 2..=n {
        let s1 = t1.dominates(1, j);
        let s2 = t2.dominates(1, j);
        if s1 != s2 {
            w.insert(j);
        }
    }
    (switch(t1, w) == *t2).then_some(w)
}

pub const MAX_SWITCH_CANON_VERTICES: usize = MAX_CANON_VERTICES;

/// Enumerates the `2^(n-1)` distinct switches of `t` (vertex 1 pinned out of
/// the switch set, since complements coincide).
pub fn distinct_switches(t: &Tournament) -> impl Iterator<Item = (VertexSet, Tournament)> + '_ {
    let n = t.order();
    (0u64..1 << (n - 1)).map(move |m| {
        let w = VertexSet::from_mask(m << 1);
        (w, switch(t, w))
    })
}

/// Canonical representative of the unlabeled switching class: the minimal
/// [`canonical_form`] over all distinct switches. Two tournaments get the
/// same value exactly when one can be relabeled into a switch of the other.
pub fn switching_canonical(t: &Tournament) -> Result<Tournament> {
    let n = t.order();
    if n > MAX_SWITCH_CANON_VERTICES {
        return Err(Error::capacity(format!(
            "switching canonical form capped at {MAX_SWITCH_CANON_VERTICES} vertices, got {n}"
        )));
    }
    let mut best: Option<Tournament> = None;
    for (_, s) in distinct_switches(t) {
        let c = canonical_form(&s)?;
        if best.as_ref().is_none_or(|b| c.bit_key() < b.bit_key()) {
            best = Some(c);
        }
    }
    Ok(best.expect("at least the empty switch exists"))
}
