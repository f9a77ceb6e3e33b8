//! Blowups: replacing base vertices by whole tournaments.
//!
//! `blowup` glues parts along a base tournament (cross arcs follow the base
//! arc); `transitive_blowup` uses transitive parts of given sizes. The
//! determinant of a transitive blowup collapses to the determinant of the
//! base restricted to the odd-size parts, which `blowup_det_formula` exploits
//! without ever building the big tournament.

use crate::error::{Error, Result};
use crate::linalg;
use crate::patterns::covertices_within;
use crate::tournament::{Tournament, VertexSet, MAX_VERTICES};

/// Base plus one tournament per base vertex.
#[derive(Clone, Debug)]
pub struct BlowupSpec {
    pub base: Tournament,
    pub parts: Vec<Tournament>,
}

impl BlowupSpec {
    pub fn new(base: Tournament, parts: Vec<Tournament>) -> Result<Self> {
        if parts.len() != base.order() {
            return Err(Error::argument(format!(
                "base has {} vertices but {} parts were given",
                base.order(),
                parts.len()
            )));
        }
        let total: usize = parts.iter().map(|p| p.order()).sum();
        if total > MAX_VERTICES {
            return Err(Error::capacity(format!(
                "blowup with {total} vertices exceeds {MAX_VERTICES}"
            )));
        }
        Ok(BlowupSpec { base, parts })
    }

    pub fn transitive(base: Tournament, counts: &[usize]) -> Result<Self> {
        if counts.contains(&0) {
            return Err(Error::argument("part sizes must be at least 1"));
        }
        let parts = counts
            .iter()
            .map(|&a| Tournament::transitive(a))
            .collect::<Result<Vec<_>>>()?;
        BlowupSpec::new(base, parts)
    }
}

/// Builds the blowup. Part `i`'s vertices occupy a consecutive index range,
/// in base-vertex order; the second component maps each part to its range.
pub fn blowup(spec: &BlowupSpec) -> Result<(Tournament, Vec<VertexSet>)> {
    let total: usize = spec.parts.iter().map(|p| p.order()).sum();
    let mut offsets = Vec::with_capacity(spec.parts.len());
    let mut acc = 0usize;
    for p in &spec.parts {
        offsets.push(acc);
        acc += p.order();
    }
    let mut bits = Vec::with_capacity(total * (total - 1) / 2);
    let part_of = |v: usize| -> usize {
        offsets
            .iter()
            .rposition(|&o| o < v)
            .expect("vertex belongs to a part")
    };
    for i in 1..=total {
        for j in i + 1..=total {
            let (pi, pj) = (part_of(i), part_of(j));
            let bit = if pi == pj {
                spec.parts[pi].dominates(i - offsets[pi], j - offsets[pj])
            } else {
                spec.base.dominates(pi + 1, pj + 1)
            };
            bits.push(bit);
        }
    }
    let t = Tournament::from_bits(total, &bits)?;
    let map = spec
        .parts
        .iter()
        .zip(&offsets)
        .map(|(p, &o)| VertexSet::from_vertices(o + 1..=o + p.order()))
        .collect();
    Ok((t, map))
}

/// The transitive `(a_1, ..., a_n)`-blowup of `base`.
pub fn transitive_blowup(base: &Tournament, counts: &[usize]) -> Result<Tournament> {
    let spec = BlowupSpec::transitive(base.clone(), counts)?;
    Ok(blowup(&spec)?.0)
}

/// Determinant of the transitive blowup, computed on the base alone:
/// `det(base[U])` with `U` the odd-size parts, or 1 when `U` is empty.
pub fn blowup_det_formula(base: &Tournament, counts: &[usize]) -> Result<i128> {
    if counts.len() != base.order() {
        return Err(Error::argument(format!(
            "base has {} vertices but {} counts were given",
            base.order(),
            counts.len()
        )));
    }
    if counts.contains(&0) {
        return Err(Error::argument("part sizes must be at least 1"));
    }
    let odd = VertexSet::from_vertices(
        counts
            .iter()
            .enumerate()
            .filter(|(_, &a)| a % 2 == 1)
            .map(|(i, _)| i + 1),
    );
    if odd.is_empty() {
        return Ok(1);
    }
    linalg::determinant(&base.induce(odd)?)
}

/// For a blowup with a non-transitive part, returns a vertex subset of the
/// built blowup whose induced determinant equals `9 · det(base)`: a 3-cycle
/// inside the first non-transitive part plus one representative per other
/// part.
pub fn nine_det_witness(spec: &BlowupSpec) -> Result<VertexSet> {
    if spec.base.order() < 2 {
        return Err(Error::argument("the base needs at least 2 vertices"));
    }
    let bad = spec
        .parts
        .iter()
        .position(|p| !p.is_transitive())
        .ok_or_else(|| Error::argument("every part is transitive"))?;
    let part = &spec.parts[bad];
    let m = part.order();
    let mut cycle = None;
    'search: for a in 1..=m {
        for b in a + 1..=m {
            for c in b + 1..=m {
                let fwd = part.dominates(a, b) && part.dominates(b, c) && part.dominates(c, a);
                let bwd = part.dominates(a, c) && part.dominates(c, b) && part.dominates(b, a);
                if fwd || bwd {
                    cycle = Some([a, b, c]);
                    break 'search;
                }
            }
        }
    }
    let cycle = cycle.expect("non-transitive tournaments contain a 3-cycle");

    let mut offsets = Vec::with_capacity(spec.parts.len());
    let mut acc = 0usize;
    for p in &spec.parts {
        offsets.push(acc);
        acc += p.order();
    }
    let mut witness = VertexSet::EMPTY;
    for &v in &cycle {
        witness.insert(offsets[bad] + v);
    }
    for (i, &o) in offsets.iter().enumerate() {
        if i != bad {
            witness.insert(o + 1);
        }
    }
    Ok(witness)
}

/// Attempts to see `t` as a transitive blowup: vertices are grouped into the
/// connected components of the covertex graph, which are transitive modules
/// whenever `t` really is such a blowup. Returns the quotient (base) and the
/// partition in base-vertex order, or `None` when every class is a singleton
/// or the grouping fails to verify.
pub fn detect_blowup_structure(t: &Tournament) -> Result<Option<(Tournament, Vec<VertexSet>)>> {
    let n = t.order();
    if n > 16 {
        return Err(Error::capacity(format!(
            "blowup detection capped at 16 vertices, got {n}"
        )));
    }
    let full = t.full_set();
    // Union-find over covertex pairs; roots end up as class minima.
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for u in 1..=n {
        for v in u + 1..=n {
            if covertices_within(t, u, v, full) {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                if ru != rv {
                    parent[ru.max(rv)] = ru.min(rv);
                }
            }
        }
    }
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut reps: Vec<usize> = Vec::new();
    for v in 1..=n {
        let r = find(&mut parent, v);
        match reps.iter().position(|&x| x == r) {
            Some(k) => classes[k].insert(v),
            None => {
                reps.push(r);
                classes.push(VertexSet::singleton(v));
            }
        }
    }
    if classes.iter().all(|c| c.len() == 1) {
        return Ok(None);
    }
    // Verify each class is a transitive module before claiming structure.
    for class in &classes {
        if !t.is_transitive_on(*class) {
            return Ok(None);
        }
        let members = class.to_vec();
        let lead = members[0];
        for w in full.difference(*class).iter() {
            if members
                .iter()
                .any(|&m| t.dominates(m, w) != t.dominates(lead, w))
            {
                return Ok(None);
            }
        }
    }
    let rep_set = VertexSet::from_vertices(reps.iter().copied());
    let base = t.induce(rep_set)?;
    Ok(Some((base, classes)))
}
