//! Diamond detection and the diamond census δ.
//!
//! A diamond is a 4-tournament with one vertex dominating, or dominated by,
//! a 3-cycle on the other three; equivalently a 4-tournament of determinant 9
//! (every other 4-tournament has determinant 1).

use crate::error::{Error, Result};
use crate::linalg;
use crate::tournament::{Tournament, VertexSet};

/// Census result: δ plus the witnessing 4-subsets in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiamondCensus {
    pub delta: usize,
    pub witnesses: Vec<VertexSet>,
}

pub const MAX_CENSUS_VERTICES: usize = 16;

/// Structural diamond test on four vertices of `t`, by bit arithmetic.
pub(crate) fn is_diamond_at(t: &Tournament, quad: [usize; 4]) -> bool {
    // One of the four must relate uniformly to the other three, and those
    // three must form a 3-cycle.
    for apex in 0..4 {
        let mut others = [0usize; 3];
        let mut k = 0;
        for (idx, &v) in quad.iter().enumerate() {
            if idx != apex {
                others[k] = v;
                k += 1;
            }
        }
        let a = quad[apex];
        let d0 = t.dominates(a, others[0]);
        if t.dominates(a, others[1]) != d0 || t.dominates(a, others[2]) != d0 {
            continue;
        }
        let [x, y, z] = others;
        let cyclic = if t.dominates(x, y) {
            t.dominates(y, z) && t.dominates(z, x)
        } else {
            t.dominates(x, z) && t.dominates(z, y) && t.dominates(y, x)
        };
        if cyclic {
            return true;
        }
    }
    false
}

/// Whether a 4-tournament is a diamond. Computes both the structural
/// predicate and the determinant criterion (det = 9) and insists they agree.
pub fn is_diamond(t: &Tournament) -> Result<bool> {
    if t.order() != 4 {
        return Err(Error::argument(format!(
            "diamond test needs exactly 4 vertices, got {}",
            t.order()
        )));
    }
    let structural = is_diamond_at(t, [1, 2, 3, 4]);
    let by_det = linalg::determinant(t)? == 9;
    if structural != by_det {
        return Err(Error::invariant(format!(
            "diamond predicates disagree on {t:?}"
        )));
    }
    Ok(structural)
}

/// Exact diamond census over all 4-subsets.
pub fn diamond_census(t: &Tournament) -> Result<DiamondCensus> {
    let n = t.order();
    if n > MAX_CENSUS_VERTICES {
        return Err(Error::capacity(format!(
            "diamond census capped at {MAX_CENSUS_VERTICES} vertices, got {n}"
        )));
    }
    let mut witnesses = Vec::new();
    if n >= 4 {
        for a in 1..=n - 3 {
            for b in a + 1..=n - 2 {
                for c in b + 1..=n - 1 {
                    for d in c + 1..=n {
                        if is_diamond_at(t, [a, b, c, d]) {
                            witnesses.push(VertexSet::from_vertices([a, b, c, d]));
                        }
                    }
                }
            }
        }
    }
    Ok(DiamondCensus {
        delta: witnesses.len(),
        witnesses,
    })
}

/// Count-only census, skipping witness collection.
pub(crate) fn delta(t: &Tournament) -> usize {
    let n = t.order();
    let mut count = 0;
    if n >= 4 {
        for a in 1..=n - 3 {
            for b in a + 1..=n - 2 {
                for c in b + 1..=n - 1 {
                    for d in c + 1..=n {
                        count += is_diamond_at(t, [a, b, c, d]) as usize;
                    }
                }
            }
        }
    }
    count
}

/// Checks that δ is 0 or lies in the band `n-3 ..= (2/5)·C(n,4)`.
pub fn check_delta_bounds(t: &Tournament) -> Result<bool> {
    let n = t.order();
    if n < 5 {
        return Err(Error::argument(format!(
            "delta bounds are stated for n >= 5, got {n}"
        )));
    }
    let d = delta(t);
    Ok(delta_in_bounds(n, d))
}

pub(crate) fn delta_in_bounds(n: usize, d: usize) -> bool {
    if d == 0 {
        return true;
    }
    let choose4 = binomial(n, 4);
    // d <= (2/5)·C(n,4) compared exactly as 5d <= 2·C(n,4)
    d >= n - 3 && 5 * (d as u128) <= 2 * choose4
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}
