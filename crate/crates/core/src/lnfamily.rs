//! The alternating one-vertex-extension family `L_n` and its determinants.
//!
//! `L_n` is a transitive chain `u_1 -> ... -> u_{n-1}` plus a last vertex
//! whose arcs against the chain alternate fully, starting with domination:
//! `ψ(u_n) = (1,-1,1,...)`. For even `n` its determinant is `(n-1)²`, the
//! largest any even `n`-tournament built over a transitive `(n-1)`-set can
//! reach, and its induced subtournaments realize every smaller odd square.

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::linalg::{self, bareiss_det};
use crate::patterns::{psi, PsiPattern};
use crate::tournament::{Tournament, VertexSet};

pub const MAX_LN_VERTICES: usize = 20;

/// Builds `L_n`.
pub fn make_ln(n: usize) -> Result<Tournament> {
    if !(2..=MAX_LN_VERTICES).contains(&n) {
        return Err(Error::capacity(format!(
            "L_n is built for 2..={MAX_LN_VERTICES}, got {n}"
        )));
    }
    Ok(one_vertex_extension(n, alternating_mask(n)))
}

/// The arc mask of the fully alternating last vertex: bit `i-1` set means
/// `i -> n`, which happens exactly for even `i`.
pub(crate) fn alternating_mask(n: usize) -> u64 {
    let mut mask = 0u64;
    for i in 1..n {
        if i % 2 == 0 {
            mask |= 1 << (i - 1);
        }
    }
    mask
}

/// The tournament on a transitive chain `1 -> ... -> n-1` plus vertex `n`
/// whose incoming arcs are given by `mask` (bit `i-1` set ⇔ `i -> n`).
pub(crate) fn one_vertex_extension(n: usize, mask: u64) -> Tournament {
    let mut bits = Vec::with_capacity(n * (n - 1) / 2);
    for i in 1..=n {
        for j in i + 1..=n {
            if j < n {
                bits.push(true);
            } else {
                bits.push(mask >> (i - 1) & 1 == 1);
            }
        }
    }
    Tournament::from_bits(n, &bits).expect("extension bits are well formed")
}

/// The bordered-determinant family underlying the `L_n` recurrence: value of
/// the `m×m` determinant with first column `(+1,-1,+1,...)` and the shifted
/// transitive skew pattern in the remaining columns. Evaluated two ways —
/// directly and through the recurrence `Q_m = 2 - Q_{m-1}` (odd `m >= 5`),
/// `Q_m = -Q_{m-1}` (even `m >= 4`), seeded at `Q_3 = 3` — and checked equal.
pub fn q_value(m: usize) -> Result<i128> {
    if m < 3 {
        return Err(Error::argument(format!("Q_m needs m >= 3, got {m}")));
    }
    if m > MAX_LN_VERTICES {
        return Err(Error::capacity(format!(
            "Q_m capped at {MAX_LN_VERTICES}, got {m}"
        )));
    }
    let direct = q_direct(m);
    let mut rec = 3i128; // Q_3
    for k in 4..=m {
        rec = if k % 2 == 0 { -rec } else { 2 - rec };
    }
    if direct != rec {
        return Err(Error::invariant(format!(
            "Q_{m} disagrees: direct {direct}, recurrence {rec}"
        )));
    }
    Ok(direct)
}

/// Entry rule: column 1 row r is `(-1)^(r-1)`; column c >= 2 is 0 on row
/// `c-1`, +1 above it, -1 below it.
fn q_direct(m: usize) -> i128 {
    let mut mat = vec![0i128; m * m];
    for r in 1..=m {
        for c in 1..=m {
            mat[(r - 1) * m + (c - 1)] = if c == 1 {
                if r % 2 == 1 {
                    1
                } else {
                    -1
                }
            } else if r == c - 1 {
                0
            } else if r < c - 1 {
                1
            } else {
                -1
            };
        }
    }
    bareiss_det(&mut mat, m)
}

/// `det(L_n) = (n-1)²` for even `n`, cross-checked against the direct
/// determinant and the recurrence `det(L_n) = det(L_{n-2}) + 4(n-2)`.
pub fn ln_det(n: usize) -> Result<i128> {
    if n % 2 == 1 {
        return Err(Error::argument(format!(
            "the determinant formula needs even order, got {n}"
        )));
    }
    let closed = ((n as i128) - 1) * ((n as i128) - 1);
    let direct = linalg::determinant(&make_ln(n)?)?;
    if direct != closed {
        return Err(Error::invariant(format!(
            "det(L_{n}) disagrees: direct {direct}, closed form {closed}"
        )));
    }
    if n >= 4 {
        let prev = linalg::determinant(&make_ln(n - 2)?)?;
        if direct != prev + 4 * (n as i128 - 2) {
            return Err(Error::invariant(format!(
                "det(L_{n}) breaks the recurrence from det(L_{})",
                n - 2
            )));
        }
    }
    Ok(closed)
}

/// Whether `t` is isomorphic to `L_n`: some vertex leaves a transitive rest
/// and alternates fully against it, starting positive.
pub fn is_ln(t: &Tournament) -> bool {
    ln_ordering(t).is_some()
}

/// If `t ≅ L_n`, the vertex order realizing it (chain first, special vertex
/// last); `None` otherwise.
pub fn ln_ordering(t: &Tournament) -> Option<Vec<usize>> {
    let n = t.order();
    if n < 2 {
        return None;
    }
    for v in 1..=n {
        let rest = t.full_set().difference(VertexSet::singleton(v));
        if !t.is_transitive_on(rest) {
            continue;
        }
        let Ok(pattern) = psi(t, v, rest) else {
            continue;
        };
        if pattern.alphas == PsiPattern::full_alternation(n - 1) {
            let mut order: Vec<usize> = pattern.blocks.iter().map(|b| b[0]).collect();
            order.push(v);
            return Some(order);
        }
    }
    None
}

/// Report of the sweep over all one-vertex extensions of a transitive
/// `(n-1)`-chain.
#[derive(Clone, Debug)]
pub struct MaxExtensionReport {
    pub n: usize,
    pub population: u64,
    pub max_det: i128,
    /// ψ-patterns of the extensions achieving the maximum.
    pub achievers: Vec<Vec<i32>>,
}

pub const MAX_EXT_SWEEP_VERTICES: usize = 10;

/// Enumerates all `2^(n-1)` one-vertex extensions of the transitive chain,
/// reporting the maximum determinant and the achieving ψ-patterns. For even
/// `n` the maximum is `(n-1)²`, achieved exactly by the two fully
/// alternating patterns.
pub fn max_onevertex_ext_det(n: usize) -> Result<MaxExtensionReport> {
    if n % 2 == 1 {
        return Err(Error::argument(format!(
            "the extension sweep needs even order, got {n}"
        )));
    }
    if !(2..=MAX_EXT_SWEEP_VERTICES).contains(&n) {
        return Err(Error::capacity(format!(
            "extension sweep capped at {MAX_EXT_SWEEP_VERTICES} vertices, got {n}"
        )));
    }
    let mut max_det = i128::MIN;
    let mut achievers: Vec<Vec<i32>> = Vec::new();
    for mask in 0u64..1 << (n - 1) {
        let t = one_vertex_extension(n, mask);
        let det = linalg::determinant(&t)?;
        let pattern = psi(&t, n, VertexSet::from_vertices(1..n))?;
        if det > max_det {
            max_det = det;
            achievers = vec![pattern.alphas];
        } else if det == max_det {
            achievers.push(pattern.alphas);
        }
    }
    Ok(MaxExtensionReport {
        n,
        population: 1 << (n - 1),
        max_det,
        achievers,
    })
}

/// Convenience: `canonical_form` equality with `make_ln`, usable while the
/// canonical-form search stays feasible.
pub fn is_ln_by_canon(t: &Tournament) -> Result<bool> {
    let reference = make_ln(t.order())?;
    Ok(canonical_form(t)? == canonical_form(&reference)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn small_members() {
        assert_eq!(make_ln(4).unwrap().to_bit_string(), "110110");
        assert!(make_ln(2).unwrap().is_transitive());
        let l6 = make_ln(6).unwrap();
        assert_eq!(l6.to_bit_string(), "111101111110110");
        assert_eq!(linalg::determinant(&l6).unwrap(), 25);
        assert!(matches!(make_ln(1), Err(Error::Capacity(_))));
    }

    #[test]
    fn q_values() {
        assert_eq!(q_value(3).unwrap(), 3);
        assert_eq!(q_value(4).unwrap(), -3);
        assert_eq!(q_value(5).unwrap(), 5);
        assert_eq!(q_value(15).unwrap(), 15);
        for m in (3..=15).step_by(2) {
            assert_eq!(q_value(m).unwrap(), m as i128);
        }
        assert!(matches!(q_value(2), Err(Error::Argument(_))));
    }

    #[test]
    fn determinant_closed_form_and_recurrence() {
        assert_eq!(ln_det(2).unwrap(), 1);
        assert_eq!(ln_det(8).unwrap(), 49);
        assert_eq!(ln_det(16).unwrap(), 225);
        for n in (2..=16).step_by(2) {
            assert_eq!(ln_det(n).unwrap(), ((n as i128) - 1).pow(2));
        }
        assert!(matches!(ln_det(7), Err(Error::Argument(_))));
    }

    #[test]
    fn recognition_under_relabeling() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in [2usize, 4, 6, 8] {
            let l = make_ln(n).unwrap();
            assert!(is_ln(&l));
            for _ in 0..20 {
                let mut p: Vec<usize> = (1..=n).collect();
                p.shuffle(&mut rng);
                assert!(is_ln(&l.relabel(&p).unwrap()));
            }
        }
        assert!(!is_ln(&Tournament::transitive(6).unwrap()));
        assert!(!is_ln(&make_ln(4).unwrap().converse()));
    }

    #[test]
    fn structural_recognizer_matches_canonical_route() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for n in 4..=8 {
            for _ in 0..60 {
                let t = Tournament::random(n, &mut rng).unwrap();
                assert_eq!(is_ln(&t), is_ln_by_canon(&t).unwrap());
            }
        }
    }

    #[test]
    fn ln_ordering_realizes_the_structure() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let l6 = make_ln(6).unwrap();
        let mut p: Vec<usize> = (1..=6).collect();
        p.shuffle(&mut rng);
        let shuffled = l6.relabel(&p).unwrap();
        let order = ln_ordering(&shuffled).unwrap();
        assert_eq!(shuffled.relabel(&order).unwrap(), l6);
    }

    #[test]
    fn extension_sweep() {
        let r = max_onevertex_ext_det(4).unwrap();
        assert_eq!(r.max_det, 9);
        let mut pats = r.achievers.clone();
        pats.sort();
        assert_eq!(pats, vec![vec![-1, 1, -1], vec![1, -1, 1]]);

        let r6 = max_onevertex_ext_det(6).unwrap();
        assert_eq!(r6.max_det, 25);
        assert_eq!(r6.achievers.len(), 2);
        assert!(r6.achievers.iter().all(|a| a.len() == 5));

        let r2 = max_onevertex_ext_det(2).unwrap();
        assert_eq!(r2.max_det, 1);
    }

    #[test]
    fn induced_four_subsets_of_l6() {
        // Diamonds of L_6 hit alternating singleton blocks of the special
        // vertex. {1,2,3,6} alternates (+,-,+) and is a diamond; {1,2,4,6}
        // has blocks 2 and 4 of equal sign, so it is not (its brute-force
        // determinant is 1, not 9).
        let l6 = make_ln(6).unwrap();
        let chain = l6.induce(VertexSet::from_vertices(1..=5)).unwrap();
        assert_eq!(chain.transitive_order(), Some(vec![1, 2, 3, 4, 5]));
        let diamond = l6.induce(VertexSet::from_vertices([1, 2, 3, 6])).unwrap();
        assert_eq!(linalg::determinant(&diamond).unwrap(), 9);
        let not_diamond = l6.induce(VertexSet::from_vertices([1, 2, 4, 6])).unwrap();
        assert_eq!(linalg::determinant(&not_diamond).unwrap(), 1);
    }

    #[test]
    fn ln_sits_strictly_between_levels() {
        use crate::classify::in_dk;
        for k in [3u32, 5, 7, 9] {
            let l = make_ln(k as usize + 1).unwrap();
            assert!(in_dk(&l, k).unwrap());
            assert!(!in_dk(&l, k - 2).unwrap());
        }
    }

    #[test]
    fn induced_subtournament_spectrum_of_l8() {
        // Everything below (n-1)² appears among induced subtournaments and
        // nothing above it: the spectrum of L_8 is {0, 1, 9, 25, 49}.
        let l8 = make_ln(8).unwrap();
        let mut dets = std::collections::BTreeSet::new();
        for mask in 1u64..1 << 8 {
            let x = VertexSet::from_mask(mask);
            dets.insert(linalg::determinant(&l8.induce(x).unwrap()).unwrap());
        }
        let expected: std::collections::BTreeSet<i128> = [0, 1, 9, 25, 49].into_iter().collect();
        assert_eq!(dets, expected);
    }
}
