//! Exact integer linear algebra on skew-adjacency matrices.
//!
//! Determinants go through Bareiss fraction-free elimination, Pfaffians
//! through the perfect-matching recursion with subset memoization. The two
//! are independent computations and serve as mutual oracles (`pf² = det`).
//!
//! Results are `i128`. By the Hadamard bound an `n×n` ±1 matrix has
//! `|det| <= n^(n/2)`, which stays far inside `i128` through `n = 20`; both
//! entry points reject larger inputs rather than risk overflow.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::tournament::{Tournament, VertexSet};

/// Hard cap for exact determinant and Pfaffian computations.
pub const MAX_LINALG_VERTICES: usize = 20;

/// The skew-adjacency matrix of a tournament: zero diagonal,
/// `entries[i][j] = 1` iff vertex `i+1` dominates vertex `j+1`, `-1` otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewMatrix {
    n: usize,
    entries: Vec<Vec<i8>>,
}

impl SkewMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> i8 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i8>] {
        &self.entries
    }

    /// Rebuilds the tournament from the positive entries.
    pub fn to_tournament(&self) -> Result<Tournament> {
        let bits: Vec<bool> = (0..self.n)
            .flat_map(|i| (i + 1..self.n).map(move |j| (i, j)))
            .map(|(i, j)| self.entries[i][j] == 1)
            .collect();
        Tournament::from_bits(self.n, &bits)
    }
}

/// Transcribes the arcs of `t` into its skew-adjacency matrix.
pub fn skew_matrix(t: &Tournament) -> SkewMatrix {
    let n = t.order();
    let mut entries = vec![vec![0i8; n]; n];
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                entries[i - 1][j - 1] = if t.dominates(i, j) { 1 } else { -1 };
            }
        }
    }
    SkewMatrix { n, entries }
}

/// `det(S_T)`: zero for odd `n`, the square of an odd integer for even `n`.
pub fn determinant(t: &Tournament) -> Result<i128> {
    let n = t.order();
    if n > MAX_LINALG_VERTICES {
        return Err(Error::capacity(format!(
            "determinant capped at {MAX_LINALG_VERTICES} vertices, got {n}"
        )));
    }
    Ok(det_induced(t, t.full_set()))
}

/// Determinant of the subtournament induced by `x`, computed directly from
/// the dominance bits without building the subtournament. `x` must be a
/// nonempty subset of the vertices and at most [`MAX_LINALG_VERTICES`] large.
pub(crate) fn det_induced(t: &Tournament, x: VertexSet) -> i128 {
    let verts = x.to_vec();
    let m = verts.len();
    debug_assert!((1..=MAX_LINALG_VERTICES).contains(&m));
    if m % 2 == 1 {
        // Odd skew-symmetric matrices are singular.
        return 0;
    }
    let mut mat = vec![0i128; m * m];
    for a in 0..m {
        for b in 0..m {
            if a != b {
                mat[a * m + b] = if t.dominates(verts[a], verts[b]) {
                    1
                } else {
                    -1
                };
            }
        }
    }
    bareiss_det(&mut mat, m)
}

/// Fraction-free Gaussian elimination; exact over the integers. `mat` is a
/// row-major `n×n` buffer and is consumed as scratch space.
pub(crate) fn bareiss_det(mat: &mut [i128], n: usize) -> i128 {
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if mat[k * n + k] == 0 {
            // Pivot by row swap; determinant is zero if the column is dead.
            let swap = (k + 1..n).find(|&r| mat[r * n + k] != 0);
            match swap {
                Some(r) => {
                    for c in 0..n {
                        mat.swap(k * n + c, r * n + c);
                    }
                    sign = -sign;
                }
                None => return 0,
            }
        }
        let pivot = mat[k * n + k];
        for i in k + 1..n {
            for j in k + 1..n {
                let val = pivot * mat[i * n + j] - mat[i * n + k] * mat[k * n + j];
                mat[i * n + j] = val / prev;
            }
            mat[i * n + k] = 0;
        }
        prev = pivot;
    }
    sign * mat[(n - 1) * n + (n - 1)]
}

/// The Pfaffian of `S_T` for even-order `t`, with the sign fixed by the
/// perfect-matching expansion in identity vertex order. `pf(T)² = det(T)`.
pub fn pfaffian(t: &Tournament) -> Result<i128> {
    let n = t.order();
    if n % 2 == 1 {
        return Err(Error::argument(format!(
            "Pfaffian requires even order, got {n}"
        )));
    }
    if n > MAX_LINALG_VERTICES {
        return Err(Error::capacity(format!(
            "Pfaffian capped at {MAX_LINALG_VERTICES} vertices, got {n}"
        )));
    }
    let full = t.full_set().mask();
    let mut memo: HashMap<u64, i128> = HashMap::new();
    Ok(pf_rec(t, full, &mut memo))
}

/// Expansion along the lowest remaining vertex: pairing it with the `k`-th
/// remaining vertex carries sign `(-1)^(k+1)`.
fn pf_rec(t: &Tournament, mask: u64, memo: &mut HashMap<u64, i128>) -> i128 {
    if mask == 0 {
        return 1;
    }
    if let Some(&v) = memo.get(&mask) {
        return v;
    }
    let first = mask.trailing_zeros() as usize + 1;
    let rest = mask & (mask - 1);
    let mut total = 0i128;
    let mut sign = 1i128;
    let mut others = rest;
    while others != 0 {
        let j = others.trailing_zeros() as usize + 1;
        others &= others - 1;
        let entry = if t.dominates(first, j) { 1 } else { -1 };
        let sub = pf_rec(t, rest & !(1u64 << (j - 1)), memo);
        total += sign * entry * sub;
        sign = -sign;
    }
    memo.insert(mask, total);
    total
}

/// Integer square root of a perfect square; `None` when not a square.
pub fn exact_sqrt(v: i128) -> Option<i128> {
    if v < 0 {
        return None;
    }
    let mut r = (v as f64).sqrt() as i128;
    while r * r > v {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= v {
        r += 1;
    }
    (r * r == v).then_some(r)
}
