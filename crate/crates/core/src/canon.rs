//! Canonical labeling under isomorphism.
//!
//! The canonical form of a tournament is the relabeling whose encoding bit
//! string (canonical pair order, see [`Tournament`]) is lexicographically
//! minimal. Exact search over permutations, pruned hard enough to stay fast
//! through `n = 10`.

use crate::error::{Error, Result};
use crate::tournament::Tournament;

pub const MAX_CANON_VERTICES: usize = 10;

/// Lexicographically minimal relabeling of `t`. Identical for isomorphic
/// inputs, and idempotent.
pub fn canonical_form(t: &Tournament) -> Result<Tournament> {
    Ok(canonical_labeling(t)?.0)
}

/// Canonical form plus one permutation that realizes it (new vertex `k` is
/// old vertex `perm[k-1]`).
pub fn canonical_labeling(t: &Tournament) -> Result<(Tournament, Vec<usize>)> {
    let n = t.order();
    if n > MAX_CANON_VERTICES {
        return Err(Error::capacity(format!(
            "canonical form capped at {MAX_CANON_VERTICES} vertices, got {n}"
        )));
    }
    if n == 1 {
        return Ok((t.clone(), vec![1]));
    }

    // In the minimal string, row 1 is 0^k 1^(n-1-k) with k maximal, so the
    // first vertex must have maximum in-degree; cheap and sound pruning.
    let max_in = (1..=n).map(|v| n - 1 - t.out_degree(v)).max().unwrap();
    let firsts: Vec<usize> = (1..=n)
        .filter(|&v| n - 1 - t.out_degree(v) == max_in)
        .collect();

    let mut best_key = u128::MAX;
    let mut best_perm: Vec<usize> = Vec::new();
    let mut perm = vec![0usize; n];
    let mut used = vec![false; n + 1];

    for &f in &firsts {
        perm[0] = f;
        used[f] = true;
        search(t, n, &mut perm, &mut used, 1, &mut best_key, &mut best_perm);
        used[f] = false;
    }

    let canon = t.relabel(&best_perm)?;
    debug_assert_eq!(canon.bit_key(), best_key);
    Ok((canon, best_perm))
}

/// Depth-first extension of the permutation. At each leaf the full key is
/// streamed row by row against the best key so far, aborting at the first
/// losing row; prefixes shared between siblings therefore die early.
fn search(
    t: &Tournament,
    n: usize,
    perm: &mut Vec<usize>,
    used: &mut Vec<bool>,
    depth: usize,
    best_key: &mut u128,
    best_perm: &mut Vec<usize>,
) {
    if depth == n {
        if let Some(key) = key_if_not_worse(t, n, perm, *best_key) {
            if key < *best_key || best_perm.is_empty() {
                *best_key = key;
                *best_perm = perm.clone();
            }
        }
        return;
    }
    for v in 1..=n {
        if used[v] {
            continue;
        }
        perm[depth] = v;
        // Prune on the bits of row 1 that are already determined: positions
        // 2..=depth+1 of the final ordering.
        if !row1_prefix_ok(t, perm, depth + 1, *best_key, n) {
            continue;
        }
        used[v] = true;
        search(t, n, perm, used, depth + 1, best_key, best_perm);
        used[v] = false;
    }
}

fn row1_prefix_ok(t: &Tournament, perm: &[usize], placed: usize, best_key: u128, n: usize) -> bool {
    if best_key == u128::MAX {
        return true;
    }
    let pairs = n * (n - 1) / 2;
    for j in 2..=placed {
        let bit = t.dominates(perm[0], perm[j - 1]) as u128;
        let best_bit = best_key >> (pairs - (j - 1)) & 1;
        if bit != best_bit {
            return bit < best_bit;
        }
    }
    true
}

fn key_if_not_worse(t: &Tournament, n: usize, perm: &[usize], best: u128) -> Option<u128> {
    let pairs = n * (n - 1) / 2;
    let mut key = 0u128;
    let mut emitted = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            key = key << 1 | t.dominates(perm[i - 1], perm[j - 1]) as u128;
            emitted += 1;
        }
        // Compare after each complete row.
        if best != u128::MAX {
            let best_prefix = best >> (pairs - emitted);
            if key > best_prefix {
                return None;
            }
        }
    }
    Some(key)
}
