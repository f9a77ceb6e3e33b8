//! The tournament value type and its basic constructions.
//!
//! A tournament on `n` vertices orients every pair of distinct vertices.
//! Vertices are numbered `1..=n` everywhere in the public API. The canonical
//! bit encoding lists the upper-triangle pairs in row-major order
//! `(1,2),(1,3),...,(1,n),(2,3),...,(n-1,n)`; the bit for pair `(i,j)` with
//! `i < j` is `1` exactly when `i` dominates `j`.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};

/// Hard cap on the vertex count so a vertex subset fits in one machine word.
pub const MAX_VERTICES: usize = 64;

/// A subset of the vertices `{1..n}` of some tournament, stored as a bit mask
/// (bit `v-1` represents vertex `v`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    /// The full vertex set `{1..n}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        VertexSet(1u64 << (v - 1))
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        let mut s = VertexSet(0);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 >> (v - 1) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        self.0 |= 1u64 << (v - 1);
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        self.0 &= !(1u64 << (v - 1));
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 ^ other.0)
    }

    pub fn complement(self, n: usize) -> VertexSet {
        VertexSet(VertexSet::full(n).0 & !self.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Vertices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize + 1;
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Compares two sets as their ascending vertex sequences (a proper prefix
    /// sorts first). This is the tie-break order used wherever an operation
    /// promises the "lexicographically least" subset.
    pub fn lex_cmp(self, other: VertexSet) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }

    /// All `k`-element subsets of `{1..n}` in lexicographic order of their
    /// ascending vertex sequences.
    pub fn combinations(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
        let mut current: Option<Vec<usize>> = if k <= n {
            Some((1..=k).collect())
        } else {
            None
        };
        std::iter::from_fn(move || {
            let cur = current.as_mut()?;
            let result = VertexSet::from_vertices(cur.iter().copied());
            // Advance to the next combination.
            let mut i = k;
            loop {
                if i == 0 {
                    current = None;
                    break;
                }
                if cur[i - 1] < n - (k - i) {
                    cur[i - 1] += 1;
                    for j in i..k {
                        cur[j] = cur[j - 1] + 1;
                    }
                    break;
                }
                i -= 1;
            }
            Some(result)
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// An `n`-vertex tournament. Immutable value; all operations return new values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tournament {
    n: usize,
    /// `rows[i]` bit `j` is set iff vertex `i+1` dominates vertex `j+1`.
    rows: Vec<u64>,
}

fn check_order(n: usize) -> Result<()> {
    if !(1..=MAX_VERTICES).contains(&n) {
        return Err(Error::capacity(format!(
            "vertex count {n} outside 1..={MAX_VERTICES}"
        )));
    }
    Ok(())
}

impl Tournament {
    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn pair_count(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    /// Builds a tournament from its upper-triangle bits in the canonical pair
    /// order. `bits[p]` for pair `(i,j)`, `i<j`, is true iff `i` dominates `j`.
    pub fn from_bits(n: usize, bits: &[bool]) -> Result<Tournament> {
        check_order(n)?;
        if bits.len() != n * (n - 1) / 2 {
            return Err(Error::format(format!(
                "expected {} bits for a {n}-tournament, got {}",
                n * (n - 1) / 2,
                bits.len()
            )));
        }
        let mut t = Tournament {
            n,
            rows: vec![0; n],
        };
        let mut p = 0;
        for i in 1..=n {
            for j in i + 1..=n {
                t.set_arc_unchecked(i, j, bits[p]);
                p += 1;
            }
        }
        Ok(t)
    }

    /// Parses a string of `'0'`/`'1'` characters in the canonical pair order.
    pub fn from_bit_str(n: usize, s: &str) -> Result<Tournament> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::format(format!("invalid bit character {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Tournament::from_bits(n, &bits)
    }

    pub fn to_bits(&self) -> Vec<bool> {
        let mut bits = Vec::with_capacity(self.pair_count());
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                bits.push(self.dominates(i, j));
            }
        }
        bits
    }

    pub fn to_bit_string(&self) -> String {
        self.to_bits()
            .into_iter()
            .map(|b| if b { '1' } else { '0' })
            .collect()
    }

    /// The single-vertex tournament.
    pub fn single() -> Tournament {
        Tournament {
            n: 1,
            rows: vec![0],
        }
    }

    /// The transitive tournament with `1 -> 2 -> ... -> n` (and all forward arcs).
    pub fn transitive(n: usize) -> Result<Tournament> {
        check_order(n)?;
        let mut t = Tournament {
            n,
            rows: vec![0; n],
        };
        for i in 1..=n {
            for j in i + 1..=n {
                t.set_arc_unchecked(i, j, true);
            }
        }
        Ok(t)
    }

    /// The 3-cycle `1 -> 2 -> 3 -> 1`.
    pub fn three_cycle() -> Tournament {
        Tournament::from_bit_str(3, "101").unwrap()
    }

    /// A uniformly random labeled tournament.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Tournament> {
        check_order(n)?;
        let bits: Vec<bool> = (0..n * (n - 1) / 2).map(|_| rng.random()).collect();
        Tournament::from_bits(n, &bits)
    }

    fn set_arc_unchecked(&mut self, i: usize, j: usize, i_dominates_j: bool) {
        let (a, b) = (i - 1, j - 1);
        if i_dominates_j {
            self.rows[a] |= 1 << b;
            self.rows[b] &= !(1 << a);
        } else {
            self.rows[b] |= 1 << a;
            self.rows[a] &= !(1 << b);
        }
    }

    /// True iff vertex `i` dominates vertex `j`.
    pub fn dominates(&self, i: usize, j: usize) -> bool {
        debug_assert!(i != j && i >= 1 && j >= 1 && i <= self.n && j <= self.n);
        self.rows[i - 1] >> (j - 1) & 1 == 1
    }

    /// Checked variant of [`dominates`](Self::dominates) for API boundaries.
    pub fn try_dominates(&self, i: usize, j: usize) -> Result<bool> {
        if i == j {
            return Err(Error::argument(format!(
                "vertices must differ, got {i} twice"
            )));
        }
        for v in [i, j] {
            if v < 1 || v > self.n {
                return Err(Error::argument(format!(
                    "vertex {v} outside 1..={}",
                    self.n
                )));
            }
        }
        Ok(self.dominates(i, j))
    }

    /// Returns a new tournament with the arc between `i` and `j` reversed.
    pub fn flip_arc(&self, i: usize, j: usize) -> Result<Tournament> {
        let d = self.try_dominates(i, j)?;
        let mut t = self.clone();
        t.set_arc_unchecked(i, j, !d);
        Ok(t)
    }

    /// Out-neighbourhood of `v` as a set.
    pub fn out_set(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v - 1])
    }

    /// In-neighbourhood of `v` as a set.
    pub fn in_set(&self, v: usize) -> VertexSet {
        VertexSet(VertexSet::full(self.n).mask() & !self.rows[v - 1] & !(1 << (v - 1)))
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.rows[v - 1].count_ones() as usize
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// The subtournament induced by `x`, vertices relabeled `1..|x|` in
    /// increasing original index.
    pub fn induce(&self, x: VertexSet) -> Result<Tournament> {
        if x.is_empty() {
            return Err(Error::argument("cannot induce on the empty vertex set"));
        }
        if !x.is_subset_of(self.full_set()) {
            return Err(Error::argument(format!(
                "{x:?} is not a subset of 1..={}",
                self.n
            )));
        }
        let verts = x.to_vec();
        let m = verts.len();
        let mut t = Tournament {
            n: m,
            rows: vec![0; m],
        };
        for a in 0..m {
            for b in a + 1..m {
                t.set_arc_unchecked(a + 1, b + 1, self.dominates(verts[a], verts[b]));
            }
        }
        Ok(t)
    }

    /// The join: every vertex of `self` dominates every vertex of `other`;
    /// `other`'s vertices are shifted up by `self.order()`.
    pub fn join(&self, other: &Tournament) -> Result<Tournament> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::capacity(format!(
                "join of {} and {} vertices exceeds {MAX_VERTICES}",
                self.n, other.n
            )));
        }
        let mut t = Tournament {
            n,
            rows: vec![0; n],
        };
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                t.set_arc_unchecked(i, j, self.dominates(i, j));
            }
        }
        for i in 1..=other.n {
            for j in i + 1..=other.n {
                t.set_arc_unchecked(self.n + i, self.n + j, other.dominates(i, j));
            }
        }
        for i in 1..=self.n {
            for j in 1..=other.n {
                t.set_arc_unchecked(i, self.n + j, true);
            }
        }
        Ok(t)
    }

    /// Appends a new last vertex dominated by every existing vertex.
    pub fn cone_plus(&self) -> Result<Tournament> {
        self.join(&Tournament::single())
    }

    /// Prepends a new first vertex dominating every existing vertex.
    pub fn cone_minus(&self) -> Result<Tournament> {
        Tournament::single().join(self)
    }

    /// Reverses every arc.
    pub fn converse(&self) -> Tournament {
        let mut t = Tournament {
            n: self.n,
            rows: vec![0; self.n],
        };
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                t.set_arc_unchecked(i, j, self.dominates(j, i));
            }
        }
        t
    }

    /// Relabels vertices: new vertex `k` is old vertex `perm[k-1]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Tournament> {
        if perm.len() != self.n {
            return Err(Error::argument(format!(
                "permutation length {} != vertex count {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = VertexSet::EMPTY;
        for &v in perm {
            if v < 1 || v > self.n || seen.contains(v) {
                return Err(Error::argument("not a permutation of 1..=n"));
            }
            seen.insert(v);
        }
        let mut t = Tournament {
            n: self.n,
            rows: vec![0; self.n],
        };
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                t.set_arc_unchecked(i, j, self.dominates(perm[i - 1], perm[j - 1]));
            }
        }
        Ok(t)
    }

    /// True iff the tournament has no 3-cycle.
    pub fn is_transitive(&self) -> bool {
        // A tournament is transitive iff every vertex's out-neighbourhood is
        // itself free of back-arcs into it, which reduces to the score
        // sequence being 0,1,...,n-1 with consistent rows; checking all
        // triples directly is simplest and cheap at these sizes.
        self.transitive_order().is_some()
    }

    /// The unique dominance order `v_1 -> v_2 -> ... -> v_n` when the
    /// tournament is transitive, `None` otherwise.
    pub fn transitive_order(&self) -> Option<Vec<usize>> {
        let mut order: Vec<usize> = (1..=self.n).collect();
        // In a transitive tournament out-degrees are n-1, n-2, ..., 0 along
        // the order, so sorting by descending out-degree is the only
        // candidate; one verification pass confirms or refutes it.
        order.sort_by_key(|&v| std::cmp::Reverse(self.out_degree(v)));
        for a in 0..self.n {
            for b in a + 1..self.n {
                if !self.dominates(order[a], order[b]) {
                    return None;
                }
            }
        }
        Some(order)
    }

    /// Transitivity restricted to an induced subset, without building the
    /// subtournament.
    pub fn is_transitive_on(&self, x: VertexSet) -> bool {
        let verts = x.to_vec();
        let m = verts.len();
        if m <= 2 {
            return true;
        }
        // Out-degrees within x must be pairwise distinct, and the induced
        // descending order must verify.
        let mut scored: Vec<(usize, usize)> = verts
            .iter()
            .map(|&v| ((self.out_set(v).intersection(x)).len(), v))
            .collect();
        scored.sort_by_key(|&(d, _)| std::cmp::Reverse(d));
        for a in 0..m {
            for b in a + 1..m {
                if !self.dominates(scored[a].1, scored[b].1) {
                    return false;
                }
            }
        }
        true
    }

    /// Packs the encoding bits into a `u128`, most significant bit first, so
    /// numeric order equals lexicographic order of the bit string. Requires
    /// `n <= 16`.
    pub(crate) fn bit_key(&self) -> u128 {
        debug_assert!(self.n <= 16, "bit_key needs <= 120 bits");
        let mut key = 0u128;
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                key = key << 1 | self.dominates(i, j) as u128;
            }
        }
        key
    }

    /// Serializes to the `.trn` text format: first line the vertex count,
    /// second line the encoding bits.
    pub fn to_trn(&self) -> String {
        format!("{}\n{}\n", self.n, self.to_bit_string())
    }

    /// Parses the `.trn` text format. Rejects anything but the two expected
    /// lines with exact bit length.
    pub fn parse_trn(text: &str) -> Result<Tournament> {
        let mut lines = text.lines();
        let first = lines
            .next()
            .ok_or_else(|| Error::format("empty .trn input"))?;
        let n: usize = first
            .trim()
            .parse()
            .map_err(|_| Error::format(format!("invalid vertex count line {first:?}")))?;
        check_order(n)?;
        let second = lines.next().unwrap_or("");
        for extra in lines {
            if !extra.trim().is_empty() {
                return Err(Error::format("trailing content after the bits line"));
            }
        }
        Tournament::from_bit_str(n, second.trim())
    }
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tournament({}; {})", self.n, self.to_bit_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn diamond_l4() -> Tournament {
        Tournament::from_bit_str(4, "110110").unwrap()
    }

    #[test]
    fn from_bits_round_trips() {
        let t = diamond_l4();
        assert_eq!(t.to_bit_string(), "110110");
        let single = Tournament::from_bit_str(1, "").unwrap();
        assert_eq!(single.order(), 1);
        let tr3 = Tournament::from_bit_str(3, "111").unwrap();
        assert!(tr3.is_transitive());
    }

    #[test]
    fn from_bits_rejects_bad_input() {
        assert!(matches!(
            Tournament::from_bit_str(4, "110"),
            Err(Error::Format(_))
        ));
        assert!(matches!(
            Tournament::from_bit_str(0, ""),
            Err(Error::Capacity(_))
        ));
        assert!(matches!(
            Tournament::from_bit_str(65, ""),
            Err(Error::Capacity(_))
        ));
        assert!(matches!(
            Tournament::from_bit_str(3, "1x1"),
            Err(Error::Format(_))
        ));
    }

    #[test]
    fn dominates_is_antisymmetric() {
        let t = diamond_l4();
        assert!(t.dominates(4, 1));
        assert!(!t.dominates(1, 4));
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let t = Tournament::random(8, &mut rng).unwrap();
            for i in 1..=8 {
                for j in 1..=8 {
                    if i != j {
                        assert!(t.dominates(i, j) ^ t.dominates(j, i));
                    }
                }
            }
        }
        assert!(Tournament::transitive(3).unwrap().dominates(1, 3));
        assert!(matches!(t.try_dominates(2, 2), Err(Error::Argument(_))));
        assert!(matches!(t.try_dominates(0, 2), Err(Error::Argument(_))));
    }

    #[test]
    fn induce_keeps_dominance_and_composes() {
        let t = diamond_l4();
        let full = t.induce(t.full_set()).unwrap();
        assert_eq!(full, t);

        let sub = t.induce(VertexSet::from_vertices([2, 4])).unwrap();
        assert!(sub.dominates(1, 2)); // old 2 -> old 4

        assert!(matches!(
            t.induce(VertexSet::EMPTY),
            Err(Error::Argument(_))
        ));

        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let t = Tournament::random(9, &mut rng).unwrap();
            let x = VertexSet::from_mask(rng.random_range(1..1 << 9));
            let y_rel = VertexSet::from_mask(rng.random_range(1..1u64 << x.len()));
            let once = t.induce(x).unwrap().induce(y_rel).unwrap();
            // Translate y back into original labels.
            let xs = x.to_vec();
            let y_abs = VertexSet::from_vertices(y_rel.iter().map(|k| xs[k - 1]));
            let direct = t.induce(y_abs).unwrap();
            assert_eq!(once, direct);
        }
    }

    #[test]
    fn join_dominance_and_associativity() {
        let a = Tournament::three_cycle();
        let b = Tournament::transitive(2).unwrap();
        let ab = a.join(&b).unwrap();
        for i in 1..=3 {
            for j in 4..=5 {
                assert!(ab.dominates(i, j));
            }
        }
        let c = Tournament::single();
        let left = a.join(&b).unwrap().join(&c).unwrap();
        let right = a.join(&b.join(&c).unwrap()).unwrap();
        assert_eq!(left, right);

        let t2 = Tournament::transitive(2).unwrap();
        let t4 = t2.join(&t2).unwrap();
        assert!(t4.is_transitive());

        let t = diamond_l4();
        assert_eq!(
            Tournament::single().join(&t).unwrap(),
            t.cone_minus().unwrap()
        );
    }

    #[test]
    fn cones() {
        let d = Tournament::three_cycle().cone_plus().unwrap();
        assert_eq!(d.order(), 4);
        for i in 1..=3 {
            assert!(d.dominates(i, 4));
        }
        let two = Tournament::single().cone_plus().unwrap();
        assert!(two.is_transitive());
        assert!(matches!(
            Tournament::transitive(64).unwrap().cone_plus(),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn transitive_order_detection() {
        let t = Tournament::from_bit_str(4, "111111").unwrap();
        assert_eq!(t.transitive_order(), Some(vec![1, 2, 3, 4]));
        assert_eq!(Tournament::three_cycle().transitive_order(), None);

        // Reversed labels still produce the dominance order.
        let rev = Tournament::transitive(5)
            .unwrap()
            .relabel(&[5, 4, 3, 2, 1])
            .unwrap();
        assert_eq!(rev.transitive_order(), Some(vec![5, 4, 3, 2, 1]));
    }

    #[test]
    fn transitive_iff_no_three_cycle() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 3..=8 {
            for _ in 0..60 {
                let t = Tournament::random(n, &mut rng).unwrap();
                let mut has_cycle = false;
                for a in 1..=n {
                    for b in 1..=n {
                        for c in 1..=n {
                            if a < b
                                && a < c
                                && b != c
                                && t.dominates(a, b)
                                && t.dominates(b, c)
                                && t.dominates(c, a)
                            {
                                has_cycle = true;
                            }
                        }
                    }
                }
                assert_eq!(t.is_transitive(), !has_cycle);
            }
        }
    }

    #[test]
    fn trn_round_trip() {
        let t = diamond_l4();
        let text = t.to_trn();
        assert_eq!(text, "4\n110110\n");
        assert_eq!(Tournament::parse_trn(&text).unwrap(), t);
        assert_eq!(
            Tournament::parse_trn("1\n\n").unwrap(),
            Tournament::single()
        );
        assert!(Tournament::parse_trn("4\n11011").is_err());
        assert!(Tournament::parse_trn("4\n110110\nextra").is_err());
        assert!(Tournament::parse_trn("x\n110110").is_err());
    }

    #[test]
    fn vertex_set_basics() {
        let s = VertexSet::from_vertices([2, 5, 7]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.to_vec(), vec![2, 5, 7]);
        assert_eq!(s.complement(8).to_vec(), vec![1, 3, 4, 6, 8]);
        assert!(s.is_subset_of(VertexSet::full(8)));
        assert_eq!(format!("{s:?}"), "{2,5,7}");

        let combos: Vec<_> = VertexSet::combinations(4, 2).collect();
        assert_eq!(
            combos.iter().map(|c| c.to_vec()).collect::<Vec<_>>(),
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![1, 4],
                vec![2, 3],
                vec![2, 4],
                vec![3, 4]
            ]
        );

        use std::cmp::Ordering;
        let a = VertexSet::from_vertices([1, 2]);
        let b = VertexSet::from_vertices([1, 2, 3, 4]);
        let c = VertexSet::from_vertices([1, 3]);
        assert_eq!(a.lex_cmp(b), Ordering::Less);
        assert_eq!(b.lex_cmp(c), Ordering::Less);
    }
}
