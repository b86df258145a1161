//! Finite strict partial orders on elements `0..n-1`.
//!
//! A [`FinitePoset`] is always valid: the constructor rejects any relation
//! that is not irreflexive, antisymmetric, and transitively closed, so the
//! rest of the crate never has to re-check. Transitive closure is the
//! caller's job; a missing composite is reported, not repaired.

use rand::seq::SliceRandom;
use rand::Rng;

/// A strict partial order `<` on `{0, .., n-1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinitePoset {
    n: usize,
    lt: Vec<bool>, // row-major n*n matrix; lt[i*n + j] means i < j
}

/// Why a candidate relation fails to be a strict partial order.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PosetViolation {
    #[error("pair ({0}, {1}) mentions an element outside 0..{2}")]
    ElementOutOfRange(usize, usize, usize),
    #[error("relation is reflexive at element {0}")]
    Reflexive(usize),
    #[error("antisymmetry fails: both ({0}, {1}) and ({1}, {0}) are present")]
    Antisymmetry(usize, usize),
    #[error("transitivity fails: ({0}, {1}) and ({1}, {2}) are present but ({0}, {2}) is missing")]
    Transitivity(usize, usize, usize),
}

/// Caps on brute-force searches over a poset.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("poset has {n} elements, above the cap of {cap} for this operation")]
pub struct SizeCapExceeded {
    pub n: usize,
    pub cap: usize,
}

/// Default cap for automorphism counting.
pub const AUT_COUNT_CAP: usize = 9;

impl FinitePoset {
    /// Builds a poset from its strict relation, validating it completely.
    pub fn new(
        n: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<FinitePoset, PosetViolation> {
        let mut lt = vec![false; n * n];
        for (i, j) in pairs {
            if i >= n || j >= n {
                return Err(PosetViolation::ElementOutOfRange(i, j, n));
            }
            lt[i * n + j] = true;
        }
        for i in 0..n {
            if lt[i * n + i] {
                return Err(PosetViolation::Reflexive(i));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if lt[i * n + j] && lt[j * n + i] {
                    return Err(PosetViolation::Antisymmetry(i, j));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !lt[i * n + j] {
                    continue;
                }
                for k in 0..n {
                    if lt[j * n + k] && !lt[i * n + k] {
                        return Err(PosetViolation::Transitivity(i, j, k));
                    }
                }
            }
        }
        Ok(FinitePoset { n, lt })
    }

    /// The empty poset on `n` elements (an antichain).
    pub fn antichain(n: usize) -> FinitePoset {
        FinitePoset { n, lt: vec![false; n * n] }
    }

    /// The linear order `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> FinitePoset {
        let mut lt = vec![false; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                lt[i * n + j] = true;
            }
        }
        FinitePoset { n, lt }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Strict order: `i < j`.
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.lt[i * self.n + j]
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        i == j || self.lt(i, j) || self.lt(j, i)
    }

    pub fn incomparable(&self, i: usize, j: usize) -> bool {
        !self.comparable(i, j)
    }

    /// All strict pairs `(i, j)` with `i < j` in the order, ascending.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if self.lt(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// The subposet induced on `elements`, relabelled `0..k-1` in the
    /// order given. Panics if an element repeats or is out of range.
    pub fn induced(&self, elements: &[usize]) -> FinitePoset {
        let k = elements.len();
        let mut lt = vec![false; k * k];
        for (a, &i) in elements.iter().enumerate() {
            assert!(i < self.n);
            for (b, &j) in elements.iter().enumerate() {
                if a != b {
                    assert!(i != j, "induced subposet needs distinct elements");
                    lt[a * k + b] = self.lt(i, j);
                }
            }
        }
        FinitePoset { n: k, lt }
    }

    /// Every order-embedding of `self` into `target`, in lexicographic
    /// order of the underlying maps.
    pub fn all_embeddings(&self, target: &FinitePoset) -> Vec<PosetEmbedding> {
        let mut out = Vec::new();
        let mut map = Vec::with_capacity(self.n);
        let mut used = vec![false; target.n];
        self.embed_from(target, &mut map, &mut used, &mut out);
        out
    }

    fn embed_from(
        &self,
        target: &FinitePoset,
        map: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<PosetEmbedding>,
    ) {
        let k = map.len();
        if k == self.n {
            out.push(PosetEmbedding { map: map.clone() });
            return;
        }
        'candidates: for t in 0..target.n {
            if used[t] {
                continue;
            }
            for (s, &ts) in map.iter().enumerate() {
                let forward = self.lt(s, k);
                let backward = self.lt(k, s);
                if forward != target.lt(ts, t) || backward != target.lt(t, ts) {
                    continue 'candidates;
                }
            }
            map.push(t);
            used[t] = true;
            self.embed_from(target, map, used, out);
            map.pop();
            used[t] = false;
        }
    }

    /// Number of automorphisms, by exhaustive search. Errors above
    /// [`AUT_COUNT_CAP`] elements; use [`FinitePoset::aut_count_with_cap`]
    /// to raise the bound deliberately.
    pub fn aut_count(&self) -> Result<usize, SizeCapExceeded> {
        self.aut_count_with_cap(AUT_COUNT_CAP)
    }

    pub fn aut_count_with_cap(&self, cap: usize) -> Result<usize, SizeCapExceeded> {
        if self.n > cap {
            return Err(SizeCapExceeded { n: self.n, cap });
        }
        Ok(self.all_embeddings(self).len())
    }

    /// Some isomorphism onto `other`, if one exists.
    pub fn isomorphic(&self, other: &FinitePoset) -> Option<PosetEmbedding> {
        if self.n != other.n {
            return None;
        }
        self.all_embeddings(other).into_iter().next()
    }

    /// Strict predecessors of `j`.
    pub fn below(&self, j: usize) -> Vec<usize> {
        (0..self.n).filter(|&i| self.lt(i, j)).collect()
    }

    /// Strict successors of `i`.
    pub fn above(&self, i: usize) -> Vec<usize> {
        (0..self.n).filter(|&j| self.lt(i, j)).collect()
    }
}

/// An order-embedding between two [`FinitePoset`]s: injective, and both
/// preserving and reflecting the strict order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct PosetEmbedding {
    map: Vec<usize>,
}

impl PosetEmbedding {
    /// Wraps an explicit map after checking it really is an embedding.
    pub fn new(source: &FinitePoset, target: &FinitePoset, map: Vec<usize>) -> Option<PosetEmbedding> {
        let e = PosetEmbedding { map };
        if e.is_valid(source, target) {
            Some(e)
        } else {
            None
        }
    }

    pub fn map(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn is_valid(&self, source: &FinitePoset, target: &FinitePoset) -> bool {
        if self.map.len() != source.n() {
            return false;
        }
        if self.map.iter().any(|&t| t >= target.n()) {
            return false;
        }
        for i in 0..source.n() {
            for j in 0..source.n() {
                if i == j {
                    continue;
                }
                if self.map[i] == self.map[j] {
                    return false;
                }
                if source.lt(i, j) != target.lt(self.map[i], self.map[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// A uniformly scrambled random poset: a forward-edge DAG on a hidden
/// linear order, transitively closed, then relabelled by a random
/// permutation so that comparabilities run against the element order as
/// often as with it.
pub fn random_poset<R: Rng + ?Sized>(n: usize, density: f64, rng: &mut R) -> FinitePoset {
    let mut forward = vec![false; n * n];
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_bool(density.clamp(0.0, 1.0)) {
                forward[i * n + j] = true;
            }
        }
    }
    // transitive closure over the hidden order
    for k in 0..n {
        for i in 0..n {
            if forward[i * n + k] {
                for j in 0..n {
                    if forward[k * n + j] {
                        forward[i * n + j] = true;
                    }
                }
            }
        }
    }
    let mut relabel: Vec<usize> = (0..n).collect();
    relabel.shuffle(rng);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if forward[i * n + j] {
                pairs.push((relabel[i], relabel[j]));
            }
        }
    }
    FinitePoset::new(n, pairs).expect("closed DAG relabelling is a poset")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn poset(n: usize, pairs: &[(usize, usize)]) -> FinitePoset {
        FinitePoset::new(n, pairs.iter().copied()).unwrap()
    }

    #[test]
    fn accepts_valid_posets() {
        poset(0, &[]);
        poset(1, &[]);
        poset(3, &[(0, 1), (1, 2), (0, 2)]);
        poset(3, &[(0, 2), (1, 2)]);
    }

    #[test]
    fn rejects_reflexive() {
        assert_eq!(
            FinitePoset::new(2, [(0, 0)]),
            Err(PosetViolation::Reflexive(0))
        );
    }

    #[test]
    fn rejects_antisymmetry_violation() {
        assert_eq!(
            FinitePoset::new(2, [(0, 1), (1, 0)]),
            Err(PosetViolation::Antisymmetry(0, 1))
        );
    }

    #[test]
    fn rejects_missing_transitive_pair() {
        assert_eq!(
            FinitePoset::new(3, [(0, 1), (1, 2)]),
            Err(PosetViolation::Transitivity(0, 1, 2))
        );
    }

    #[test]
    fn rejects_out_of_range() {
        assert_eq!(
            FinitePoset::new(2, [(0, 5)]),
            Err(PosetViolation::ElementOutOfRange(0, 5, 2))
        );
    }

    #[test]
    fn chain_into_longer_chain() {
        let two = FinitePoset::chain(2);
        let three = FinitePoset::chain(3);
        let found = two.all_embeddings(&three);
        // brute force over all injections
        let mut expected = Vec::new();
        for a in 0..3 {
            for b in 0..3 {
                if a != b && a < b {
                    expected.push(vec![a, b]);
                }
            }
        }
        assert_eq!(
            found.iter().map(|e| e.as_slice().to_vec()).collect::<Vec<_>>(),
            expected
        );
    }

    #[test]
    fn embeddings_are_lexicographically_ordered_and_valid() {
        let v = poset(3, &[(0, 2), (1, 2)]);
        let target = random_poset(6, 0.4, &mut ChaCha8Rng::seed_from_u64(11));
        let found = v.all_embeddings(&target);
        let maps: Vec<_> = found.iter().map(|e| e.as_slice().to_vec()).collect();
        let mut sorted = maps.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(maps, sorted);
        for e in &found {
            assert!(e.is_valid(&v, &target));
        }
        // cross-check count against an unstructured scan of all injections
        let mut brute = 0;
        for a in 0..6 {
            for b in 0..6 {
                for c in 0..6 {
                    if a == b || a == c || b == c {
                        continue;
                    }
                    if PosetEmbedding::new(&v, &target, vec![a, b, c]).is_some() {
                        brute += 1;
                    }
                }
            }
        }
        assert_eq!(found.len(), brute);
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(FinitePoset::chain(4).aut_count().unwrap(), 1);
        assert_eq!(FinitePoset::antichain(3).aut_count().unwrap(), 6);
        // two incomparable chains of length 2: swap the chains
        let p = poset(4, &[(0, 1), (2, 3)]);
        assert_eq!(p.aut_count().unwrap(), 2);
        let big = FinitePoset::antichain(10);
        assert_eq!(
            big.aut_count(),
            Err(SizeCapExceeded { n: 10, cap: AUT_COUNT_CAP })
        );
    }

    #[test]
    fn isomorphism_respects_shape() {
        let a = poset(3, &[(0, 1), (0, 2)]);
        let b = poset(3, &[(2, 0), (2, 1)]);
        assert!(a.isomorphic(&b).is_some());
        let c = FinitePoset::chain(3);
        assert!(a.isomorphic(&c).is_none());
        assert!(a.isomorphic(&FinitePoset::antichain(3)).is_none());
    }

    #[test]
    fn induced_subposet() {
        let p = FinitePoset::chain(4);
        let q = p.induced(&[3, 1]);
        assert!(q.lt(1, 0));
        assert!(!q.lt(0, 1));
    }

    #[test]
    fn random_posets_are_valid_and_direction_balanced() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut with_order = 0;
        let mut against_order = 0;
        for _ in 0..40 {
            let p = random_poset(8, 0.35, &mut rng);
            // constructor re-validated inside random_poset; sample directions
            for i in 0..8 {
                for j in (i + 1)..8 {
                    if p.lt(i, j) {
                        with_order += 1;
                    }
                    if p.lt(j, i) {
                        against_order += 1;
                    }
                }
            }
        }
        assert!(with_order > 50 && against_order > 50);
    }
}
