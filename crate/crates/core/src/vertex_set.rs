//! Vertex identifiers and bitset-backed vertex sets.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Dense index of an interned vertex name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for VertexId {
    fn from(i: usize) -> Self {
        VertexId(i as u32)
    }
}

const WORD: usize = 64;

/// A set of vertices stored as a bitset.
///
/// Sets over universes of up to 128 vertices live inline. Trailing zero
/// words are always trimmed, so two sets with the same members compare
/// equal regardless of how they were built.
///
/// The `Ord` implementation is the canonical order used for families of
/// sets: by cardinality first, then lexicographically on the ascending
/// member indices.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: SmallVec<[u64; 2]>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(v: VertexId) -> Self {
        let mut s = Self::new();
        s.insert(v);
        s
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, v: VertexId) -> bool {
        let (w, b) = (v.index() / WORD, v.index() % WORD);
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        let had = self.words[w] & (1 << b) != 0;
        self.words[w] |= 1 << b;
        !had
    }

    pub fn remove(&mut self, v: VertexId) -> bool {
        let (w, b) = (v.index() / WORD, v.index() % WORD);
        if w >= self.words.len() {
            return false;
        }
        let had = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        self.trim();
        had
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        let (w, b) = (v.index() / WORD, v.index() % WORD);
        self.words.get(w).is_some_and(|x| x & (1 << b) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn min(&self) -> Option<VertexId> {
        self.iter().next()
    }

    /// Members in ascending index order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            word: 0,
            bits: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, x) in words.iter_mut().zip(short.words.iter()) {
            *w |= x;
        }
        VertexSet { words }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = VertexSet {
            words: self.words.iter().zip(other.words.iter()).map(|(a, b)| a & b).collect(),
        };
        s.trim();
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut words = self.words.clone();
        for (w, x) in words.iter_mut().zip(other.words.iter()) {
            *w &= !x;
        }
        let mut s = VertexSet { words };
        s.trim();
        s
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.len() <= other.words.len()
            && self.words.iter().zip(other.words.iter()).all(|(a, b)| a & !b == 0)
    }

    pub fn is_superset(&self, other: &Self) -> bool {
        other.is_subset(self)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(other.words.iter()).all(|(a, b)| a & b == 0)
    }

    pub fn contains_all<'a, I: IntoIterator<Item = &'a VertexId>>(&self, vs: I) -> bool {
        vs.into_iter().all(|&v| self.contains(v))
    }

    pub fn to_vec(&self) -> Vec<VertexId> {
        self.iter().collect()
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a VertexId>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl Extend<VertexId> for VertexSet {
    fn extend<I: IntoIterator<Item = VertexId>>(&mut self, iter: I) {
        for v in iter {
            self.insert(v);
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = VertexId;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|v| v.0)).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    word: usize,
    bits: u64,
}

impl Iterator for Iter<'_> {
    type Item = VertexId;

    fn next(&mut self) -> Option<VertexId> {
        loop {
            if self.bits != 0 {
                let b = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(VertexId((self.word * WORD + b) as u32));
            }
            self.word += 1;
            self.bits = *self.words.get(self.word)?;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(xs: &[u32]) -> VertexSet {
        xs.iter().map(|&x| VertexId(x)).collect()
    }

    #[test]
    fn trimmed_equality() {
        let mut a = set(&[1, 200]);
        a.remove(VertexId(200));
        assert_eq!(a, set(&[1]));
        assert!(set(&[]).is_empty());
    }

    #[test]
    fn canonical_order_is_size_then_lex() {
        let mut v = vec![set(&[1, 2]), set(&[3]), set(&[]), set(&[1]), set(&[1, 3]), set(&[0, 5])];
        v.sort();
        assert_eq!(
            v,
            vec![set(&[]), set(&[1]), set(&[3]), set(&[0, 5]), set(&[1, 2]), set(&[1, 3])]
        );
    }

    proptest! {
        #[test]
        fn matches_btreeset(a in proptest::collection::btree_set(0u32..300, 0..20),
                            b in proptest::collection::btree_set(0u32..300, 0..20)) {
            let (sa, sb) = (a.iter().map(|&x| VertexId(x)).collect::<VertexSet>(),
                            b.iter().map(|&x| VertexId(x)).collect::<VertexSet>());
            let ids = |s: &VertexSet| s.iter().map(|v| v.0).collect::<Vec<_>>();
            prop_assert_eq!(ids(&sa.union(&sb)), a.union(&b).copied().collect::<Vec<_>>());
            prop_assert_eq!(ids(&sa.intersection(&sb)), a.intersection(&b).copied().collect::<Vec<_>>());
            prop_assert_eq!(ids(&sa.difference(&sb)), a.difference(&b).copied().collect::<Vec<_>>());
            prop_assert_eq!(sa.is_subset(&sb), a.is_subset(&b));
            prop_assert_eq!(sa.is_disjoint(&sb), a.is_disjoint(&b));
            prop_assert_eq!(sa.len(), a.len());
        }
    }
}
