//! Bitset over dense argument indices.

use std::cmp::Ordering;
use std::fmt;

const BITS: usize = 64;

/// A set of argument indices.
///
/// Storage is normalized (no trailing zero words), so equality and hashing
/// do not depend on how large the set once was. The total order is the
/// lexicographic order of the sorted member sequences, which is the
/// canonical order used for every enumeration output.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct ArgSet {
    words: Vec<u64>,
}

impl ArgSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut words = vec![u64::MAX; n / BITS];
        if !n.is_multiple_of(BITS) {
            words.push((1u64 << (n % BITS)) - 1);
        }
        Self { words }
    }

    pub fn singleton(i: usize) -> Self {
        let mut s = Self::new();
        s.insert(i);
        s
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, i: usize) -> bool {
        let (w, b) = (i / BITS, i % BITS);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, i: usize) -> bool {
        let (w, b) = (i / BITS, i % BITS);
        if w >= self.words.len() {
            return false;
        }
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        self.normalize();
        present
    }

    pub fn contains(&self, i: usize) -> bool {
        let (w, b) = (i / BITS, i % BITS);
        w < self.words.len() && self.words[w] & (1 << b) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            word: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn union(&self, other: &ArgSet) -> ArgSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn union_with(&mut self, other: &ArgSet) {
        if self.words.len() < other.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersection(&self, other: &ArgSet) -> ArgSet {
        let mut out = ArgSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        };
        out.normalize();
        out
    }

    pub fn difference(&self, other: &ArgSet) -> ArgSet {
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        out.normalize();
        out
    }

    pub fn is_subset(&self, other: &ArgSet) -> bool {
        self.words.len() <= other.words.len()
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &ArgSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &ArgSet) -> bool {
        !self.is_disjoint(other)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for ArgSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ArgSet::new();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl<'a> IntoIterator for &'a ArgSet {
    type Item = usize;
    type IntoIter = Iter<'a>;
    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl Ord for ArgSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for ArgSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ArgSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    word: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word * BITS + bit);
            }
            self.word += 1;
            if self.word >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn normalization_keeps_equality_structural() {
        let mut a = ArgSet::singleton(130);
        a.remove(130);
        assert_eq!(a, ArgSet::new());
        assert!(a.is_empty());
    }

    #[test]
    fn canonical_order_is_lexicographic_on_members() {
        let a: ArgSet = [0].into_iter().collect();
        let ab: ArgSet = [0, 1].into_iter().collect();
        let b: ArgSet = [1].into_iter().collect();
        assert!(ArgSet::new() < a);
        assert!(a < ab);
        assert!(ab < b);
    }

    #[test]
    fn full_covers_exactly_n() {
        assert_eq!(ArgSet::full(0).len(), 0);
        assert_eq!(ArgSet::full(64).len(), 64);
        assert_eq!(ArgSet::full(70).to_vec(), (0..70).collect::<Vec<_>>());
    }

    proptest! {
        #[test]
        fn set_algebra_matches_btreeset(xs in prop::collection::btree_set(0usize..200, 0..30),
                                         ys in prop::collection::btree_set(0usize..200, 0..30)) {
            let a: ArgSet = xs.iter().copied().collect();
            let b: ArgSet = ys.iter().copied().collect();
            prop_assert_eq!(a.union(&b).to_vec(), xs.union(&ys).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.intersection(&b).to_vec(), xs.intersection(&ys).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.difference(&b).to_vec(), xs.difference(&ys).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.is_subset(&b), xs.is_subset(&ys));
            prop_assert_eq!(a.is_disjoint(&b), xs.is_disjoint(&ys));
            prop_assert_eq!(a.cmp(&b), xs.iter().cmp(ys.iter()));
        }
    }
}
