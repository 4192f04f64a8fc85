use std::fmt;

use fixedbitset::FixedBitSet;

/// A set of ring element indices backed by a bit vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet(FixedBitSet);

impl ElemSet {
    pub fn empty(universe: usize) -> Self {
        ElemSet(FixedBitSet::with_capacity(universe))
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        ElemSet(bits)
    }

    pub fn from_elems(universe: usize, elems: impl IntoIterator<Item = usize>) -> Self {
        let mut set = Self::empty(universe);
        for e in elems {
            set.insert(e);
        }
        set
    }

    /// Number of indices the set ranges over (the ring size).
    pub fn universe(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn contains(&self, e: usize) -> bool {
        self.0.contains(e)
    }

    /// Inserts `e`, returning true if it was absent.
    #[inline]
    pub fn insert(&mut self, e: usize) -> bool {
        !self.0.put(e)
    }

    pub fn remove(&mut self, e: usize) {
        self.0.set(e, false);
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.0.is_full()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &ElemSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        let mut out = self.clone();
        out.0.union_with(&other.0);
        out
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        let mut out = self.clone();
        out.0.intersect_with(&other.0);
        out
    }

    pub fn difference(&self, other: &ElemSet) -> ElemSet {
        let mut out = self.clone();
        out.0.difference_with(&other.0);
        out
    }

    /// Smallest element of `self` that is not in `other`.
    pub fn first_not_in(&self, other: &ElemSet) -> Option<usize> {
        self.0.difference(&other.0).next()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.minimum()
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra() {
        let a = ElemSet::from_elems(10, [1, 3, 5]);
        let b = ElemSet::from_elems(10, [3, 4]);
        assert_eq!(a.union(&b).to_vec(), vec![1, 3, 4, 5]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3]);
        assert_eq!(a.first_not_in(&b), Some(1));
        assert!(!a.is_subset(&b));
        assert!(ElemSet::from_elems(10, [3]).is_subset(&a));
        assert!(ElemSet::full(10).is_full());
        assert_eq!(ElemSet::full(10).len(), 10);
    }

    #[test]
    fn insert_reports_novelty() {
        let mut s = ElemSet::empty(4);
        assert!(s.insert(2));
        assert!(!s.insert(2));
        assert_eq!(s.len(), 1);
    }
}
