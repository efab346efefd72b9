//! Bitset-backed subsets of an algebra carrier.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;

/// A subset of a carrier `0..parent_size`.
///
/// Subsets are plain element sets; whether one is a subalgebra is a question
/// for [`crate::algebra::FiniteAlgebra::is_subalgebra`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    parent_size: usize,
    bits: FixedBitSet,
}

impl Subset {
    pub fn empty(parent_size: usize) -> Self {
        Subset {
            parent_size,
            bits: FixedBitSet::with_capacity(parent_size),
        }
    }

    pub fn full(parent_size: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(parent_size);
        bits.set_range(.., true);
        Subset { parent_size, bits }
    }

    pub fn singleton(parent_size: usize, x: usize) -> Self {
        let mut s = Self::empty(parent_size);
        s.insert(x);
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(parent_size: usize, iter: I) -> Self {
        let mut s = Self::empty(parent_size);
        for x in iter {
            s.insert(x);
        }
        s
    }

    pub fn parent_size(&self) -> usize {
        self.parent_size
    }

    /// Number of elements in the subset.
    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.parent_size && self.bits.contains(x)
    }

    /// Inserts `x`, returning true when it was not yet present.
    pub fn insert(&mut self, x: usize) -> bool {
        assert!(x < self.parent_size, "element {x} out of carrier range");
        !self.bits.put(x)
    }

    pub fn union_with(&mut self, other: &Subset) {
        assert_eq!(self.parent_size, other.parent_size);
        self.bits.union_with(&other.bits);
    }

    pub fn union(&self, other: &Subset) -> Subset {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        assert_eq!(self.parent_size, other.parent_size);
        let mut s = self.clone();
        s.bits.intersect_with(&other.bits);
        s
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        assert_eq!(self.parent_size, other.parent_size);
        self.bits.is_subset(&other.bits)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Deterministic ordering: by size first, then by ascending element list.
    pub fn cmp_by_size_then_elements(&self, other: &Subset) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.to_vec().cmp(&other.to_vec()))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subset{:?}", self.to_vec())
    }
}

impl Serialize for Subset {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_and_query() {
        let mut s = Subset::empty(5);
        assert!(s.insert(3));
        assert!(!s.insert(3));
        assert!(s.contains(3));
        assert!(!s.contains(0));
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn ordering_is_by_size_then_lex() {
        let a = Subset::from_indices(5, [0, 1]);
        let b = Subset::from_indices(5, [0, 2]);
        let c = Subset::from_indices(5, [4]);
        assert_eq!(a.cmp_by_size_then_elements(&b), std::cmp::Ordering::Less);
        assert_eq!(c.cmp_by_size_then_elements(&a), std::cmp::Ordering::Less);
    }
}
