use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A set of element indices of a carrier `{0..n-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubSet {
    bits: FixedBitSet,
}

impl SubSet {
    pub fn empty(order: usize) -> Self {
        SubSet { bits: FixedBitSet::with_capacity(order) }
    }

    pub fn zero(order: usize) -> Self {
        let mut s = Self::empty(order);
        s.insert(0);
        s
    }

    pub fn full(order: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(order);
        bits.insert_range(..);
        SubSet { bits }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(order: usize, items: I) -> Result<Self> {
        let mut s = Self::empty(order);
        for i in items {
            if i >= order {
                return Err(Error::input(format!("element {i} out of range for order {order}")));
            }
            s.insert(i);
        }
        Ok(s)
    }

    pub(crate) fn from_bits(bits: FixedBitSet) -> Self {
        SubSet { bits }
    }

    /// Order of the parent carrier.
    pub fn order(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// True when the set is exactly `{0}`.
    pub fn is_zero(&self) -> bool {
        self.bits.contains(0) && self.len() == 1
    }

    pub fn is_full(&self) -> bool {
        self.bits.is_full()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits.contains(i)
    }

    /// Returns true if `i` was not already present.
    pub fn insert(&mut self, i: usize) -> bool {
        !self.bits.put(i)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &SubSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn union(&self, other: &SubSet) -> SubSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        SubSet { bits }
    }

    /// Orders by size first, then lexicographically by sorted members.
    pub fn cmp_size_lex(&self, other: &SubSet) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl fmt::Display for SubSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for SubSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubSet({}; n={})", self, self.order())
    }
}
