use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A subset of the edges of one graph, stored as a bitset over edge indices.
///
/// Two sets are equal iff their bitsets are identical, so the universe (the
/// number of edges of the owning graph) is part of the value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet {
    bits: FixedBitSet,
}

impl EdgeSet {
    pub fn new(universe: usize) -> Self {
        EdgeSet {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        EdgeSet { bits }
    }

    pub fn from_edges<I>(universe: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = EdgeSet::new(universe);
        for e in edges {
            if e >= universe {
                return Err(Error::EdgeOutOfRange {
                    index: e,
                    len: universe,
                });
            }
            set.bits.insert(e);
        }
        Ok(set)
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.bits.contains(edge)
    }

    /// Panics if `edge` is outside the universe.
    pub fn insert(&mut self, edge: usize) {
        self.bits.insert(edge);
    }

    pub fn remove(&mut self, edge: usize) {
        self.bits.set(edge, false);
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        EdgeSet { bits }
    }

    pub fn intersection(&self, other: &EdgeSet) -> EdgeSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        EdgeSet { bits }
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        EdgeSet { bits }
    }

    pub fn complement(&self) -> EdgeSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        EdgeSet { bits }
    }

    pub fn is_disjoint(&self, other: &EdgeSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.bits.is_subset(&other.bits)
    }
}

impl core::fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str("{")?;
        for (k, e) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}
