use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign};

use serde::{Deserialize, Serialize};

/// Largest universe a [`SubsetMask`] can address.
pub const MAX_ELEMENTS: usize = 64;

/// Index of an element inside the poset that owns it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ElementId(pub usize);

impl ElementId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A subset of a poset's elements, one bit per element.
///
/// Masks carry no width; the owning poset supplies the universe when a
/// complement is needed (see [`SubsetMask::complement_in`]).
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SubsetMask(u64);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        SubsetMask(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// All elements `0..n`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            SubsetMask(u64::MAX)
        } else {
            SubsetMask((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(e: ElementId) -> Self {
        SubsetMask(1u64 << e.0)
    }

    #[inline]
    pub fn contains(self, e: ElementId) -> bool {
        self.0 >> e.0 & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, e: ElementId) {
        self.0 |= 1u64 << e.0;
    }

    #[inline]
    pub fn remove(&mut self, e: ElementId) {
        self.0 &= !(1u64 << e.0);
    }

    #[inline]
    pub fn with(self, e: ElementId) -> Self {
        SubsetMask(self.0 | 1u64 << e.0)
    }

    #[inline]
    pub fn minus(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 & !other.0)
    }

    #[inline]
    pub fn complement_in(self, universe: SubsetMask) -> Self {
        SubsetMask(universe.0 & !self.0)
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_subset(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: SubsetMask) -> bool {
        self.0 & other.0 == 0
    }

    /// The single member, if the mask is a singleton.
    pub fn as_singleton(self) -> Option<ElementId> {
        (self.len() == 1).then(|| ElementId(self.0.trailing_zeros() as usize))
    }

    /// Smallest member by index.
    pub fn first(self) -> Option<ElementId> {
        (self.0 != 0).then(|| ElementId(self.0.trailing_zeros() as usize))
    }

    /// Members in increasing index order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|e| e.0)).finish()
    }
}

impl BitOr for SubsetMask {
    type Output = SubsetMask;
    #[inline]
    fn bitor(self, rhs: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | rhs.0)
    }
}

impl BitOrAssign for SubsetMask {
    #[inline]
    fn bitor_assign(&mut self, rhs: SubsetMask) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for SubsetMask {
    type Output = SubsetMask;
    #[inline]
    fn bitand(self, rhs: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & rhs.0)
    }
}

impl BitAndAssign for SubsetMask {
    #[inline]
    fn bitand_assign(&mut self, rhs: SubsetMask) {
        self.0 &= rhs.0;
    }
}

impl FromIterator<ElementId> for SubsetMask {
    fn from_iter<I: IntoIterator<Item = ElementId>>(iter: I) -> Self {
        let mut m = SubsetMask::EMPTY;
        for e in iter {
            m.insert(e);
        }
        m
    }
}

impl IntoIterator for SubsetMask {
    type Item = ElementId;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = ElementId;

    #[inline]
    fn next(&mut self) -> Option<ElementId> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(ElementId(i))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Every subset of `universe`, starting from the empty set.
pub fn subsets(universe: SubsetMask) -> impl Iterator<Item = SubsetMask> {
    let u = universe.0;
    let mut cur = Some(0u64);
    std::iter::from_fn(move || {
        let s = cur?;
        // standard submask walk, increasing order
        let next = (s | !u).wrapping_add(1) & u;
        cur = (next != 0).then_some(next);
        Some(SubsetMask(s))
    })
}
