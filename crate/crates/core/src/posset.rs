//! Compact sets of small positive integers.
//!
//! Almost every statistic in this crate is a set of positions, values, arc
//! indices or column indices, all of them one-based and bounded by the size of
//! the object. A single `u64` bitmask covers every size this crate handles
//! (`1..=MAX_ELEMENT`) and makes equality, hashing and the shifts `A + 1`,
//! `A - 1` single instructions.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest element a [`PosSet`] can hold.
pub const MAX_ELEMENT: usize = 63;

/// A set of integers in `1..=63`, stored as a bitmask (bit `i` is element `i`).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct PosSet(u64);

impl PosSet {
    pub const EMPTY: PosSet = PosSet(0);

    pub fn new() -> Self {
        Self::EMPTY
    }

    /// The interval `lo..=hi` (empty when `lo > hi`).
    pub fn range(lo: usize, hi: usize) -> Self {
        let mut s = Self::EMPTY;
        for i in lo.max(1)..=hi {
            s.insert(i);
        }
        s
    }

    pub fn from_bits(bits: u64) -> Self {
        debug_assert!(bits & 1 == 0, "bit 0 is never a member");
        PosSet(bits & !1)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn insert(&mut self, i: usize) {
        assert!((1..=MAX_ELEMENT).contains(&i), "element {i} out of range");
        self.0 |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        if (1..=MAX_ELEMENT).contains(&i) {
            self.0 &= !(1 << i);
        }
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=MAX_ELEMENT).contains(&i) && self.0 & (1 << i) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest element.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest element.
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn union(self, other: Self) -> Self {
        PosSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        PosSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        PosSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// `{ i + k : i in self }`. Panics if an element would leave the range.
    pub fn shift_up(self, k: usize) -> Self {
        if k == 0 || self.0 == 0 {
            return self;
        }
        assert!(
            self.last().unwrap() + k <= MAX_ELEMENT,
            "shift leaves representable range"
        );
        PosSet(self.0 << k)
    }

    /// `{ i - k : i in self, i - k >= 1 }`.
    pub fn shift_down(self, k: usize) -> Self {
        if k >= 64 {
            return Self::EMPTY;
        }
        PosSet((self.0 >> k) & !1)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Every subset of `self`, in increasing order of bitmask.
    pub fn subsets(self) -> impl Iterator<Item = PosSet> {
        // Standard submask enumeration, reversed so the empty set comes first.
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some(((cur | !full).wrapping_add(1)) & full)
            };
            Some(PosSet(cur))
        })
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for PosSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for PosSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = PosSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl<const N: usize> From<[usize; N]> for PosSet {
    fn from(items: [usize; N]) -> Self {
        items.into_iter().collect()
    }
}

// Lexicographic on the increasing element sequence, so that objects built
// from sets sort the way their written-out form does.
impl Ord for PosSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for PosSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PosSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Sorted, comma-joined elements; the empty set prints as the empty string.
impl fmt::Display for PosSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

impl Serialize for PosSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for PosSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let items = Vec::<usize>::deserialize(deserializer)?;
        let mut s = PosSet::EMPTY;
        for i in items {
            if !(1..=MAX_ELEMENT).contains(&i) {
                return Err(serde::de::Error::custom(format!(
                    "set element {i} outside 1..={MAX_ELEMENT}"
                )));
            }
            s.insert(i);
        }
        Ok(s)
    }
}
