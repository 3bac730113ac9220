//! Bit-mask subsets of a finite ground set and sorted families of them.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::SpaceError;

/// Largest supported ground set.
pub const MAX_POINTS: usize = 16;

/// A subset of the ground set `{0, .., n-1}`, stored as a bit mask.
///
/// Bit `i` is set iff point `i` belongs to the subset. No bit at or above
/// `n` is ever set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    bits: u16,
    n: u8,
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u16 {
    ((1u32 << n) - 1) as u16
}

impl Subset {
    pub fn empty(n: usize) -> Self {
        assert!((1..=MAX_POINTS).contains(&n), "ground size {n} out of range");
        Subset { bits: 0, n: n as u8 }
    }

    pub fn full(n: usize) -> Self {
        assert!((1..=MAX_POINTS).contains(&n), "ground size {n} out of range");
        Subset { bits: full_mask(n), n: n as u8 }
    }

    pub fn singleton(n: usize, point: usize) -> Self {
        assert!(point < n, "point {point} outside ground set of size {n}");
        Subset { bits: 1 << point, n: n as u8 }
    }

    /// Builds a subset from a raw mask, rejecting bits beyond the ground set.
    pub fn from_bits(n: usize, bits: u32) -> Result<Self, SpaceError> {
        if !(1..=MAX_POINTS).contains(&n) {
            return Err(SpaceError::InvalidGroundSize(n));
        }
        if bits >> n != 0 {
            return Err(SpaceError::SubsetOutOfRange { bits, n });
        }
        Ok(Subset { bits: bits as u16, n: n as u8 })
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(n: usize, points: I) -> Result<Self, SpaceError> {
        if !(1..=MAX_POINTS).contains(&n) {
            return Err(SpaceError::InvalidGroundSize(n));
        }
        let mut bits = 0u16;
        for p in points {
            if p >= n {
                return Err(SpaceError::PointOutOfRange { point: p, n });
            }
            bits |= 1 << p;
        }
        Ok(Subset { bits, n: n as u8 })
    }

    /// Unchecked constructor for masks already known to fit.
    #[inline]
    pub(crate) fn raw(n: usize, bits: u16) -> Self {
        debug_assert!(u32::from(bits) >> n == 0);
        Subset { bits, n: n as u8 }
    }

    #[inline]
    pub fn bits(self) -> u16 {
        self.bits
    }

    #[inline]
    pub fn n(self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn complement(self) -> Self {
        Subset { bits: !self.bits & full_mask(self.n()), n: self.n }
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        Subset { bits: self.bits | other.bits, n: self.n }
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        Subset { bits: self.bits & other.bits, n: self.n }
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        Subset { bits: self.bits & !other.bits, n: self.n }
    }

    #[inline]
    pub fn is_subset_of(self, other: Self) -> bool {
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn contains(self, point: usize) -> bool {
        point < self.n() && self.bits & (1 << point) != 0
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn is_full(self) -> bool {
        self.bits == full_mask(self.n())
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Point indices in ascending order.
    pub fn points(self) -> impl Iterator<Item = usize> {
        let bits = self.bits;
        (0..self.n()).filter(move |&i| bits & (1 << i) != 0)
    }

    /// Every subset of an `n`-point ground set, ascending by mask.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        assert!((1..=MAX_POINTS).contains(&n), "ground size {n} out of range");
        (0..=u32::from(full_mask(n))).map(move |b| Subset::raw(n, b as u16))
    }

    /// Every subset of `self`, ascending by mask.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let n = self.n();
        submasks_ascending(self.bits).map(move |b| Subset::raw(n, b))
    }

    /// Relabels points: point `i` is sent to `perm[i]`.
    pub fn permute(self, perm: &[usize]) -> Subset {
        let mut bits = 0u16;
        for p in self.points() {
            bits |= 1 << perm[p];
        }
        Subset { bits, n: self.n }
    }
}

/// Submasks of `mask` in ascending numeric order.
pub(crate) fn submasks_ascending(mask: u16) -> impl Iterator<Item = u16> {
    // Ascending enumeration via the `(s - mask) & mask` trick.
    let mut next = Some(0u16);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == mask { None } else { Some((cur.wrapping_sub(mask)) & mask) };
        Some(cur)
    })
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.points().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// Serialized as the sorted list of point indices, never as a mask.
impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for p in self.points() {
            seq.serialize_element(&p)?;
        }
        seq.end()
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        self.intersection(rhs)
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        self.union(rhs)
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        self.difference(rhs)
    }
}

impl Not for Subset {
    type Output = Subset;
    fn not(self) -> Subset {
        self.complement()
    }
}

/// A duplicate-free family of subsets of one ground set, sorted ascending
/// by mask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    n: u8,
    masks: Vec<u16>,
}

impl SetFamily {
    pub fn new<I: IntoIterator<Item = Subset>>(n: usize, members: I) -> Result<Self, SpaceError> {
        if !(1..=MAX_POINTS).contains(&n) {
            return Err(SpaceError::InvalidGroundSize(n));
        }
        let mut masks = Vec::new();
        for s in members {
            if s.n() != n {
                return Err(SpaceError::SubsetOutOfRange { bits: u32::from(s.bits()), n });
            }
            masks.push(s.bits());
        }
        Ok(Self::from_masks_unchecked(n, masks))
    }

    /// Builds a family from raw masks; each must fit in `n` bits.
    pub fn from_masks<I: IntoIterator<Item = u32>>(n: usize, masks: I) -> Result<Self, SpaceError> {
        if !(1..=MAX_POINTS).contains(&n) {
            return Err(SpaceError::InvalidGroundSize(n));
        }
        let mut out = Vec::new();
        for m in masks {
            out.push(Subset::from_bits(n, m)?.bits());
        }
        Ok(Self::from_masks_unchecked(n, out))
    }

    pub(crate) fn from_masks_unchecked(n: usize, mut masks: Vec<u16>) -> Self {
        masks.sort_unstable();
        masks.dedup();
        SetFamily { n: n as u8, masks }
    }

    pub(crate) fn from_table(n: usize, table: &MaskTable) -> Self {
        SetFamily { n: n as u8, masks: table.iter().collect() }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn contains(&self, s: Subset) -> bool {
        s.n() == self.n() && self.masks.binary_search(&s.bits()).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Subset> + '_ {
        let n = self.n();
        self.masks.iter().map(move |&b| Subset::raw(n, b))
    }

    pub fn masks(&self) -> &[u16] {
        &self.masks
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for SetFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Membership bitmap over all `2^n` masks of a ground set.
#[derive(Clone, PartialEq, Eq)]
pub(crate) struct MaskTable {
    words: Vec<u64>,
    size: usize,
}

impl MaskTable {
    pub(crate) fn new(n: usize) -> Self {
        let size = 1usize << n;
        MaskTable { words: vec![0; size.div_ceil(64)], size }
    }

    #[inline]
    pub(crate) fn insert(&mut self, mask: u16) {
        let m = mask as usize;
        self.words[m >> 6] |= 1 << (m & 63);
    }

    #[inline]
    pub(crate) fn contains(&self, mask: u16) -> bool {
        let m = mask as usize;
        self.words[m >> 6] & (1 << (m & 63)) != 0
    }

    pub(crate) fn iter(&self) -> impl Iterator<Item = u16> + '_ {
        (0..self.size).filter(|&m| self.contains(m as u16)).map(|m| m as u16)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_is_involutive_and_bounded() {
        for n in 1..=5 {
            for a in Subset::all(n) {
                assert_eq!(a.complement().complement(), a);
                assert_eq!(u32::from(a.complement().bits()) >> n, 0);
            }
        }
        assert!(Subset::full(16).complement().is_empty());
    }

    #[test]
    fn from_bits_rejects_overflow() {
        assert!(Subset::from_bits(3, 0b1000).is_err());
        assert!(Subset::from_bits(0, 0).is_err());
        assert!(Subset::from_bits(17, 0).is_err());
        assert_eq!(Subset::from_bits(3, 0b101).unwrap().to_string(), "{0,2}");
        assert!(Subset::from_points(2, [0, 2]).is_err());
    }

    #[test]
    fn submasks_come_out_ascending() {
        let got: Vec<u16> = submasks_ascending(0b1011).collect();
        assert_eq!(got, vec![0, 1, 2, 3, 8, 9, 10, 11]);
        assert_eq!(submasks_ascending(0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(submasks_ascending(u16::MAX).count(), 1 << 16);
    }

    #[test]
    fn family_is_sorted_and_deduplicated() {
        let f = SetFamily::from_masks(3, [7, 1, 0, 1, 3]).unwrap();
        assert_eq!(f.masks(), &[0, 1, 3, 7]);
        assert!(f.contains(Subset::from_bits(3, 3).unwrap()));
        assert!(!f.contains(Subset::from_bits(3, 2).unwrap()));
        assert!(SetFamily::from_masks(2, [4]).is_err());
    }

    #[test]
    fn permute_moves_points() {
        let a = Subset::from_points(3, [0, 1]).unwrap();
        assert_eq!(a.permute(&[2, 0, 1]), Subset::from_points(3, [2, 0]).unwrap());
    }

    #[test]
    fn serializes_as_index_list() {
        let a = Subset::from_points(4, [3, 1]).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), "[1,3]");
    }
}
