//! Subsets of a finite carrier `{0, .., n-1}` packed into one machine word.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use crate::error::SpaceError;

/// Largest supported carrier.
pub const MAX_POINTS: usize = 64;

/// Bit mask with the low `n` bits set.
#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    debug_assert!(n <= MAX_POINTS);
    if n == MAX_POINTS {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A subset of an `n`-point carrier.
///
/// Binary operations require both operands to live on the same carrier;
/// mixing carriers is a logic error and is caught by debug assertions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet {
    carrier: u8,
    bits: u64,
}

impl PointSet {
    pub fn empty(carrier: usize) -> Self {
        assert!(carrier <= MAX_POINTS, "carrier of {carrier} points exceeds {MAX_POINTS}");
        PointSet { carrier: carrier as u8, bits: 0 }
    }

    pub fn full(carrier: usize) -> Self {
        assert!(carrier <= MAX_POINTS, "carrier of {carrier} points exceeds {MAX_POINTS}");
        PointSet { carrier: carrier as u8, bits: full_mask(carrier) }
    }

    pub fn singleton(carrier: usize, point: usize) -> Self {
        assert!(point < carrier, "point {point} outside carrier of {carrier} points");
        PointSet { carrier: carrier as u8, bits: 1 << point }
    }

    /// Builds a set from a raw mask, rejecting bits beyond the carrier.
    pub fn from_bits(carrier: usize, bits: u64) -> Result<Self, SpaceError> {
        if carrier > MAX_POINTS {
            return Err(SpaceError::CarrierTooLarge { size: carrier, max: MAX_POINTS });
        }
        if bits & !full_mask(carrier) != 0 {
            return Err(SpaceError::CarrierMismatch {
                carrier,
                point: 63 - bits.leading_zeros() as usize,
            });
        }
        Ok(PointSet { carrier: carrier as u8, bits })
    }

    /// Builds a set from point indices.
    pub fn from_points<I: IntoIterator<Item = usize>>(carrier: usize, points: I) -> Result<Self, SpaceError> {
        if carrier > MAX_POINTS {
            return Err(SpaceError::CarrierTooLarge { size: carrier, max: MAX_POINTS });
        }
        let mut bits = 0u64;
        for p in points {
            if p >= carrier {
                return Err(SpaceError::CarrierMismatch { carrier, point: p });
            }
            bits |= 1 << p;
        }
        Ok(PointSet { carrier: carrier as u8, bits })
    }

    /// Trusted constructor for masks already known to fit.
    #[inline]
    pub(crate) fn raw(carrier: usize, bits: u64) -> Self {
        debug_assert!(bits & !full_mask(carrier) == 0);
        PointSet { carrier: carrier as u8, bits }
    }

    #[inline]
    pub fn carrier_size(&self) -> usize {
        self.carrier as usize
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn contains(&self, point: usize) -> bool {
        point < self.carrier_size() && self.bits >> point & 1 == 1
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn is_full(&self) -> bool {
        self.bits == full_mask(self.carrier_size())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        debug_assert_eq!(self.carrier, other.carrier);
        PointSet { carrier: self.carrier, bits: self.bits | other.bits }
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        debug_assert_eq!(self.carrier, other.carrier);
        PointSet { carrier: self.carrier, bits: self.bits & other.bits }
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        debug_assert_eq!(self.carrier, other.carrier);
        PointSet { carrier: self.carrier, bits: self.bits & !other.bits }
    }

    #[inline]
    pub fn complement(self) -> Self {
        PointSet { carrier: self.carrier, bits: !self.bits & full_mask(self.carrier_size()) }
    }

    #[inline]
    pub fn is_subset(&self, other: &Self) -> bool {
        debug_assert_eq!(self.carrier, other.carrier);
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn is_disjoint(&self, other: &Self) -> bool {
        debug_assert_eq!(self.carrier, other.carrier);
        self.bits & other.bits == 0
    }

    pub fn with(self, point: usize) -> Self {
        self.union(PointSet::singleton(self.carrier_size(), point))
    }

    pub fn without(self, point: usize) -> Self {
        self.difference(PointSet::singleton(self.carrier_size(), point))
    }

    /// Member points in increasing order.
    pub fn iter(&self) -> Points {
        Points { bits: self.bits }
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    /// Re-expresses `self ∩ within` on the subspace carrier of `within`,
    /// renumbering surviving points in increasing order.
    pub fn restrict_to(&self, within: PointSet) -> PointSet {
        let mut bits = 0u64;
        for (new, old) in within.iter().enumerate() {
            if self.contains(old) {
                bits |= 1 << new;
            }
        }
        PointSet::raw(within.len(), bits)
    }

    /// Inverse of [`PointSet::restrict_to`]: carries a subset of the subspace
    /// `within` back to the ambient carrier.
    pub fn extend_from(&self, within: PointSet) -> PointSet {
        debug_assert_eq!(self.carrier_size(), within.len());
        let mut bits = 0u64;
        for (new, old) in within.iter().enumerate() {
            if self.contains(new) {
                bits |= 1 << old;
            }
        }
        PointSet::raw(within.carrier_size(), bits)
    }

    /// Applies a point relabeling `point ↦ perm[point]`.
    pub fn permute(&self, perm: &[usize]) -> PointSet {
        debug_assert_eq!(perm.len(), self.carrier_size());
        let mut bits = 0u64;
        for p in self.iter() {
            bits |= 1 << perm[p];
        }
        PointSet::raw(self.carrier_size(), bits)
    }

    /// Every subset of an `n`-point carrier, in increasing mask order.
    pub fn all_subsets(carrier: usize) -> impl Iterator<Item = PointSet> {
        assert!(carrier < MAX_POINTS, "cannot enumerate subsets of {carrier} points");
        (0..1u64 << carrier).map(move |bits| PointSet::raw(carrier, bits))
    }

    /// Every subset of `self`, including `∅` and `self`.
    pub fn subsets(&self) -> impl Iterator<Item = PointSet> {
        let carrier = self.carrier_size();
        let mask = self.bits;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask { None } else { Some((cur.wrapping_sub(mask)) & mask) };
            Some(PointSet::raw(carrier, cur))
        })
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.carrier)
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

impl BitOr for PointSet {
    type Output = PointSet;
    fn bitor(self, rhs: PointSet) -> PointSet {
        self.union(rhs)
    }
}

impl BitAnd for PointSet {
    type Output = PointSet;
    fn bitand(self, rhs: PointSet) -> PointSet {
        self.intersection(rhs)
    }
}

impl Sub for PointSet {
    type Output = PointSet;
    fn sub(self, rhs: PointSet) -> PointSet {
        self.difference(rhs)
    }
}

impl Not for PointSet {
    type Output = PointSet;
    fn not(self) -> PointSet {
        self.complement()
    }
}

/// Iterator over the members of a [`PointSet`].
#[derive(Clone, Debug)]
pub struct Points {
    bits: u64,
}

impl Iterator for Points {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let p = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(p)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.bits.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Points {}
