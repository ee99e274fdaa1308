//! Subsets of a small finite carrier, and families of such subsets.
//!
//! A carrier is the point set `{0, 1, .., n-1}` with `n <= 16`. A subset is a
//! bitmask (point `i` <-> bit `i`), and a family of subsets is a bitset of
//! length `2^n` indexed by subset mask. Everything downstream — topologies,
//! operator tables, open-set classes — is built on these two types.

use std::fmt;

use crate::error::TopoError;

/// Largest supported carrier. Keeps every family bitset at most `2^16` bits
/// and every sweep desk-scale.
pub const MAX_CARRIER: usize = 16;

/// A subset of an `n`-point carrier, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet {
    mask: u32,
    n: u8,
}

impl PointSet {
    pub fn empty(n: usize) -> PointSet {
        debug_assert!(n <= MAX_CARRIER);
        PointSet { mask: 0, n: n as u8 }
    }

    pub fn full(n: usize) -> PointSet {
        debug_assert!(n <= MAX_CARRIER);
        PointSet { mask: full_mask(n), n: n as u8 }
    }

    pub fn from_mask(mask: u32, n: usize) -> Result<PointSet, TopoError> {
        if n > MAX_CARRIER {
            return Err(TopoError::CarrierTooLarge { n, max: MAX_CARRIER });
        }
        if mask & !full_mask(n) != 0 {
            return Err(TopoError::MaskOutOfRange { mask, n });
        }
        Ok(PointSet { mask, n: n as u8 })
    }

    pub fn from_points(points: &[usize], n: usize) -> Result<PointSet, TopoError> {
        let mut mask = 0u32;
        for &p in points {
            if p >= n {
                return Err(TopoError::PointOutOfRange { point: p, n });
            }
            mask |= 1 << p;
        }
        PointSet::from_mask(mask, n)
    }

    /// Lift a raw mask that is already known to fit the carrier.
    pub(crate) fn raw(mask: u32, n: usize) -> PointSet {
        debug_assert_eq!(mask & !full_mask(n), 0);
        PointSet { mask, n: n as u8 }
    }

    pub fn mask(self) -> u32 {
        self.mask
    }

    pub fn carrier(self) -> usize {
        self.n as usize
    }

    pub fn contains(self, point: usize) -> bool {
        point < self.n as usize && self.mask >> point & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.mask == 0
    }

    pub fn is_full(self) -> bool {
        self.mask == full_mask(self.n as usize)
    }

    pub fn len(self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn union(self, other: PointSet) -> PointSet {
        debug_assert_eq!(self.n, other.n);
        PointSet { mask: self.mask | other.mask, n: self.n }
    }

    pub fn intersect(self, other: PointSet) -> PointSet {
        debug_assert_eq!(self.n, other.n);
        PointSet { mask: self.mask & other.mask, n: self.n }
    }

    pub fn difference(self, other: PointSet) -> PointSet {
        debug_assert_eq!(self.n, other.n);
        PointSet { mask: self.mask & !other.mask, n: self.n }
    }

    pub fn complement(self) -> PointSet {
        PointSet { mask: !self.mask & full_mask(self.n as usize), n: self.n }
    }

    pub fn is_subset_of(self, other: PointSet) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.mask & !other.mask == 0
    }

    pub fn points(self) -> impl Iterator<Item = usize> {
        let mask = self.mask;
        (0..self.n as usize).filter(move |i| mask >> i & 1 == 1)
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PointSet({self})")
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for p in self.points() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

pub(crate) fn full_mask(n: usize) -> u32 {
    debug_assert!(n <= MAX_CARRIER);
    if n == 0 {
        0
    } else {
        (1u32 << n) - 1
    }
}

/// A set of subsets of an `n`-point carrier: one bit per subset mask.
#[derive(Clone, PartialEq, Eq)]
pub struct SetFamily {
    n: u8,
    words: Vec<u64>,
}

impl SetFamily {
    pub fn empty(n: usize) -> SetFamily {
        debug_assert!(n <= MAX_CARRIER);
        let bits = 1usize << n;
        SetFamily { n: n as u8, words: vec![0; bits.div_ceil(64)] }
    }

    pub fn from_masks(n: usize, masks: &[u32]) -> Result<SetFamily, TopoError> {
        if n > MAX_CARRIER {
            return Err(TopoError::CarrierTooLarge { n, max: MAX_CARRIER });
        }
        let mut fam = SetFamily::empty(n);
        for &m in masks {
            if m & !full_mask(n) != 0 {
                return Err(TopoError::MaskOutOfRange { mask: m, n });
            }
            fam.insert_mask(m);
        }
        Ok(fam)
    }

    pub fn carrier(&self) -> usize {
        self.n as usize
    }

    pub fn contains(&self, set: PointSet) -> bool {
        debug_assert_eq!(set.carrier(), self.carrier());
        self.contains_mask(set.mask())
    }

    pub fn contains_mask(&self, mask: u32) -> bool {
        let i = mask as usize;
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn insert(&mut self, set: PointSet) {
        debug_assert_eq!(set.carrier(), self.carrier());
        self.insert_mask(set.mask());
    }

    pub fn insert_mask(&mut self, mask: u32) {
        let i = mask as usize;
        self.words[i / 64] |= 1 << (i % 64);
    }

    /// Number of member subsets.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Member masks in ascending order.
    pub fn masks(&self) -> impl Iterator<Item = u32> + '_ {
        let total = 1usize << self.n;
        (0..total).filter(move |&i| self.contains_mask(i as u32)).map(|i| i as u32)
    }

    /// Members as `PointSet`s in ascending mask order.
    pub fn members(&self) -> impl Iterator<Item = PointSet> + '_ {
        let n = self.carrier();
        self.masks().map(move |m| PointSet::raw(m, n))
    }

    /// The family encoding: bit `k` set iff subset mask `k` is a member.
    /// Only defined for carriers small enough that the bitset fits in a `u64`.
    pub fn encoding(&self) -> Option<u64> {
        if (1usize << self.n) <= 64 {
            Some(self.words[0])
        } else {
            None
        }
    }

    /// Build a family from its `u64` encoding (carriers up to 6 points).
    pub fn from_encoding(n: usize, encoding: u64) -> Result<SetFamily, TopoError> {
        if n > 6 {
            return Err(TopoError::CarrierTooLarge { n, max: 6 });
        }
        let bits = 1usize << n;
        if bits < 64 && encoding >> bits != 0 {
            return Err(TopoError::InvalidField {
                field: "encoding",
                message: format!("{encoding} has bits beyond the {bits} subsets of the carrier"),
            });
        }
        Ok(SetFamily { n: n as u8, words: vec![encoding] })
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.members()).finish()
    }
}
