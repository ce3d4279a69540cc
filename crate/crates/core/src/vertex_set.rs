//! Fixed-width vertex sets.
//!
//! Every code, I-set and constraint support in this crate is a [`VertexSet`]:
//! a 128-bit mask paired with the order of the graph it belongs to. Bits at
//! positions `>= width` are always clear.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Sub};

/// Largest graph order supported by the bit-vector representation.
pub const MAX_VERTICES: usize = 128;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    bits: u128,
    width: u8,
}

#[inline]
fn mask(width: usize) -> u128 {
    if width >= 128 {
        u128::MAX
    } else {
        (1u128 << width) - 1
    }
}

impl VertexSet {
    pub fn empty(width: usize) -> Self {
        assert!(
            width <= MAX_VERTICES,
            "width {width} exceeds {MAX_VERTICES}"
        );
        VertexSet {
            bits: 0,
            width: width as u8,
        }
    }

    pub fn full(width: usize) -> Self {
        let mut s = Self::empty(width);
        s.bits = mask(width);
        s
    }

    pub fn singleton(width: usize, v: usize) -> Self {
        let mut s = Self::empty(width);
        s.insert(v);
        s
    }

    /// Builds a set from raw bits, discarding anything at or above `width`.
    pub fn from_bits(width: usize, bits: u128) -> Self {
        let mut s = Self::empty(width);
        s.bits = bits & mask(width);
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(width: usize, vertices: I) -> Self {
        let mut s = Self::empty(width);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width as usize
    }

    #[inline]
    pub fn bits(&self) -> u128 {
        self.bits
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < 128 && self.bits >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(
            v < self.width as usize,
            "vertex {v} outside set of width {}",
            self.width
        );
        self.bits |= 1u128 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < 128 {
            self.bits &= !(1u128 << v);
        }
    }

    pub fn with(mut self, v: usize) -> Self {
        self.insert(v);
        self
    }

    pub fn without(mut self, v: usize) -> Self {
        self.remove(v);
        self
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn union(&self, other: &Self) -> Self {
        VertexSet {
            bits: self.bits | other.bits,
            width: self.width,
        }
    }

    #[inline]
    pub fn intersection(&self, other: &Self) -> Self {
        VertexSet {
            bits: self.bits & other.bits,
            width: self.width,
        }
    }

    #[inline]
    pub fn difference(&self, other: &Self) -> Self {
        VertexSet {
            bits: self.bits & !other.bits,
            width: self.width,
        }
    }

    #[inline]
    pub fn symmetric_difference(&self, other: &Self) -> Self {
        VertexSet {
            bits: self.bits ^ other.bits,
            width: self.width,
        }
    }

    /// Complement relative to `0..width`.
    pub fn complement(&self, width: usize) -> Self {
        VertexSet::from_bits(width, !self.bits)
    }

    #[inline]
    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits & other.bits == 0
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            Some(self.bits.trailing_zeros() as usize)
        }
    }

    /// Members in increasing order.
    pub fn iter(&self) -> Iter {
        Iter { bits: self.bits }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct Iter {
    bits: u128,
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let v = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.bits.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        self.union(&rhs)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(&rhs)
    }
}

impl BitXor for VertexSet {
    type Output = VertexSet;
    fn bitxor(self, rhs: Self) -> Self {
        self.symmetric_difference(&rhs)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        self.difference(&rhs)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_is_exact() {
        let a = VertexSet::from_vertices(6, [0, 1, 2]);
        let b = VertexSet::from_vertices(6, [2, 3]);
        assert_eq!((a | b).to_vec(), vec![0, 1, 2, 3]);
        assert_eq!((a & b).to_vec(), vec![2]);
        assert_eq!((a ^ b).to_vec(), vec![0, 1, 3]);
        assert_eq!((a - b).to_vec(), vec![0, 1]);
        assert_eq!(a.complement(6).to_vec(), vec![3, 4, 5]);
        assert_eq!(a.len(), 3);
        assert!(VertexSet::from_vertices(6, [1]).is_subset(&a));
    }

    #[test]
    fn full_width_128() {
        let s = VertexSet::full(128);
        assert_eq!(s.len(), 128);
        assert_eq!(s.complement(128).len(), 0);
        assert!(s.contains(127));
    }

    #[test]
    fn complement_clears_high_bits() {
        let s = VertexSet::empty(5).complement(5);
        assert_eq!(s.bits(), 0b11111);
    }

    #[test]
    #[should_panic]
    fn insert_out_of_width_panics() {
        VertexSet::empty(3).insert(3);
    }
}
