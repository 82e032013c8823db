//! Fixed-width sets of small indices backed by a single `u64`.
//!
//! Vertex sets, instance sets and concepts are all subsets of a domain with
//! at most 64 elements, so every set operation here is a handful of word
//! instructions.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, BitXor, Not, Sub, SubAssign};

/// Largest domain representable by a [`BitSet`].
pub const MAX_BITS: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct BitSet(u64);

impl BitSet {
    pub const EMPTY: BitSet = BitSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        BitSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_BITS);
        if n >= 64 {
            BitSet(u64::MAX)
        } else {
            BitSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_BITS);
        BitSet(1u64 << i)
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        i < MAX_BITS && (self.0 >> i) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u64 << i);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset(self, other: BitSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_proper_subset(self, other: BitSet) -> bool {
        self != other && self.is_subset(other)
    }

    #[inline]
    pub fn intersects(self, other: BitSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest element, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest element, if any.
    #[inline]
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Removes and returns the smallest element.
    #[inline]
    pub fn pop_first(&mut self) -> Option<usize> {
        let i = self.first()?;
        self.0 &= self.0 - 1;
        Some(i)
    }

    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Elements strictly below `i`.
    #[inline]
    pub fn below(i: usize) -> Self {
        BitSet::full(i)
    }

    /// Packs the bits of `self` selected by `mask` into the low `mask.len()`
    /// bits, preserving order (software `pext`).
    #[inline]
    pub fn compress(self, mask: BitSet) -> u64 {
        let mut out = 0u64;
        let mut m = mask.0;
        let mut k = 0;
        while m != 0 {
            let low = m & m.wrapping_neg();
            if self.0 & low != 0 {
                out |= 1 << k;
            }
            k += 1;
            m ^= low;
        }
        out
    }

    /// Inverse of [`compress`](Self::compress): spreads the low bits of
    /// `packed` onto the positions of `mask`.
    #[inline]
    pub fn expand(packed: u64, mask: BitSet) -> BitSet {
        let mut out = 0u64;
        let mut m = mask.0;
        let mut k = 0;
        while m != 0 {
            let low = m & m.wrapping_neg();
            if (packed >> k) & 1 == 1 {
                out |= low;
            }
            k += 1;
            m ^= low;
        }
        BitSet(out)
    }

    /// Sorted element list.
    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic comparison of the sorted element lists.
    pub fn cmp_lex(self, other: BitSet) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }

    /// All subsets of `self` (including `self` and the empty set), in
    /// increasing numeric order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// All `k`-element subsets of `self` in increasing numeric order.
    pub fn k_subsets(self, k: usize) -> KSubsets {
        let n = self.len();
        let state = match k {
            k if k > n => None,
            64 => Some(u64::MAX),
            k => Some((1u64 << k) - 1),
        };
        KSubsets {
            mask: self,
            n,
            state,
        }
    }
}

impl FromIterator<usize> for BitSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = BitSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
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

pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = BitSet;

    fn next(&mut self) -> Option<BitSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(BitSet(cur))
    }
}

/// Gosper's hack over the packed positions of a mask.
pub struct KSubsets {
    mask: BitSet,
    n: usize,
    state: Option<u64>,
}

impl Iterator for KSubsets {
    type Item = BitSet;

    fn next(&mut self) -> Option<BitSet> {
        let cur = self.state?;
        let out = BitSet::expand(cur, self.mask);
        self.state = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            let nxt = (((r ^ cur) >> 2) / c) | r;
            if (self.n < 64 && nxt >> self.n != 0) || nxt < cur {
                None
            } else {
                Some(nxt)
            }
        };
        Some(out)
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident, $op:tt) => {
        impl $tr for BitSet {
            type Output = BitSet;
            #[inline]
            fn $f(self, rhs: BitSet) -> BitSet {
                BitSet(self.0 $op rhs.0)
            }
        }
    };
}

binop!(BitOr, bitor, |);
binop!(BitAnd, bitand, &);
binop!(BitXor, bitxor, ^);

impl Sub for BitSet {
    type Output = BitSet;
    #[inline]
    fn sub(self, rhs: BitSet) -> BitSet {
        BitSet(self.0 & !rhs.0)
    }
}

impl Not for BitSet {
    type Output = BitSet;
    #[inline]
    fn not(self) -> BitSet {
        BitSet(!self.0)
    }
}

impl BitOrAssign for BitSet {
    #[inline]
    fn bitor_assign(&mut self, rhs: BitSet) {
        self.0 |= rhs.0;
    }
}

impl BitAndAssign for BitSet {
    #[inline]
    fn bitand_assign(&mut self, rhs: BitSet) {
        self.0 &= rhs.0;
    }
}

impl SubAssign for BitSet {
    #[inline]
    fn sub_assign(&mut self, rhs: BitSet) {
        self.0 &= !rhs.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn k_subsets_counts_and_membership() {
        let mask = BitSet::from_iter([1, 3, 4, 7, 9]);
        for k in 0..=6 {
            let subs: Vec<_> = mask.k_subsets(k).collect();
            assert_eq!(subs.len(), if k <= 5 { binom(5, k) } else { 0 }, "k={k}");
            for s in &subs {
                assert_eq!(s.len(), k);
                assert!(s.is_subset(mask));
            }
            let mut sorted = subs.clone();
            sorted.dedup();
            assert_eq!(sorted.len(), subs.len());
        }
    }

    #[test]
    fn subsets_enumerates_powerset() {
        let mask = BitSet::from_iter([0, 2, 5]);
        let subs: Vec<_> = mask.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert_eq!(subs[0], BitSet::EMPTY);
        assert_eq!(*subs.last().unwrap(), mask);
    }

    #[test]
    fn compress_expand_roundtrip() {
        let mask = BitSet::from_iter([2, 5, 6, 11]);
        for packed in 0..16u64 {
            let s = BitSet::expand(packed, mask);
            assert_eq!(s.compress(mask), packed);
        }
    }

    #[test]
    fn display_and_lex_order() {
        let a = BitSet::from_iter([0, 3]);
        let b = BitSet::from_iter([0, 2, 9]);
        assert_eq!(a.to_string(), "{0,3}");
        assert_eq!(a.cmp_lex(b), std::cmp::Ordering::Greater);
        assert_eq!(BitSet::full(64).len(), 64);
    }
}
