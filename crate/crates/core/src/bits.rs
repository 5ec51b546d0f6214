//! Fixed-width bit rows stored as `u64` words.

use alloc::vec;
use alloc::vec::Vec;

pub const WORD_BITS: usize = 64;

#[inline]
pub fn words_for(width: usize) -> usize {
    width.div_ceil(WORD_BITS)
}

/// Mask of the valid bits in the last word of a row of `width` bits.
#[inline]
pub fn tail_mask(width: usize) -> u64 {
    match width % WORD_BITS {
        0 => u64::MAX,
        r => (1u64 << r) - 1,
    }
}

/// A row of `width` bits. Bits past `width` are always zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitRow {
    width: usize,
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(width: usize) -> Self {
        BitRow { width, words: vec![0; words_for(width)] }
    }

    pub fn ones(width: usize) -> Self {
        let mut row = BitRow { width, words: vec![u64::MAX; words_for(width)] };
        row.clear_tail();
        row
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.width);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.width);
        let bit = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= bit;
        } else {
            self.words[i / WORD_BITS] &= !bit;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Bitwise complement within `width`.
    pub fn complement(&self) -> Self {
        let mut out = BitRow { width: self.width, words: self.words.iter().map(|w| !w).collect() };
        out.clear_tail();
        out
    }

    pub fn and_assign(&mut self, other: &BitRow) {
        debug_assert_eq!(self.width, other.width);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    /// Writes `a & b` into `self` without allocating.
    pub fn assign_and(&mut self, a: &BitRow, b: &BitRow) {
        debug_assert!(self.width == a.width && a.width == b.width);
        for ((out, x), y) in self.words.iter_mut().zip(&a.words).zip(&b.words) {
            *out = x & y;
        }
    }

    fn clear_tail(&mut self) {
        if let Some(last) = self.words.last_mut() {
            *last &= tail_mask(self.width);
        }
    }
}
