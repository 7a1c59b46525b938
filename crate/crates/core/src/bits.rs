// SPDX-License-Identifier: Apache-2.0

//! Bit-packed measurement outcomes.
//!
//! Index 0 is the leftmost character of the textual form. Internally bit `i`
//! lives in word `i / 64` at position `i % 64`.

use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

use crate::error::Error;

type Words = SmallVec<[u64; 2]>;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString {
    len: usize,
    words: Words,
}

#[inline]
fn word_count(len: usize) -> usize {
    len.div_ceil(64)
}

impl BitString {
    pub fn zeros(len: usize) -> Self {
        let mut words = Words::new();
        words.resize(word_count(len), 0);
        Self { len, words }
    }

    /// Builds a string from the listed set positions.
    pub fn from_ones(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut b = Self::zeros(len);
        for i in ones {
            b.set(i, true);
        }
        b
    }

    /// The low `len` bits of `value`, with bit `j` of `value` at index `j`.
    pub fn from_index(len: usize, value: u64) -> Self {
        debug_assert!(len <= 64);
        let mut b = Self::zeros(len);
        if len > 0 {
            b.words[0] = value;
        }
        b
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Packs the string into a `u64` with index `j` at bit `j`. Requires `len <= 64`.
    pub fn to_index(&self) -> u64 {
        debug_assert!(self.len <= 64);
        self.words.first().copied().unwrap_or(0)
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i >> 6] >> (i & 63)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let m = 1u64 << (i & 63);
        if value {
            self.words[i >> 6] |= m;
        } else {
            self.words[i >> 6] &= !m;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.words[i >> 6] ^= 1u64 << (i & 63);
    }

    pub fn xor_assign(&mut self, other: &BitString) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a ^= *b;
        }
    }

    /// Parity of the bits selected by `mask`.
    #[inline]
    pub fn masked_parity(&self, mask: &BitString) -> bool {
        let mut acc = 0u64;
        for (a, b) in self.words.iter().zip(mask.words.iter()) {
            acc ^= a & b;
        }
        acc.count_ones() & 1 == 1
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Gathers the bits at `positions` into a new string of that length.
    pub fn select(&self, positions: &[usize]) -> BitString {
        let mut out = BitString::zeros(positions.len());
        for (j, &p) in positions.iter().enumerate() {
            if self.get(p) {
                out.set(j, true);
            }
        }
        out
    }

    /// Reverses the index order (provider-style strings list qubit 0 last).
    pub fn reversed(&self) -> BitString {
        let mut out = BitString::zeros(self.len);
        for i in 0..self.len {
            if self.get(i) {
                out.set(self.len - 1 - i, true);
            }
        }
        out
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString({self})")
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut b = BitString::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => b.set(i, true),
                other => return Err(Error::InvalidDistribution(format!("bitstring {s:?} contains {other:?}"))),
            }
        }
        Ok(b)
    }
}
