//! Packed binary label vectors.
//!
//! A [`LabelVector`] holds `m` binary labels packed into 64-bit words. The
//! textual form is a string of `'0'`/`'1'` characters with label 1 first,
//! so `"1000"` sets only the first label. Ordering is lexicographic on that
//! textual form, which is the tie-breaking order used throughout the crate.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// Binary vector over `m` labels.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LabelVector {
    m: usize,
    words: SmallVec<[u64; 1]>,
}

impl LabelVector {
    /// All-zero vector over `m` labels.
    pub fn zeros(m: usize) -> Self {
        Self {
            m,
            words: SmallVec::from_elem(0, m.div_ceil(WORD)),
        }
    }

    /// All-ones vector over `m` labels.
    pub fn ones(m: usize) -> Self {
        let mut v = Self::zeros(m);
        for i in 0..m {
            v.set(i, true);
        }
        v
    }

    /// Vector with a single positive label at 0-based index `i`.
    pub fn unit(m: usize, i: usize) -> Self {
        let mut v = Self::zeros(m);
        v.set(i, true);
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    /// Vector whose positive labels are the given 0-based indices.
    pub fn from_indices(m: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(m);
        for i in indices {
            v.set(i, true);
        }
        v
    }

    /// Decodes the integer encoding where label 1 is the most significant bit,
    /// so ascending indices enumerate vectors in lexicographic order.
    pub fn from_index(m: usize, index: u64) -> Self {
        debug_assert!(m <= WORD);
        let mut v = Self::zeros(m);
        for i in 0..m {
            if (index >> (m - 1 - i)) & 1 == 1 {
                v.set(i, true);
            }
        }
        v
    }

    /// Inverse of [`LabelVector::from_index`]. Requires `m <= 64`.
    pub fn to_index(&self) -> u64 {
        assert!(self.m <= WORD, "integer encoding needs m <= 64");
        (0..self.m).fold(0u64, |acc, i| (acc << 1) | self.get(i) as u64)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.m,
            "label index {i} out of range for m = {}",
            self.m
        );
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(
            i < self.m,
            "label index {i} out of range for m = {}",
            self.m
        );
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    /// Number of positive labels, `s_y`.
    pub fn ones_count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// `Σ y_i h_i`. Panics on length mismatch; callers check dimensions first.
    pub fn intersection_count(&self, other: &Self) -> usize {
        assert_eq!(self.m, other.m);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Number of positions where the two vectors differ.
    pub fn hamming_distance(&self, other: &Self) -> usize {
        assert_eq!(self.m, other.m);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    /// 0-based indices of positive labels in ascending order.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + b)
            })
        })
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.m).map(|i| self.get(i)).collect()
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::EmptyLabelSpace);
        }
        let mut v = Self::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                _ => return Err(Error::InvalidBitstring(s.to_string())),
            }
        }
        Ok(v)
    }
}

impl FromStr for LabelVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for LabelVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.m)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for LabelVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LabelVector({self})")
    }
}

impl Ord for LabelVector {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.words.iter().zip(&other.words) {
            let diff = a ^ b;
            if diff != 0 {
                // lowest differing bit is the earliest label; a 0 there sorts first
                let bit = diff.trailing_zeros();
                return if (a >> bit) & 1 == 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        self.m.cmp(&other.m)
    }
}

impl PartialOrd for LabelVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
