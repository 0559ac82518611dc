//! Packed binary words and the scalar statistics used throughout the crate.
//!
//! Positions are 1-based: `x = x_1 x_2 ... x_n`, with `x_1` the leftmost
//! symbol. Internally `x_i` lives at bit `n - i` of a `u64`, so for words of
//! equal length the integer order is the lexicographic order.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Longest word that fits the packed representation.
pub const MAX_LEN: usize = 63;

#[inline]
pub(crate) fn low_mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// A binary word of length at most [`MAX_LEN`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    // field order matters for the derived ordering: shorter words first,
    // then lexicographic
    len: u8,
    bits: u64,
}

impl Word {
    pub const EMPTY: Word = Word { len: 0, bits: 0 };

    /// Builds a word from its packed value (`x_1` is the most significant of
    /// the `len` low bits). Bits above `len` are ignored.
    pub fn new(bits: u64, len: usize) -> Result<Self> {
        if len > MAX_LEN {
            return Err(Error::WordTooLong { len, max: MAX_LEN });
        }
        Ok(Self::from_raw(bits, len))
    }

    #[inline]
    pub(crate) fn from_raw(bits: u64, len: usize) -> Self {
        debug_assert!(len <= MAX_LEN);
        Word { len: len as u8, bits: bits & low_mask(len) }
    }

    pub fn zeros(len: usize) -> Result<Self> {
        Self::new(0, len)
    }

    /// Parses a 0/1 string, accepting the empty string.
    pub fn parse_allow_empty(s: &str) -> Result<Self> {
        if s.len() > MAX_LEN {
            return Err(Error::WordTooLong { len: s.len(), max: MAX_LEN });
        }
        let mut bits = 0u64;
        for (offset, symbol) in s.chars().enumerate() {
            let b = match symbol {
                '0' => 0,
                '1' => 1,
                _ => return Err(Error::InvalidSymbol { symbol, offset }),
            };
            bits = (bits << 1) | b;
        }
        Ok(Self::from_raw(bits, s.len()))
    }

    /// Builds a word from a slice of 0/1 values.
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        if bits.len() > MAX_LEN {
            return Err(Error::WordTooLong { len: bits.len(), max: MAX_LEN });
        }
        let mut packed = 0u64;
        for (offset, &b) in bits.iter().enumerate() {
            if b > 1 {
                return Err(Error::InvalidSymbol { symbol: char::from(b'0' + b.min(9)), offset });
            }
            packed = (packed << 1) | u64::from(b);
        }
        Ok(Self::from_raw(packed, bits.len()))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Packed value; `x_1` is the most significant bit.
    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// The symbol at 1-based position `i`.
    #[inline]
    pub fn bit(&self, i: usize) -> u8 {
        debug_assert!(i >= 1 && i <= self.len());
        ((self.bits >> (self.len() - i)) & 1) as u8
    }

    pub fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        (1..=self.len()).map(move |i| self.bit(i))
    }

    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn complement(&self) -> Word {
        Word::from_raw(!self.bits, self.len())
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        let len = self.len() + other.len();
        if len > MAX_LEN {
            return Err(Error::WordTooLong { len, max: MAX_LEN });
        }
        let shifted = if other.len() == 0 { self.bits } else { self.bits << other.len() };
        Ok(Word::from_raw(shifted | other.bits, len))
    }

    /// Appends a single symbol.
    pub fn push(&self, bit: u8) -> Result<Word> {
        self.concat(&Word::from_raw(u64::from(bit & 1), 1))
    }

    /// The subword `x_{from+1} .. x_{to}` (0-based half-open offsets).
    pub fn subword(&self, from: usize, to: usize) -> Word {
        debug_assert!(from <= to && to <= self.len());
        let len = to - from;
        if len == 0 {
            return Word::EMPTY;
        }
        Word::from_raw(self.bits >> (self.len() - to), len)
    }

    /// Removes the symbol at 1-based position `i`.
    #[inline]
    pub fn delete(&self, i: usize) -> Word {
        debug_assert!(i >= 1 && i <= self.len());
        let after = self.len() - i;
        let high = self.bits >> (after + 1);
        let low = self.bits & low_mask(after);
        Word::from_raw((high << after) | low, self.len() - 1)
    }

    /// Inserts `bit` so that it becomes the symbol at 1-based position `i`
    /// (`1 <= i <= len + 1`). Panics in debug builds if the result is too long.
    #[inline]
    pub fn insert(&self, i: usize, bit: u8) -> Word {
        debug_assert!(i >= 1 && i <= self.len() + 1 && self.len() < MAX_LEN);
        let after = self.len() + 1 - i;
        let low = self.bits & low_mask(after);
        let high = self.bits >> after;
        Word::from_raw((high << (after + 1)) | (u64::from(bit & 1) << after) | low, self.len() + 1)
    }

    /// True if `self` can be obtained from `other` by deleting symbols.
    pub fn is_subsequence_of(&self, other: &Word) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut need = 1;
        for j in 1..=other.len() {
            if need > self.len() {
                return true;
            }
            if other.bit(j) == self.bit(need) {
                need += 1;
            }
        }
        need > self.len()
    }

    /// Bitmask of positions `i` (bit `n - i - 1` for the pair `i, i+1`) where
    /// adjacent symbols differ.
    #[inline]
    fn transitions(&self) -> u64 {
        if self.len() < 2 {
            return 0;
        }
        (self.bits ^ (self.bits >> 1)) & low_mask(self.len() - 1)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(\"{self}\")")
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses a non-empty 0/1 string.
    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::EmptyWord);
        }
        Word::parse_allow_empty(s)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// VT syndrome `sum_i i * x_i` over 1-based positions.
pub fn vt_syndrome(x: &Word) -> u64 {
    let n = x.len();
    let mut rest = x.bits();
    let mut syn = 0u64;
    while rest != 0 {
        let bit = rest.trailing_zeros() as usize;
        syn += (n - bit) as u64;
        rest &= rest - 1;
    }
    syn
}

/// Length of the longest contiguous substring with `x_k = x_{k+2}` throughout.
/// Words of length at most two are themselves such a run.
pub fn longest_two_periodic_run(x: &Word) -> usize {
    let n = x.len();
    if n <= 2 {
        return n;
    }
    let mut best = 2;
    let mut current = 2;
    for k in 3..=n {
        if x.bit(k) == x.bit(k - 2) {
            current += 1;
            best = best.max(current);
        } else {
            current = 2;
        }
    }
    best
}

/// True iff adjacent symbols always differ; words of length at most one are
/// alternating.
pub fn is_alternating(x: &Word) -> bool {
    x.len() < 2 || x.transitions() == low_mask(x.len() - 1)
}

/// Number of maximal constant blocks. Equals `|D_1(x)|`.
pub fn run_count(x: &Word) -> Result<usize> {
    if x.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(1 + x.transitions().count_ones() as usize)
}

pub fn hamming_distance(x: &Word, y: &Word) -> Result<usize> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch { left: x.len(), right: y.len() });
    }
    Ok((x.bits() ^ y.bits()).count_ones() as usize)
}

pub fn complement(x: &Word) -> Word {
    x.complement()
}

/// All words of length `n` in lexicographic order.
pub fn all_words(n: usize) -> impl DoubleEndedIterator<Item = Word> + ExactSizeIterator {
    assert!(n <= 32, "exhaustive enumeration limited to n <= 32");
    (0..1usize << n).map(move |b| Word::from_raw(b as u64, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse_allow_empty(s).unwrap()
    }

    #[test]
    fn syndrome_examples() {
        assert_eq!(vt_syndrome(&w("0000")), 0);
        assert_eq!(vt_syndrome(&w("1011")), 8);
        assert_eq!(vt_syndrome(&w("110100")), 7);
        assert_eq!(vt_syndrome(&w("")), 0);
    }

    #[test]
    fn two_periodic_run_examples() {
        assert_eq!(longest_two_periodic_run(&w("010101")), 6);
        assert_eq!(longest_two_periodic_run(&w("00100")), 3);
        assert_eq!(longest_two_periodic_run(&w("110100")), 4);
        assert_eq!(longest_two_periodic_run(&w("1")), 1);
        assert_eq!(longest_two_periodic_run(&w("")), 0);
    }

    #[test]
    fn alternating_examples() {
        assert!(is_alternating(&w("0101")));
        assert!(!is_alternating(&w("0110")));
        assert!(is_alternating(&w("")));
        assert!(is_alternating(&w("1")));
    }

    #[test]
    fn run_count_examples() {
        assert_eq!(run_count(&w("0000")).unwrap(), 1);
        assert_eq!(run_count(&w("0101")).unwrap(), 4);
        assert_eq!(run_count(&w("001100")).unwrap(), 3);
        assert_eq!(run_count(&w("")), Err(Error::EmptyWord));
    }

    #[test]
    fn hamming_and_complement() {
        assert_eq!(hamming_distance(&w("0110"), &w("0100")).unwrap(), 1);
        assert_eq!(hamming_distance(&w("0110"), &w("0110")).unwrap(), 0);
        assert_eq!(hamming_distance(&w("000"), &w("111")).unwrap(), 3);
        assert!(matches!(hamming_distance(&w("00"), &w("000")), Err(Error::LengthMismatch { .. })));
        assert_eq!(complement(&w("01")), w("10"));
        assert_eq!(complement(&w("")), w(""));
        assert_eq!(complement(&w("110")), w("001"));
    }

    #[test]
    fn parsing() {
        assert_eq!("0110".parse::<Word>().unwrap().to_string(), "0110");
        assert_eq!("".parse::<Word>(), Err(Error::EmptyWord));
        assert!(matches!("01a".parse::<Word>(), Err(Error::InvalidSymbol { symbol: 'a', offset: 2 })));
        assert!(matches!(Word::parse_allow_empty(&"0".repeat(64)), Err(Error::WordTooLong { .. })));
        assert_eq!(Word::parse_allow_empty("").unwrap(), Word::EMPTY);
    }

    #[test]
    fn editing() {
        let x = w("10110");
        assert_eq!(x.delete(1), w("0110"));
        assert_eq!(x.delete(3), w("1010"));
        assert_eq!(x.delete(5), w("1011"));
        assert_eq!(x.insert(1, 0), w("010110"));
        assert_eq!(x.insert(6, 1), w("101101"));
        assert_eq!(x.insert(3, 0), w("100110"));
        assert_eq!(x.subword(1, 4), w("011"));
        assert_eq!(w("01").concat(&w("110")).unwrap(), w("01110"));
        assert!(w("010").is_subsequence_of(&w("0110")));
        assert!(!w("111").is_subsequence_of(&w("0110")));
        assert!(w("").is_subsequence_of(&w("")));
    }

    #[test]
    fn ordering_is_lexicographic_within_length() {
        let mut v = vec![w("10"), w("01"), w("11"), w("00")];
        v.sort();
        let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(s, ["00", "01", "10", "11"]);
    }

    #[test]
    fn two_periodic_run_full_iff_parity_classes_constant() {
        for n in 0..=10 {
            for x in all_words(n) {
                let odd_const = (1..=n).step_by(2).all(|i| x.bit(i) == x.bit(1));
                let even_const = (2..=n).step_by(2).all(|i| x.bit(i) == x.bit(2));
                assert_eq!(longest_two_periodic_run(&x) == n, odd_const && even_const, "{x}");
                if is_alternating(&x) {
                    assert_eq!(longest_two_periodic_run(&x), n);
                }
            }
        }
    }
}
