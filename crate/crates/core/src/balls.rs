//! Deletion and insertion balls as explicit sets, their extremal sizes, and
//! pairwise intersections.

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::caps::{check_cap, Caps};
use crate::codes::Codebook;
use crate::error::{Error, Result};
use crate::numeric::binomial_prefix;
use crate::words::{all_words, Word, MAX_LEN};

/// A deduplicated set of words sharing one length, kept in lexicographic
/// order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct WordSet {
    member_length: usize,
    words: Vec<Word>,
}

impl WordSet {
    pub fn empty(member_length: usize) -> Self {
        WordSet { member_length, words: Vec::new() }
    }

    pub fn from_words<I: IntoIterator<Item = Word>>(member_length: usize, words: I) -> Result<Self> {
        let mut words: Vec<Word> = words.into_iter().collect();
        if let Some(bad) = words.iter().find(|w| w.len() != member_length) {
            return Err(Error::LengthMismatch { left: member_length, right: bad.len() });
        }
        words.sort_unstable();
        words.dedup();
        Ok(WordSet { member_length, words })
    }

    pub(crate) fn from_sorted(member_length: usize, words: Vec<Word>) -> Self {
        debug_assert!(words.windows(2).all(|p| p[0] < p[1]));
        debug_assert!(words.iter().all(|w| w.len() == member_length));
        WordSet { member_length, words }
    }

    fn from_packed(member_length: usize, mut packed: Vec<u64>) -> Self {
        packed.sort_unstable();
        packed.dedup();
        let words = packed.into_iter().map(|b| Word::from_raw(b, member_length)).collect();
        WordSet { member_length, words }
    }

    pub fn member_length(&self) -> usize {
        self.member_length
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        w.len() == self.member_length && self.words.binary_search(w).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Word> {
        self.words.iter()
    }

    pub fn as_slice(&self) -> &[Word] {
        &self.words
    }

    pub fn into_vec(self) -> Vec<Word> {
        self.words
    }

    pub fn intersection(&self, other: &WordSet) -> WordSet {
        let words = self.words.iter().filter(|w| other.contains(w)).copied().collect();
        WordSet::from_sorted(self.member_length, words)
    }

    pub fn union(&self, other: &WordSet) -> WordSet {
        let mut words = self.words.clone();
        words.extend(other.words.iter().filter(|w| w.len() == self.member_length));
        words.sort_unstable();
        words.dedup();
        WordSet::from_sorted(self.member_length, words)
    }

    pub fn difference(&self, other: &WordSet) -> WordSet {
        let words = self.words.iter().filter(|w| !other.contains(w)).copied().collect();
        WordSet::from_sorted(self.member_length, words)
    }

    pub fn is_subset(&self, other: &WordSet) -> bool {
        self.words.iter().all(|w| other.contains(w))
    }
}

impl std::fmt::Debug for WordSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.words.iter().map(|w| w.to_string())).finish()
    }
}

impl<'a> IntoIterator for &'a WordSet {
    type Item = &'a Word;
    type IntoIter = std::slice::Iter<'a, Word>;

    fn into_iter(self) -> Self::IntoIter {
        self.words.iter()
    }
}

impl Serialize for WordSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.words.iter().map(|w| w.to_string()))
    }
}

/// Packed single-deletion results of `word` (length `len`), one per run.
#[inline]
fn push_single_deletions(word: u64, len: usize, out: &mut Vec<u64>) {
    let x = Word::from_raw(word, len);
    let mut prev = 2u8;
    for i in 1..=len {
        let b = x.bit(i);
        // deleting any symbol of a run gives the same word; take the first
        if b != prev {
            out.push(x.delete(i).bits());
        }
        prev = b;
    }
}

/// Sorted packed elements of `D_t(x)`; assumes `t <= |x|`.
pub(crate) fn deletion_ball_packed(x: &Word, t: usize) -> Vec<u64> {
    let mut level = vec![x.bits()];
    let mut len = x.len();
    for _ in 0..t {
        let mut next = Vec::with_capacity(level.len() * len);
        for &w in &level {
            push_single_deletions(w, len, &mut next);
        }
        next.sort_unstable();
        next.dedup();
        level = next;
        len -= 1;
    }
    level
}

/// `D_t(x)`: all distinct words obtained from `x` by deleting exactly `t`
/// symbols.
pub fn deletion_ball(x: &Word, t: usize) -> Result<WordSet> {
    if t > x.len() {
        return Err(Error::DeletionsOutOfRange { deletions: t as i64, len: x.len() });
    }
    Ok(WordSet::from_packed(x.len() - t, deletion_ball_packed(x, t)))
}

/// `I_t(y)`: all distinct words of length `|y| + t` that contain `y` as a
/// subsequence.
pub fn insertion_ball(y: &Word, t: usize) -> Result<WordSet> {
    let target = y.len() + t;
    if target > MAX_LEN {
        return Err(Error::WordTooLong { len: target, max: MAX_LEN });
    }
    let mut level = vec![*y];
    for _ in 0..t {
        let mut next = Vec::with_capacity(level.len() * 2 * (level[0].len() + 1));
        for w in &level {
            for i in 1..=w.len() + 1 {
                next.push(w.insert(i, 0));
                next.push(w.insert(i, 1));
            }
        }
        next.sort_unstable();
        next.dedup();
        level = next;
    }
    Ok(WordSet::from_sorted(target, level))
}

/// Extremal deletion-ball size `D_t(n) = sum_{i=0}^{t} C(n - t, i)`, with
/// `D_t(n) = 0` outside `0 <= t <= n`.
pub fn dtn(n: i64, t: i64) -> BigUint {
    if t < 0 || n < 0 || t > n {
        return BigUint::zero();
    }
    binomial_prefix((n - t) as usize, t as usize).into_iter().sum()
}

/// Read coverage of the whole space, `nu_t(n) = 2 D_{t-1}(n - 2)`.
pub fn nu_space(n: i64, t: i64) -> BigUint {
    dtn(n - 2, t - 1) * 2u32
}

/// `D_t(x) ∩ D_t(y)`, computed set-exactly. Only one ball is materialized:
/// its elements are kept when they are also subsequences of the other word.
pub fn ball_intersection(x: &Word, y: &Word, t: usize) -> Result<WordSet> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch { left: x.len(), right: y.len() });
    }
    if t > x.len() {
        return Err(Error::DeletionsOutOfRange { deletions: t as i64, len: x.len() });
    }
    // fewer runs tends to mean the smaller ball
    let transitions = |w: &Word| (w.bits() ^ (w.bits() >> 1)).count_ones();
    let (small, other) = if transitions(x) <= transitions(y) { (x, y) } else { (y, x) };
    let ball = deletion_ball(small, t)?;
    let words = ball.iter().filter(|z| z.is_subsequence_of(other)).copied().collect();
    Ok(WordSet::from_sorted(x.len() - t, words))
}

/// Size of the intersection of two sorted, deduplicated slices.
#[inline]
pub(crate) fn sorted_intersection_len(a: &[u64], b: &[u64]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Precomputed `t`-deletion balls for a list of equal-length words, used by
/// the exhaustive pair sweeps.
#[derive(Debug, Clone)]
pub struct BallTable {
    words: Vec<Word>,
    balls: Vec<Vec<u64>>,
    t: usize,
}

impl BallTable {
    pub fn new(words: Vec<Word>, t: usize) -> Result<Self> {
        if let Some(first) = words.first() {
            if let Some(bad) = words.iter().find(|w| w.len() != first.len()) {
                return Err(Error::LengthMismatch { left: first.len(), right: bad.len() });
            }
            if t > first.len() {
                return Err(Error::DeletionsOutOfRange { deletions: t as i64, len: first.len() });
            }
        }
        let balls = words.par_iter().map(|w| deletion_ball_packed(w, t)).collect();
        Ok(BallTable { words, balls, t })
    }

    /// Balls of every word in `{0,1}^n`, indexed by the packed word value.
    pub fn full_space(n: usize, t: usize) -> Result<Self> {
        Self::new(all_words(n).collect(), t)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn deletions(&self) -> usize {
        self.t
    }

    pub fn word(&self, i: usize) -> Word {
        self.words[i]
    }

    pub fn ball_size(&self, i: usize) -> usize {
        self.balls[i].len()
    }

    pub(crate) fn balls_of(&self, i: usize) -> &[u64] {
        &self.balls[i]
    }

    pub fn intersection_size(&self, i: usize, j: usize) -> usize {
        sorted_intersection_len(&self.balls[i], &self.balls[j])
    }

    /// Maximum intersection over unordered pairs `i < j`, with the first pair
    /// (in index order) attaining it. `None` for fewer than two words.
    pub fn max_pair_intersection(&self) -> Option<(usize, usize, usize)> {
        let k = self.len();
        if k < 2 {
            return None;
        }
        (0..k - 1)
            .into_par_iter()
            .map(|i| {
                let mut best = (0usize, i, i + 1);
                for j in i + 1..k {
                    let s = self.intersection_size(i, j);
                    if s > best.0 {
                        best = (s, i, j);
                    }
                }
                best
            })
            .reduce_with(|a, b| {
                // larger value wins; ties go to the smaller pair index
                if a.0 > b.0 || (a.0 == b.0 && (a.1, a.2) < (b.1, b.2)) {
                    a
                } else {
                    b
                }
            })
    }

    /// First pair `(i, j)` in index order whose intersection has at least
    /// `threshold` elements.
    pub fn first_pair_at_least(&self, threshold: usize) -> Option<(usize, usize, usize)> {
        let k = self.len();
        (0..k).into_par_iter().find_map_first(|i| {
            (i + 1..k).find_map(|j| {
                let s = self.intersection_size(i, j);
                (s >= threshold).then_some((i, j, s))
            })
        })
    }
}

/// Read coverage `ν(C; D_t)` of a codebook, with the first pair attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReadCoverage {
    pub value: usize,
    pub witness: (Word, Word),
}

/// Exact maximum of `|D_t(x) ∩ D_t(y)|` over distinct codewords.
pub fn code_read_coverage(code: &Codebook, t: usize) -> Result<ReadCoverage> {
    read_coverage_of_words(code.words(), code.n(), t, Caps::from_env().enumeration)
}

pub(crate) fn read_coverage_of_words(words: &[Word], n: usize, t: usize, cap: usize) -> Result<ReadCoverage> {
    if words.len() < 2 {
        return Err(Error::CodeTooSmall(words.len()));
    }
    if t > n {
        return Err(Error::DeletionsOutOfRange { deletions: t as i64, len: n });
    }
    check_cap(n, cap)?;
    let table = BallTable::new(words.to_vec(), t)?;
    let (value, i, j) = table.max_pair_intersection().expect("at least two words");
    Ok(ReadCoverage { value, witness: (table.word(i), table.word(j)) })
}
