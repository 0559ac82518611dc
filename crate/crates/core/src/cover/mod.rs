//! Clique cover of the Type-A confusability graph `G(n)` (vertices
//! `{0,1}^n`, edges between words whose single-deletion balls share two
//! words) and the redundancy lower bound it yields for codes that reconstruct
//! from two reads.
//!
//! Words are cut into `m = floor(n / 2ℓ)` blocks of length `2ℓ` and a tail of
//! length `r = n - 2ℓm`. `Λ` holds the `2ℓ` block patterns `(01)^j (10)^{ℓ-j}`
//! and `(10)^j (01)^{ℓ-j}`; `Λ̃` is its complement in `{0,1}^{2ℓ}`. The cover
//! consists of singletons `{x}` for `x ∈ Λ̃^m × {0,1}^r` and, for every
//! `(u, w, i)` with `u ∈ Λ̃^{i-1}` and `|w| = 2ℓ(m-i) + r`, the two ℓ-cliques
//! obtained by placing each orientation of the `Λ` patterns in block `i`.

mod mis;

pub use mis::{max_independent_set_exact, IndependentSet};

use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::balls::WordSet;
use crate::caps::{check_cap, Caps};
use crate::confusability::{classify_pair, PairKind};
use crate::error::{Error, Result};
use crate::numeric::log2_big;
use crate::words::{Word, MAX_LEN};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoverParams {
    pub n: usize,
    pub ell: usize,
    pub m: usize,
    pub r: usize,
}

impl CoverParams {
    pub fn new(n: usize, ell: usize) -> Result<Self> {
        if ell < 1 {
            return Err(Error::InvalidParameter("ℓ must be at least 1".into()));
        }
        if n < 2 * ell {
            return Err(Error::InvalidParameter(format!("cover needs n >= 2ℓ, got n={n} ℓ={ell}")));
        }
        let m = n / (2 * ell);
        Ok(CoverParams { n, ell, m, r: n - 2 * ell * m })
    }

    /// `λ = |Λ̃| = 2^{2ℓ} - 2ℓ`.
    pub fn lambda(&self) -> BigUint {
        (BigUint::one() << (2 * self.ell)) - BigUint::from(2 * self.ell)
    }

    /// Length of the `w` block for a clique anchored at block `i`.
    pub fn tail_len(&self, block: usize) -> usize {
        2 * self.ell * (self.m - block) + self.r
    }
}

fn pattern(first: &str, second: &str, ell: usize, j: usize) -> Word {
    let s = format!("{}{}", first.repeat(j), second.repeat(ell - j));
    Word::parse_allow_empty(&s).expect("valid pattern")
}

/// Block pattern `(01)^j (10)^{ℓ-j}` (orientation 0) or `(10)^j (01)^{ℓ-j}`
/// (orientation 1), for `j ∈ [ℓ]`.
pub fn lambda_pattern(ell: usize, j: usize, orientation: u8) -> Word {
    debug_assert!(j >= 1 && j <= ell);
    if orientation == 0 {
        pattern("01", "10", ell, j)
    } else {
        pattern("10", "01", ell, j)
    }
}

/// `Λ` as a set; always has exactly `2ℓ` elements.
pub fn lambda_set(ell: usize) -> Result<WordSet> {
    if ell < 1 || 2 * ell > MAX_LEN {
        return Err(Error::InvalidParameter(format!("ℓ must satisfy 1 <= 2ℓ <= {MAX_LEN}, got {ell}")));
    }
    let words = (1..=ell).flat_map(|j| [lambda_pattern(ell, j, 0), lambda_pattern(ell, j, 1)]);
    let set = WordSet::from_words(2 * ell, words)?;
    debug_assert_eq!(set.len(), 2 * ell);
    Ok(set)
}

/// `Λ̃ = {0,1}^{2ℓ} \ Λ` in lexicographic order.
pub fn lambda_complement(ell: usize) -> Result<Vec<Word>> {
    if 2 * ell > 24 {
        return Err(Error::InvalidParameter(format!("Λ̃ is only materialized for 2ℓ <= 24, got ℓ={ell}")));
    }
    let lambda = lambda_set(ell)?;
    Ok(crate::words::all_words(2 * ell).filter(|w| !lambda.contains(w)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CliqueDescriptor {
    Singleton(Word),
    /// `{u · p_j · w : j ∈ [ℓ]}` where `p_j` is the orientation's `Λ`
    /// pattern and `block = |u| / 2ℓ + 1`.
    Parameterized { u: Word, w: Word, block: usize, orientation: u8 },
}

impl CliqueDescriptor {
    pub fn expand(&self, ell: usize) -> Vec<Word> {
        match *self {
            CliqueDescriptor::Singleton(x) => vec![x],
            CliqueDescriptor::Parameterized { u, w, orientation, .. } => (1..=ell)
                .map(|j| u.concat(&lambda_pattern(ell, j, orientation)).and_then(|p| p.concat(&w)).expect("fits"))
                .collect(),
        }
    }
}

/// Concatenations `a_1 ... a_k · t` for `a_i` drawn from `alphabet` and `t`
/// ranging over `{0,1}^tail_len`, in lexicographic order.
struct BlockProduct {
    alphabet: Arc<[Word]>,
    digits: Vec<usize>,
    tail_len: usize,
    tail: u64,
    done: bool,
}

impl BlockProduct {
    fn new(alphabet: Arc<[Word]>, blocks: usize, tail_len: usize) -> Self {
        let done = blocks > 0 && alphabet.is_empty();
        BlockProduct { alphabet, digits: vec![0; blocks], tail_len, tail: 0, done }
    }
}

impl Iterator for BlockProduct {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        let mut word = Word::EMPTY;
        for &d in &self.digits {
            word = word.concat(&self.alphabet[d]).expect("fits");
        }
        word = word.concat(&Word::from_raw(self.tail, self.tail_len)).expect("fits");

        if u128::from(self.tail) + 1 < (1u128 << self.tail_len) {
            self.tail += 1;
        } else {
            self.tail = 0;
            let mut k = self.digits.len();
            loop {
                if k == 0 {
                    self.done = true;
                    break;
                }
                k -= 1;
                self.digits[k] += 1;
                if self.digits[k] < self.alphabet.len() {
                    break;
                }
                self.digits[k] = 0;
            }
        }
        Some(word)
    }
}

/// Streams every descriptor of the cover: singletons first, then the
/// parameterized cliques by block index, prefix, tail and orientation.
pub fn build_cover(n: usize, ell: usize) -> Result<impl Iterator<Item = CliqueDescriptor>> {
    let params = CoverParams::new(n, ell)?;
    if n > MAX_LEN {
        return Err(Error::WordTooLong { len: n, max: MAX_LEN });
    }
    let alphabet: Arc<[Word]> = lambda_complement(ell)?.into();
    let empty: Arc<[Word]> = Arc::from(Vec::new());
    let singletons = BlockProduct::new(alphabet.clone(), params.m, params.r).map(CliqueDescriptor::Singleton);
    let cliques = (1..=params.m).flat_map(move |block| {
        let empty = empty.clone();
        let tail_len = params.tail_len(block);
        BlockProduct::new(alphabet.clone(), block - 1, 0).flat_map(move |u| {
            BlockProduct::new(empty.clone(), 0, tail_len).flat_map(move |w| {
                [0u8, 1].map(|orientation| CliqueDescriptor::Parameterized { u, w, block, orientation })
            })
        })
    });
    Ok(singletons.chain(cliques))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CoverViolation {
    WrongCliqueSize { descriptor: CliqueDescriptor, distinct: usize },
    NotAClique { descriptor: CliqueDescriptor, x: Word, y: Word, kind: PairKind },
    Uncovered { word: Word },
    CountMismatch { streamed: u64, exact: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub params: CoverParams,
    pub singletons: u64,
    pub cliques: u64,
    pub covered: u64,
    pub violation: Option<CoverViolation>,
}

impl CoverReport {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// Exhaustively checks that every parameterized descriptor is a clique of
/// `ℓ` Type-A-confusable words and that every word of `{0,1}^n` is covered.
pub fn verify_cover(n: usize, ell: usize) -> Result<CoverReport> {
    let params = CoverParams::new(n, ell)?;
    check_cap(n, Caps::from_env().cover)?;
    let mut covered_bits = vec![0u64; (1usize << n).div_ceil(64)];
    let (mut singletons, mut cliques) = (0u64, 0u64);
    let mut violation = None;
    let mut mark = |w: &Word| covered_bits[(w.bits() / 64) as usize] |= 1 << (w.bits() % 64);

    for descriptor in build_cover(n, ell)? {
        match descriptor {
            CliqueDescriptor::Singleton(x) => {
                singletons += 1;
                mark(&x);
            }
            CliqueDescriptor::Parameterized { .. } => {
                cliques += 1;
                let mut members = descriptor.expand(ell);
                members.iter().for_each(&mut mark);
                if violation.is_some() {
                    continue;
                }
                members.sort_unstable();
                members.dedup();
                if members.len() != ell {
                    violation = Some(CoverViolation::WrongCliqueSize { descriptor, distinct: members.len() });
                    continue;
                }
                'pairs: for (i, x) in members.iter().enumerate() {
                    for y in &members[i + 1..] {
                        let kind = classify_pair(x, y)?.kind;
                        if kind != PairKind::TypeA {
                            violation = Some(CoverViolation::NotAClique { descriptor, x: *x, y: *y, kind });
                            break 'pairs;
                        }
                    }
                }
            }
        }
    }

    let covered: u64 = covered_bits.iter().map(|b| u64::from(b.count_ones())).sum();
    if violation.is_none() && covered != 1u64 << n {
        let missing = (0..1u64 << n).find(|b| covered_bits[(b / 64) as usize] & (1 << (b % 64)) == 0).expect("gap");
        violation = Some(CoverViolation::Uncovered { word: Word::from_raw(missing, n) });
    }
    if violation.is_none() {
        let exact = cover_size(n, ell)?.exact;
        if BigUint::from(singletons + cliques) != exact {
            violation = Some(CoverViolation::CountMismatch { streamed: singletons + cliques, exact: exact.to_string() });
        }
    }
    Ok(CoverReport { params, singletons, cliques, covered, violation })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoverSize {
    #[serde(serialize_with = "crate::serde_big::as_string")]
    pub exact: BigUint,
    /// Closed form `2^n {ρ^m + (1 - ρ^m)/ℓ}` with `ρ = 1 - 2ℓ/2^{2ℓ}`, when
    /// representable as a double.
    pub formula: Option<f64>,
    /// `log2` of the closed form.
    pub formula_log2: f64,
    pub exact_log2: f64,
    /// Whether exact and closed-form values agree to 1e-9 in `log2`.
    pub agree: bool,
}

/// Number of descriptors, `2^r (λ^m + 2 Σ_{i=1}^{m} λ^{i-1} 2^{2ℓ(m-i)})`,
/// evaluated via the geometric sum `2^r (λ^m + (2^{2ℓm} - λ^m) / ℓ)`.
pub fn cover_size_exact(n: usize, ell: usize) -> Result<BigUint> {
    let p = CoverParams::new(n, ell)?;
    let lambda_m = p.lambda().pow(p.m as u32);
    let full = BigUint::one() << (2 * ell * p.m);
    // 2^{2ℓ} - λ = 2ℓ divides 2^{2ℓm} - λ^m
    let cliques_times_ell = full - &lambda_m;
    debug_assert!((&cliques_times_ell % BigUint::from(ell)) == BigUint::from(0u32));
    Ok((lambda_m + cliques_times_ell / BigUint::from(ell)) << p.r)
}

/// The same count by direct summation; used to cross-check the geometric
/// form on small parameters.
pub fn cover_size_by_sum(n: usize, ell: usize) -> Result<BigUint> {
    let p = CoverParams::new(n, ell)?;
    let lambda = p.lambda();
    let mut gamma = BigUint::from(0u32);
    for i in 1..=p.m {
        gamma += lambda.pow((i - 1) as u32) << (2 * ell * (p.m - i));
    }
    Ok((lambda.pow(p.m as u32) + gamma * 2u32) << p.r)
}

pub fn cover_size(n: usize, ell: usize) -> Result<CoverSize> {
    let p = CoverParams::new(n, ell)?;
    let exact = cover_size_exact(n, ell)?;
    let rho = 1.0 - (2 * ell) as f64 / (2f64).powi(2 * ell as i32);
    let rho_m = (p.m as f64 * rho.ln()).exp();
    let bracket = rho_m + (1.0 - rho_m) / ell as f64;
    let formula_log2 = n as f64 + bracket.log2();
    let formula = (n < 1000).then(|| (2f64).powi(n as i32) * bracket);
    let exact_log2 = log2_big(&exact);
    let agree = (exact_log2 - formula_log2).abs() < 1e-9;
    Ok(CoverSize { exact, formula, formula_log2, exact_log2, agree })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RedundancyLowerBound {
    pub n: usize,
    pub ell: usize,
    pub cover_log2: f64,
    /// `n - log2 |Q(n, ℓ)|`; no `(n, 2; D_1)`-reconstruction code has less
    /// redundancy.
    pub bound: f64,
}

/// `ℓ = floor((1 - ε) log2(n) / 2)`.
pub fn block_parameter(n: usize, eps: f64) -> Result<usize> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::InvalidParameter(format!("ε must lie in (0, 1), got {eps}")));
    }
    if n < 4 {
        return Err(Error::InvalidParameter(format!("n must be at least 4, got {n}")));
    }
    let ell = (0.5 * (1.0 - eps) * (n as f64).log2()).floor() as usize;
    if ell < 1 {
        return Err(Error::InvalidParameter(format!("ℓ = 0 for n={n}, ε={eps}; increase n or decrease ε")));
    }
    Ok(ell)
}

pub fn redundancy_lower_bound(n: usize, eps: f64) -> Result<RedundancyLowerBound> {
    redundancy_lower_bound_with_ell(n, block_parameter(n, eps)?)
}

pub fn redundancy_lower_bound_with_ell(n: usize, ell: usize) -> Result<RedundancyLowerBound> {
    let cover_log2 = log2_big(&cover_size_exact(n, ell)?);
    Ok(RedundancyLowerBound { n, ell, cover_log2, bound: n as f64 - cover_log2 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse_allow_empty(s).unwrap()
    }

    #[test]
    fn lambda_examples() {
        let l2: Vec<String> = lambda_set(2).unwrap().iter().map(|x| x.to_string()).collect();
        assert_eq!(l2, ["0101", "0110", "1001", "1010"]);
        let l1: Vec<String> = lambda_set(1).unwrap().iter().map(|x| x.to_string()).collect();
        assert_eq!(l1, ["01", "10"]);
        for ell in 1..=8 {
            assert_eq!(lambda_set(ell).unwrap().len(), 2 * ell);
            assert_eq!(lambda_complement(ell).unwrap().len(), (1 << (2 * ell)) - 2 * ell);
        }
    }

    #[test]
    fn worked_example_cliques() {
        let zero = CliqueDescriptor::Parameterized { u: w("0000"), w: w("1000"), block: 2, orientation: 0 };
        assert_eq!(zero.expand(2), vec![w("000001101000"), w("000001011000")]);
        let one = CliqueDescriptor::Parameterized { u: w("0000"), w: w("1000"), block: 2, orientation: 1 };
        assert_eq!(one.expand(2), vec![w("000010011000"), w("000010101000")]);
        let all: Vec<CliqueDescriptor> = build_cover(12, 2).unwrap().collect();
        assert!(all.contains(&zero) && all.contains(&one));
        let singletons = all.iter().filter(|d| matches!(d, CliqueDescriptor::Singleton(_))).count();
        assert_eq!(singletons, 1728);
        assert_eq!(all.len(), 2912);
    }

    #[test]
    fn cover_size_examples() {
        let size = cover_size(12, 2).unwrap();
        assert_eq!(size.exact, BigUint::from(2912u32));
        assert!((size.formula.unwrap() - 2912.0).abs() < 1e-6);
        assert!(size.agree);
        for n in 2..=64 {
            for ell in 1..=4 {
                if n < 2 * ell {
                    continue;
                }
                assert_eq!(cover_size_exact(n, ell).unwrap(), cover_size_by_sum(n, ell).unwrap());
                assert!(cover_size(n, ell).unwrap().agree, "n={n} ℓ={ell}");
            }
        }
    }

    #[test]
    fn descriptor_stream_matches_count() {
        for (n, ell) in [(9, 2), (10, 2), (7, 3), (13, 3), (5, 1)] {
            let streamed = build_cover(n, ell).unwrap().count();
            assert_eq!(BigUint::from(streamed), cover_size_exact(n, ell).unwrap());
        }
    }

    #[test]
    fn small_covers_verify() {
        for (n, ell) in [(8, 2), (9, 2), (12, 2), (6, 3), (4, 1), (7, 1)] {
            let report = verify_cover(n, ell).unwrap();
            assert!(report.holds(), "n={n} ℓ={ell}: {:?}", report.violation);
            assert_eq!(report.covered, 1 << n);
        }
    }

    #[test]
    fn cliques_have_ell_members() {
        for d in build_cover(11, 3).unwrap() {
            if let CliqueDescriptor::Parameterized { .. } = d {
                let mut m = d.expand(3);
                m.sort();
                m.dedup();
                assert_eq!(m.len(), 3);
                assert!(m.iter().all(|x| x.len() == 11));
            }
        }
    }

    #[test]
    fn lower_bound_examples() {
        let b = redundancy_lower_bound_with_ell(12, 2).unwrap();
        assert!((b.bound - (12.0 - 2912f64.log2())).abs() < 1e-12);
        assert!((b.bound - 0.492).abs() < 1e-3);
        assert!(redundancy_lower_bound(16, 0.99).is_err());
        assert!(redundancy_lower_bound(16, 0.0).is_err());
        assert!(redundancy_lower_bound(3, 0.5).is_err());
        assert_eq!(block_parameter(1 << 20, 0.5).unwrap(), 5);
    }

    #[test]
    fn parameter_errors() {
        assert!(CoverParams::new(3, 2).is_err());
        assert!(CoverParams::new(3, 0).is_err());
        assert!(verify_cover(30, 2).is_err());
    }
}
