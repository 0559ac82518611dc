//! Code families (classical VT and constrained shifted VT), enumeration,
//! exact counting of the run-constrained space, and redundancy statistics.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::caps::{check_cap, Caps};
use crate::error::{Error, Result};
use crate::numeric::log2_big;
use crate::words::{all_words, longest_two_periodic_run, vt_syndrome, Word, MAX_LEN};

/// Parameters `(P, c, d)` of a constrained shifted VT code: syndrome `c`
/// modulo `1 + P/2`, weight parity `d`, longest 2-periodic run at most `P`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CsvtParams {
    pub period: u64,
    pub syndrome: u64,
    pub parity: u8,
}

impl CsvtParams {
    pub fn new(period: u64, syndrome: u64, parity: u8) -> Self {
        CsvtParams { period, syndrome, parity }
    }

    /// Number of `(c, d)` classes, `P + 2`.
    pub fn class_count(period: u64) -> u64 {
        period + 2
    }

    fn validate(&self, n: usize) -> Result<()> {
        let p = self.period;
        if p == 0 || p % 2 == 1 || p > 2 * n as u64 {
            return Err(Error::InvalidParameter(format!("P must be even with 0 < P <= 2n, got P={p} n={n}")));
        }
        if self.syndrome >= 1 + p / 2 {
            return Err(Error::InvalidParameter(format!("c must lie in Z_{}, got {}", 1 + p / 2, self.syndrome)));
        }
        if self.parity > 1 {
            return Err(Error::InvalidParameter(format!("d must lie in Z_2, got {}", self.parity)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum CodeFamily {
    Vt { residue: u64 },
    Csvt(CsvtParams),
    Explicit,
}

impl CodeFamily {
    pub fn name(&self) -> &'static str {
        match self {
            CodeFamily::Vt { .. } => "vt",
            CodeFamily::Csvt(_) => "csvt",
            CodeFamily::Explicit => "explicit",
        }
    }
}

/// Membership in `C_CSVT(n, P; c, d)`.
pub fn csvt_member(x: &Word, params: &CsvtParams) -> Result<bool> {
    params.validate(x.len())?;
    Ok(csvt_member_unchecked(x, params))
}

#[inline]
fn csvt_member_unchecked(x: &Word, params: &CsvtParams) -> bool {
    vt_syndrome(x) % (1 + params.period / 2) == params.syndrome
        && u64::from(x.weight() % 2) == u64::from(params.parity)
        && longest_two_periodic_run(x) as u64 <= params.period
}

/// Membership in the classical VT code `Syn(x) = a (mod n+1)`.
pub fn vt_member(x: &Word, residue: u64) -> Result<bool> {
    let modulus = x.len() as u64 + 1;
    if residue >= modulus {
        return Err(Error::InvalidParameter(format!("VT residue must lie in Z_{modulus}, got {residue}")));
    }
    Ok(vt_syndrome(x) % modulus == residue)
}

/// A materialized code: its family, length, and codewords in lexicographic
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codebook {
    family: CodeFamily,
    n: usize,
    words: Vec<Word>,
}

impl Codebook {
    pub fn explicit(n: usize, words: Vec<Word>) -> Result<Self> {
        Self::with_family(CodeFamily::Explicit, n, words)
    }

    fn with_family(family: CodeFamily, n: usize, mut words: Vec<Word>) -> Result<Self> {
        if n > MAX_LEN {
            return Err(Error::WordTooLong { len: n, max: MAX_LEN });
        }
        if let Some(bad) = words.iter().find(|w| w.len() != n) {
            return Err(Error::LengthMismatch { left: n, right: bad.len() });
        }
        words.sort_unstable();
        words.dedup();
        Ok(Codebook { family, n, words })
    }

    pub fn family(&self) -> CodeFamily {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, x: &Word) -> bool {
        x.len() == self.n && self.words.binary_search(x).is_ok()
    }

    /// Parses the codebook file format: one 0/1 word per line, uniform
    /// length, `#` starts a comment, blank lines ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut words = Vec::new();
        let mut n = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let word = Word::parse_allow_empty(line)
                .map_err(|e| Error::Parse { line: idx + 1, detail: e.to_string() })?;
            match n {
                None => n = Some(word.len()),
                Some(len) if len != word.len() => {
                    return Err(Error::Parse {
                        line: idx + 1,
                        detail: format!("expected length {len}, found {}", word.len()),
                    })
                }
                _ => {}
            }
            words.push(word);
        }
        let n = n.ok_or(Error::Parse { line: 0, detail: "no codewords".into() })?;
        Self::explicit(n, words)
    }

    /// Serializes in the format accepted by [`Codebook::parse`].
    pub fn to_file_string(&self) -> String {
        let mut out = format!("# {} code, n = {}, {} codewords\n", self.family.name(), self.n, self.len());
        for w in &self.words {
            out.push_str(&w.to_string());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Codebook {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for w in &self.words {
            writeln!(f, "{w}")?;
        }
        Ok(())
    }
}

/// Materializes a VT or CSVT code by a filtered scan of `{0,1}^n`.
pub fn enumerate_code(family: CodeFamily, n: usize) -> Result<Codebook> {
    check_cap(n, Caps::from_env().enumeration)?;
    let words: Vec<Word> = match family {
        CodeFamily::Vt { residue } => {
            let modulus = n as u64 + 1;
            if residue >= modulus {
                return Err(Error::InvalidParameter(format!("VT residue must lie in Z_{modulus}, got {residue}")));
            }
            all_words(n).filter(|x| vt_syndrome(x) % modulus == residue).collect()
        }
        CodeFamily::Csvt(params) => {
            params.validate(n)?;
            all_words(n).filter(|x| csvt_member_unchecked(x, &params)).collect()
        }
        CodeFamily::Explicit => {
            return Err(Error::InvalidParameter("explicit codes are read from a file, not enumerated".into()))
        }
    };
    Codebook::with_family(family, n, words)
}

/// Sizes of all `P + 2` CSVT classes, indexed by `c * 2 + d`.
pub fn csvt_class_sizes(n: usize, period: u64) -> Result<Vec<u64>> {
    CsvtParams::new(period, 0, 0).validate(n)?;
    check_cap(n, Caps::from_env().enumeration)?;
    let modulus = 1 + period / 2;
    let mut sizes = vec![0u64; (2 * modulus) as usize];
    for x in all_words(n) {
        if longest_two_periodic_run(&x) as u64 <= period {
            let c = vt_syndrome(&x) % modulus;
            let d = u64::from(x.weight() % 2);
            sizes[(c * 2 + d) as usize] += 1;
        }
    }
    Ok(sizes)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CsvtClass {
    pub syndrome: u64,
    pub parity: u8,
    pub size: u64,
}

/// The largest CSVT class by exhaustive count (ties: smallest `c`, then `d`).
pub fn best_csvt_class(n: usize, period: u64) -> Result<CsvtClass> {
    let sizes = csvt_class_sizes(n, period)?;
    let (idx, &size) = sizes
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .expect("at least one class");
    Ok(CsvtClass { syndrome: (idx / 2) as u64, parity: (idx % 2) as u8, size })
}

/// Pigeonhole guarantee for the best CSVT class: some class holds at least
/// `total / classes` words, where `total = 4 F_{P-1}(n-2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CsvtSizeBound {
    #[serde(serialize_with = "crate::serde_big::as_string")]
    pub total: BigUint,
    pub classes: u64,
}

impl CsvtSizeBound {
    /// Smallest integer the best class is guaranteed to reach.
    pub fn guaranteed(&self) -> BigUint {
        let c = BigUint::from(self.classes);
        (&self.total + &c - BigUint::one()) / c
    }

    /// `log2(total / classes)`, the real-valued bound used for redundancy.
    pub fn log2(&self) -> f64 {
        log2_big(&self.total) - (self.classes as f64).log2()
    }
}

/// Formula-mode counterpart of [`best_csvt_class`]; valid for any `n`.
pub fn csvt_size_bound(n: usize, period: u64) -> Result<CsvtSizeBound> {
    let total = count_bounded_periodic(n as u64, period)?;
    Ok(CsvtSizeBound { total, classes: CsvtParams::class_count(period) })
}

/// Memoized values of `F_ℓ(0), F_ℓ(1), ...` where `F_ℓ(n) = 2^n` for
/// `n < ℓ` and `F_ℓ(n) = F_ℓ(n-1) + ... + F_ℓ(n-ℓ)` otherwise.
#[derive(Debug, Clone)]
pub struct FSequence {
    ell: usize,
    values: Vec<BigUint>,
}

impl FSequence {
    pub fn new(ell: usize) -> Result<Self> {
        if ell == 0 {
            return Err(Error::InvalidParameter("F_ℓ needs ℓ >= 1".into()));
        }
        Ok(FSequence { ell, values: Vec::new() })
    }

    pub fn get(&mut self, n: usize) -> &BigUint {
        while self.values.len() <= n {
            let k = self.values.len();
            let next = if k < self.ell {
                BigUint::one() << k
            } else {
                self.values[k - self.ell..k].iter().sum()
            };
            self.values.push(next);
        }
        &self.values[n]
    }
}

pub fn f_count(ell: i64, n: i64) -> Result<BigUint> {
    if n < 0 {
        return Err(Error::InvalidParameter(format!("F_ℓ(n) needs n >= 0, got {n}")));
    }
    if ell < 1 {
        return Err(Error::InvalidParameter(format!("F_ℓ(n) needs ℓ >= 1, got {ell}")));
    }
    Ok(FSequence::new(ell as usize)?.get(n as usize).clone())
}

/// Number of length-`n` words whose longest 2-periodic run is at most `P`,
/// `4 F_{P-1}(n-2)`. Requires `P >= 4` and `n >= 2`.
pub fn count_bounded_periodic(n: u64, period: u64) -> Result<BigUint> {
    if period < 4 {
        return Err(Error::InvalidParameter(format!("P must be at least 4, got {period}")));
    }
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n must be at least 2, got {n}")));
    }
    Ok(f_count(period as i64 - 1, n as i64 - 2)? * 4u32)
}

/// `n - log2(size)`.
pub fn redundancy(n: usize, size: &BigUint) -> Result<f64> {
    if size.is_zero() {
        return Err(Error::InvalidParameter("redundancy of an empty code is undefined".into()));
    }
    Ok(n as f64 - log2_big(size))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SizeKind {
    Exact,
    /// Pigeonhole lower bound on the best class; the redundancy is then an
    /// upper bound on the best-class redundancy.
    Bound,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SizeReport {
    pub value: String,
    pub kind: SizeKind,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CodeStats {
    pub family: &'static str,
    pub n: usize,
    pub params: CodeFamily,
    pub size: SizeReport,
    pub redundancy: f64,
}

pub fn code_stats(code: &Codebook) -> Result<CodeStats> {
    let size = BigUint::from(code.len());
    Ok(CodeStats {
        family: code.family().name(),
        n: code.n(),
        params: code.family(),
        redundancy: redundancy(code.n(), &size)?,
        size: SizeReport { value: size.to_string(), kind: SizeKind::Exact },
    })
}

/// Statistics for the best CSVT class from the counting formula alone.
pub fn csvt_bound_stats(n: usize, period: u64) -> Result<CodeStats> {
    let bound = csvt_size_bound(n, period)?;
    Ok(CodeStats {
        family: "csvt",
        n,
        params: CodeFamily::Csvt(CsvtParams::new(period, 0, 0)),
        redundancy: n as f64 - bound.log2(),
        size: SizeReport { value: bound.guaranteed().to_string(), kind: SizeKind::Bound },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse_allow_empty(s).unwrap()
    }

    fn brute_bounded(n: usize, period: u64) -> u64 {
        all_words(n).filter(|x| longest_two_periodic_run(x) as u64 <= period).count() as u64
    }

    #[test]
    fn csvt_membership_examples() {
        assert!(csvt_member(&w("110100"), &CsvtParams::new(4, 1, 1)).unwrap());
        for c in 0..3 {
            for d in 0..2 {
                assert!(!csvt_member(&w("010101"), &CsvtParams::new(4, c, d)).unwrap());
            }
        }
        assert!(csvt_member(&w("0101"), &CsvtParams::new(3, 0, 0)).is_err());
        assert!(csvt_member(&w("0101"), &CsvtParams::new(4, 3, 0)).is_err());
        assert!(csvt_member(&w("0101"), &CsvtParams::new(4, 0, 2)).is_err());
        assert!(csvt_member(&w("01"), &CsvtParams::new(6, 0, 0)).is_err());
    }

    #[test]
    fn vt_membership_examples() {
        assert!(vt_member(&w("0000"), 0).unwrap());
        assert!(vt_member(&w("1011"), 3).unwrap());
        assert!(vt_member(&w("1011"), 5).is_err());
        let total: usize = (0..5).map(|a| enumerate_code(CodeFamily::Vt { residue: a }, 4).unwrap().len()).sum();
        assert_eq!(total, 16);
    }

    #[test]
    fn csvt_with_full_period_and_no_parity_is_vt() {
        for n in 1..=12usize {
            let p = 2 * n as u64;
            let modulus = 1 + p / 2;
            for x in all_words(n) {
                for c in 0..modulus {
                    let without_parity = vt_syndrome(&x) % modulus == c && longest_two_periodic_run(&x) as u64 <= p;
                    assert_eq!(without_parity, vt_member(&x, c).unwrap());
                }
            }
        }
    }

    #[test]
    fn f_count_examples() {
        assert_eq!(f_count(4, 3).unwrap(), BigUint::from(8u32));
        assert_eq!(f_count(3, 3).unwrap(), BigUint::from(7u32));
        assert_eq!(f_count(3, 4).unwrap(), BigUint::from(13u32));
        for n in 2..30 {
            assert_eq!(f_count(2, n).unwrap(), f_count(2, n - 1).unwrap() + f_count(2, n - 2).unwrap());
        }
        assert!(f_count(3, -1).is_err());
        assert!(f_count(0, 3).is_err());
    }

    #[test]
    fn bounded_periodic_count_matches_brute_force() {
        assert_eq!(count_bounded_periodic(6, 4).unwrap(), BigUint::from(52u32));
        assert_eq!(brute_bounded(6, 4), 52);
        for n in 2..=16usize {
            for p in [4u64, 5, 6, 7, 8] {
                assert_eq!(count_bounded_periodic(n as u64, p).unwrap(), BigUint::from(brute_bounded(n, p)), "n={n} P={p}");
            }
            // a period beyond n never constrains
            assert_eq!(count_bounded_periodic(n as u64, n as u64 + 4).unwrap(), BigUint::one() << n);
        }
        assert!(count_bounded_periodic(6, 2).is_err());
    }

    #[test]
    fn class_sizes_partition_the_constrained_space() {
        let sizes = csvt_class_sizes(6, 4).unwrap();
        assert_eq!(sizes.len(), 6);
        assert_eq!(sizes.iter().sum::<u64>(), 52);
        for c in 0..3u64 {
            for d in 0..2u8 {
                let code = enumerate_code(CodeFamily::Csvt(CsvtParams::new(4, c, d)), 6).unwrap();
                assert_eq!(code.len() as u64, sizes[(c * 2 + u64::from(d)) as usize]);
            }
        }
    }

    #[test]
    fn best_class_dominates_pigeonhole_bound() {
        let best = best_csvt_class(10, 4).unwrap();
        let total = brute_bounded(10, 4);
        assert!(best.size >= total.div_ceil(6));
        for n in 4..=20usize {
            for p in [4u64, 6, 8] {
                if p > 2 * n as u64 {
                    continue;
                }
                let exact = best_csvt_class(n, p).unwrap();
                let bound = csvt_size_bound(n, p).unwrap();
                assert!(BigUint::from(exact.size) >= bound.guaranteed(), "n={n} P={p}");
            }
        }
    }

    #[test]
    fn table_redundancy_examples() {
        let vt = redundancy(127, &BigUint::from(1u32)).unwrap() - redundancy(127, &BigUint::from(128u32)).unwrap();
        assert!((vt - 7.0).abs() < 1e-12);
        let stats = csvt_bound_stats(127, 6).unwrap();
        assert_eq!(stats.size.kind, SizeKind::Bound);
        assert!((stats.redundancy - 6.016).abs() < 0.01);
        assert_eq!(redundancy(5, &(BigUint::one() << 5)).unwrap(), 0.0);
        assert!(redundancy(5, &BigUint::zero()).is_err());
    }

    #[test]
    fn codebook_file_round_trip() {
        let code = enumerate_code(CodeFamily::Csvt(CsvtParams::new(4, 1, 1)), 8).unwrap();
        let parsed = Codebook::parse(&code.to_file_string()).unwrap();
        assert_eq!(parsed.words(), code.words());
        let text = "# comment\n0101\n\n1100 # trailing\n";
        assert_eq!(Codebook::parse(text).unwrap().len(), 2);
        assert!(matches!(Codebook::parse("010\n01\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Codebook::parse("01x\n"), Err(Error::Parse { line: 1, .. })));
        assert!(Codebook::parse("# nothing\n").is_err());
    }

    #[test]
    fn stats_report_exact_sizes() {
        let code = enumerate_code(CodeFamily::Vt { residue: 0 }, 6).unwrap();
        let stats = code_stats(&code).unwrap();
        assert_eq!(stats.size.kind, SizeKind::Exact);
        assert_eq!(stats.size.value, code.len().to_string());
        assert!((stats.redundancy - (6.0 - (code.len() as f64).log2())).abs() < 1e-12);
    }
}
