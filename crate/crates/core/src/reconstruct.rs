//! Decoding from multiple distinct deletion-channel reads, a seeded channel
//! simulator, and reconstruction-code certification.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::balls::{ball_intersection, deletion_ball, insertion_ball, BallTable, WordSet};
use crate::caps::{check_cap, Caps};
use crate::codes::Codebook;
use crate::error::{Error, Result};
use crate::words::Word;

/// `N` distinct reads of one codeword, each of length `n - t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReadSet {
    n: usize,
    t: usize,
    reads: WordSet,
}

impl ReadSet {
    pub fn new(n: usize, t: usize, reads: Vec<Word>) -> Result<Self> {
        if t > n {
            return Err(Error::DeletionsOutOfRange { deletions: t as i64, len: n });
        }
        let count = reads.len();
        let reads = WordSet::from_words(n - t, reads)?;
        if reads.len() != count {
            return Err(Error::Precondition("reads must be pairwise distinct".into()));
        }
        Ok(ReadSet { n, t, reads })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn deletions(&self) -> usize {
        self.t
    }

    pub fn reads(&self) -> &WordSet {
        &self.reads
    }

    pub fn len(&self) -> usize {
        self.reads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reads.is_empty()
    }
}

/// Every codeword whose `t`-deletion ball contains all reads, in
/// lexicographic order: `C ∩ ⋂_y I_t(y)`.
pub fn decode_candidates(code: &Codebook, reads: &ReadSet) -> Result<Vec<Word>> {
    if code.n() != reads.n() {
        return Err(Error::LengthMismatch { left: code.n(), right: reads.n() });
    }
    let (first, rest) = reads
        .reads()
        .as_slice()
        .split_first()
        .ok_or_else(|| Error::Precondition("at least one read is required".into()))?;
    let supersequences = insertion_ball(first, reads.deletions())?;
    Ok(supersequences
        .iter()
        .filter(|x| code.contains(x) && rest.iter().all(|y| y.is_subsequence_of(x)))
        .copied()
        .collect())
}

/// The unique codeword consistent with the reads. Uniqueness is guaranteed
/// for genuine reads whenever their number exceeds `ν(C; D_t)`.
pub fn decode(code: &Codebook, reads: &ReadSet) -> Result<Word> {
    let mut candidates = decode_candidates(code, reads)?;
    match candidates.len() {
        0 => Err(Error::NoCandidate),
        1 => Ok(candidates.pop().expect("one candidate")),
        _ => Err(Error::Ambiguous(candidates)),
    }
}

/// `count` distinct reads drawn uniformly without replacement from
/// `D_t(x)`; deterministic in `seed`.
pub fn simulate_channel(x: &Word, t: usize, count: usize, seed: u64) -> Result<ReadSet> {
    let ball = deletion_ball(x, t)?;
    if ball.len() < count {
        return Err(Error::BallTooSmall { size: ball.len(), requested: count });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let picked = sample(&mut rng, ball.len(), count).into_iter().map(|i| ball.as_slice()[i]).collect();
    ReadSet::new(x.len(), t, picked)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateWitness {
    pub x: Word,
    pub y: Word,
    pub intersection: WordSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub holds: bool,
    pub reads: usize,
    pub deletions: usize,
    /// First codeword pair (in lexicographic pair order) sharing at least
    /// `reads` words, when the certificate fails.
    pub witness: Option<CertificateWitness>,
}

/// Checks `ν(C; D_t) < N`, i.e. that `C` is an `(n, N; D_t)`-reconstruction
/// code.
pub fn certify_reconstruction_code(code: &Codebook, reads: usize, t: usize) -> Result<Certificate> {
    check_cap(code.n(), Caps::from_env().enumeration)?;
    if t > code.n() {
        return Err(Error::DeletionsOutOfRange { deletions: t as i64, len: code.n() });
    }
    let table = BallTable::new(code.words().to_vec(), t)?;
    let witness = match table.first_pair_at_least(reads) {
        Some((i, j, _)) => {
            let (x, y) = (table.word(i), table.word(j));
            Some(CertificateWitness { x, y, intersection: ball_intersection(&x, &y, t)? })
        }
        None => None,
    };
    Ok(Certificate { holds: witness.is_none(), reads, deletions: t, witness })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialFailure {
    pub trial: usize,
    pub codeword: Word,
    pub reads: WordSet,
    pub outcome: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimulationReport {
    pub trials: usize,
    pub successes: usize,
    /// Codewords whose ball holds at least the requested number of reads;
    /// trials draw only from these.
    pub eligible_codewords: usize,
    pub failures: Vec<TrialFailure>,
}

/// Runs `trials` rounds of: pick a codeword, draw `reads` distinct channel
/// outputs, decode, compare.
pub fn simulate_trials(code: &Codebook, t: usize, reads: usize, trials: usize, seed: u64) -> Result<SimulationReport> {
    let eligible: Vec<Word> = code
        .words()
        .iter()
        .filter(|x| deletion_ball(x, t).map(|b| b.len() >= reads).unwrap_or(false))
        .copied()
        .collect();
    if eligible.is_empty() {
        return Err(Error::Precondition(format!("no codeword has {reads} distinct {t}-deletion reads")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for trial in 0..trials {
        let codeword = eligible[rng.gen_range(0..eligible.len())];
        let read_set = simulate_channel(&codeword, t, reads, rng.gen())?;
        let outcome = match decode(code, &read_set) {
            Ok(found) if found == codeword => continue,
            Ok(found) => format!("decoded {found}"),
            Err(e) => e.to_string(),
        };
        failures.push(TrialFailure { trial, codeword, reads: read_set.reads().clone(), outcome });
    }
    Ok(SimulationReport { trials, successes: trials - failures.len(), eligible_codewords: eligible.len(), failures })
}
