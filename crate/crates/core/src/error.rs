use thiserror::Error;

use crate::words::Word;

/// Errors raised by the library.
///
/// `Inconsistency` is special: it is raised when a structural property that
/// the confusability characterization guarantees fails on a concrete pair, so a
/// sweep that returns it has found a counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid symbol {symbol:?} at offset {offset}; words are strings over {{0,1}}")]
    InvalidSymbol { symbol: char, offset: usize },
    #[error("empty word not allowed here")]
    EmptyWord,
    #[error("word length {len} exceeds the supported maximum of {max}")]
    WordTooLong { len: usize, max: usize },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("the two words must be distinct")]
    IdenticalWords,
    #[error("{deletions} deletions out of range for length {len}")]
    DeletionsOutOfRange { deletions: i64, len: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("length {n} exceeds the exhaustive cap {cap} (set DELRECON_N_CAP to override)")]
    CapExceeded { n: usize, cap: usize },
    #[error("read coverage needs at least two codewords, got {0}")]
    CodeTooSmall(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("inconsistency for pair ({x}, {y}): {detail}")]
    Inconsistency { x: Word, y: Word, detail: String },
    #[error("no codeword is consistent with the reads")]
    NoCandidate,
    #[error("{} codewords are consistent with the reads", .0.len())]
    Ambiguous(Vec<Word>),
    #[error("deletion ball has {size} elements, cannot draw {requested} distinct reads")]
    BallTooSmall { size: usize, requested: usize },
    #[error("codebook parse error at line {line}: {detail}")]
    Parse { line: usize, detail: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
