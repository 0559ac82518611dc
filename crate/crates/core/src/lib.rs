//! Sequence reconstruction from a few distinct deletion-channel reads:
//! deletion and insertion balls, classification of confusable pairs,
//! reconstruction bounds, constrained shifted Varshamov-Tenengolts codes,
//! decoding from reads, and a clique cover giving a redundancy lower bound.

pub mod balls;
pub mod caps;
pub mod cli;
pub mod codes;
pub mod confusability;
pub mod cover;
pub mod error;
pub mod numeric;
pub mod reconstruct;
mod serde_big;
pub mod table1;
pub mod verify;
pub mod words;

pub use balls::{deletion_ball, insertion_ball, BallTable, WordSet};
pub use codes::{Codebook, CodeFamily, CsvtParams};
pub use confusability::{classify_pair, PairKind};
pub use error::{Error, Result};
pub use words::Word;
