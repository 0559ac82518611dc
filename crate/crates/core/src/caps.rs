//! Size limits for exhaustive (set-valued) operations.

use crate::error::{Error, Result};

/// Environment variable overriding every exhaustive cap.
pub const CAP_ENV: &str = "DELRECON_N_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Ball materialization from the CLI.
    pub ball: usize,
    /// Codebook enumeration and read-coverage scans.
    pub enumeration: usize,
    /// Clique-cover verification.
    pub cover: usize,
    /// Exact maximum independent set.
    pub independent_set: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { ball: 20, enumeration: 24, cover: 14, independent_set: 8 }
    }
}

impl Caps {
    /// Defaults, with every field replaced by `DELRECON_N_CAP` when it is set
    /// to a valid integer.
    pub fn from_env() -> Self {
        match std::env::var(CAP_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok()) {
            Some(cap) => Caps { ball: cap, enumeration: cap, cover: cap, independent_set: cap },
            None => Caps::default(),
        }
    }
}

pub(crate) fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::CapExceeded { n, cap })
    } else {
        Ok(())
    }
}
