use num_bigint::BigUint;
use thiserror::Error;

use crate::tree::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// An enumeration would produce more objects than the configured cap.
    #[error("capacity exceeded: {what} requires {count} items, cap is {cap}")]
    Capacity {
        what: &'static str,
        count: BigUint,
        cap: usize,
    },

    /// The input is outside the operation's domain (unknown node, leaf where a
    /// decision node is required, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A documented precondition of the operation does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A user-supplied script asked for a step the algorithm does not allow.
    #[error("protocol error at step {step}: {message}")]
    Protocol { step: usize, message: String },

    #[error("invalid game:\n{0}")]
    Invalid(ValidationReport),

    #[error("invalid knowledge system: {0}")]
    InvalidKnowledgeSystem(String),

    #[error("{0}")]
    Parse(#[from] crate::format::ParseError),

    /// A runtime check of a proven property failed. Always a bug.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn capacity(what: &'static str, count: impl Into<BigUint>, cap: usize) -> Self {
        Error::Capacity {
            what,
            count: count.into(),
            cap,
        }
    }
}

/// Upper bounds on exhaustive enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Strategies, reduced strategies, joint profiles, payoff-table cells.
    pub enumeration: usize,
    /// Joint strategies examined when `classify` evaluates TDI.
    pub tdi: usize,
    /// Explicitly materialized subgame perfect equilibria.
    pub spe_expansion: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enumeration: 1_000_000,
            tdi: 100_000,
            spe_expansion: 10_000,
        }
    }
}

impl Caps {
    pub const ENV_ENUMERATION: &'static str = "TREEGAME_ENUM_CAP";
    pub const ENV_TDI: &'static str = "TREEGAME_TDI_CAP";
    pub const ENV_SPE: &'static str = "TREEGAME_SPE_CAP";

    /// Defaults, overridden by any of the `TREEGAME_*_CAP` variables that
    /// parse as an unsigned integer.
    pub fn from_env() -> Self {
        let read = |key: &str, default: usize| {
            std::env::var(key)
                .ok()
                .and_then(|v| v.trim().parse().ok())
                .unwrap_or(default)
        };
        let d = Caps::default();
        Caps {
            enumeration: read(Self::ENV_ENUMERATION, d.enumeration),
            tdi: read(Self::ENV_TDI, d.tdi),
            spe_expansion: read(Self::ENV_SPE, d.spe_expansion),
        }
    }

    pub(crate) fn check(&self, what: &'static str, count: &BigUint) -> Result<usize> {
        match usize::try_from(count) {
            Ok(n) if n <= self.enumeration => Ok(n),
            _ => Err(Error::capacity(what, count.clone(), self.enumeration)),
        }
    }
}
