use std::fmt;

use serde::{Deserialize, Serialize};

/// Value domain for Souslin numbers and Noetherian types.
///
/// Finite values are always at least 1. Every finite value sits below every
/// aleph, and alephs are ordered by index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value")]
pub enum ExtendedCardinal {
    Finite(u64),
    Aleph(u32),
}

impl ExtendedCardinal {
    /// Builds a finite value, rejecting zero.
    pub fn finite(n: u64) -> Option<Self> {
        (n >= 1).then_some(ExtendedCardinal::Finite(n))
    }

    pub fn as_finite(self) -> Option<u64> {
        match self {
            ExtendedCardinal::Finite(n) => Some(n),
            ExtendedCardinal::Aleph(_) => None,
        }
    }
}

impl fmt::Display for ExtendedCardinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedCardinal::Finite(n) => write!(f, "{n}"),
            ExtendedCardinal::Aleph(k) => write!(f, "aleph_{k}"),
        }
    }
}
