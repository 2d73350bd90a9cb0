//! Pieces of the `qtiling` command-line tool, kept in a library so they can
//! be tested without spawning the binary.

pub mod input;
pub mod render;
pub mod verify;

use std::fmt;

/// A failed command, carrying its exit code.
#[derive(Debug)]
pub enum Failure {
    /// Some verification case did not pass (exit 1).
    Mismatch,
    /// Malformed input (exit 2).
    Parse(String),
    /// The region cannot be handled: too large, empty or untileable (exit 3).
    Region(String),
    /// The formula engine has nothing for this family and weight (exit 4).
    Capability(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Mismatch => 1,
            Failure::Parse(_) => 2,
            Failure::Region(_) => 3,
            Failure::Capability(_) => 4,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Mismatch => f.write_str("verification failed"),
            Failure::Parse(m) | Failure::Region(m) | Failure::Capability(m) => f.write_str(m),
        }
    }
}

impl From<qtiling::Error> for Failure {
    fn from(e: qtiling::Error) -> Self {
        use qtiling::Error::*;
        match e {
            Parse(_) | InvalidParameters(_) => Failure::Parse(e.to_string()),
            FrontierTooWide { .. } | RegionTooLarge { .. } | BoxTooLarge { .. } => Failure::Region(e.to_string()),
            NotPolynomial(_) | DivisionFailure(_) | InvalidPlacement(_) => Failure::Capability(e.to_string()),
        }
    }
}
