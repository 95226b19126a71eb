use std::fmt;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("{what} of size {size} exceeds the configured cap {cap}")]
    OrderCapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("invalid alpha-C parameters ({n1},{n2},{n3}): {reason}")]
    InvalidAlphaCParams {
        n1: usize,
        n2: usize,
        n3: usize,
        reason: String,
    },

    #[error("subgroup is not normal: conjugation by element {witness} moves it")]
    NotNormal { witness: usize },

    #[error("group is not abelian: elements {0} and {1} do not commute")]
    NotAbelian(usize, usize),

    #[error("no generating set with at most {cap} elements; raise the rank search cap")]
    SearchCapExceeded { cap: usize },

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("coset enumeration exceeded {limit} cosets (group may be infinite or the cap too low)")]
    EnumerationOverflow { limit: usize },

    #[error("group orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("verification failed: {}", .0.join("; "))]
    VerificationFailure(Vec<String>),

    #[error("corpus construction failed: {}", .0.join("; "))]
    Corpus(Vec<String>),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn cap(what: &'static str, size: usize, cap: usize) -> Self {
        Error::OrderCapExceeded { what, size, cap }
    }

    /// True for errors that ask the caller to retry with a larger limit.
    pub fn is_cap_error(&self) -> bool {
        matches!(
            self,
            Error::OrderCapExceeded { .. }
                | Error::SearchCapExceeded { .. }
                | Error::EnumerationOverflow { .. }
        )
    }
}

/// A syntax error in presentation or table text, positioned 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}
