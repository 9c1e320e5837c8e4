use std::fmt;

use thiserror::Error;

/// What went wrong at a given position of a regular expression.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SyntaxErrorKind {
    EmptyExpression,
    UnbalancedOpen,
    UnbalancedClose,
    EmptyGroup,
    MissingOperand,
    InvalidCharacter,
}

impl fmt::Display for SyntaxErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            SyntaxErrorKind::EmptyExpression => "empty expression",
            SyntaxErrorKind::UnbalancedOpen => "unclosed parenthesis",
            SyntaxErrorKind::UnbalancedClose => "unmatched closing parenthesis",
            SyntaxErrorKind::EmptyGroup => "empty parentheses",
            SyntaxErrorKind::MissingOperand => "operator is missing an operand",
            SyntaxErrorKind::InvalidCharacter => "whitespace and control characters cannot be symbols",
        };
        f.write_str(text)
    }
}

/// A single syntax problem. `position` is the 0-based character index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SyntaxError {
    pub position: usize,
    pub kind: SyntaxErrorKind,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at position {}", self.kind, self.position)
    }
}

/// Non-empty list of syntax errors, ordered by position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxErrors(pub Vec<SyntaxError>);

impl SyntaxErrors {
    pub fn first(&self) -> SyntaxError {
        self.0[0]
    }
}

impl fmt::Display for SyntaxErrors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error: {0}")]
    Syntax(SyntaxErrors),
    #[error("reserved symbols must be pairwise distinct ({0:?} is used twice)")]
    DuplicateReserved(char),
    #[error("determinization blow-up: more than {cap} states")]
    DeterminizationBlowUp { cap: usize },
    #[error("enumeration frontier exceeded {cap} nodes")]
    FrontierLimit { cap: usize },
    #[error("pumping product automaton exceeded {cap} states")]
    ProductLimit { cap: usize },
}

impl Error {
    /// True for the errors raised by resource guards rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::DeterminizationBlowUp { .. }
                | Error::FrontierLimit { .. }
                | Error::ProductLimit { .. }
        )
    }
}

impl From<SyntaxErrors> for Error {
    fn from(e: SyntaxErrors) -> Self {
        Error::Syntax(e)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
