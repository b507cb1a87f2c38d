use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomials live in different variable contexts")]
    ContextMismatch,
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid variable context: {0}")]
    InvalidContext(String),
    #[error("variable context has no z/xi pairing")]
    NoPairing,
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("point has {got} coordinates, expected {expected}")]
    PointDimension { expected: usize, got: usize },
    #[error("point {0} does not lie on the variety")]
    PointNotOnVariety(String),
    #[error("exponent overflow: total degree exceeds 2^31")]
    DegreeOverflow,
    #[error("limit exceeded: {0}")]
    LimitExceeded(String),
    #[error("{0}")]
    Semantic(String),
}

impl Error {
    /// Process exit code used by the command-line frontend.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Parse(e) if e.kind == ParseErrorKind::DegreeLimit => 4,
            Error::Parse(_) => 2,
            Error::LimitExceeded(_) | Error::DegreeOverflow => 4,
            _ => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownFunction(String),
    NonConstantExponent,
    NonConstantDivisor,
    DivisionByZero,
    DegreeLimit,
    UnknownVariable(String),
    MissingVars,
    Directive(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub fn new(line: usize, column: usize, kind: ParseErrorKind) -> Self {
        ParseError { line, column, kind }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at line {}, column {}: ", self.line, self.column)?;
        match &self.kind {
            ParseErrorKind::Syntax(msg) => f.write_str(msg),
            ParseErrorKind::UnknownFunction(name) => write!(f, "unknown function `{name}`"),
            ParseErrorKind::NonConstantExponent => {
                f.write_str("exponent must be a nonnegative integer constant")
            }
            ParseErrorKind::NonConstantDivisor => f.write_str("can only divide by a constant"),
            ParseErrorKind::DivisionByZero => f.write_str("division by zero"),
            ParseErrorKind::DegreeLimit => f.write_str("degree exceeds 2^31"),
            ParseErrorKind::UnknownVariable(name) => write!(f, "unknown variable `{name}`"),
            ParseErrorKind::MissingVars => f.write_str("missing `vars:` declaration"),
            ParseErrorKind::Directive(msg) => f.write_str(msg),
        }
    }
}
