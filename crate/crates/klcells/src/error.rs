use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),
    #[error("group exceeds element_cap ({cap} elements)")]
    GroupTooLarge { cap: usize },
    #[error("unsupported matrix entry {0}")]
    UnsupportedEntry(u32),
    #[error("invalid weight function: {0}")]
    InvalidWeights(String),
    #[error("generator {0} is out of range")]
    GeneratorOutOfRange(usize),
    #[error("generators must be distinct")]
    SameGenerator,
    #[error("not in D_R({s},{t})")]
    NotInDescentPair { s: usize, t: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("wrong dihedral map for unequal weights: {0}")]
    WrongDihedralMap(String),
    #[error("ambiguous pairing: {0}")]
    AmbiguousPairing(String),
    #[error("set is not left-closed")]
    NotLeftClosed,
    #[error("empty element set")]
    EmptySet,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Failure to parse a textual polynomial, word, or input file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error: {msg}")]
pub struct ParseError {
    pub msg: String,
}

impl ParseError {
    pub fn new(msg: impl Into<String>) -> Self {
        Self { msg: msg.into() }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
