use thiserror::Error;

/// Errors raised by the computational core.
///
/// Every variant names the violated precondition so front ends can surface
/// it verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse word {input:?}: {reason}")]
    WordSyntax { input: String, reason: String },

    #[error("cannot parse index sequence {input:?}: {reason}")]
    IndexSyntax { input: String, reason: String },

    #[error("generator index {index} outside 1..={rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("enumeration of {rank}^{weight} sequences exceeds the bound {bound}")]
    EnumerationBound { rank: usize, weight: usize, bound: u64 },

    #[error("sequence {0} is not standard")]
    NotStandard(String),

    #[error("coefficient of a length-{len} monomial is undefined modulo degree {bound}")]
    CoefficientOutOfRange { len: usize, bound: usize },

    #[error("word does not lie in F_{level}")]
    NotInLowerCentralTerm { level: usize },

    #[error("level mismatch: {left} vs {right}")]
    LevelMismatch { left: usize, right: usize },

    #[error("endomorphism has Torelli depth {depth} < {required}")]
    InsufficientDepth { depth: usize, required: usize },

    #[error("duplicate relator {0}")]
    DuplicateRelator(String),

    #[error("triple Massey product not defined by this recipe: {0}")]
    MasseyUndefined(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("expected {expected} arguments, got {found}")]
    Arity { expected: usize, found: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
