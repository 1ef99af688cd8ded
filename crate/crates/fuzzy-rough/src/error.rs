use thiserror::Error;

/// Errors surfaced by the library.
///
/// Law violations that are *reports* rather than failures (a relation that is
/// not symmetric, an algebra that is not closed over a chain, ...) are carried
/// by [`crate::report::ValidationReport`] instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("denominator must be positive")]
    ZeroDenominator,

    #[error("value {0} lies outside [0, 1]")]
    ValueOutOfRange(String),

    #[error("cannot parse {input:?} as an exact rational: {reason}")]
    ParseValue { input: String, reason: String },

    #[error("a chain must contain both 0 and 1")]
    ChainEndpointsMissing,

    #[error("value {0} is not an element of the chain")]
    ValueNotInChain(String),

    #[error("operation requires a chain-mode space")]
    ChainRequired,

    #[error("universe must be non-empty and its names unique")]
    BadUniverse,

    #[error("operands belong to different universes")]
    UniverseMismatch,

    #[error("expected {expected} values, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operation needs a non-empty family")]
    EmptyFamily,

    #[error("relation is not a similarity relation: {0}")]
    NotSimilarity(String),

    #[error("relation is not a quasiorder: {0}")]
    NotAQuasiorder(String),

    #[error("set is not a fixpoint of the upper approximation (differs at {0})")]
    NotUpperFixed(String),

    #[error("set is not a fixpoint of the lower approximation (differs at {0})")]
    NotLowerFixed(String),

    #[error("the relevant negator is not involutive")]
    NegatorNotInvolutive,

    #[error(
        "operation requires the min t-norm with the max-based implicator of an involutive negator"
    )]
    MinMaxAlgebraRequired,

    #[error("operation requires an algebra whose negation swaps the two approximations")]
    DualityUnavailable,

    #[error("operation requires an algebra with idempotent approximations")]
    IdempotenceUnavailable,

    #[error("pair carries no certifying reference set")]
    UncertifiedPair,

    #[error("no admissible representative in class {{{0}}}")]
    SelectionImpossible(String),

    #[error("enumeration budget exceeded: {candidates} candidate sets, budget {budget}")]
    BudgetExceeded { candidates: u128, budget: u64 },

    #[error("column {0:?} contains a non-numeric entry")]
    NonNumericColumn(String),

    #[error("input table has no data rows")]
    EmptyTable,

    #[error("invalid document: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;
