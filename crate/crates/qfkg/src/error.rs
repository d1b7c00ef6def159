use thiserror::Error;

/// Crate-wide error type. Verification verdicts are *not* errors; a theorem
/// check that finds a violated inequality reports it in its result struct.
/// Errors are reserved for malformed input, broken preconditions, and caps.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("poset has {n} elements; the bitmask representation supports at most 64")]
    TooManyIrreducibles { n: usize },

    #[error("ideal lattice would exceed the cap of {max} elements")]
    SizeLimit { max: usize },

    #[error("elements {0} and {1} are not comparable")]
    NotComparable(String, String),

    #[error("{0} is not an element of the lattice")]
    NotAnElement(String),

    #[error("table has {got} entries but the lattice has {want} elements")]
    LengthMismatch { got: usize, want: usize },

    #[error("negative weight {value} at element {element}")]
    NegativeWeight { element: String, value: String },

    #[error("weight table is identically zero (pass allow_zero_total to permit)")]
    ZeroTotalWeight,

    #[error("function claimed to be {claimed} but cover pair ({lo}, {hi}) violates it")]
    MonotonicityClaim {
        claimed: &'static str,
        lo: String,
        hi: String,
    },

    #[error("truncation degrees differ: {0} vs {1}")]
    TruncationMismatch(usize, usize),

    #[error("series exponential needs zero constant term")]
    NonzeroConstantTerm,

    #[error("zero cannot be raised to a negative power")]
    ZeroToNegativePower,

    #[error("exponents must satisfy 0 <= s <= t, got s={s}, t={t}")]
    BadExponents { s: i64, t: i64 },

    #[error("s*t must be nonzero")]
    ZeroExponentProduct,

    #[error("rejection sampling is offered only for lattices with <= {max} elements, got {got}")]
    RejectionTooLarge { got: usize, max: usize },

    #[error("rejection sampler gave up after {attempts} attempts")]
    SamplerExhausted { attempts: u64 },

    #[error("complexes live on different vertex sets")]
    VertexSetMismatch,

    #[error("vertex sets overlap (shared vertex {0})")]
    VertexSetsOverlap(String),

    #[error("the void complex has no f-polynomial")]
    VoidComplex,

    #[error("complex has {n} vertices; face materialization is capped at {max}")]
    TooManyVertices { n: usize, max: usize },

    #[error("partition does not fit in the {rows}x{cols} box")]
    OutsideBox { rows: usize, cols: usize },

    #[error("brute-force enumeration capped: {0}")]
    BruteForceCap(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
