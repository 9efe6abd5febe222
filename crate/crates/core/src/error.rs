use thiserror::Error;

/// Failure of one of the structural claims checked while decomposing a
/// 1-pure super summit element of `ε^d`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClaimFailure {
    #[error("expected inf = {expected_inf} and len = 1, found inf = {inf}, len = {len}")]
    Shape {
        expected_inf: i64,
        inf: i64,
        len: usize,
    },
    #[error("element is not 1-pure (strand 1 goes to {image})")]
    NotOnePure { image: usize },
    #[error("strands 1 and {expected} lie in different blocks of the simple factor")]
    FirstBond { expected: usize },
    #[error("block {block} is not contained in any S_k")]
    Straddle { block: String },
    #[error("chained product b_0 τ^-d(b_1) ⋯ is {found}, expected {expected}")]
    ChainProduct { found: String, expected: String },
    #[error("d = 1 but the element is not ε")]
    NotEpsilon,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: i64, n: usize },
    #[error("band generator a({0},{0}) has equal indices")]
    EqualIndices(usize),
    #[error("subsimple literal {0} is not strictly decreasing")]
    NotDecreasing(String),
    #[error("strand count {0} is not supported (need 1..={max})", max = crate::MAX_STRANDS)]
    StrandCount(usize),
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("blocks do not partition 1..={n}: {msg}")]
    NotAPartition { n: usize, msg: String },
    #[error("blocks {0} and {1} cross")]
    Crossing(String, String),
    #[error("permutation images are not a bijection")]
    NotABijection,
    #[error("{what} bound exceeded: {value} > {bound}")]
    BoundExceeded {
        what: &'static str,
        value: u128,
        bound: u128,
    },
    #[error("{0} is not a prefix of the first factor")]
    NotAPrefix(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("exponent must be nonzero")]
    ZeroExponent,
    #[error("arithmetic overflow computing {0}")]
    Overflow(&'static str),
    #[error("permutation has {0} fixed points, expected exactly one")]
    FixedPoints(usize),
    #[error("characterization failed: {0}")]
    Characterization(#[from] ClaimFailure),
    #[error("iteration cap {0} reached")]
    IterationCap(usize),
    #[error("not in the super summit set: {0}")]
    NotSuperSummit(String),
    #[error("malformed table: {0}")]
    Table(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
