use thiserror::Error;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("group closure exceeded the maximum order {max_order}")]
    OrderExceeded { max_order: usize },
    #[error("index pair ({i}, {j}) out of range for dimension {n}")]
    IndexOutOfRange { n: usize, i: usize, j: usize },
    #[error("sign vector {0:?} has an odd number of -1 entries")]
    ParityViolation(Vec<i8>),
    #[error("triple elements are not pairwise distinct")]
    NonDistinct,
    #[error("source and destination triples have different pairwise distances")]
    DistanceMismatch,
    #[error("matrix is not an element of M_K")]
    NotAMember,
    #[error("unknown coset representative {0:?}")]
    UnknownRepresentative(String),
    #[error("gamma function pole at {0}")]
    Pole(String),
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
    #[error("hypergeometric series diverges: {0}")]
    Divergent(String),
    #[error("convergence condition violated: Re(sum of denominators - sum of numerators) = {0}")]
    ConvergenceCondition(f64),
    #[error("tail acceleration failed: bound {tail_bound:e} above tolerance {tolerance:e}")]
    AccelerationFailure { tail_bound: f64, tolerance: f64 },
    #[error("pole configuration: {0}")]
    PoleConfiguration(String),
    #[error("no straight contour separates the pole ladders: {0}")]
    NoStraightContour(String),
    #[error("quadrature did not converge (last difference {last_delta:e})")]
    NonConvergence { last_delta: f64 },
    #[error("degenerate point: {0}")]
    DegeneratePoint(String),
    #[error("illegal Hamming type {0:?}")]
    IllegalType([u8; 3]),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
