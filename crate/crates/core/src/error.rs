use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("interval endpoint {endpoint} is a root of the polynomial")]
    EndpointIsRoot { endpoint: String },

    #[error("degree {degree} exceeds the supported bound {bound}")]
    DegreeBound { degree: usize, bound: usize },

    #[error("odd degree {0}: Salem polynomials have even degree")]
    OddDegree(usize),

    #[error("polynomial is not reciprocal")]
    NotReciprocal,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("lattice is degenerate")]
    DegenerateLattice,

    #[error("lattice is indefinite (signature {n_plus},{n_zero},{n_minus})")]
    Indefinite {
        n_plus: usize,
        n_zero: usize,
        n_minus: usize,
    },

    #[error("radical has rank {0}, expected 1")]
    RadicalRank(usize),

    #[error("Gram form not preserved at entry ({i}, {j})")]
    GramViolation { i: usize, j: usize },

    #[error("determinant {0} is not a unit")]
    Determinant(String),

    #[error("isometry does not act as the identity on the quotient by the radical")]
    QuotientAction,

    #[error("extension to the ambient lattice is not integral")]
    NonIntegralExtension,

    #[error("shape violation: {0}")]
    Shape(String),

    #[error("comparison could not be decided within {0} refinements")]
    Undecidable(usize),

    #[error("degenerate matrix: {0}")]
    Singular(String),

    #[error("parse error: {0}")]
    Parse(String),
}
