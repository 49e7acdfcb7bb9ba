use thiserror::Error;

use crate::face::Face;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} outside of [1, {n}]")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex count {0} exceeds the supported maximum of 64")]
    TooManyVertices(usize),
    #[error("a complex needs at least one generator")]
    NoGenerators,
    #[error("dimension {dim} outside of [{min}, {max}]")]
    DimensionOutOfRange { dim: isize, min: isize, max: isize },
    #[error("{0} is not a face of the complex")]
    NotAFace(Face),
    #[error("{0} is not a facet of the complex")]
    NotAFacet(Face),
    #[error("operation needs at least two facets")]
    SingleFacet,
    #[error("complex is not pure")]
    NotPure,
    #[error("complex is a simplex")]
    IsSimplex,
    #[error("degenerate complex: {0}")]
    Degenerate(&'static str),
    #[error("top-dimensional homology vanishes")]
    TopHomologyVanishes,
    #[error("complex is not Cohen-Macaulay over the chosen field")]
    NotCohenMacaulay,
    #[error("ordering is not a permutation of the facet set: {0}")]
    NotAPermutation(String),
    #[error("certificate facets do not match the complex: {0}")]
    FacetMismatch(String),
    #[error("search budget must be positive")]
    ZeroBudget,
    #[error("clutter members must form a nonempty antichain of nonempty faces: {0}")]
    BadClutter(String),
    #[error("clutter is not homogeneous")]
    NotHomogeneous,
    #[error("clutter is empty")]
    EmptyClutter,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
