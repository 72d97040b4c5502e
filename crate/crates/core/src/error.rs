use thiserror::Error;

/// Errors raised by exact polynomial and number-field arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division is not exact over the integers")]
    DivisionNotExact,
    #[error("division by zero")]
    DivideByZero,
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("edge ({0}, {1}) is not present")]
    EdgeNotPresent(usize, usize),
    #[error("vertices {0:?} do not form a triangle")]
    NotATriangle([usize; 3]),
    #[error("face {0:?} is not in the certificate")]
    FaceNotPresent([usize; 3]),
    #[error("flipping ({0}, {1}) would create a parallel edge")]
    FlipWouldCreateParallelEdge(usize, usize),
    #[error("edge ({0}, {1}) is not flippable")]
    EdgeNotFlippable(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChromaError {
    #[error("recursion budget of {budget} nodes exhausted")]
    ResourceLimit { budget: u64 },
    #[error("graph with {n} vertices exceeds the limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameter {param} for family {family}")]
    InvalidParameter { family: &'static str, param: i64 },
    #[error("family {0} has no explicit graph construction")]
    UnsupportedFamily(&'static str),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("polynomial has degree {degree:?}, expected {expected}")]
    DegreeMismatch { degree: Option<usize>, expected: usize },
    #[error("every coefficient vanishes at the golden point")]
    AllCoefficientsVanish,
    #[error("root finding did not converge at {bits} bits")]
    NoConvergence { bits: u32 },
    #[error("q = {q} is outside the validity range for family {family}")]
    OutOfRange { family: &'static str, q: String },
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Crate-wide error, used by the CLI and the convenience entry points.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Chroma(#[from] ChromaError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
