use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("degenerate map at z = {re} + {im}i: |psi_z| - |psi_zbar| = {gap:e}")]
    DegenerateMap { re: f64, im: f64, gap: f64 },

    #[error("invalid grid {radial}x{angular}: both counts must be at least {min}")]
    InvalidGrid {
        radial: usize,
        angular: usize,
        min: usize,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("vacuous bound: K * J_sup = {product} is not below 1")]
    VacuousBound { product: f64 },

    #[error("invalid ring count {0}: need at least 2")]
    InvalidRings(usize),

    #[error("invalid dimensions: {0}")]
    InvalidDimensions(String),

    #[error("degenerate triangle {index}: signed area {area:e}")]
    DegenerateTriangle { index: usize, area: f64 },

    #[error("inverse iteration did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error("conjugate gradient stagnated after {iterations} iterations (relative residual {residual:e})")]
    SingularSystem { iterations: usize, residual: f64 },

    #[error("invalid range: {0}")]
    InvalidRange(String),

    #[error("mesh format: {0}")]
    MeshFormat(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
