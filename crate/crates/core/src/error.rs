use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("index out of range: i={i}, n={n} for k={k}")]
    IndexOutOfRange { k: usize, i: usize, n: i64 },

    #[error("malformed band matrix: {0}")]
    MalformedMatrix(String),

    #[error("matrix of dimension {n} too large for permutation expansion (max {max})")]
    TooLarge { n: usize, max: usize },

    #[error("invalid border index i={i} for k={k} (need 2 <= i <= k)")]
    InvalidBorder { k: usize, i: usize },

    #[error("root finder did not converge after {iterations} iterations (max residual {max_residual:e})")]
    NoConvergence { iterations: usize, max_residual: f64 },

    #[error("multiple root suspected: minimum root separation {separation:e}")]
    MultipleRootSuspected { separation: f64 },

    #[error("imaginary residue too large: {re:e} + {im:e}i")]
    ImaginaryResidue { re: f64, im: f64 },

    #[error("outside validity range: {0}")]
    OutOfValidityRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
