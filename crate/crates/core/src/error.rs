use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A product with a negative exponent was asked to expand into a polynomial.
    #[error("product is not a polynomial: {0}")]
    NotPolynomial(String),

    #[error("frontier width {width} exceeds the DP bound {max}")]
    FrontierTooWide { width: usize, max: usize },

    #[error("region has {cells} cells, naive engine bound is {max}")]
    RegionTooLarge { cells: usize, max: usize },

    #[error("box {rows}x{cols}x{max_entry} is too large for brute force")]
    BoxTooLarge {
        rows: usize,
        cols: usize,
        max_entry: usize,
    },

    #[error("monomial division failed: {0}")]
    DivisionFailure(String),

    #[error("invalid condensation placement: {0}")]
    InvalidPlacement(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("malformed region spec: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
