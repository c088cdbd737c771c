use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("input array is empty")]
    EmptyArray,
    #[error("array of length {0} exceeds the supported maximum of u32::MAX - 1")]
    TooLarge(usize),
    #[error("epsilon {0} outside [0, 1/2]")]
    BadEpsilon(f64),
    #[error("block size {size} outside [1, {n}]")]
    BadBlockSize { size: usize, n: usize },
    #[error("invalid grid: {0}")]
    BadGrid(String),
    #[error("range [{i}, {j}] invalid for array of length {n}")]
    InvalidRange { i: usize, j: usize, n: usize },
    #[error("box {lo:?}..={hi:?} invalid for the grid")]
    InvalidGridRange { lo: Vec<usize>, hi: Vec<usize> },
    #[error("box is not aligned to the frequency lattice")]
    NotAligned,
    #[error("dimension mismatch: dims describe {expected} cells, got {actual} values")]
    DimensionMismatch { expected: usize, actual: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
