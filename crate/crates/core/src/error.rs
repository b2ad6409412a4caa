use thiserror::Error;

use crate::polyring::LaurentPoly;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("cell ({row},{col}) is outside the diagram")]
    OutOfShape { row: u32, col: u32 },

    #[error("invalid descent {descent} for content interval [{lo},{hi}]")]
    InvalidDescent { lo: i64, hi: i64, descent: i64 },

    #[error("descent cell ({row},{col}) lies in the first row")]
    InvalidDescentCell { row: u32, col: u32 },

    #[error("invalid Dyck path heights {0:?}")]
    InvalidDyck(Vec<usize>),

    #[error("cell tuple is not representable by a Dyck path: {0}")]
    NotDyckRepresentable(String),

    #[error("tuple component {0} is not a single cell")]
    NotUnicellular(usize),

    #[error("weights are not symmetric at exponent class {0:?}")]
    NotSymmetric(Vec<u32>),

    #[error("not divisible by (q^{k} - t); remainder {remainder}")]
    NotDivisible { k: u32, remainder: LaurentPoly },

    #[error("negative power of q survived: {0}")]
    NegativeQPower(String),

    #[error("invalid heights {heights:?} for n={n}, k={k}")]
    InvalidHeights {
        n: usize,
        k: usize,
        heights: Vec<usize>,
    },

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
