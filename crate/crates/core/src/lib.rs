//! Exact computation of LLT polynomials, modified and multi-t Macdonald
//! polynomials, and the word statistics attached to them.
//!
//! Everything is exact: coefficients are arbitrary-precision integers and
//! symmetric functions are stored in a fixed degree by their monomial or
//! Schur coefficients.
//!
//! - [`combinat`]: partitions, cells, ribbons, Dyck paths, tableaux, words
//! - [`polyring`]: Laurent polynomials in `q` with polynomial `t`, `t_i`
//! - [`symfunc`]: fixed-degree symmetric functions, Kostka numbers, Schur expansion
//! - [`llt`]: LLT polynomials and the LLT-equivalence bench
//! - [`macdonald`]: modified and multi-t Macdonald polynomials and identity checks
//! - [`mahonian`]: `maj_k`, `maj'_l` and their distributions on words

pub mod combinat;
pub mod error;
pub mod llt;
pub mod macdonald;
pub mod mahonian;
pub mod polyring;
pub mod symfunc;

pub use error::{Error, Result};
