//! Rank-metric secret sharing.
//!
//! This crate implements secret sharing built on rank-metric codes: exact
//! linear algebra over GF(q), codes of matrices under the rank distance, the
//! q-polymatroids they induce, access structures on subspace lattices and
//! their ports, and a share-dealing engine whose privacy guarantees are
//! checkable by exact entropy computations.
//!
//! Start with the runnable examples (`cargo run --example ...`); each one
//! walks through a single capability. The `rankshare` binary exposes the same
//! functionality on files.

pub mod error;
pub mod field;
pub mod mat;
pub mod subspace;

pub mod code;
pub mod polymatroid;

pub mod access;
pub mod port;
pub mod scheme;

pub mod fixtures;
pub mod io;
pub mod verify;

pub mod cli;

pub use error::{Error, Result};
pub use field::FiniteField;
pub use mat::Mat;
pub use subspace::Subspace;

/// Exact rational rank value.
pub type Rank = num_rational::Ratio<i64>;
