//! Crate-level error type for operations spanning several layers.

use thiserror::Error;

use crate::coxeter::CoxeterError;
use crate::lattice::LatticeError;

/// Errors from weak-order, Cambrian, type-A and heap operations.
#[derive(Debug, Error)]
pub enum Error {
    /// A Coxeter-layer failure.
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    /// A lattice-layer failure.
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    /// Malformed permutation input.
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    /// An operation that needs a `c`-sortable element got another one.
    #[error("not c-sortable: {0}")]
    NotSortable(String),
    /// A set expected to have a unique maximum has several maximal elements.
    #[error("maximum is not unique: {0}")]
    MaxNotUnique(String),
    /// An arc diagram that is not maximal where a maximal one is required.
    #[error("arc diagram is not maximal: {0}")]
    NotMaximal(String),
    /// A step sequence that is not a Motzkin path without height-1 peaks.
    #[error("invalid Motzkin path: {0}")]
    InvalidPath(String),
    /// Input outside the domain of an operation.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
