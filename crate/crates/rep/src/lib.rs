//! Explicit representation theory of simply-laced Dynkin quivers `Q_c`.
//!
//! Modules over the path algebra `KQ_c` are computed exactly over `ℚ`:
//! - [`linalg`]: exact rational matrices;
//! - [`quiver`]: quivers, representations, morphisms, `Hom`, `Ext¹`,
//!   kernels, cokernels, traces and reflection functors;
//! - [`algebra`]: the indecomposables of `KQ_c` indexed by positive roots;
//! - [`torsion`]: torsion classes, `tors KQ_c`, `φ_c` and brick labels;
//! - [`smc`]: semibrick pairs, approximations and mutation;
//! - [`pop`]: pop-stack sorting on `tors KQ_c` through mutation.

pub mod algebra;
pub mod linalg;
pub mod pop;
pub mod quiver;
pub mod smc;
pub mod torsion;

pub use algebra::PathAlgebra;

use cambrian_core::coxeter::CoxeterError;
use cambrian_core::lattice::LatticeError;
use thiserror::Error;

/// Errors from representation computations.
#[derive(Debug, Error)]
pub enum RepError {
    /// A quiver with bad vertices or an oriented cycle.
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    /// A Coxeter type with a non-simple bond.
    #[error("not simply laced: {0}")]
    NotSimplyLaced(String),
    /// Matrices or dimension vectors that do not fit together.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    /// An internal consistency check failed while building data.
    #[error("construction failed: {0}")]
    Construction(String),
    /// A module expected to be a brick is not one.
    #[error("not a brick: {0}")]
    NotABrick(String),
    /// A semibrick pair that is not semibrick-maximal compatible.
    #[error("not an SM compatible pair: {0}")]
    NotSMCompatible(String),
    /// A Coxeter-layer failure.
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    /// A lattice-layer failure.
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    /// A core-crate failure.
    #[error(transparent)]
    Core(#[from] cambrian_core::Error),
}
