//! Finite irreducible Coxeter groups: diagrams, root systems, elements as
//! inversion sets, explicit enumeration and Coxeter elements.

mod celem;
mod diagram;
mod element;
mod group;
mod roots;

pub use celem::CoxeterElement;
pub use diagram::{classify, CoxeterDiagram, TypeTag};
pub use element::{bits, bits64, Coxeter, GroupElement, Side};
pub use group::{max_elements, Group, DEFAULT_MAX_ELEMENTS};
pub use roots::{neg, pos, split, CoeffKind, RootSystem, SRoot};

use thiserror::Error;

/// Errors raised while building or manipulating Coxeter groups.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoxeterError {
    /// The type string or parameters do not name a finite type.
    #[error("invalid Coxeter type `{0}`")]
    InvalidType(String),
    /// The bond matrix is malformed.
    #[error("invalid Coxeter diagram: {0}")]
    InvalidDiagram(String),
    /// The diagram is not of finite type.
    #[error("not a finite Coxeter type: {0}")]
    NonFiniteType(String),
    /// A word uses an unknown generator or is not a Coxeter element.
    #[error("invalid word: {0}")]
    InvalidWord(String),
    /// A bitset is not the inversion set of any element.
    #[error("root set is not the inversion set of a group element")]
    NotBiclosed,
    /// More reflections than the 128-bit inversion bitset holds.
    #[error("{0} reflections exceed the 128-bit inversion set")]
    TooManyRoots(usize),
    /// Enumeration refused because of the element cap.
    #[error("group of order {order} exceeds the element cap {cap}")]
    GroupTooLarge {
        /// Group order.
        order: u64,
        /// Configured cap.
        cap: usize,
    },
}
