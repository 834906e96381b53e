//! Pop-stack dynamics on weak orders and Cambrian lattices of finite
//! Coxeter groups.
//!
//! The crate is layered bottom-up:
//! - [`ring`] and [`coxeter`]: exact root systems and group elements;
//! - [`lattice`]: generic finite lattices, shard labels, congruences;
//! - [`weak`] and [`cambrian`]: the weak order, sortable elements and
//!   Cambrian lattices with their pop-stack operators;
//! - [`typea`]: permutations, arc diagrams and Motzkin paths;
//! - [`heaps`]: heaps of words, `H_c` and the maximal orbit element `z_c`.

pub mod cambrian;
pub mod coxeter;
mod error;
pub mod heaps;
pub mod lattice;
pub mod ring;
pub mod typea;
pub mod weak;

pub use error::Error;
