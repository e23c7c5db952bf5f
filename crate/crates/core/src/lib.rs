//! n-total graphs of finite commutative rings.
//!
//! For a ring `R`, a union `D` of pairwise incomparable prime ideals and an
//! exponent `n >= 1`, the n-total graph has vertex set `R` and an edge between
//! distinct `x`, `y` whenever `x^n + y^n` lies in `D`.
//!
//! The crate is `no_std` (it needs `alloc`). It provides:
//!
//! - [`ring`]: prime fields, extension fields and finite products behind one
//!   dense-index interface.
//! - [`ideal`]: prime ideals of those rings and their unions.
//! - [`graph`]: graph construction, distances, components, girth, DOT export.
//! - [`structure`]: component classification into `K_d`, `K_{a,b}` and friends.
//! - [`oracle`]: closed-form structure predictions, per-theorem checks and
//!   configuration sweeps that compare them against brute force.
//! - [`witness`]: bounded checks over `Z`, `Z[X,Y]` and `F2[X1..Xk]`.
//! - [`drawings`]: reference drawings of small graphs, compared edge by edge.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod drawings;
mod error;
pub mod graph;
pub mod ideal;
pub mod oracle;
pub mod ring;
pub mod structure;
pub mod witness;

pub use error::Error;
pub use graph::{Dist, NTotalGraph, PathResult, Side};
pub use ideal::{IdealDescriptor, IdealUnion, PrimeIdeal, PrimeIdealSpec};
pub use ring::{Elem, ExtensionFieldSpec, FieldParams, Ring, RingDescriptor};
pub use structure::{ComponentClass, StructureReport};

/// Largest ring order accepted by [`graph::build_graph`].
pub const MAX_GRAPH_ORDER: u32 = 1 << 16;

/// Rings up to this order get exhaustive ideal and primality validation.
pub const EXHAUSTIVE_VALIDATION_LIMIT: u32 = 10_000;
