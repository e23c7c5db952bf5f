//! Bounded checks of statements about infinite domains.
//!
//! Upper bounds come from explicit paths whose edges are verified exactly.
//! Lower bounds are searched for inside finite windows and are reported as
//! window-confirmed, never as proved. The one exception is the common-zero
//! certificate in [`f2poly`], which bounds `d(0,1)` in all of
//! `F2[X_1..X_k]`.

pub mod f2poly;
pub mod zwindow;
pub mod zxy;

pub use f2poly::{
    check_chain, common_zero_certificate, diameter_chain, f2_membership_principal,
    verify_corollary_rminusd, verify_diameter_m_construction, ChainCheck, CorollaryReport,
    CorollaryVerdict, DiameterReport, F2Poly, F2Window, F2WindowSpec, Generator, LowerBound,
};
pub use zwindow::{verify_z_window, witness_vertex, z_window_graph, IntWindowGraph, ZWindowReport};
pub use zxy::{verify_zxy_nonconnectivity, ZxyReport};

/// `Z[X]` with `D = (2,X) ∪ (3,X)` has non-principal members, which the
/// exact membership tests here do not cover.
pub const Z_X_EXAMPLE: &str =
    "Z[X] with D = (2,X) ∪ (3,X): inapplicable, members are not principal";
