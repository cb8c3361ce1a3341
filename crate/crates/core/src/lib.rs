//! Exact character theory for quantum groups of type A.
//!
//! Everything is computed over the field Q(p) with q = p^2 (see [`scalar`]),
//! so every identity in the crate is checked by exact equality of canonical
//! forms rather than within a tolerance.

#[cfg(feature = "cli")]
pub mod cli;
pub mod haar;
pub mod heckealg;
pub mod linalg;
pub mod partitions;
pub mod qmatrix;
pub mod rmatrix;
pub mod scalar;
pub mod symfunc;
