//! Exact-arithmetic toolkit for certifying minimal spectral radii of
//! skew-reciprocal integer matrices.
//!
//! The crate provides:
//!
//! * [`poly`] — integer polynomials, skew-reciprocity predicates, the
//!   coefficient-constraint checker, and certified real-root isolation
//!   ([`poly::roots`]);
//! * [`matrix`] — exact companion matrices, characteristic polynomials,
//!   determinants, irreducibility and dual primitivity certificates;
//! * [`digraph`] — weighted directed multigraphs, simple-cycle enumeration,
//!   curve graphs, clique polynomials and the characteristic/clique duality
//!   oracle;
//! * [`families`] — the minimizing polynomial families and the curve-graph
//!   shape constructions, including the edge-deletion digraphs;
//! * [`search`] — the finite enumeration and verification pipelines: the
//!   dimension-six candidate scan, minimality verification over the
//!   classification shapes, monotonicity checks and normalized-sequence
//!   tables.
//!
//! All certified results are produced by exact integer/rational arithmetic;
//! floating point appears only in [`numeric`] as an independent cross-check.
//!
//! The heavy scans are data-parallel. With the default `parallel` feature
//! they run on rayon; without it the same code runs sequentially and
//! produces identical (canonically ordered) output.

pub mod digraph;
pub mod error;
pub mod families;
pub mod matrix;
pub mod numeric;
pub mod parallel;
pub mod poly;
pub mod rat;
pub mod search;

pub use error::{Error, Result};
pub use poly::IntPoly;
