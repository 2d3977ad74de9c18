//! Exact computations around equivariant line bundles on smooth projective
//! toric varieties and their polyhedral shadows.
//!
//! The library computes, with arbitrary-precision rational arithmetic:
//!
//! * fans, moment polytopes, positivity and toric surface intersection
//!   numbers ([`fan`], [`bundles`]);
//! * graded sheaf cohomology of equivariant line bundles via weight-wise
//!   Cech complexes over the maximal-cone cover ([`bundles`]);
//! * the K-theoretic polytope-indicator map, Euler integrals and germ
//!   certificates ([`morelli`]);
//! * conical Lagrangians, the costandard-sheaf hom engine built on relative
//!   cohomology of polyhedral pairs, and a weight-by-weight comparison of
//!   the two hom calculi ([`ccc`]);
//! * characteristic cycles of polyhedral sheaves and the intersection
//!   pairing against sheaf Euler characteristics ([`charcycle`]);
//! * a floating-point companion for Hori-Vafa superpotentials: critical
//!   points and exact tropical amoebas ([`lg`]).
//!
//! Every module except [`lg`] works in exact rational arithmetic. See the
//! crate examples for end-to-end walkthroughs and the `toric-ccc` binary for
//! the command-line interface.

pub mod cellcomplex;
pub mod cone;
pub mod error;
pub mod linalg;
pub mod polyhedron;
pub mod vector;

pub mod fan;
pub mod parallel;
pub mod rng;

pub mod bundles;

pub mod morelli;

pub mod ccc;

pub mod charcycle;

pub mod lg;

pub mod cli;
pub mod schema;
pub mod svg;

pub use error::{Result, ToricError};
pub use vector::{LatticeVector, RationalVector, Role};
