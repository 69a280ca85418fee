//! Morphing syndrome-extraction circuits for CSS stabiliser codes.
//!
//! The crate builds morphing circuits from contraction-tree diagrams, derives
//! their mid- and end-cycle codes and detectors, and computes code parameters,
//! circuit-level distance and stability distance exactly at desk scale.
//! Abelian two-block group-algebra (2BGA) codes are the flagship code family,
//! with group and lattice presentations and an enumeration pipeline over
//! Hermite-Normal-Form lattices.
//!
//! Layering, bottom up:
//! - [`gf2`], [`pauli`], [`clifford`], [`tableau`]: bit-packed GF(2) and
//!   stabiliser algebra.
//! - [`code`]: CSS codes as first-class objects with `[[n, k, d]]` machinery.
//! - [`intmat`], [`bga`]: integer lattices and the 2BGA constructions.
//! - `morphing`: contraction-tree diagrams, compilation, end-cycle codes and
//!   circuit transformations.
//! - `experiment`, `detectors`, `dem`: scheduled experiments, detector
//!   construction and detector error models under configurable noise.
//! - `analysis`, `sample`, `phen`: exact distance searches, bounds,
//!   Monte Carlo sampling and the exact small-instance decoder.
//! - `search`, `zoo`: the 2BGA morphing-circuit search pipeline and the
//!   named reference circuits used across the test suite.

pub mod bga;
pub mod clifford;
pub mod code;
pub mod error;
pub mod gf2;
pub mod intmat;
pub mod pauli;
pub mod tableau;

pub use error::{Error, Result};
pub use pauli::{symplectic_commutes, PauliString};
