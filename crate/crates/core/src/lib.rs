//! Exact arithmetic, sum-product enumeration and point-line incidence tools for
//! the two non-field planar hypercomplex systems: dual numbers (`ε² = 0`) and
//! double numbers (`j² = 1`).
//!
//! Every scalar is an arbitrary-precision rational, so degeneracy tests,
//! intersection classification and set deduplication are exact. The crate is
//! `no_std` and only needs `alloc`; file formats, randomized inputs and the
//! command-line front end live in the companion `planar` crate.
//!
//! Layout:
//!
//! * [`numbers`]: [`PlanarNumber`] arithmetic, inverses, the `Re` / `Δ±`
//!   functionals and the 2×2 matrix representation.
//! * [`sets`]: [`NumberSet`], sumsets and product sets, multiplicity, pruning,
//!   multiplicative energy and the extremal constructions.
//! * [`geometry`]: lines in the dual and double planes, incidences, exact
//!   intersection classification with an independent ℝ⁴ rank oracle, line
//!   families, the multiplicity-one partition and rich points of real lines.
//! * [`experiments`]: the Elekes configuration with special/standard incidence
//!   statistics, the energy/wedge pipeline, theorem exponents and sweeps.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod coloring;
pub mod diag;
mod error;
pub mod experiments;
pub mod geometry;
pub mod numbers;
pub mod rational;
pub mod sets;

pub use error::{Error, Result};
pub use numbers::{Functional, Mat2, PlanarNumber, System};
pub use rational::Rational;
pub use sets::NumberSet;
