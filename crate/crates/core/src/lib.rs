//! Exact invariants of weighted homogeneous normal surface singularities with
//! star-shaped resolution graphs, with Brieskorn complete intersections as the
//! main family of examples.
//!
//! All arithmetic is exact: cycle coefficients are big integers or big
//! rationals and series coefficients are big integers.

pub mod brieskorn;
pub mod cycles;
pub mod error;
pub mod graph;
pub mod json;
pub mod numerics;
pub mod pdmodel;

pub use error::{Error, ErrorKind, Result};
