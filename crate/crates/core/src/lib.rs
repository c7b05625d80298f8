//! Exact tools for lines on quartic surfaces in P^3: restriction of a quartic
//! to a line, bitangency classification, height-bounded rational search and
//! quadratic points from tangent-plane projection.

pub mod error;
pub mod exact_algebra;
pub mod expr;
pub mod lattice;
pub mod projective;
pub mod quadratic_points;
pub mod search;
pub mod tangency;

pub use error::{Error, Result};
