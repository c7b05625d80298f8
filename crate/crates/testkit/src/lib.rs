//! Independent oracles used by the test suites.
//!
//! Nothing here depends on `bitangent-core`: polynomials are plain maps from
//! exponent vectors to integers, lines are pairs of integer vectors.

pub mod lines;
pub mod poly;
pub mod random;
pub mod roots;
