//! Polynomial invariants of spatial graph diagrams.
//!
//! Diagrams are combinatorial planar codes (see [`diagram`]). The invariants are
//! the Kauffman bracket, the Jones polynomial, the Yamada polynomial and the
//! Jaeger polynomial specialized to a single variable. [`surfaces`] builds the
//! associated links of spatial theta and K4 graphs and [`relations`] checks the
//! identities tying all of these together.

pub mod algebra;
pub mod catalog;
pub mod diagram;
pub mod invariants;
pub mod relations;
pub mod surfaces;
