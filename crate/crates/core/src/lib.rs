//! Exact lattice exhaustion sums and tropical caustics of convex domains.

pub mod error;
pub mod lattice;
pub mod num;
pub mod qpoly;
