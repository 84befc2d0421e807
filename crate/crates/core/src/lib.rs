//! Exact combinatorics and Monte Carlo simulation for last passage
//! percolation in three planar geometries: the point-to-half-line-reflected
//! quarter square, the point-to-point-reflected half-space triangle and the
//! point-to-line triangle.
//!
//! The crate is organised bottom-up:
//!
//! * [`partitions`]: partitions, interlacing, Gelfand–Tsetlin patterns and tableaux.
//! * [`growth`]: the row and column RSK local growth rules, grid growth and a
//!   brute-force non-intersecting path oracle.
//! * [`poly`] and [`characters`]: exact Laurent polynomials and the Schur,
//!   symplectic and odd orthogonal characters.
//! * [`lpp`]: geometries, fillings, passage times, generating series and the
//!   two RSK bijections relating fillings to patterns.
//! * [`probability`]: exact CDFs under geometric weights, seeded sampling and
//!   fluctuation scaling.

pub mod characters;
pub mod error;
pub mod growth;
pub mod lpp;
pub mod partitions;
pub mod poly;
pub mod probability;

pub use error::{Error, Result};
pub use partitions::Partition;
pub use poly::LaurentPolynomial;
