//! Exact generating polynomials for rook placements on Ferrers boards,
//! Bruhat and weak order intervals, inversion sequences and permutation
//! posets, together with exact decision procedures for real-rootedness,
//! interlacing and log-concavity.
//!
//! Every decision procedure works over arbitrary-precision integers and
//! rationals. Nothing in this crate uses floating point.

pub mod boards;
pub mod error;
pub mod exactpoly;
pub mod invseq;
pub mod multiset;
pub mod perms;
pub mod posets;

pub use error::{Error, Result};
pub use exactpoly::IntPolynomial;
