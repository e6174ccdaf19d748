//! Exact computations for finite-dimensional representations of the quantum
//! affine algebra of type `A_l`: q-characters via the path model, snake
//! modules, T-systems, cluster mutation and the trigonometric R-matrix.
//!
//! Everything is computed in the subcategory whose spectral parameters are
//! integer powers of `q`, so all identities become exact equalities of integer
//! Laurent polynomials.

pub mod acceptance;
pub mod cluster;
pub mod error;
pub mod laurent;
pub mod loopalg;
pub mod paths;
pub mod qarith;
pub mod rmatrix;
pub mod sl2eval;
pub mod snakes;
pub mod tsys;

pub use error::{Error, Result};
