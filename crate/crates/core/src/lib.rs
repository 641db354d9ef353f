//! Confluent second-order supersymmetric transformations of the hyperbolic
//! Rosen–Morse II and Eckart potentials, with a finite-difference and
//! Numerov eigensolver to check the resulting spectra.

pub mod cli;
pub mod confluent;
pub mod error;
pub mod function;
pub mod potentials;
pub mod quadrature;
pub mod seeds;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
pub use function::{Eval, RealFunction};
pub use potentials::{BoundState, PotentialSpec};
