//! Smeared-spin quantum mechanics: operators, eigenstates, measurements and
//! the uncertainty relations of a spin-1/2 particle whose geometry carries
//! its own qubit.

pub mod canonical;
pub mod check;
pub mod error;
pub mod fixtures;
pub mod gur;
pub mod limits;
pub mod linalg;
pub mod measurement;
pub mod parallel;
pub mod params;
pub mod phase_space;
pub mod pauli;
pub mod random;
pub mod scalar;
pub mod spin_one;
pub mod spin_two;
pub mod su2;
pub mod suites;

pub use check::{Check, Residual, SuiteReport};
pub use error::{Error, Result};
pub use linalg::{Ket, Matrix};
pub use params::SmearingParams;
pub use pauli::Axis;
pub use scalar::{Real, C};
