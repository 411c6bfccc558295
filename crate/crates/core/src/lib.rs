//! Correlations of characteristic polynomials of sample covariance matrices.

pub mod asymptotics;
pub mod cli;
pub mod contour;
pub mod ensembles;
pub mod error;
pub mod genfun;
pub mod kernels;
pub mod logcomplex;
pub mod mpfloat;
pub mod quadrature;
pub mod specfun;

pub use error::{Error, Result};
pub use logcomplex::LogComplex;
