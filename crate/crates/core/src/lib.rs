//! Exact signature computations for equal-rank homogeneous spaces and
//! biquotients of compact Lie groups.

pub mod biquot;
pub mod error;
pub mod homsig;
pub mod liealg;
pub mod linalg;
pub mod rootsys;
pub mod weyl;

pub use error::{Result, SigError};
