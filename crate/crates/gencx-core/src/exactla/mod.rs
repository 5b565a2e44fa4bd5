//! Exact scalar and subspace arithmetic underpinning every other module.

pub mod matrix;
pub mod scalar;
pub mod subspace;

pub use matrix::Mat;
pub use scalar::{crat, imag_unit, rat, ratio, CRat, Field, FieldTag, Rat};
pub use subspace::Subspace;
