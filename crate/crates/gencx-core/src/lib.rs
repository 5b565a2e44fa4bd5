//! Exact-arithmetic workbench for the linear algebra of generalized complex
//! geometry: Dirac structures on `V ⊕ V*`, generalized complex structures and
//! their normal forms, generalized Kähler / tamed symplectic pointwise data,
//! and left-invariant integrability over Lie algebras.
//!
//! All coefficients live in ℚ or ℚ(i) and every identity is checked exactly;
//! there are no tolerances anywhere. Values are immutable after construction
//! and all operations are pure functions, so everything can be shared across
//! threads freely.

pub mod error;
pub mod exactla;

pub mod dirac;
pub mod gclin;
pub mod gkahler;
pub mod liecourant;

pub mod generators;
pub mod json;
pub mod verify;

pub use error::{Error, Result};
pub use exactla::{CRat, Field, FieldTag, Mat, Rat, Subspace};
