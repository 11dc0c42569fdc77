//! Exact arithmetic for third-order Jacobsthal and Jacobsthal-Lucas numbers,
//! their quaternions, generating matrices and generating function, together
//! with a harness that machine-checks the known identities over index ranges.
//!
//! Everything is evaluated without rounding: sequence values live in
//! [`Rational`], Binet evaluation happens in the Eisenstein rationals
//! [`CycloRational`], and quaternions and matrices are generic over the
//! coefficient ring.

pub mod error;
pub mod evaluators;
pub mod exactnum;
pub mod genfunc;
pub mod harness;
pub mod matrices;
pub mod quaternion;
pub mod report;
pub mod sequences;

pub use error::{Error, Result};
pub use exactnum::{CycloRational, Rational, Ring};
pub use matrices::Matrix;
pub use quaternion::Quaternion;
pub use report::{Identity, IdentityReport, Outcome};
pub use sequences::SeqKind;
