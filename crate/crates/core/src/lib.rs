//! Exact verification engine for Wronskians of sine families and their Gegenbauer
//! closed form, the Darboux-Crum chain of `½∂² − μ csc²(πx)` operators, and the
//! transition density of Brownian motion killed at rate `μ csc²(πx)`.
//!
//! The exact layer is [`scalar::PiScalar`] (rationals graded by formal powers of π),
//! [`upoly::UPoly`] and [`trig::FourierPoly`]. Everything above it either certifies
//! identities by structural equality or evaluates the spectral series numerically.

pub mod darboux;
pub mod determinant;
pub mod orthopoly;
pub mod quadrature;
pub mod scalar;
pub mod spectral;
pub mod trig;
pub mod upoly;
pub mod wronskian;

pub use scalar::{PiScalar, Ring};
pub use trig::{FourierPoly, SinCosForm, TrigError};
pub use upoly::UPoly;

/// Malformed serialized input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("invalid rational {0:?}")]
    Rational(String),
    #[error("invalid JSON value: {0}")]
    Json(String),
}
