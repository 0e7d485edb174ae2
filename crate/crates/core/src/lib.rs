//! Exact intersection theory on the moduli space of stable `n`-pointed
//! rational curves, driven by cyclic covering morphisms.
//!
//! The crate is organised bottom-up:
//!
//! - [`exactlin`]: arbitrary-precision rationals and fraction-free linear algebra.
//! - [`polyhedral`]: double description for homogeneous rational cones.
//! - [`moduli`]: symmetric and non-symmetric divisor classes, F-curves, test curves.
//! - [`cyclic`]: Hodge, boundary, eigenbundle and conformal blocks classes
//!   pulled back along cyclic covering morphisms.
//! - [`eigenforms`]: weight-`j` differentials on cyclic covers of the line and
//!   eigenbundle ranks/degrees over F-curves.
//! - [`fcone`]: the symmetric F-cone, F-nefness and extremality reports, ray
//!   annotation and the certificate families for `9λ - δ_irr`.
//! - [`tables`]: CSV renderings of the reproducible tables.

pub mod cyclic;
pub mod eigenforms;
mod error;
pub mod exactlin;
pub mod fcone;
pub mod moduli;
pub mod polyhedral;
pub mod tables;

pub use error::{Error, Result};
pub use exactlin::{QMatrix, QVector, Rational};
pub use moduli::{FullDivisor, FullFCurve, Subset, SymDivisor, SymFCurve};
