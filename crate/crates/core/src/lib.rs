//! Exact arithmetic for dual Horadam octonions.
//!
//! Every value in this crate is exact: rationals are arbitrary precision,
//! characteristic roots live in a formal quadratic extension `Q(ω)` with
//! `ω² = D`, and octonions and dual numbers are generic over their
//! coefficient ring. The [`verifier`] module sweeps closed-form identities
//! for Horadam sequences and dual Horadam octonions against direct
//! computation and reports every discrepancy with an exact witness.

pub mod dual;
pub mod dual_horadam;
pub mod error;
pub mod horadam;
pub mod octonion;
pub mod ring;
pub mod scalar;
pub mod series;
pub mod verifier;

pub use dual::DualElem;
pub use error::{Error, Result};
pub use horadam::{HoradamParams, SeqWindow, Sequence};
pub use octonion::{MulTable, Octonion};
pub use ring::{Conjugate, Field, Ring, Scale};
pub use scalar::{BigRat, QuadScalar, RootPair};
pub use series::TruncSeries;
