//! Exact symbolic engine for twisted affine Kac-Moody algebras.
//!
//! Root data for the five twisted families, graded characters over the
//! weight lattice, Demazure characters via Demazure operators, finite
//! characters and branching, the simplified presentations of Demazure
//! modules, the interpolation matrices behind them, and verification
//! routines for the Q-system and the fusion/tensor identities.
//!
//! Everything is exact: integer coefficients are `BigInt`, rationals are
//! `BigRational`, and `delta` grades are half-integers stored doubled.
#![no_std]

#[cfg(test)]
extern crate std;

extern crate alloc;

mod error;

pub mod demazure;
pub mod finite;
pub mod matrices;
pub mod presentations;
pub mod root_data;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use root_data::{
    AffineRealRoot, AffineTypeDescriptor, FiniteType, RootSystem, RootSystemData, TwistedFamily,
    UntwistedData,
};
pub use weights::{AffineWeight, GradedCharacter, HalfInt, Weight};
