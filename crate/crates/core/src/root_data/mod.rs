//! Root data for the twisted affine families and their untwisted parents.

mod affine;
mod finite_type;
mod folding;

pub use affine::{
    AffineRealRoot, AffineTypeDescriptor, RootSystemData, TwistedFamily, UntwistedData,
};
pub use finite_type::{FiniteType, Root, RootSystem};
pub use folding::Folding;
