//! Weights, half-integer grades and graded characters.

mod character;
mod half;
mod restriction;
mod weight;

pub use character::{first_difference, GradedCharacter};
pub use half::HalfInt;
pub use restriction::{canonical_lift, restrict_character, restrict_parent_weight, sigma_fiber};
pub use weight::{AffineWeight, Weight};
