//! Affine Weyl group action at positive level and Demazure characters.

mod action;
mod character;

pub use action::{AffineAction, TieBreak, WeylWord};
pub use character::{
    default_ascent_cap, demazure_character, demazure_character_untwisted,
    demazure_character_with, kr_character, kr_character_untwisted,
};
