//! Characters of finite-dimensional irreducible modules, decomposition of
//! characters into irreducibles, and branching from the parent.

mod branching;
mod freudenthal;

pub use branching::{branch_parent_to_g, expected_branching, BranchingCase};
pub use freudenthal::{
    decompose, dominant_multiplicities, irreducible_character, weyl_dimension, Decomposition,
};
