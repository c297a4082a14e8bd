//! Exact verification of the identities the engine is built to check.
//! Every routine returns a [`VerificationReport`]; failures carry the first
//! differing term or integer as a witness.

mod combinatorics;
mod engine;
mod identities;
mod report;

pub use combinatorics::{verify_index_sets, verify_matrices, verify_presentation, verify_presentation_grid};
pub use engine::{
    random_character, verify_grade_zero, verify_idempotence, verify_length_additivity,
    verify_semi_infinite_stability, verify_word_independence,
};
pub use identities::{
    verify_branching, verify_dim_equality, verify_fusion_dimension, verify_fusion_surjection,
    verify_qsystem, verify_qsystem_ses, verify_tensor_decomposition,
};
pub use report::{Status, VerificationReport, Witness};
