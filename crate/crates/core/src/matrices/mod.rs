//! The interpolation matrices whose invertibility makes the defining
//! relations reducible, with exact determinants over `Q` and `Q(omega)`.

mod field;
mod linalg;
mod matrix;
mod random;

pub use field::{Eisenstein, Field, QOmega};
pub use linalg::{bareiss_determinant, gauss_determinant, rank, ExactDomain};
pub use matrix::{generalized_binomial, m1, m2, scale_to_eisenstein, scale_to_integers};
pub use random::{check_instance, random_instance, MatrixCase, MatrixInstance, MatrixOutcome};
