//! Polynomial models of the forms `Q[ε,ε']` and `A[ε,ε']`, their behaviour
//! under the normalizer, and the sum-of-squares identities.

mod forms;
mod hopf;
mod poly;
mod quartic;

pub use forms::{
    act_on_form, bilinear_form, form_polynomial, form_polynomial_as, heisenberg_eigenvalue,
    substitution_images, transform_label, FormAction,
};
pub use hopf::{
    determinant, hopf_relation, pfaffian, span_dimension, span_dimension_of_squares,
    HopfCertificate,
};
pub use poly::{ExactPolynomial, Monomial, Polynomial, Ring};
pub use quartic::{
    hamming_weight_enumerator_doubled, label_permutations, lifts, permutation_group,
    quartic_invariance_check, QuarticReport,
};

use crate::f2sym::F2Error;
use crate::heisenberg::HeisenbergError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TensorError {
    #[error(transparent)]
    F2(#[from] F2Error),
    #[error(transparent)]
    Heisenberg(#[from] HeisenbergError),
    #[error("label {0} has the wrong parity for this form")]
    WrongParity(String),
    #[error("not a normalizer element: {0}")]
    NotInNormalizer(String),
    #[error("identity does not hold: {0}")]
    IdentityFails(String),
}
