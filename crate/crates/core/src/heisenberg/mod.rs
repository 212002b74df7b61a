//! The Heisenberg group `H_k`, its Schrödinger representation over
//! `Z[ζ8, 1/2]`, and the normalizer map onto `Sp(2k, F2)`.

mod cyclo;
mod element;
mod normalizer;
mod operator;

pub use cyclo::{CycloDyadic, Dyadic};
pub use element::{commutator, h_inv, h_mul, HeisenbergElement};
pub use normalizer::{
    cnot_operator, heisenberg_operator, lift_transvection, lift_transvection_inverse,
    normalizer_image, operator_group, projective_group, schrodinger_matrix, NormalizerImage,
};
pub use operator::PhasedOperator;

use crate::f2sym::F2Error;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HeisenbergError {
    #[error(transparent)]
    F2(#[from] F2Error),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("expected a {expected}×{expected} matrix, found {found} rows")]
    Shape { expected: usize, found: usize },
    #[error("qubit {index} outside 1..={k}")]
    QubitOutOfRange { index: usize, k: u8 },
    #[error("control and target are both qubit {0}")]
    SameQubit(usize),
    #[error("conjugate of U[{0}] is not a phase times a Heisenberg operator")]
    NotInNormalizer(String),
    #[error("operator is singular")]
    Singular,
    #[error("empty generator set")]
    EmptyGeneratorSet,
}
