//! Linear algebra over F2 on the symplectic space `V_k = F2^k × F2^k`.

mod group;
mod matrix;
mod quad;
mod subspace;
mod vector;

pub use group::{generate_group, orthogonal_group_order, symplectic_generators, GroupCatalog};
pub use matrix::{transvection_matrix, SympMatrix};
pub use quad::{
    enumerate_quad_forms, expected_class_size, quad_eval, quad_transform, Parity, QuadLabel,
};
pub use subspace::{enumerate_lagrangians, IsotropicSubspace};
pub use vector::{symplectic_form, transvection_apply, SympVector, MAX_RANK};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum F2Error {
    #[error("rank {0} outside 1..=4")]
    InvalidRank(u8),
    #[error("value {value:#b} does not fit rank {k}")]
    OutOfRange { k: u8, value: u16 },
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(u8, u8),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("expected {expected} entries, found {found}")]
    Shape { expected: usize, found: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("generator {0} is not invertible")]
    NotInvertible(usize),
    #[error("empty generator set")]
    EmptyGeneratorSet,
    #[error("label {0} has the other parity")]
    ParityMismatch(String),
    #[error("{0} and {1} are not orthogonal")]
    NotIsotropic(String, String),
    #[error("vectors are linearly dependent")]
    Dependent,
    #[error("subspace is not Lagrangian")]
    NotLagrangian,
}
