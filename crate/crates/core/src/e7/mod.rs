//! The E7 root system and the 56 weights of `V(ω7)` inside the Picard lattice
//! of a degree-two del Pezzo surface, and their reduction to `V_3`.

mod fano;
mod labels;
mod lattice;
mod reduction;
mod weyl;

pub use fano::{
    restriction_decomposition, root_multiplicities, FanoDecomposition, FanoLine, FanoPoint,
};
pub use labels::{
    census_scan, enumerate_roots, enumerate_weights, signed_weights, weight_root_pairing, RootKind,
    RootLabel, WeightLabel,
};
pub use lattice::{
    cartan_matrix, inverse_cartan, pic_pairing, rational_simple_coords, reflect, simple_roots,
    PicVector, SimpleRootCoords,
};
pub use reduction::{
    odd_form_of_weight, orthogonal_root_sets, pi_map, pi_of_pic, positive_root_of_point,
    reflection_product_is_minus_identity, root_in_simple_coords, root_records, roots_over,
    OrthogonalRootSet, RootRecord, SIMPLE_ROOT_IMAGES,
};
pub use weyl::{
    minus_identity, unpack, weyl_group, weyl_report, RootTable, SymplecticShadow, WeylElement,
    WeylReport,
};

use crate::f2sym::F2Error;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum E7Error {
    #[error(transparent)]
    F2(#[from] F2Error),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("reflection vector has norm {0}, expected 2")]
    WrongNorm(i64),
    #[error("{0} is not in the root lattice")]
    NotInRootLattice(String),
    #[error("{0} is not a Lagrangian subspace of V_3")]
    NotLagrangian(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}
