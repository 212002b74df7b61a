use rustc_hash::{FxHashMap, FxHashSet};
use serde::Serialize;

use crate::f2sym::{GroupCatalog, SympMatrix, SympVector};

use super::labels::RootLabel;
use super::lattice::{reflect, simple_roots, PicVector};
use super::reduction::{pi_of_pic, root_records, SIMPLE_ROOT_IMAGES};

/// The 126 roots indexed `0..63` (positive, [`root_records`] order) and
/// `63..126` (their negatives), with the action of the simple reflections.
pub struct RootTable {
    pub roots: Vec<PicVector>,
    pub images: Vec<SympVector>,
    /// `reflections[g][r]` is the index of `s_{α_g}(root r)`.
    pub reflections: [Vec<u8>; 7],
    /// Indices of `α_1..α_7`.
    pub simple: [u8; 7],
}

impl RootTable {
    pub fn new() -> Self {
        let roots: Vec<PicVector> = root_records()
            .iter()
            .map(|r| r.pic)
            .chain(root_records().iter().map(|r| -r.pic))
            .collect();
        let index: FxHashMap<PicVector, u8> = roots
            .iter()
            .enumerate()
            .map(|(i, v)| (*v, i as u8))
            .collect();
        let d = simple_roots();
        let reflections = std::array::from_fn(|g| {
            roots
                .iter()
                .map(|x| index[&reflect(&d[g], x).expect("simple roots have norm 2")])
                .collect()
        });
        let simple = d.map(|v| index[&v]);
        let images = roots
            .iter()
            .map(|v| pi_of_pic(v).expect("roots lie in the root lattice"))
            .collect();
        Self {
            roots,
            images,
            reflections,
            simple,
        }
    }

    pub fn label(&self, idx: u8) -> RootLabel {
        let i = idx as usize;
        if i < 63 {
            root_records()[i].label
        } else {
            root_records()[i - 63].label.negate()
        }
    }

    fn negation(&self, idx: u8) -> u8 {
        if idx < 63 {
            idx + 63
        } else {
            idx - 63
        }
    }
}

impl Default for RootTable {
    fn default() -> Self {
        Self::new()
    }
}

/// An element of `W(E7)` packed as the root indices of `w(α_1), …, w(α_7)`,
/// one byte each.
pub type WeylElement = u64;

fn pack(bytes: [u8; 7]) -> WeylElement {
    bytes
        .iter()
        .enumerate()
        .fold(0, |acc, (j, &b)| acc | (b as u64) << (8 * j))
}

pub fn unpack(w: WeylElement) -> [u8; 7] {
    std::array::from_fn(|j| (w >> (8 * j)) as u8)
}

/// Closure of the seven simple reflections acting on the left.
pub fn weyl_group(table: &RootTable) -> GroupCatalog<WeylElement> {
    let identity = pack(table.simple);
    let gens: Vec<WeylElement> = (0..7)
        .map(|g| pack(table.simple.map(|r| table.reflections[g][r as usize])))
        .collect();
    GroupCatalog::from_action(identity, gens, |g, &w| {
        pack(unpack(w).map(|r| table.reflections[g][r as usize]))
    })
}

/// `-I`, which sends every simple root to its negative.
pub fn minus_identity(table: &RootTable) -> WeylElement {
    pack(table.simple.map(|r| table.negation(r)))
}

/// The map `W(E7) → Sp(6, F2)` induced on `Q/2P ≅ V_3`.
pub struct SymplecticShadow {
    basis_inverse: SympMatrix,
}

impl SymplecticShadow {
    /// `v_1..v_6` form a basis of `V_3`; `v_7 = v_2 + v_5`.
    pub fn new() -> Self {
        let cols: Vec<SympVector> = SIMPLE_ROOT_IMAGES[..6]
            .iter()
            .map(|s| s.parse().expect("valid label"))
            .collect();
        let b = SympMatrix::from_columns(&cols).expect("six columns");
        Self {
            basis_inverse: b.inverse().expect("v_1..v_6 are independent"),
        }
    }

    pub fn image(&self, table: &RootTable, w: WeylElement) -> SympMatrix {
        let r = unpack(w);
        let cols: Vec<SympVector> = r[..6].iter().map(|&i| table.images[i as usize]).collect();
        SympMatrix::from_columns(&cols)
            .expect("six columns")
            .mul(&self.basis_inverse)
    }

    /// `w` acts trivially on `V_3` exactly when `π(w α_j) = v_j` for all `j`.
    pub fn in_kernel(table: &RootTable, w: WeylElement) -> bool {
        unpack(w)
            .iter()
            .zip(table.simple)
            .all(|(&r, s)| table.images[r as usize] == table.images[s as usize])
    }
}

impl Default for SymplecticShadow {
    fn default() -> Self {
        Self::new()
    }
}

/// Summary of the `W(E7)` closure and its map to `Sp(6, F2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeylReport {
    pub order: usize,
    pub contains_minus_identity: bool,
    /// Root labels of the kernel elements' images of `α_1..α_7`.
    pub kernel: Vec<Vec<RootLabel>>,
    pub image_order: usize,
    pub image_symplectic: bool,
}

pub fn weyl_report() -> WeylReport {
    let table = RootTable::new();
    let group = weyl_group(&table);
    let shadow = SymplecticShadow::new();
    let mut kernel = Vec::new();
    let mut image: FxHashSet<u64> = FxHashSet::default();
    let mut symplectic = true;
    for &w in group.elements() {
        if SymplecticShadow::in_kernel(&table, w) {
            kernel.push(unpack(w).iter().map(|&r| table.label(r)).collect());
        }
        let m = shadow.image(&table, w);
        symplectic &= m.is_symplectic();
        image.insert(m.encode());
    }
    WeylReport {
        order: group.order(),
        contains_minus_identity: group.contains(&minus_identity(&table)),
        kernel,
        image_order: image.len(),
        image_symplectic: symplectic,
    }
}
