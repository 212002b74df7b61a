use std::sync::OnceLock;

use serde::Serialize;

use crate::f2sym::{enumerate_lagrangians, IsotropicSubspace, Parity, QuadLabel, SympVector};

use super::labels::{enumerate_roots, weight_root_pairing, RootLabel, WeightLabel};
use super::lattice::{reflect, PicVector, SimpleRootCoords};
use super::E7Error;

/// `π(α_i) = v_i`, the labels of the Dynkin diagram nodes.
pub const SIMPLE_ROOT_IMAGES: [&str; 7] = [
    "101:100", "011:000", "111:111", "101:001", "001:111", "101:011", "010:111",
];

fn images() -> &'static [SympVector; 7] {
    static V: OnceLock<[SympVector; 7]> = OnceLock::new();
    V.get_or_init(|| SIMPLE_ROOT_IMAGES.map(|s| s.parse().expect("valid label")))
}

/// `π(Σ n_i α_i) = Σ n_i v_i` over F2.
pub fn pi_map(c: &SimpleRootCoords) -> SympVector {
    let v = images();
    let mut out = SympVector::zero(3).expect("valid rank");
    for (i, &n) in c.0.iter().enumerate() {
        if n.rem_euclid(2) == 1 {
            out += v[i];
        }
    }
    out
}

/// A positive root with its coordinates and its image in `V_3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RootRecord {
    pub label: RootLabel,
    pub pic: PicVector,
    pub coords: SimpleRootCoords,
    pub image: SympVector,
}

/// Simple-root coordinates of a root label.
pub fn root_in_simple_coords(r: RootLabel) -> Result<SimpleRootCoords, E7Error> {
    SimpleRootCoords::from_pic(&r.pic()).map_err(|e| match e {
        E7Error::NotInRootLattice(v) => {
            E7Error::InternalInconsistency(format!("root {r} = {v} has no integral coordinates"))
        }
        other => other,
    })
}

/// The positive roots in [`enumerate_roots`] order.
pub fn root_records() -> &'static [RootRecord] {
    static T: OnceLock<Vec<RootRecord>> = OnceLock::new();
    T.get_or_init(|| {
        enumerate_roots()
            .into_iter()
            .map(|(label, pic)| {
                let coords = root_in_simple_coords(label)
                    .expect("every root is integral over the simple roots");
                RootRecord {
                    label,
                    pic,
                    coords,
                    image: pi_map(&coords),
                }
            })
            .collect()
    })
}

/// The unique positive root with `π(α) = v`, `v ≠ 0` in `V_3`.
pub fn positive_root_of_point(v: SympVector) -> Option<RootLabel> {
    root_records()
        .iter()
        .find(|r| r.image == v)
        .map(|r| r.label)
}

/// `π` of an arbitrary root lattice vector given on the e-basis.
pub fn pi_of_pic(v: &PicVector) -> Result<SympVector, E7Error> {
    Ok(pi_map(&SimpleRootCoords::from_pic(v)?))
}

/// The odd form `q` with `q(π(α)) = 1` exactly when `(ω, α) = 0`.
///
/// `f(v) = [(ω, α_v) = 0] + x*(x)` is linear and equals `E(v, w)`, so the
/// label `w = (ε, ε')` is read off the basis: `ε'_j = f(e_j)` and
/// `ε_j = f(e_j*)`. The result is checked against all 63 points.
pub fn odd_form_of_weight(w: WeightLabel) -> Result<QuadLabel, E7Error> {
    let f = |v: SympVector| -> Result<u8, E7Error> {
        let r = positive_root_of_point(v)
            .ok_or_else(|| E7Error::InternalInconsistency(format!("no root over {v}")))?;
        Ok((weight_root_pairing(w, r) == 0) as u8 ^ v.self_pairing())
    };
    let (mut eps, mut eps_dual) = (0u8, 0u8);
    for j in 0..3 {
        let bit = 1u8 << (2 - j);
        if f(SympVector::new(3, bit, 0)?)? == 1 {
            eps_dual |= bit;
        }
        if f(SympVector::new(3, 0, bit)?)? == 1 {
            eps |= bit;
        }
    }
    let q = QuadLabel::new(SympVector::new(3, eps, eps_dual)?);
    for rec in root_records() {
        if (q.eval(rec.image) == 1) != (weight_root_pairing(w, rec.label) == 0) {
            return Err(E7Error::InternalInconsistency(format!(
                "{w}: form {q} disagrees at {}",
                rec.label
            )));
        }
    }
    if q.parity() != Parity::Odd {
        return Err(E7Error::InternalInconsistency(format!(
            "{w}: form {q} is even"
        )));
    }
    Ok(q)
}

/// A Lagrangian of `V_3` with the seven positive roots over its points, in
/// point order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrthogonalRootSet {
    pub lagrangian: IsotropicSubspace,
    pub roots: Vec<RootLabel>,
}

/// The seven positive roots over the nonzero points of a Lagrangian.
pub fn roots_over(l: &IsotropicSubspace) -> Result<Vec<RootLabel>, E7Error> {
    if l.rank() != 3 || !l.is_lagrangian() {
        return Err(E7Error::NotLagrangian(l.to_string()));
    }
    l.points()
        .iter()
        .map(|&v| {
            positive_root_of_point(v)
                .ok_or_else(|| E7Error::InternalInconsistency(format!("no root over {v}")))
        })
        .collect()
}

/// One set of seven mutually orthogonal positive roots per Lagrangian of `V_3`.
pub fn orthogonal_root_sets() -> Vec<OrthogonalRootSet> {
    enumerate_lagrangians(3)
        .expect("valid rank")
        .into_iter()
        .map(|lagrangian| {
            let roots = roots_over(&lagrangian).expect("enumerated subspaces are Lagrangian");
            OrthogonalRootSet { lagrangian, roots }
        })
        .collect()
}

/// Applies `s_{r_1} ⋯ s_{r_7}` to each simple root and reports whether every
/// image is the negated simple root.
pub fn reflection_product_is_minus_identity(roots: &[RootLabel]) -> Result<bool, E7Error> {
    for d in super::lattice::simple_roots() {
        let mut x = d;
        for r in roots.iter().rev() {
            x = reflect(&r.pic(), &x)?;
        }
        if SimpleRootCoords::from_pic(&x)? != SimpleRootCoords::from_pic(&-d)? {
            return Ok(false);
        }
    }
    Ok(true)
}
