use serde::Serialize;

use crate::f2sym::{GroupCatalog, SympMatrix, SympVector};

use super::cyclo::CycloDyadic;
use super::element::HeisenbergElement;
use super::operator::PhasedOperator;
use super::HeisenbergError;

/// `U_{(s,x,x*)} δ_a = i^s (-1)^{x*(x+a)} δ_{x+a}`.
pub fn schrodinger_matrix(h: HeisenbergElement) -> PhasedOperator {
    let v = h.vector();
    let k = v.rank();
    let mut m = PhasedOperator::zero(k).expect("element rank is valid");
    let (x, xs) = (v.x() as usize, v.xstar() as usize);
    for a in 0..m.dim() {
        let b = x ^ a;
        let sign = ((xs & b).count_ones() % 2) as i64;
        m.set(b, a, CycloDyadic::i_pow(h.phase() as i64 + 2 * sign));
    }
    m
}

/// `U_v`, the operator of `(1, v)`.
pub fn heisenberg_operator(v: SympVector) -> PhasedOperator {
    schrodinger_matrix(HeisenbergElement::new(0, v))
}

/// The normalizer element `M_v` inducing the transvection `t_v`:
/// `(1-i)/2 (I + i U_v)` when `U_v² = I`, else `(1-i)/2 (I + U_v)`.
pub fn lift_transvection(v: SympVector) -> PhasedOperator {
    let u = heisenberg_operator(v);
    let id = PhasedOperator::identity(v.rank()).expect("vector rank is valid");
    let inner = if v.self_pairing() == 0 {
        id.add(&u.scale(CycloDyadic::I))
    } else {
        id.add(&u)
    };
    inner.scale(CycloDyadic::one_minus_i_half())
}

/// `M_v^{-1}`: `(1+i)/2 (I - i U_v)` resp. `(1+i)/2 (I - U_v)`.
pub fn lift_transvection_inverse(v: SympVector) -> PhasedOperator {
    let u = heisenberg_operator(v);
    let id = PhasedOperator::identity(v.rank()).expect("vector rank is valid");
    let inner = if v.self_pairing() == 0 {
        id.sub(&u.scale(CycloDyadic::I))
    } else {
        id.sub(&u)
    };
    inner.scale(CycloDyadic::one_plus_i_half())
}

/// The permutation `δ_a ↦ δ_{a'}` with `a'_target = a_target + a_control`.
/// Qubits are numbered `1..=k`, qubit 1 being the most significant index bit.
pub fn cnot_operator(
    control: usize,
    target: usize,
    k: u8,
) -> Result<PhasedOperator, HeisenbergError> {
    let mut m = PhasedOperator::zero(k)?;
    for q in [control, target] {
        if q == 0 || q > k as usize {
            return Err(HeisenbergError::QubitOutOfRange { index: q, k });
        }
    }
    if control == target {
        return Err(HeisenbergError::SameQubit(control));
    }
    let cbit = k as usize - control;
    let tbit = k as usize - target;
    for a in 0..m.dim() {
        let b = a ^ (((a >> cbit) & 1) << tbit);
        m.set(b, a, CycloDyadic::ONE);
    }
    Ok(m)
}

/// `φ_M` together with the phases `f_M(e)` on the basis of `V_k`, defined by
/// `M U_e M^{-1} = i^{f(e)} U_{φ(e)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizerImage {
    pub phi: SympMatrix,
    /// Indexed like [`SympVector::basis`].
    pub f: Vec<u8>,
}

impl Serialize for NormalizerImage {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            phi: Vec<String>,
            f: &'a [u8],
        }
        let phi = self.phi.to_string().lines().map(str::to_string).collect();
        Repr { phi, f: &self.f }.serialize(s)
    }
}

/// Row `b` of `U_w M` is `(-1)^{w*(b)}` times row `b + w_x` of `M`.
fn u_times(w: SympVector, m: &PhasedOperator, r: usize, c: usize) -> CycloDyadic {
    let e = m.get(r ^ w.x() as usize, c);
    if (w.xstar() as usize & r).count_ones() % 2 == 1 {
        -e
    } else {
        e
    }
}

/// Finds `(w, f)` with `p = i^f U_w m`.
fn match_heisenberg_multiple(p: &PhasedOperator, m: &PhasedOperator) -> Option<(SympVector, u8)> {
    let n = p.dim();
    let pos = (0..n * n).find(|&i| !p.get(i / n, i % n).is_zero())?;
    let (r, c) = (pos / n, pos % n);
    let target = p.get(r, c);
    for w in SympVector::all(p.rank()).expect("operator rank is valid") {
        let base = u_times(w, m, r, c);
        if base.is_zero() {
            continue;
        }
        let Some(f) = (0..4u8).find(|&f| CycloDyadic::i_pow(f as i64) * base == target) else {
            continue;
        };
        let phase = CycloDyadic::i_pow(f as i64);
        if (0..n).all(|rr| (0..n).all(|cc| phase * u_times(w, m, rr, cc) == p.get(rr, cc))) {
            return Some((w, f));
        }
    }
    None
}

/// Extracts `φ_M ∈ Sp(2k, F2)` and `f_M` from a normalizer element, comparing
/// `M U_e` with `i^f U_w M` so that no inverse is needed.
pub fn normalizer_image(m: &PhasedOperator) -> Result<NormalizerImage, HeisenbergError> {
    if !m.is_invertible() {
        return Err(HeisenbergError::Singular);
    }
    let k = m.rank();
    let mut cols = Vec::with_capacity(2 * k as usize);
    let mut f = Vec::with_capacity(2 * k as usize);
    for j in 0..2 * k as usize {
        let e = SympVector::basis(k, j)?;
        let p = m.mul(&heisenberg_operator(e));
        let (w, phase) = match_heisenberg_multiple(&p, m)
            .ok_or_else(|| HeisenbergError::NotInNormalizer(e.to_string()))?;
        cols.push(w);
        f.push(phase);
    }
    let phi = SympMatrix::from_columns(&cols)?;
    Ok(NormalizerImage { phi, f })
}

/// The finite group generated by `gens`, as exact matrices.
pub fn operator_group(
    gens: &[PhasedOperator],
) -> Result<GroupCatalog<PhasedOperator>, HeisenbergError> {
    let first = gens.first().ok_or(HeisenbergError::EmptyGeneratorSet)?;
    let id = PhasedOperator::identity(first.rank())?;
    let gens = gens.to_vec();
    Ok(GroupCatalog::from_action(id, gens.clone(), |i, g| {
        gens[i].mul(g)
    }))
}

/// The image of `⟨gens⟩` modulo scalars, each class represented by its
/// [`PhasedOperator::projective_canonical`] form.
pub fn projective_group(
    gens: &[PhasedOperator],
) -> Result<GroupCatalog<PhasedOperator>, HeisenbergError> {
    let first = gens.first().ok_or(HeisenbergError::EmptyGeneratorSet)?;
    let canon = |m: &PhasedOperator| m.projective_canonical().ok_or(HeisenbergError::Singular);
    let id = PhasedOperator::identity(first.rank())?;
    let gens: Vec<PhasedOperator> = gens.iter().map(canon).collect::<Result<_, _>>()?;
    Ok(GroupCatalog::from_action(id, gens.clone(), |i, g| {
        gens[i]
            .mul(g)
            .projective_canonical()
            .expect("entries of a product of normalizer elements are units")
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2sym::{symplectic_form, transvection_matrix};
    use crate::heisenberg::h_mul;

    fn v(s: &str) -> SympVector {
        s.parse().unwrap()
    }

    fn c(a: i64) -> CycloDyadic {
        CycloDyadic::from_int(a)
    }

    pub(crate) fn m_s() -> PhasedOperator {
        PhasedOperator::from_int_rows(1, CycloDyadic::one_minus_i_half(), &[&[1, 1], &[1, -1]])
            .unwrap()
    }

    pub(crate) fn m_t() -> PhasedOperator {
        let h = CycloDyadic::one_minus_i_half();
        let i = CycloDyadic::I;
        PhasedOperator::from_rows(1, vec![vec![h, h * i], vec![h * i, h]]).unwrap()
    }

    #[test]
    fn pauli_matrices() {
        let x = heisenberg_operator(v("1:0"));
        let z = heisenberg_operator(v("0:1"));
        assert_eq!(
            x,
            PhasedOperator::from_int_rows(1, c(1), &[&[0, 1], &[1, 0]]).unwrap()
        );
        assert_eq!(
            z,
            PhasedOperator::from_int_rows(1, c(1), &[&[1, 0], &[0, -1]]).unwrap()
        );
        let y = heisenberg_operator(v("1:1"));
        assert_eq!(
            y,
            PhasedOperator::from_int_rows(1, c(1), &[&[0, 1], &[-1, 0]]).unwrap()
        );
        let center = schrodinger_matrix("i^1·U[00:00]".parse().unwrap());
        assert_eq!(center.as_scalar(), Some(CycloDyadic::I));
    }

    #[test]
    fn x_type_is_a_tensor_product() {
        // X^a ⊗ X^b ⊗ X^c sends δ_(p,q,r) to δ_(p+a,q+b,r+c)
        for x in 0..8u8 {
            let m = heisenberg_operator(SympVector::new(3, x, 0).unwrap());
            for a in 0..8usize {
                for b in 0..8usize {
                    let expect = if b == a ^ x as usize { c(1) } else { c(0) };
                    assert_eq!(m.get(b, a), expect);
                }
            }
        }
    }

    #[test]
    fn faithful_and_multiplicative() {
        for k in 1..=3 {
            let elems: Vec<_> = HeisenbergElement::all(k).unwrap().collect();
            let mats: std::collections::HashSet<_> =
                elems.iter().map(|&h| schrodinger_matrix(h)).collect();
            assert_eq!(mats.len(), elems.len());
            for &a in elems.iter().step_by(7) {
                for &b in elems.iter().step_by(11) {
                    let prod = schrodinger_matrix(h_mul(a, b).unwrap());
                    assert_eq!(schrodinger_matrix(a).mul(&schrodinger_matrix(b)), prod);
                }
            }
        }
    }

    #[test]
    fn commutation_k2_exhaustive() {
        let all: Vec<_> = SympVector::all(2).unwrap().collect();
        for &a in &all {
            for &b in &all {
                let (ua, ub) = (heisenberg_operator(a), heisenberg_operator(b));
                let sign = if a.pairing(b) == 1 { -1 } else { 1 };
                assert_eq!(ua.mul(&ub), ub.mul(&ua).scale(c(sign)));
            }
        }
    }

    #[test]
    fn transpose_law_and_order_dichotomy() {
        for k in 1..=3 {
            let id = PhasedOperator::identity(k).unwrap();
            for w in SympVector::all(k).unwrap() {
                let u = heisenberg_operator(w);
                let sign = if w.self_pairing() == 1 { -1 } else { 1 };
                assert_eq!(u.transpose(), u.scale(c(sign)));
                assert!(u.mul(&u.transpose()).is_identity());
                assert_eq!(u.mul(&u), id.scale(c(sign)));
                assert!(u.is_monomial());
            }
        }
    }

    #[test]
    fn k1_lifts() {
        assert_eq!(lift_transvection(v("1:0")), m_t());
        let m1s = PhasedOperator::from_rows(1, vec![vec![c(1), c(0)], vec![c(0), -CycloDyadic::I]])
            .unwrap();
        assert_eq!(lift_transvection(v("0:1")), m1s);
        for k in 1..=4 {
            assert!(lift_transvection(SympVector::zero(k).unwrap()).is_identity());
        }
    }

    #[test]
    fn lifts_realize_transvections() {
        for k in 1..=3 {
            for w in SympVector::all(k).unwrap() {
                let m = lift_transvection(w);
                assert!(m.mul(&lift_transvection_inverse(w)).is_identity());
                let img = normalizer_image(&m).unwrap();
                assert_eq!(img.phi, transvection_matrix(w));
                // M_v² = i^l U_v
                let sq = m.mul(&m);
                let ratio = sq.scalar_ratio(&heisenberg_operator(w)).unwrap();
                assert!(ratio.i_exponent().is_some());
            }
        }
    }

    #[test]
    fn heisenberg_elements_map_to_identity() {
        for w in SympVector::all(2).unwrap() {
            let img = normalizer_image(&heisenberg_operator(w)).unwrap();
            assert!(img.phi.is_identity());
            for (j, f) in img.f.iter().enumerate() {
                let e = SympVector::basis(2, j).unwrap();
                assert_eq!(*f, 2 * symplectic_form(e, w).unwrap());
            }
        }
    }

    #[test]
    fn m_s_swaps_x_and_z() {
        let img = normalizer_image(&m_s()).unwrap();
        assert_eq!(img.phi, SympMatrix::from_rows(1, &[0b01, 0b10]).unwrap());
        let img = normalizer_image(&m_t()).unwrap();
        assert_eq!(img.phi, SympMatrix::from_rows(1, &[0b11, 0b01]).unwrap());
    }

    #[test]
    fn errors() {
        let zero = PhasedOperator::zero(1).unwrap();
        assert_eq!(normalizer_image(&zero), Err(HeisenbergError::Singular));
        let diag = PhasedOperator::from_int_rows(1, c(1), &[&[1, 0], &[0, 2]]).unwrap();
        assert!(matches!(
            normalizer_image(&diag),
            Err(HeisenbergError::NotInNormalizer(_))
        ));
        assert!(matches!(
            cnot_operator(1, 1, 3),
            Err(HeisenbergError::SameQubit(1))
        ));
        assert!(matches!(
            cnot_operator(0, 1, 3),
            Err(HeisenbergError::QubitOutOfRange { .. })
        ));
        assert!(matches!(
            cnot_operator(1, 4, 3),
            Err(HeisenbergError::QubitOutOfRange { .. })
        ));
    }

    #[test]
    fn cnot_is_the_block_permutation() {
        let c12 = cnot_operator(1, 2, 3).unwrap();
        // blocks (I,0,0,0; 0,I,0,0; 0,0,0,I; 0,0,I,0)
        for r in 0..8 {
            for col in 0..8 {
                let expect = match r {
                    0..=3 => r == col,
                    4 | 5 => col == r + 2,
                    _ => col == r - 2,
                };
                assert_eq!(c12.get(r, col), c(expect as i64), "{r} {col}");
            }
        }
        assert!(c12.mul(&c12).is_identity());
        let phi = normalizer_image(&c12).unwrap().phi;
        // x2 += x1 on L, x1* += x2* on L*
        let expect =
            SympMatrix::block_diagonal(3, &[0b100, 0b110, 0b001], &[0b110, 0b010, 0b001]).unwrap();
        assert_eq!(phi, expect);
    }

    #[test]
    fn phi_is_functorial() {
        let mut ops: Vec<PhasedOperator> = ["101:011", "110:000", "001:111", "011:010"]
            .iter()
            .map(|s| lift_transvection(v(s)))
            .collect();
        ops.push(cnot_operator(1, 3, 3).unwrap());
        ops.push(cnot_operator(3, 2, 3).unwrap());
        for a in &ops {
            for b in &ops {
                let pa = normalizer_image(a).unwrap().phi;
                let pb = normalizer_image(b).unwrap().phi;
                assert_eq!(normalizer_image(&a.mul(b)).unwrap().phi, pa.mul(&pb));
            }
        }
    }

    #[test]
    fn k1_normalizer_orders() {
        assert_eq!(projective_group(&[m_s(), m_t()]).unwrap().order(), 24);
        let r = CycloDyadic::inv_sqrt2();
        let m1 = PhasedOperator::from_int_rows(1, r, &[&[1, 1], &[1, -1]]).unwrap();
        assert!(m1.mul(&m1).is_identity());
        let m2 = m1.mul(&m_t()).mul(&m1);
        let g1 = operator_group(&[m1, m2]).unwrap();
        assert_eq!(g1.order(), 192);
        let scalars: Vec<_> = g1.elements().filter_map(|m| m.as_scalar()).collect();
        assert_eq!(scalars.len(), 8);
    }
}
