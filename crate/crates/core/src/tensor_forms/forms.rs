use num_bigint::BigInt;
use serde::Serialize;

use crate::f2sym::{Parity, QuadLabel, SympVector};
use crate::heisenberg::{heisenberg_operator, lift_transvection, CycloDyadic, PhasedOperator};

use super::poly::{ExactPolynomial, Polynomial};
use super::TensorError;

/// `Q[ε,ε'] = Σ_σ (-1)^{ε'(σ)} X_σ X_{σ+ε}` for even labels and
/// `A[ε,ε'] = Σ_σ (-1)^{ε'(σ)} X_σ Y_{σ+ε}` for odd ones, with `w = (ε, ε')`.
pub fn form_polynomial(label: QuadLabel) -> ExactPolynomial {
    let w = label.label();
    let k = w.rank();
    let (eps, eps_dual) = (w.x(), w.xstar());
    let mut p = ExactPolynomial::zero(k);
    for sigma in 0..(1u8 << k) {
        let sign = if (eps_dual & sigma).count_ones() % 2 == 1 {
            -1
        } else {
            1
        };
        let partner = sigma ^ eps;
        let term = match label.parity() {
            Parity::Even => &ExactPolynomial::x(k, sigma) * &ExactPolynomial::x(k, partner),
            Parity::Odd => &ExactPolynomial::x(k, sigma) * &ExactPolynomial::y(k, partner),
        };
        p = &p + &term.scale(&BigInt::from(sign));
    }
    p
}

/// [`form_polynomial`] with an explicitly requested kind; asking for `Q` on an
/// odd label or `A` on an even one is an error since that form vanishes.
pub fn form_polynomial_as(w: SympVector, parity: Parity) -> Result<ExactPolynomial, TensorError> {
    let label =
        QuadLabel::with_parity(w, parity).map_err(|_| TensorError::WrongParity(w.to_string()))?;
    Ok(form_polynomial(label))
}

/// `ᵗX B X` (even) or `ᵗX B Y` (odd) for an arbitrary operator `B`.
pub fn bilinear_form(b: &PhasedOperator, parity: Parity) -> Polynomial<CycloDyadic> {
    let k = b.rank();
    let n = b.dim();
    let mut p = Polynomial::zero(k);
    for r in 0..n {
        for c in 0..n {
            let e = b.get(r, c);
            if e.is_zero() {
                continue;
            }
            let right = match parity {
                Parity::Even => c as u16,
                Parity::Odd => (n + c) as u16,
            };
            p = &p + &Polynomial::monomial(k, vec![r as u16, right], e);
        }
    }
    p
}

/// `(-1)^{x*(ε) + ε'(x)} = (-1)^{E(u, w)}`, the eigenvalue of `U_u` on the form.
pub fn heisenberg_eigenvalue(u: SympVector, label: QuadLabel) -> Result<i8, TensorError> {
    let w = label.label();
    if u.rank() != w.rank() {
        return Err(crate::f2sym::F2Error::RankMismatch(u.rank(), w.rank()).into());
    }
    Ok(if u.pairing(w) == 1 { -1 } else { 1 })
}

/// The effect of an operator on a form label: `M U_w ᵗM = i^l U_{w'}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FormAction {
    pub input: QuadLabel,
    pub output: QuadLabel,
    /// Exponent of `i`, mod 4.
    pub l: u8,
}

/// Linear substitution `X_σ ↦ Σ_τ M[τ][σ] X_τ` (and likewise `Y`), which maps
/// the form with matrix `B` to the form with matrix `M B ᵗM`.
pub fn substitution_images(m: &PhasedOperator) -> Vec<Polynomial<CycloDyadic>> {
    let k = m.rank();
    let n = m.dim();
    let mut images = Vec::with_capacity(2 * n);
    for offset in [0, n] {
        for sigma in 0..n {
            let mut p = Polynomial::zero(k);
            for tau in 0..n {
                let e = m.get(tau, sigma);
                if !e.is_zero() {
                    p = &p + &Polynomial::monomial(k, vec![(offset + tau) as u16], e);
                }
            }
            images.push(p);
        }
    }
    images
}

/// Solves `M U_w ᵗM = i^l U_{w'}` for `w'` and `l`.
pub fn transform_label(m: &PhasedOperator, label: QuadLabel) -> Result<FormAction, TensorError> {
    let w = label.label();
    let p = m.mul(&heisenberg_operator(w)).mul(&m.transpose());
    for w2 in SympVector::all(w.rank())? {
        if let Some(ratio) = p.scalar_ratio(&heisenberg_operator(w2)) {
            let l = ratio
                .i_exponent()
                .ok_or_else(|| TensorError::NotInNormalizer(format!("phase {ratio}")))?;
            return Ok(FormAction {
                input: label,
                output: QuadLabel::new(w2),
                l,
            });
        }
    }
    Err(TensorError::NotInNormalizer(format!("image of {label}")))
}

/// The action of the lift `M_v` on the form labelled `label`.
pub fn act_on_form(v: SympVector, label: QuadLabel) -> Result<FormAction, TensorError> {
    if v.rank() != label.rank() {
        return Err(crate::f2sym::F2Error::RankMismatch(v.rank(), label.rank()).into());
    }
    transform_label(&lift_transvection(v), label)
}
