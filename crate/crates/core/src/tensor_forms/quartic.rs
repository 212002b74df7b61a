use num_bigint::BigInt;
use serde::Serialize;

use crate::f2sym::{enumerate_quad_forms, GroupCatalog, Parity, QuadLabel, SympVector};
use crate::heisenberg::{normalizer_image, CycloDyadic, PhasedOperator};

use super::forms::{form_polynomial, substitution_images, transform_label, FormAction};
use super::poly::{ExactPolynomial, Polynomial};
use super::TensorError;

/// Outcome of the quartic invariance check for one generator set.
#[derive(Clone, Debug, Serialize)]
pub struct QuarticReport {
    pub k: u8,
    /// For each generator, its action on the even labels.
    pub permutations: Vec<Vec<FormAction>>,
    /// Every generator maps each `Q⁴` exactly onto another `Q⁴`.
    pub fourth_powers_permuted: bool,
    /// `Σ Q⁴` is fixed exactly by every generator.
    pub sum_invariant: bool,
    /// At `k = 1`: `2(X⁸ + 14X⁴Y⁴ + Y⁸) = Q[0:0]⁴ + Q[1:0]⁴ + Q[0:1]⁴`.
    pub weight_enumerator: Option<bool>,
}

impl QuarticReport {
    pub fn passed(&self) -> bool {
        self.fourth_powers_permuted && self.sum_invariant && self.weight_enumerator.unwrap_or(true)
    }
}

fn labels(k: u8, parity: Parity) -> Result<Vec<QuadLabel>, TensorError> {
    Ok(enumerate_quad_forms(k, parity)?
        .into_iter()
        .map(|(q, _)| q)
        .collect())
}

/// `2 W_{H8}` in the variables `X_0 = X`, `X_1 = Y`.
pub fn hamming_weight_enumerator_doubled() -> ExactPolynomial {
    let x = ExactPolynomial::x(1, 0);
    let y = ExactPolynomial::x(1, 1);
    let mid = (&x.pow(4) * &y.pow(4)).scale(&BigInt::from(14));
    (&(&x.pow(8) + &mid) + &y.pow(8)).scale(&BigInt::from(2))
}

/// Checks that each generator permutes the `Q⁴` and fixes their sum.
///
/// Label images come from `M U_w ᵗM = i^l U_{w'}`; each one is then confirmed
/// by exact substitution into the polynomials before raising to the fourth
/// power.
pub fn quartic_invariance_check(
    generators: &[PhasedOperator],
    k: u8,
) -> Result<QuarticReport, TensorError> {
    let even = labels(k, Parity::Even)?;
    let quartics: Vec<Polynomial<CycloDyadic>> = even
        .iter()
        .map(|&q| form_polynomial(q).to_cyclo().pow(4))
        .collect();
    let sum = quartics.iter().fold(Polynomial::zero(k), |acc, p| &acc + p);
    let mut permutations = Vec::with_capacity(generators.len());
    let mut permuted = true;
    let mut invariant = true;
    for m in generators {
        if m.rank() != k {
            return Err(crate::f2sym::F2Error::RankMismatch(k, m.rank()).into());
        }
        normalizer_image(m)?;
        let images = substitution_images(m);
        let mut actions = Vec::with_capacity(even.len());
        for (&q, _) in even.iter().zip(&quartics) {
            let act = transform_label(m, q)?;
            let moved = form_polynomial(q).to_cyclo().substitute(&images).pow(4);
            let target = &quartics[even
                .iter()
                .position(|&e| e == act.output)
                .expect("parity is preserved")];
            permuted &= moved == *target;
            actions.push(act);
        }
        invariant &= sum.substitute(&images) == sum;
        permutations.push(actions);
    }
    let weight_enumerator = (k == 1).then(|| {
        let rhs = ["Q[0:0]", "Q[1:0]", "Q[0:1]"]
            .iter()
            .map(|s| form_polynomial(s.parse().expect("valid label")).pow(4))
            .fold(ExactPolynomial::zero(1), |acc, p| &acc + &p);
        rhs == hamming_weight_enumerator_doubled()
    });
    Ok(QuarticReport {
        k,
        permutations,
        fourth_powers_permuted: permuted,
        sum_invariant: invariant,
        weight_enumerator,
    })
}

/// The permutation each generator induces on the labels of one parity, as
/// index lists into [`enumerate_quad_forms`] order.
pub fn label_permutations(
    generators: &[PhasedOperator],
    parity: Parity,
) -> Result<Vec<Vec<u8>>, TensorError> {
    let k = generators
        .first()
        .ok_or(crate::heisenberg::HeisenbergError::EmptyGeneratorSet)?
        .rank();
    let ls = labels(k, parity)?;
    generators
        .iter()
        .map(|m| {
            ls.iter()
                .map(|&q| {
                    let out = transform_label(m, q)?.output;
                    Ok(ls
                        .iter()
                        .position(|&e| e == out)
                        .expect("parity is preserved") as u8)
                })
                .collect()
        })
        .collect()
}

/// The permutation group generated by index lists.
pub fn permutation_group(perms: &[Vec<u8>]) -> GroupCatalog<Vec<u8>> {
    let n = perms.first().map_or(0, Vec::len);
    let id: Vec<u8> = (0..n as u8).collect();
    let gens = perms.to_vec();
    GroupCatalog::from_action(id, gens.clone(), |i, g| {
        g.iter().map(|&x| gens[i][x as usize]).collect()
    })
}

/// Lifts `M_v` of the given labels.
pub fn lifts(labels: &[&str]) -> Result<Vec<PhasedOperator>, TensorError> {
    labels
        .iter()
        .map(|s| {
            Ok(crate::heisenberg::lift_transvection(
                s.parse::<SympVector>()?,
            ))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2sym::{generate_group, transvection_matrix};

    fn k1_generators() -> Vec<PhasedOperator> {
        let h = CycloDyadic::one_minus_i_half();
        let i = CycloDyadic::I;
        let ms = PhasedOperator::from_int_rows(1, h, &[&[1, 1], &[1, -1]]).unwrap();
        let mt = PhasedOperator::from_rows(1, vec![vec![h, h * i], vec![h * i, h]]).unwrap();
        vec![ms, mt]
    }

    const A5_CHAIN: [&str; 5] = ["00:10", "10:10", "01:11", "00:01", "01:01"];

    #[test]
    fn k1_invariance_and_weight_enumerator() {
        let report = quartic_invariance_check(&k1_generators(), 1).unwrap();
        assert!(report.passed());
        assert_eq!(report.weight_enumerator, Some(true));
    }

    #[test]
    fn identity_is_trivial() {
        let id = PhasedOperator::identity(2).unwrap();
        let report = quartic_invariance_check(&[id], 2).unwrap();
        assert!(report.passed());
        assert!(report.permutations[0]
            .iter()
            .all(|a| a.input == a.output && a.l == 0));
    }

    #[test]
    fn k2_invariance() {
        let report = quartic_invariance_check(&lifts(&A5_CHAIN).unwrap(), 2).unwrap();
        assert!(report.passed());
        assert_eq!(report.weight_enumerator, None);
    }

    #[test]
    fn odd_forms_carry_s6() {
        let gens = lifts(&A5_CHAIN).unwrap();
        let perms = label_permutations(&gens, Parity::Odd).unwrap();
        assert_eq!(perms[0].len(), 6);
        // each transvection acts as a transposition
        for p in &perms {
            assert_eq!(
                p.iter().enumerate().filter(|(i, &x)| *i as u8 != x).count(),
                2
            );
        }
        assert_eq!(permutation_group(&perms).order(), 720);
        let sp: Vec<_> = A5_CHAIN
            .iter()
            .map(|s| transvection_matrix(s.parse().unwrap()))
            .collect();
        assert_eq!(generate_group(&sp).unwrap().order(), 720);
    }

    #[test]
    fn odd_fourth_powers_are_permuted_k2() {
        let gens = lifts(&A5_CHAIN).unwrap();
        let odd = labels(2, Parity::Odd).unwrap();
        for m in &gens {
            let images = substitution_images(m);
            for &q in &odd {
                let out = transform_label(m, q).unwrap().output;
                let moved = form_polynomial(q).to_cyclo().substitute(&images).pow(4);
                assert_eq!(moved, form_polynomial(out).to_cyclo().pow(4));
            }
        }
    }

    #[test]
    fn non_normalizer_generator_is_rejected() {
        let bad = PhasedOperator::from_int_rows(1, CycloDyadic::ONE, &[&[1, 0], &[0, 2]]).unwrap();
        assert!(quartic_invariance_check(&[bad], 1).is_err());
    }
}
