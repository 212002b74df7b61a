use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::exact::{bareiss_determinant, integer_rank};
use crate::f2sym::{enumerate_quad_forms, Parity, QuadLabel};
use crate::heisenberg::heisenberg_operator;

use super::forms::form_polynomial;
use super::poly::{ExactPolynomial, Monomial};
use super::TensorError;

const HOPF_TERMS: [&[&str]; 4] = [
    &["0:1", "1:0"],
    &["00:10", "11:00", "10:01"],
    &["000:100", "100:000", "101:101", "110:111", "111:110"],
    &[
        "0000:1000",
        "1000:0000",
        "1001:1001",
        "1010:1011",
        "1011:1110",
        "1100:1111",
        "1101:1100",
        "1110:1101",
        "1111:1010",
    ],
];

/// A verified identity `lhs² = Σ sign·term²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HopfCertificate {
    pub k: u8,
    pub lhs: QuadLabel,
    /// Each right-hand term with its sign (always `+1` for these identities).
    pub terms: Vec<(QuadLabel, i8)>,
}

/// Expands `Q[0:0]² - Σ Q[w_i]²` for the sum-of-squares identity at rank `k`
/// and returns the certificate when it vanishes exactly.
pub fn hopf_relation(k: u8) -> Result<HopfCertificate, TensorError> {
    let labels = HOPF_TERMS
        .get((k as usize).wrapping_sub(1))
        .ok_or(crate::f2sym::F2Error::InvalidRank(k))?;
    let lhs = QuadLabel::new(crate::f2sym::SympVector::zero(k)?);
    let terms: Vec<(QuadLabel, i8)> = labels
        .iter()
        .map(|s| format!("Q[{s}]").parse::<QuadLabel>().map(|q| (q, 1)))
        .collect::<Result<_, _>>()?;
    let mut diff = form_polynomial(lhs).pow(2);
    for (q, _) in &terms {
        diff = &diff - &form_polynomial(*q).pow(2);
    }
    if !diff.is_zero() {
        return Err(TensorError::IdentityFails(format!(
            "rank {k} sum of squares leaves {} terms",
            diff.num_terms()
        )));
    }
    Ok(HopfCertificate { k, lhs, terms })
}

fn integer_matrix(label: QuadLabel) -> Vec<Vec<i64>> {
    let u = heisenberg_operator(label.label());
    u.rows()
        .map(|r| {
            r.iter()
                .map(|e| {
                    e.as_rational()
                        .filter(|d| d.exponent() == 0)
                        .expect("Heisenberg matrices are integral")
                        .numerator()
                })
                .collect()
        })
        .collect()
}

/// Pfaffian of an antisymmetric integer matrix by expansion along the first
/// row; zero entries are skipped, so monomial matrices cost `O(n)` levels.
fn pfaffian_of(m: &[Vec<i64>], idx: &[usize]) -> BigInt {
    if idx.is_empty() {
        return BigInt::from(1);
    }
    let i = idx[0];
    let mut total = BigInt::zero();
    for (pos, &j) in idx.iter().enumerate().skip(1) {
        let a = m[i][j];
        if a == 0 {
            continue;
        }
        let rest: Vec<usize> = idx.iter().copied().filter(|&t| t != i && t != j).collect();
        let sub = pfaffian_of(m, &rest);
        // sign (-1)^{pos+1} for the pair (first, pos)
        let term = sub * a;
        if pos % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Pfaffian of the antisymmetric matrix `U_w` of an odd label.
pub fn pfaffian(label: QuadLabel) -> Result<BigInt, TensorError> {
    if label.parity() != Parity::Odd {
        return Err(TensorError::WrongParity(label.to_string()));
    }
    let m = integer_matrix(label);
    let idx: Vec<usize> = (0..m.len()).collect();
    Ok(pfaffian_of(&m, &idx))
}

/// Determinant of `U_w`.
pub fn determinant(label: QuadLabel) -> BigInt {
    let m = integer_matrix(label)
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    bareiss_determinant(m)
}

fn coefficient_rank(polys: &[ExactPolynomial]) -> usize {
    let monomials: BTreeSet<&Monomial> = polys
        .iter()
        .flat_map(|p| p.terms().map(|(m, _)| m))
        .collect();
    let rows: Vec<Vec<BigInt>> = polys
        .iter()
        .map(|p| monomials.iter().map(|m| p.coefficient(m)).collect())
        .collect();
    integer_rank(rows)
}

/// Rank of the span of the given forms inside the polynomial ring.
pub fn span_dimension(polys: &[ExactPolynomial]) -> usize {
    coefficient_rank(polys)
}

/// `dim span{Q[w]² : w even}`.
pub fn span_dimension_of_squares(k: u8) -> Result<usize, TensorError> {
    if !(1..=3).contains(&k) {
        return Err(crate::f2sym::F2Error::InvalidRank(k).into());
    }
    let squares: Vec<ExactPolynomial> = enumerate_quad_forms(k, Parity::Even)?
        .into_iter()
        .map(|(q, _)| form_polynomial(q).pow(2))
        .collect();
    Ok(coefficient_rank(&squares))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2sym::SympVector;

    fn q(s: &str) -> QuadLabel {
        s.parse().unwrap()
    }

    #[test]
    fn hopf_identities_hold() {
        for k in 1..=4 {
            let cert = hopf_relation(k).unwrap();
            assert_eq!(cert.terms.len(), [2, 3, 5, 9][k as usize - 1]);
            assert!(cert.terms.iter().all(|(l, _)| l.parity() == Parity::Even));
        }
        assert!(hopf_relation(5).is_err());
        assert!(hopf_relation(0).is_err());
    }

    #[test]
    fn second_k2_identity() {
        let sq = |s: &str| form_polynomial(q(s)).pow(2);
        let rhs = &(&sq("Q[00:01]") + &sq("Q[01:00]")) + &sq("Q[11:11]");
        assert_eq!(sq("Q[00:00]"), rhs);
    }

    #[test]
    fn perturbed_identity_fails() {
        let sq = |s: &str| form_polynomial(q(s)).pow(2);
        let rhs = &(&sq("Q[00:10]") + &sq("Q[11:00]")) + &sq("Q[11:11]");
        assert_ne!(sq("Q[00:00]"), rhs);
    }

    #[test]
    fn pfaffians() {
        assert_eq!(pfaffian(q("A[1:1]")).unwrap(), BigInt::from(1));
        assert!(matches!(
            pfaffian(q("Q[0:0]")),
            Err(TensorError::WrongParity(_))
        ));
        for k in 1..=3 {
            for w in SympVector::all(k).unwrap() {
                let label = QuadLabel::new(w);
                if label.parity() == Parity::Odd {
                    let pf = pfaffian(label).unwrap();
                    assert!(!pf.is_zero(), "{label}");
                    assert_eq!(&pf * &pf, determinant(label), "{label}");
                }
            }
        }
    }

    #[test]
    fn pfaffian_of_generic_matrix() {
        // Pf of a 4×4 antisymmetric matrix is af - be + cd
        let (a, b, c, d, e, f) = (2, 3, 5, 7, 11, 13);
        let m = vec![
            vec![0, a, b, c],
            vec![-a, 0, d, e],
            vec![-b, -d, 0, f],
            vec![-c, -e, -f, 0],
        ];
        assert_eq!(
            pfaffian_of(&m, &[0, 1, 2, 3]),
            BigInt::from(a * f - b * e + c * d)
        );
    }

    #[test]
    fn squares_span() {
        assert_eq!(span_dimension_of_squares(1).unwrap(), 2);
        assert_eq!(span_dimension_of_squares(2).unwrap(), 5);
        assert_eq!(span_dimension_of_squares(3).unwrap(), 15);
        for k in 1..=3u32 {
            assert_eq!(
                span_dimension_of_squares(k as u8).unwrap(),
                ((1 << k) + 1) * ((1 << (k - 1)) + 1) / 3
            );
        }
    }

    #[test]
    fn decomposition_is_complete() {
        for k in 1..=3u8 {
            let even: Vec<_> = enumerate_quad_forms(k, Parity::Even)
                .unwrap()
                .into_iter()
                .map(|(l, _)| form_polynomial(l))
                .collect();
            let odd: Vec<_> = enumerate_quad_forms(k, Parity::Odd)
                .unwrap()
                .into_iter()
                .map(|(l, _)| form_polynomial(l))
                .collect();
            let n = 1usize << k;
            assert_eq!(even.len(), n / 2 * (n + 1));
            assert_eq!(odd.len(), n / 2 * (n - 1));
            assert_eq!(even.len() + odd.len(), n * n);
            assert_eq!(span_dimension(&even), even.len());
            assert_eq!(span_dimension(&odd), odd.len());
        }
    }
}
