//! Exact integer linear algebra shared by the rank and determinant checks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Rank over `Q` of an integer matrix, by fraction-free elimination with
/// per-row content removal.
pub fn integer_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot_row = rows[rank].clone();
        let pivot = pivot_row[col].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = &*x * &pivot - &factor * p;
            }
            let content = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            if !content.is_zero() && !content.is_one() {
                for x in row.iter_mut() {
                    *x /= &content;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant of a square integer matrix (Bareiss).
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::strategy::Strategy;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    /// Cofactor expansion oracle.
    fn det_oracle(a: &[Vec<i64>]) -> i64 {
        if a.is_empty() {
            return 1;
        }
        (0..a.len())
            .map(|j| {
                let minor: Vec<Vec<i64>> = a[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * a[0][j] * det_oracle(&minor)
            })
            .sum()
    }

    #[test]
    fn ranks() {
        assert_eq!(integer_rank(m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(integer_rank(m(&[&[0, 1, 0], &[0, 0, 0], &[3, 0, 1]])), 2);
        assert_eq!(integer_rank(m(&[&[2, 0], &[0, 3]])), 2);
        assert_eq!(integer_rank(vec![]), 0);
    }

    proptest::proptest! {
        #[test]
        fn determinants_match_cofactor_expansion(
            a in (1usize..6).prop_flat_map(|n| proptest::collection::vec(proptest::collection::vec(-3i64..=3, n), n))
        ) {
            let big: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            proptest::prop_assert_eq!(bareiss_determinant(big.clone()), BigInt::from(det_oracle(&a)));
            proptest::prop_assert_eq!(integer_rank(big) == a.len(), det_oracle(&a) != 0);
        }
    }
}
