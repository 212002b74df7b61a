use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::exact::integer_rank;
use crate::f2sym::MAX_RANK;

use super::cyclo::CycloDyadic;
use super::HeisenbergError;

/// A `2^k × 2^k` matrix over `Z[ζ8, 1/2]`, stored row-major.
///
/// The basis vector `δ_a` has index `Σ a_i 2^{k-i}`, i.e. the packed `x` word
/// of [`crate::f2sym::SympVector`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PhasedOperator {
    k: u8,
    entries: Vec<CycloDyadic>,
}

fn check_k(k: u8) -> Result<(), HeisenbergError> {
    if (1..=MAX_RANK).contains(&k) {
        Ok(())
    } else {
        Err(crate::f2sym::F2Error::InvalidRank(k).into())
    }
}

impl PhasedOperator {
    pub fn zero(k: u8) -> Result<Self, HeisenbergError> {
        check_k(k)?;
        let n = 1usize << k;
        Ok(Self {
            k,
            entries: vec![CycloDyadic::ZERO; n * n],
        })
    }

    pub fn identity(k: u8) -> Result<Self, HeisenbergError> {
        Self::scalar(k, CycloDyadic::ONE)
    }

    pub fn scalar(k: u8, c: CycloDyadic) -> Result<Self, HeisenbergError> {
        let mut m = Self::zero(k)?;
        for i in 0..m.dim() {
            m.set(i, i, c);
        }
        Ok(m)
    }

    pub fn from_rows(k: u8, rows: Vec<Vec<CycloDyadic>>) -> Result<Self, HeisenbergError> {
        check_k(k)?;
        let n = 1usize << k;
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(HeisenbergError::Shape {
                expected: n,
                found: rows.len(),
            });
        }
        Ok(Self {
            k,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from integer entries times a common scalar.
    pub fn from_int_rows(
        k: u8,
        scale: CycloDyadic,
        rows: &[&[i64]],
    ) -> Result<Self, HeisenbergError> {
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| scale * CycloDyadic::from_int(x))
                    .collect()
            })
            .collect();
        Self::from_rows(k, rows)
    }

    pub fn rank(&self) -> u8 {
        self.k
    }

    pub fn dim(&self) -> usize {
        1 << self.k
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> CycloDyadic {
        self.entries[r * self.dim() + c]
    }

    pub(crate) fn set(&mut self, r: usize, c: usize, v: CycloDyadic) {
        let n = self.dim();
        self.entries[r * n + c] = v;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[CycloDyadic]> + '_ {
        self.entries.chunks(self.dim())
    }

    fn same_rank(&self, other: &Self) {
        assert_eq!(self.k, other.k, "operator rank mismatch");
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.same_rank(rhs);
        let n = self.dim();
        let mut out = vec![CycloDyadic::ZERO; n * n];
        for r in 0..n {
            for t in 0..n {
                let a = self.entries[r * n + t];
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = rhs.entries[t * n + c];
                    if !b.is_zero() {
                        out[r * n + c] += a * b;
                    }
                }
            }
        }
        Self {
            k: self.k,
            entries: out,
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.same_rank(rhs);
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(&a, &b)| a + b)
            .collect();
        Self { k: self.k, entries }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(CycloDyadic::from_int(-1)))
    }

    pub fn scale(&self, c: CycloDyadic) -> Self {
        Self {
            k: self.k,
            entries: self.entries.iter().map(|&a| c * a).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim();
        let mut out = self.clone();
        for r in 0..n {
            for c in 0..n {
                out.entries[c * n + r] = self.entries[r * n + c];
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut t = self.transpose();
        for e in &mut t.entries {
            *e = e.conj();
        }
        t
    }

    pub fn pow(&self, e: u32) -> Self {
        let id = Self::identity(self.k).expect("rank already validated");
        (0..e).fold(id, |acc, _| acc.mul(self))
    }

    pub fn is_identity(&self) -> bool {
        self.as_scalar() == Some(CycloDyadic::ONE)
    }

    /// `Some(c)` when the operator is `c·I`.
    pub fn as_scalar(&self) -> Option<CycloDyadic> {
        let n = self.dim();
        let c = self.get(0, 0);
        let ok = (0..n).all(|r| {
            (0..n).all(|col| self.get(r, col) == if r == col { c } else { CycloDyadic::ZERO })
        });
        ok.then_some(c)
    }

    /// Exactly one nonzero entry in every row and column.
    pub fn is_monomial(&self) -> bool {
        let n = self.dim();
        let rows_ok = self
            .rows()
            .all(|r| r.iter().filter(|e| !e.is_zero()).count() == 1);
        let cols_ok = (0..n).all(|c| (0..n).filter(|&r| !self.get(r, c).is_zero()).count() == 1);
        rows_ok && cols_ok
    }

    /// Invertibility over `Q(ζ8)`, decided by the rank of the `4n × 4n`
    /// rational regular representation.
    pub fn is_invertible(&self) -> bool {
        let n = self.dim();
        let exp = self.entries.iter().map(|e| e.exponent()).max().unwrap_or(0);
        let zeta: Vec<CycloDyadic> = (0..4).map(CycloDyadic::zeta_pow).collect();
        let mut big = vec![vec![BigInt::from(0); 4 * n]; 4 * n];
        for r in 0..n {
            for c in 0..n {
                let a = self.get(r, c);
                if a.is_zero() {
                    continue;
                }
                // column t of the block holds the coordinates of a·ζ^t
                for (t, z) in zeta.iter().enumerate() {
                    let p = a * *z;
                    let scale = exp - p.exponent();
                    for (s, num) in p.numerators().iter().enumerate() {
                        big[4 * r + s][4 * c + t] = BigInt::from(*num) << scale;
                    }
                }
            }
        }
        integer_rank(big) == 4 * n
    }

    /// `λ` with `self = λ·other`, if one exists and is a unit.
    pub fn scalar_ratio(&self, other: &Self) -> Option<CycloDyadic> {
        self.same_rank(other);
        let idx = other.entries.iter().position(|e| !e.is_zero())?;
        let lambda = self.entries[idx] * other.entries[idx].inverse()?;
        (other.scale(lambda) == *self).then_some(lambda)
    }

    /// Representative of the class modulo nonzero scalars: the operator
    /// divided by its first nonzero entry (row-major).
    pub fn projective_canonical(&self) -> Option<Self> {
        let first = self.entries.iter().find(|e| !e.is_zero())?;
        Some(self.scale(first.inverse()?))
    }

    /// A common scalar `c` and a matrix whose entries are `0` or eighth roots
    /// of unity with `self = c·matrix`, if such a factorization exists.
    pub fn factor_phases(&self) -> Option<(CycloDyadic, Vec<Vec<Option<u8>>>)> {
        let c = *self.entries.iter().find(|e| !e.is_zero())?;
        let inv = c.inverse()?;
        let mut rows = Vec::with_capacity(self.dim());
        for r in self.rows() {
            let mut row = Vec::with_capacity(r.len());
            for e in r {
                if e.is_zero() {
                    row.push(None);
                } else {
                    row.push(Some((*e * inv).root_of_unity_exponent()?));
                }
            }
            rows.push(row);
        }
        Some((c, rows))
    }
}

fn phase_text(j: u8) -> &'static str {
    ["1", "ζ", "i", "ζ³", "-1", "-ζ", "-i", "-ζ³"][j as usize]
}

/// Factored as `c·[[...]]` when all nonzero entries share a modulus up to
/// eighth roots of unity, otherwise entry by entry.
impl fmt::Display for PhasedOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((c, rows)) = self.factor_phases() {
            let body: Vec<String> = rows
                .iter()
                .map(|r| {
                    let cells: Vec<&str> = r.iter().map(|e| e.map_or("0", phase_text)).collect();
                    format!("[{}]", cells.join(", "))
                })
                .collect();
            if c == CycloDyadic::ONE {
                return write!(f, "[{}]", body.join(", "));
            }
            return write!(f, "({c})·[{}]", body.join(", "));
        }
        let body: Vec<String> = self
            .rows()
            .map(|r| {
                format!(
                    "[{}]",
                    r.iter()
                        .map(|e| e.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                )
            })
            .collect();
        write!(f, "[{}]", body.join(", "))
    }
}

impl fmt::Debug for PhasedOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PhasedOperator(k={}, {self})", self.k)
    }
}

#[derive(Serialize, Deserialize)]
struct OperatorJson {
    k: u8,
    entries: Vec<Vec<CycloDyadic>>,
}

impl Serialize for PhasedOperator {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        OperatorJson {
            k: self.k,
            entries: self.rows().map(<[_]>::to_vec).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PhasedOperator {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = OperatorJson::deserialize(d)?;
        Self::from_rows(j.k, j.entries).map_err(serde::de::Error::custom)
    }
}
