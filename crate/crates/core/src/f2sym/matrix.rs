use std::fmt;

use super::vector::{check_rank, SympVector};
use super::F2Error;

/// A `2k × 2k` matrix over F2 acting on column vectors `(x; x*)`.
///
/// Row `i` is stored with the same bit layout as a [`SympVector`], so entry
/// `(i, j)` sits at bit `2k - 1 - j` of `rows[i]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SympMatrix {
    k: u8,
    rows: [u8; 8],
}

impl SympMatrix {
    pub fn identity(k: u8) -> Result<Self, F2Error> {
        check_rank(k)?;
        let n = 2 * k as usize;
        let mut rows = [0u8; 8];
        for (i, r) in rows.iter_mut().enumerate().take(n) {
            *r = 1 << (n - 1 - i);
        }
        Ok(Self { k, rows })
    }

    /// Builds a matrix from `2k` row words (each a packed `2k`-bit word).
    pub fn from_rows(k: u8, rows: &[u8]) -> Result<Self, F2Error> {
        check_rank(k)?;
        let n = 2 * k as usize;
        if rows.len() != n {
            return Err(F2Error::Shape {
                expected: n,
                found: rows.len(),
            });
        }
        let mut out = [0u8; 8];
        for (o, &r) in out.iter_mut().zip(rows) {
            SympVector::from_bits(k, r)?;
            *o = r;
        }
        Ok(Self { k, rows: out })
    }

    /// Builds the matrix whose `j`-th column is `cols[j]`, i.e. the linear map
    /// sending the `j`-th basis vector to `cols[j]`.
    pub fn from_columns(cols: &[SympVector]) -> Result<Self, F2Error> {
        let first = cols.first().ok_or(F2Error::Shape {
            expected: 2,
            found: 0,
        })?;
        let k = first.rank();
        let n = 2 * k as usize;
        if cols.len() != n {
            return Err(F2Error::Shape {
                expected: n,
                found: cols.len(),
            });
        }
        let mut rows = [0u8; 8];
        for (j, c) in cols.iter().enumerate() {
            first.same_rank(*c)?;
            for (i, r) in rows.iter_mut().enumerate().take(n) {
                *r |= c.coord(i) << (n - 1 - j);
            }
        }
        Ok(Self { k, rows })
    }

    /// Block-diagonal matrix `(a 0; 0 b)` from two `k × k` blocks given as
    /// row words with coordinate 1 most significant.
    pub fn block_diagonal(k: u8, a: &[u8], b: &[u8]) -> Result<Self, F2Error> {
        check_rank(k)?;
        let kk = k as usize;
        if a.len() != kk || b.len() != kk {
            return Err(F2Error::Shape {
                expected: kk,
                found: a.len().min(b.len()),
            });
        }
        let mut rows = Vec::with_capacity(2 * kk);
        rows.extend(a.iter().map(|r| r << k));
        rows.extend_from_slice(b);
        Self::from_rows(k, &rows)
    }

    pub fn rank(&self) -> u8 {
        self.k
    }

    fn dim(&self) -> usize {
        2 * self.k as usize
    }

    pub fn row(&self, i: usize) -> u8 {
        self.rows[i]
    }

    pub fn rows(&self) -> &[u8] {
        &self.rows[..self.dim()]
    }

    pub fn entry(&self, i: usize, j: usize) -> u8 {
        (self.rows[i] >> (self.dim() - 1 - j)) & 1
    }

    pub fn column(&self, j: usize) -> SympVector {
        let n = self.dim();
        let mut bits = 0u8;
        for i in 0..n {
            bits |= self.entry(i, j) << (n - 1 - i);
        }
        SympVector::from_bits_unchecked(self.k, bits)
    }

    #[inline]
    pub fn apply(&self, v: SympVector) -> SympVector {
        assert_eq!(self.k, v.rank(), "rank mismatch in matrix application");
        let n = self.dim();
        let mut bits = 0u8;
        for i in 0..n {
            bits |= ((self.rows[i] & v.bits()).count_ones() as u8 & 1) << (n - 1 - i);
        }
        SympVector::from_bits_unchecked(self.k, bits)
    }

    /// Matrix product `self · rhs` (apply `rhs` first).
    #[inline]
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.k, rhs.k, "rank mismatch in matrix product");
        let n = self.dim();
        let mut rows = [0u8; 8];
        for (i, out) in rows.iter_mut().enumerate().take(n) {
            let r = self.rows[i];
            let mut acc = 0u8;
            for j in 0..n {
                if (r >> (n - 1 - j)) & 1 == 1 {
                    acc ^= rhs.rows[j];
                }
            }
            *out = acc;
        }
        Self { k: self.k, rows }
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim();
        let mut rows = [0u8; 8];
        for (i, r) in rows.iter_mut().enumerate().take(n) {
            *r = self.column(i).bits();
        }
        Self { k: self.k, rows }
    }

    /// Row-bit concatenation, the canonical encoding used for hashing and
    /// golden output.
    pub fn encode(&self) -> u64 {
        self.rows().iter().fold(0u64, |acc, &r| acc << 8 | r as u64)
    }

    /// Rank over F2 by Gaussian elimination.
    pub fn f2_rank(&self) -> usize {
        let mut rows: Vec<u8> = self.rows().to_vec();
        let mut rank = 0;
        for bit in (0..self.dim()).rev() {
            let Some(p) = (rank..rows.len()).find(|&r| (rows[r] >> bit) & 1 == 1) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot = rows[rank];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && (*row >> bit) & 1 == 1 {
                    *row ^= pivot;
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn is_invertible(&self) -> bool {
        self.f2_rank() == self.dim()
    }

    pub fn inverse(&self) -> Result<Self, F2Error> {
        let n = self.dim();
        // augmented rows: high byte = matrix row, low byte = identity row
        let mut rows: Vec<u16> = (0..n)
            .map(|i| (self.rows[i] as u16) << 8 | 1u16 << (n - 1 - i))
            .collect();
        for col in 0..n {
            let bit = 8 + n - 1 - col;
            let p = (col..n)
                .find(|&r| (rows[r] >> bit) & 1 == 1)
                .ok_or(F2Error::Singular)?;
            rows.swap(col, p);
            let pivot = rows[col];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != col && (*row >> bit) & 1 == 1 {
                    *row ^= pivot;
                }
            }
        }
        let inv: Vec<u8> = rows.iter().map(|r| (r & 0xff) as u8).collect();
        Self::from_rows(self.k, &inv)
    }

    /// Checks `E(Me_i, Me_j) = E(e_i, e_j)` on all basis pairs.
    pub fn is_symplectic(&self) -> bool {
        let n = self.dim();
        let basis: Vec<SympVector> = (0..n)
            .map(|i| SympVector::basis(self.k, i).expect("basis index in range"))
            .collect();
        let images: Vec<SympVector> = (0..n).map(|j| self.column(j)).collect();
        (0..n).all(|i| (0..n).all(|j| images[i].pairing(images[j]) == basis[i].pairing(basis[j])))
    }

    pub fn is_identity(&self) -> bool {
        Self::identity(self.k)
            .map(|id| id == *self)
            .unwrap_or(false)
    }
}

/// The matrix of the transvection `t_v`; `v = 0` gives the identity.
pub fn transvection_matrix(v: SympVector) -> SympMatrix {
    let k = v.rank();
    let cols: Vec<SympVector> = (0..2 * k as usize)
        .map(|j| v.transvect(SympVector::basis(k, j).expect("basis index in range")))
        .collect();
    SympMatrix::from_columns(&cols).expect("columns have consistent rank")
}

impl fmt::Display for SympMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        for i in 0..n {
            if i > 0 {
                f.write_str("\n")?;
            }
            for j in 0..n {
                if j == self.k as usize {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SympMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.dim())
            .map(|i| {
                (0..self.dim())
                    .map(|j| char::from(b'0' + self.entry(i, j)))
                    .collect()
            })
            .collect();
        write!(f, "SympMatrix[{}]", rows.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> SympVector {
        s.parse().unwrap()
    }

    #[test]
    fn zero_vector_gives_identity() {
        for k in 1..=4 {
            assert!(transvection_matrix(SympVector::zero(k).unwrap()).is_identity());
        }
    }

    #[test]
    fn rank_one_transvection_is_t() {
        let t = transvection_matrix(v("1:0"));
        assert_eq!(t, SympMatrix::from_rows(1, &[0b11, 0b01]).unwrap());
    }

    #[test]
    fn all_rank_three_transvections_symplectic_involutions() {
        for a in SympVector::nonzero(3).unwrap() {
            let m = transvection_matrix(a);
            assert!(m.is_symplectic());
            assert!(!m.is_identity());
            assert!(m.mul(&m).is_identity());
            // brute-force E-preservation on all vector pairs
            for x in SympVector::all(3).unwrap() {
                assert_eq!(m.apply(x), a.transvect(x));
                for y in SympVector::all(3).unwrap() {
                    assert_eq!(m.apply(x).pairing(m.apply(y)), x.pairing(y));
                }
            }
        }
    }

    #[test]
    fn coxeter_relations_exhaustive() {
        for k in 1..=3 {
            for a in SympVector::nonzero(k).unwrap() {
                let ta = transvection_matrix(a);
                for b in SympVector::nonzero(k).unwrap() {
                    let tb = transvection_matrix(b);
                    let p = ta.mul(&tb);
                    if a.pairing(b) == 0 {
                        assert!(p.mul(&p).is_identity());
                    } else {
                        assert!(p.mul(&p).mul(&p).is_identity());
                        assert_eq!(ta.mul(&tb).mul(&ta), transvection_matrix(a + b));
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_and_singular() {
        let m = transvection_matrix(v("10:11")).mul(&transvection_matrix(v("01:10")));
        assert!(m.mul(&m.inverse().unwrap()).is_identity());
        let z = SympMatrix::from_rows(1, &[0b11, 0b11]).unwrap();
        assert!(!z.is_invertible());
        assert_eq!(z.inverse(), Err(F2Error::Singular));
    }

    #[test]
    fn columns_and_rows_agree() {
        let m = transvection_matrix(v("101:011"));
        let cols: Vec<_> = (0..6).map(|j| m.column(j)).collect();
        assert_eq!(SympMatrix::from_columns(&cols).unwrap(), m);
        assert_eq!(m.transpose().transpose(), m);
    }

    #[test]
    fn block_diagonal_layout() {
        let m =
            SympMatrix::block_diagonal(3, &[0b100, 0b010, 0b011], &[0b100, 0b011, 0b001]).unwrap();
        assert_eq!(m.apply(v("001:000")), v("001:000"));
        assert_eq!(m.apply(v("010:000")), v("011:000"));
        assert_eq!(m.apply(v("000:001")), v("000:011"));
        assert_eq!(m.apply(v("000:010")), v("000:010"));
        assert!(m.is_symplectic());
    }
}
