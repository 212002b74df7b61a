use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::Serialize;

use super::E7Error;

/// A class `n0 e0 + n1 e1 + … + n7 e7` in the Picard lattice.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct PicVector(pub [i64; 8]);

impl PicVector {
    pub const ZERO: Self = Self([0; 8]);

    /// `e_i`, `i` in `0..8`.
    pub fn e(i: usize) -> Self {
        let mut c = [0; 8];
        c[i] = 1;
        Self(c)
    }

    /// `K_S = -3e0 + e1 + … + e7`.
    pub fn canonical() -> Self {
        Self([-3, 1, 1, 1, 1, 1, 1, 1])
    }

    pub fn coeffs(&self) -> [i64; 8] {
        self.0
    }

    /// `[a, b] = -a0 b0 + Σ_{i≥1} a_i b_i`.
    pub fn pairing(&self, other: &Self) -> i64 {
        -self.0[0] * other.0[0] + (1..8).map(|i| self.0[i] * other.0[i]).sum::<i64>()
    }
}

pub fn pic_pairing(a: &PicVector, b: &PicVector) -> i64 {
    a.pairing(b)
}

impl Add for PicVector {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl Sub for PicVector {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

impl Neg for PicVector {
    type Output = Self;
    fn neg(self) -> Self {
        Self(self.0.map(|c| -c))
    }
}

impl Mul<PicVector> for i64 {
    type Output = PicVector;
    fn mul(self, rhs: PicVector) -> PicVector {
        PicVector(rhs.0.map(|c| self * c))
    }
}

impl fmt::Display for PicVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .enumerate()
            .map(|(pos, (i, &c))| {
                let sign = if c < 0 {
                    "-"
                } else if pos == 0 {
                    ""
                } else {
                    "+"
                };
                let mag = if c.abs() == 1 {
                    String::new()
                } else {
                    c.abs().to_string()
                };
                format!("{sign}{mag}e{i}")
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" "))
        }
    }
}

impl fmt::Debug for PicVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// `s_d(x) = x - [x, d] d`.
pub fn reflect(d: &PicVector, x: &PicVector) -> Result<PicVector, E7Error> {
    let n = d.pairing(d);
    if n != 2 {
        return Err(E7Error::WrongNorm(n));
    }
    Ok(*x - x.pairing(d) * *d)
}

/// The simple roots `d1 = e1-e2`, `d2 = e0-e1-e2-e3`, `d_i = e_{i-1}-e_i`
/// for `i = 3..7`, in Bourbaki order.
pub fn simple_roots() -> [PicVector; 7] {
    std::array::from_fn(|i| match i {
        0 => PicVector::e(1) - PicVector::e(2),
        1 => PicVector::e(0) - PicVector::e(1) - PicVector::e(2) - PicVector::e(3),
        _ => PicVector::e(i) - PicVector::e(i + 1),
    })
}

/// Gram matrix of the simple roots.
pub fn cartan_matrix() -> [[i64; 7]; 7] {
    let d = simple_roots();
    std::array::from_fn(|i| std::array::from_fn(|j| d[i].pairing(&d[j])))
}

/// Inverse of [`cartan_matrix`] by exact Gauss-Jordan elimination.
pub fn inverse_cartan() -> &'static [[Rational64; 7]; 7] {
    static INV: OnceLock<[[Rational64; 7]; 7]> = OnceLock::new();
    INV.get_or_init(|| {
        let c = cartan_matrix();
        let mut a: Vec<Vec<Rational64>> = (0..7)
            .map(|i| {
                (0..14)
                    .map(|j| {
                        if j < 7 {
                            Rational64::from_integer(c[i][j])
                        } else if j - 7 == i {
                            Rational64::one()
                        } else {
                            Rational64::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        for col in 0..7 {
            let piv = (col..7)
                .find(|&r| !a[r][col].is_zero())
                .expect("Cartan matrix is nonsingular");
            a.swap(col, piv);
            let p = a[col][col];
            for x in a[col].iter_mut() {
                *x /= p;
            }
            for r in 0..7 {
                if r != col && !a[r][col].is_zero() {
                    let factor = a[r][col];
                    for j in 0..14 {
                        let sub = factor * a[col][j];
                        a[r][j] -= sub;
                    }
                }
            }
        }
        std::array::from_fn(|i| std::array::from_fn(|j| a[i][j + 7]))
    })
}

/// Coordinates over `α1..α7` of the projection of `v` to `K⊥ ⊗ Q`.
pub fn rational_simple_coords(v: &PicVector) -> [Rational64; 7] {
    let d = simple_roots();
    let b: [i64; 7] = std::array::from_fn(|j| v.pairing(&d[j]));
    let inv = inverse_cartan();
    std::array::from_fn(|i| (0..7).map(|j| inv[i][j] * b[j]).sum())
}

/// An element `n1 α1 + … + n7 α7` of the root lattice.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct SimpleRootCoords(pub [i64; 7]);

impl SimpleRootCoords {
    /// Solves `v = Σ n_i d_i`. Fails unless `v ∈ K⊥` has integral coordinates.
    pub fn from_pic(v: &PicVector) -> Result<Self, E7Error> {
        if v.pairing(&PicVector::canonical()) != 0 {
            return Err(E7Error::NotInRootLattice(v.to_string()));
        }
        let q = rational_simple_coords(v);
        if q.iter().any(|x| !x.is_integer()) {
            return Err(E7Error::NotInRootLattice(v.to_string()));
        }
        let c = Self(q.map(|x| x.to_integer()));
        if c.to_pic() != *v {
            return Err(E7Error::InternalInconsistency(format!(
                "{v} does not reconstruct"
            )));
        }
        Ok(c)
    }

    pub fn to_pic(&self) -> PicVector {
        simple_roots()
            .iter()
            .zip(self.0)
            .fold(PicVector::ZERO, |acc, (d, n)| acc + n * *d)
    }

    /// The form `(x, y)` in these coordinates, through the Cartan matrix.
    pub fn pairing(&self, other: &Self) -> i64 {
        let c = cartan_matrix();
        (0..7)
            .map(|i| {
                (0..7)
                    .map(|j| self.0[i] * c[i][j] * other.0[j])
                    .sum::<i64>()
            })
            .sum()
    }
}

impl fmt::Display for SimpleRootCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for SimpleRootCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
