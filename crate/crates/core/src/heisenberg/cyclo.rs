use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use super::HeisenbergError;

/// A dyadic rational `num / 2^exp` in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Dyadic {
    num: i64,
    exp: u32,
}

impl Dyadic {
    pub fn new(num: i64, exp: u32) -> Self {
        let mut d = Self { num, exp };
        d.normalize();
        d
    }

    fn normalize(&mut self) {
        if self.num == 0 {
            self.exp = 0;
            return;
        }
        let tz = self.num.trailing_zeros().min(self.exp);
        self.num >>= tz;
        self.exp -= tz;
    }

    pub fn numerator(self) -> i64 {
        self.num
    }

    pub fn exponent(self) -> u32 {
        self.exp
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2^{}", self.num, self.exp)
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Dyadic {
    type Err = HeisenbergError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || HeisenbergError::Parse(s.to_string());
        let s = s.trim();
        let (num, exp) = match s.split_once('/') {
            Some((n, d)) => (n, d.strip_prefix("2^").ok_or_else(bad)?),
            None => (s, "0"),
        };
        let num: i64 = num.parse().map_err(|_| bad())?;
        let exp: u32 = exp.parse().map_err(|_| bad())?;
        if exp > 62 {
            return Err(bad());
        }
        Ok(Self::new(num, exp))
    }
}

/// An element `(a0 + a1 ζ + a2 ζ² + a3 ζ³) / 2^exp` of `Z[ζ8, 1/2]`, with
/// `ζ = e^{iπ/4}` so that `ζ² = i` and `ζ⁴ = -1`.
///
/// Stored over a common power-of-two denominator, kept minimal. Arithmetic
/// panics on `i64` overflow rather than wrapping.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct CycloDyadic {
    nums: [i64; 4],
    exp: u32,
}

fn checked(x: Option<i64>) -> i64 {
    x.expect("cyclotomic coefficient overflowed i64")
}

fn shift(x: i64, by: u32) -> i64 {
    checked(2i64.checked_pow(by).and_then(|m| x.checked_mul(m)))
}

impl CycloDyadic {
    pub const ZERO: Self = Self {
        nums: [0; 4],
        exp: 0,
    };
    pub const ONE: Self = Self {
        nums: [1, 0, 0, 0],
        exp: 0,
    };
    pub const I: Self = Self {
        nums: [0, 0, 1, 0],
        exp: 0,
    };

    pub fn new(nums: [i64; 4], exp: u32) -> Self {
        let mut c = Self { nums, exp };
        c.normalize();
        c
    }

    pub fn from_int(n: i64) -> Self {
        Self::new([n, 0, 0, 0], 0)
    }

    /// `ζ^j` for any integer `j`.
    pub fn zeta_pow(j: i64) -> Self {
        let j = j.rem_euclid(8) as usize;
        let mut nums = [0; 4];
        nums[j % 4] = if j < 4 { 1 } else { -1 };
        Self { nums, exp: 0 }
    }

    /// `i^s`.
    pub fn i_pow(s: i64) -> Self {
        Self::zeta_pow(2 * s)
    }

    /// `(1 - i) / 2`.
    pub fn one_minus_i_half() -> Self {
        Self::new([1, 0, -1, 0], 1)
    }

    /// `(1 + i) / 2`.
    pub fn one_plus_i_half() -> Self {
        Self::new([1, 0, 1, 0], 1)
    }

    /// `1/√2 = (ζ - ζ³) / 2`.
    pub fn inv_sqrt2() -> Self {
        Self::new([0, 1, 0, -1], 1)
    }

    fn normalize(&mut self) {
        if self.nums.iter().all(|&n| n == 0) {
            self.exp = 0;
            return;
        }
        let tz = self
            .nums
            .iter()
            .filter(|&&n| n != 0)
            .map(|n| n.trailing_zeros())
            .min()
            .unwrap_or(0);
        let tz = tz.min(self.exp);
        for n in &mut self.nums {
            *n >>= tz;
        }
        self.exp -= tz;
    }

    /// Coefficient of `ζ^j`, `j` in `0..4`.
    pub fn coeff(&self, j: usize) -> Dyadic {
        Dyadic::new(self.nums[j], self.exp)
    }

    pub fn coeffs(&self) -> [Dyadic; 4] {
        [0, 1, 2, 3].map(|j| self.coeff(j))
    }

    pub fn from_coeffs(c: [Dyadic; 4]) -> Self {
        let exp = c.iter().map(|d| d.exp).max().unwrap_or(0);
        Self::new(c.map(|d| shift(d.num, exp - d.exp)), exp)
    }

    pub fn numerators(&self) -> [i64; 4] {
        self.nums
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.nums == [0; 4]
    }

    /// Rational part, when the element is rational.
    pub fn as_rational(&self) -> Option<Dyadic> {
        (self.nums[1..] == [0, 0, 0]).then(|| self.coeff(0))
    }

    /// Galois automorphism `ζ ↦ ζ^m`, `m` odd.
    pub fn galois(&self, m: i64) -> Self {
        assert!(m % 2 != 0, "Galois exponent must be odd");
        let mut nums = [0i64; 4];
        for (j, &a) in self.nums.iter().enumerate() {
            let z = Self::zeta_pow(j as i64 * m);
            for (t, &zt) in z.nums.iter().enumerate() {
                nums[t] = checked(nums[t].checked_add(checked(a.checked_mul(zt))));
            }
        }
        Self::new(nums, self.exp)
    }

    /// Complex conjugation `ζ ↦ ζ⁷`.
    pub fn conj(&self) -> Self {
        let [a0, a1, a2, a3] = self.nums;
        Self::new([a0, -a3, -a2, -a1], self.exp)
    }

    /// Field norm to `Q`, the product of the four Galois conjugates.
    pub fn norm(&self) -> Dyadic {
        let n = *self * self.galois(3) * self.galois(5) * self.galois(7);
        n.as_rational().expect("field norm is rational")
    }

    /// The inverse in `Z[ζ8, 1/2]`, present iff the norm is `±2^m`.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.num == 0 || n.num.unsigned_abs().count_ones() != 1 {
            return None;
        }
        let others = self.galois(3) * self.galois(5) * self.galois(7);
        // 1/n = sign · 2^{exp} / 2^{log|num|}
        let log = n.num.unsigned_abs().trailing_zeros();
        let sign = n.num.signum();
        let scaled = Self::new(
            others.nums.map(|a| shift(a * sign, n.exp)),
            others.exp + log,
        );
        Some(scaled)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::ONE, |acc, _| acc * *self)
    }

    /// `j` with `self = ζ^j`, if `self` is an eighth root of unity.
    pub fn root_of_unity_exponent(&self) -> Option<u8> {
        (0..8)
            .find(|&j| Self::zeta_pow(j) == *self)
            .map(|j| j as u8)
    }

    /// `s` with `self = i^s`, if `self` is a fourth root of unity.
    pub fn i_exponent(&self) -> Option<u8> {
        self.root_of_unity_exponent()
            .filter(|j| j % 2 == 0)
            .map(|j| j / 2)
    }
}

impl Add for CycloDyadic {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let exp = self.exp.max(rhs.exp);
        let mut nums = [0i64; 4];
        for (j, n) in nums.iter_mut().enumerate() {
            *n = checked(
                shift(self.nums[j], exp - self.exp).checked_add(shift(rhs.nums[j], exp - rhs.exp)),
            );
        }
        Self::new(nums, exp)
    }
}

impl AddAssign for CycloDyadic {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Neg for CycloDyadic {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            nums: self.nums.map(|n| -n),
            exp: self.exp,
        }
    }
}

impl Sub for CycloDyadic {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for CycloDyadic {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::ZERO;
        }
        let mut nums = [0i64; 4];
        for (i, &a) in self.nums.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.nums.iter().enumerate() {
                let p = checked(a.checked_mul(b));
                let t = (i + j) % 4;
                nums[t] = checked(if i + j < 4 {
                    nums[t].checked_add(p)
                } else {
                    nums[t].checked_sub(p)
                });
            }
        }
        Self::new(nums, self.exp + rhs.exp)
    }
}

impl From<i64> for CycloDyadic {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

/// Human-readable form in the basis `1, ζ, i, ζ³`, e.g. `1/2 - 1/2i`.
impl fmt::Display for CycloDyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let suffix = ["", "ζ", "i", "ζ³"];
        let mut first = true;
        for (j, c) in self.coeffs().iter().enumerate() {
            if c.num == 0 {
                continue;
            }
            let neg = c.num < 0;
            let mag = c.num.unsigned_abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let denom = 1u64 << c.exp;
            match (mag, denom, j) {
                (1, 1, 0) => f.write_str("1")?,
                (1, 1, _) => {}
                (m, 1, _) => write!(f, "{m}")?,
                (m, d, _) => write!(f, "{m}/{d}")?,
            }
            f.write_str(suffix[j])?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycloDyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Serialized as the four coefficients, each a `"num/2^e"` string.
impl serde::Serialize for CycloDyadic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeTuple;
        let mut t = s.serialize_tuple(4)?;
        for c in self.coeffs() {
            t.serialize_element(&c.to_string())?;
        }
        t.end()
    }
}

impl<'de> serde::Deserialize<'de> for CycloDyadic {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = <[String; 4]>::deserialize(d)?;
        let mut c = [Dyadic::default(); 4];
        for (slot, p) in c.iter_mut().zip(&parts) {
            *slot = p.parse().map_err(serde::de::Error::custom)?;
        }
        Ok(Self::from_coeffs(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb() -> impl Strategy<Value = CycloDyadic> {
        (prop::array::uniform4(-40i64..40), 0u32..4).prop_map(|(n, e)| CycloDyadic::new(n, e))
    }

    #[test]
    fn zeta_relations() {
        let z = CycloDyadic::zeta_pow(1);
        assert_eq!(z * z, CycloDyadic::I);
        assert_eq!(z.pow(4), CycloDyadic::from_int(-1));
        assert_eq!(z.pow(8), CycloDyadic::ONE);
        assert_eq!(CycloDyadic::i_pow(3), -CycloDyadic::I);
    }

    #[test]
    fn inv_sqrt2_squares_to_half() {
        let r = CycloDyadic::inv_sqrt2();
        assert_eq!(r * r, CycloDyadic::new([1, 0, 0, 0], 1));
        // 1/√2 = ζ (1 - i)/2
        assert_eq!(
            r,
            CycloDyadic::zeta_pow(1) * CycloDyadic::one_minus_i_half()
        );
    }

    #[test]
    fn normalization_is_minimal() {
        let c = CycloDyadic::new([2, 4, 0, -6], 3);
        assert_eq!(c.numerators(), [1, 2, 0, -3]);
        assert_eq!(c.exponent(), 2);
        assert_eq!(CycloDyadic::new([0; 4], 5).exponent(), 0);
        assert_eq!(CycloDyadic::new([8, 0, 0, 0], 1), CycloDyadic::from_int(4));
    }

    #[test]
    fn inverses() {
        let h = CycloDyadic::one_minus_i_half();
        assert_eq!(h.inverse().unwrap(), CycloDyadic::new([1, 0, 1, 0], 0));
        assert_eq!(CycloDyadic::from_int(3).inverse(), None);
        assert_eq!(CycloDyadic::ZERO.inverse(), None);
        let sqrt2 = CycloDyadic::new([0, 1, 0, -1], 0);
        assert_eq!(sqrt2.inverse().unwrap(), CycloDyadic::inv_sqrt2());
        // 1 + ζ has norm 2
        let u = CycloDyadic::new([1, 1, 0, 0], 0);
        assert_eq!(u * u.inverse().unwrap(), CycloDyadic::ONE);
    }

    #[test]
    fn display_and_serde() {
        assert_eq!(CycloDyadic::one_minus_i_half().to_string(), "1/2 - 1/2i");
        assert_eq!(CycloDyadic::zeta_pow(3).to_string(), "ζ³");
        assert_eq!(CycloDyadic::from_int(-2).to_string(), "-2");
        let json = serde_json::to_string(&CycloDyadic::one_minus_i_half()).unwrap();
        assert_eq!(json, r#"["1/2^1","0/2^0","-1/2^1","0/2^0"]"#);
        let back: CycloDyadic = serde_json::from_str(&json).unwrap();
        assert_eq!(back, CycloDyadic::one_minus_i_half());
        assert_eq!("3/2^2".parse::<Dyadic>().unwrap(), Dyadic::new(6, 3));
        assert!("3/4".parse::<Dyadic>().is_err());
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb(), b in arb(), c in arb()) {
            prop_assert_eq!(a * b, b * a);
            prop_assert_eq!((a * b) * c, a * (b * c));
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert_eq!(a + b - b, a);
        }

        #[test]
        fn galois_is_a_ring_map(a in arb(), b in arb(), m in prop::sample::select(vec![1i64, 3, 5, 7])) {
            prop_assert_eq!((a * b).galois(m), a.galois(m) * b.galois(m));
            prop_assert_eq!((a + b).galois(m), a.galois(m) + b.galois(m));
            prop_assert_eq!(a.galois(7), a.conj());
        }

        #[test]
        fn inverse_when_unit(a in arb()) {
            if let Some(inv) = a.inverse() {
                prop_assert_eq!(a * inv, CycloDyadic::ONE);
            }
        }

        #[test]
        fn dyadic_text_round_trip(n in -1000i64..1000, e in 0u32..10) {
            let d = Dyadic::new(n, e);
            prop_assert_eq!(d.to_string().parse::<Dyadic>().unwrap(), d);
        }
    }
}
