use std::fmt;
use std::str::FromStr;

use super::F2Error;

/// Largest supported number of qubits.
pub const MAX_RANK: u8 = 4;

/// An element `v = (x, x*)` of `V_k = L_k × L_k*`.
///
/// Packed into one byte: `x` occupies the high `k` bits and `x*` the low `k`
/// bits, and within each half coordinate 1 is the most significant bit. The
/// packed word therefore reads the same as the text form `"abc:def"`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SympVector {
    k: u8,
    bits: u8,
}

pub(crate) fn check_rank(k: u8) -> Result<(), F2Error> {
    if (1..=MAX_RANK).contains(&k) {
        Ok(())
    } else {
        Err(F2Error::InvalidRank(k))
    }
}

#[inline]
fn parity(b: u8) -> u8 {
    (b.count_ones() & 1) as u8
}

impl SympVector {
    pub fn new(k: u8, x: u8, xstar: u8) -> Result<Self, F2Error> {
        check_rank(k)?;
        let mask = (1u8 << k) - 1;
        if x & !mask != 0 || xstar & !mask != 0 {
            return Err(F2Error::OutOfRange {
                k,
                value: (x as u16) << k | xstar as u16,
            });
        }
        Ok(Self {
            k,
            bits: (x << k) | xstar,
        })
    }

    /// Builds a vector from its packed `2k`-bit word.
    pub fn from_bits(k: u8, bits: u8) -> Result<Self, F2Error> {
        check_rank(k)?;
        if k < 4 && bits >> (2 * k) != 0 {
            return Err(F2Error::OutOfRange {
                k,
                value: bits as u16,
            });
        }
        Ok(Self { k, bits })
    }

    pub(crate) const fn from_bits_unchecked(k: u8, bits: u8) -> Self {
        Self { k, bits }
    }

    pub fn zero(k: u8) -> Result<Self, F2Error> {
        Self::from_bits(k, 0)
    }

    /// All `4^k` vectors in packed-word order.
    pub fn all(k: u8) -> Result<impl Iterator<Item = Self>, F2Error> {
        check_rank(k)?;
        Ok((0..(1u16 << (2 * k))).map(move |b| Self { k, bits: b as u8 }))
    }

    /// The `4^k - 1` nonzero vectors in packed-word order.
    pub fn nonzero(k: u8) -> Result<impl Iterator<Item = Self>, F2Error> {
        Ok(Self::all(k)?.skip(1))
    }

    /// The `i`-th standard basis vector, `i` in `0..2k`: first the `x`
    /// coordinates, then the `x*` coordinates.
    pub fn basis(k: u8, i: usize) -> Result<Self, F2Error> {
        check_rank(k)?;
        if i >= 2 * k as usize {
            return Err(F2Error::OutOfRange { k, value: i as u16 });
        }
        Ok(Self {
            k,
            bits: 1 << (2 * k as usize - 1 - i),
        })
    }

    pub fn rank(self) -> u8 {
        self.k
    }

    pub fn bits(self) -> u8 {
        self.bits
    }

    pub fn x(self) -> u8 {
        self.bits >> self.k
    }

    pub fn xstar(self) -> u8 {
        self.bits & ((1 << self.k) - 1)
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    /// Coordinate `i` (same indexing as [`SympVector::basis`]).
    pub fn coord(self, i: usize) -> u8 {
        (self.bits >> (2 * self.k as usize - 1 - i)) & 1
    }

    /// `x*(x)`, the self-pairing deciding whether `U_v` squares to `I` or `-I`.
    pub fn self_pairing(self) -> u8 {
        parity(self.x() & self.xstar())
    }

    /// `E(v, w) = y*(x) + x*(y)`. Panics on a rank mismatch; see
    /// [`symplectic_form`] for the checked variant.
    #[inline]
    pub fn pairing(self, other: Self) -> u8 {
        assert_eq!(self.k, other.k, "rank mismatch in symplectic pairing");
        parity(self.x() & other.xstar()) ^ parity(self.xstar() & other.x())
    }

    /// `t_v(w) = w + E(w, v) v`, applied with `self` as `v`.
    #[inline]
    pub fn transvect(self, w: Self) -> Self {
        if w.pairing(self) == 1 {
            w + self
        } else {
            w
        }
    }

    pub(crate) fn same_rank(self, other: Self) -> Result<(), F2Error> {
        if self.k == other.k {
            Ok(())
        } else {
            Err(F2Error::RankMismatch(self.k, other.k))
        }
    }
}

impl std::ops::Add for SympVector {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.k, rhs.k, "rank mismatch in vector addition");
        Self {
            k: self.k,
            bits: self.bits ^ rhs.bits,
        }
    }
}

impl std::ops::AddAssign for SympVector {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

/// The symplectic form `E(v, w)`.
pub fn symplectic_form(v: SympVector, w: SympVector) -> Result<u8, F2Error> {
    v.same_rank(w)?;
    Ok(v.pairing(w))
}

/// The transvection `t_v` applied to `w`.
pub fn transvection_apply(v: SympVector, w: SympVector) -> Result<SympVector, F2Error> {
    v.same_rank(w)?;
    Ok(v.transvect(w))
}

fn write_bits(f: &mut fmt::Formatter<'_>, k: u8, b: u8) -> fmt::Result {
    for i in (0..k).rev() {
        f.write_str(if (b >> i) & 1 == 1 { "1" } else { "0" })?;
    }
    Ok(())
}

impl fmt::Display for SympVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bits(f, self.k, self.x())?;
        f.write_str(":")?;
        write_bits(f, self.k, self.xstar())
    }
}

impl fmt::Debug for SympVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_bits(s: &str) -> Option<u8> {
    if s.is_empty() || s.len() > MAX_RANK as usize {
        return None;
    }
    s.chars().try_fold(0u8, |acc, c| match c {
        '0' => Some(acc << 1),
        '1' => Some(acc << 1 | 1),
        _ => None,
    })
}

impl FromStr for SympVector {
    type Err = F2Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || F2Error::Parse(s.to_string());
        let (xs, ys) = s.trim().split_once(':').ok_or_else(bad)?;
        if xs.len() != ys.len() {
            return Err(bad());
        }
        let x = parse_bits(xs).ok_or_else(bad)?;
        let y = parse_bits(ys).ok_or_else(bad)?;
        Self::new(xs.len() as u8, x, y)
    }
}

impl serde::Serialize for SympVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for SympVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
