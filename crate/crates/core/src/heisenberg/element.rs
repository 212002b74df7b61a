use std::fmt;
use std::str::FromStr;

use crate::f2sym::SympVector;

use super::HeisenbergError;

/// `(i^s, x, x*)` in `H_k = μ4 × L_k × L_k*`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HeisenbergElement {
    s: u8,
    v: SympVector,
}

impl HeisenbergElement {
    pub fn new(s: u8, v: SympVector) -> Self {
        Self { s: s % 4, v }
    }

    pub fn identity(k: u8) -> Result<Self, HeisenbergError> {
        Ok(Self {
            s: 0,
            v: SympVector::zero(k)?,
        })
    }

    pub fn phase(&self) -> u8 {
        self.s
    }

    pub fn vector(&self) -> SympVector {
        self.v
    }

    pub fn rank(&self) -> u8 {
        self.v.rank()
    }

    /// Every element of `H_k`, `4^{k+1}` of them.
    pub fn all(k: u8) -> Result<impl Iterator<Item = Self>, HeisenbergError> {
        let vs: Vec<SympVector> = SympVector::all(k)?.collect();
        Ok((0..4u8).flat_map(move |s| vs.clone().into_iter().map(move |v| Self { s, v })))
    }
}

/// `(s,x,x*)(t,y,y*) = (st(-1)^{y*(x)}, x+y, x*+y*)`.
pub fn h_mul(
    a: HeisenbergElement,
    b: HeisenbergElement,
) -> Result<HeisenbergElement, HeisenbergError> {
    if a.rank() != b.rank() {
        return Err(crate::f2sym::F2Error::RankMismatch(a.rank(), b.rank()).into());
    }
    let twist = ((a.v.x() & b.v.xstar()).count_ones() % 2) as u8;
    Ok(HeisenbergElement::new(a.s + b.s + 2 * twist, a.v + b.v))
}

/// `(s,x,x*)^{-1} = (s^{-1}(-1)^{x*(x)}, x, x*)`.
pub fn h_inv(a: HeisenbergElement) -> HeisenbergElement {
    HeisenbergElement::new(4 - a.s + 2 * a.v.self_pairing(), a.v)
}

/// `a b a^{-1} b^{-1}`, always central.
pub fn commutator(
    a: HeisenbergElement,
    b: HeisenbergElement,
) -> Result<HeisenbergElement, HeisenbergError> {
    h_mul(h_mul(h_mul(a, b)?, h_inv(a))?, h_inv(b))
}

impl fmt::Display for HeisenbergElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "i^{}·U[{}]", self.s, self.v)
    }
}

impl fmt::Debug for HeisenbergElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for HeisenbergElement {
    type Err = HeisenbergError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || HeisenbergError::Parse(s.to_string());
        let rest = s.trim().strip_prefix("i^").ok_or_else(bad)?;
        let (phase, rest) = rest.split_once("·U[").ok_or_else(bad)?;
        let v = rest.strip_suffix(']').ok_or_else(bad)?;
        let phase: u8 = phase.parse().map_err(|_| bad())?;
        if phase > 3 {
            return Err(bad());
        }
        Ok(Self::new(phase, v.parse()?))
    }
}
