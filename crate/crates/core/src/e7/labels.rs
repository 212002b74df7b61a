use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::lattice::PicVector;
use super::E7Error;

/// The three families of positive roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RootKind {
    /// `R_ij = e_i - e_j`, `1 ≤ i < j ≤ 7`.
    Rij,
    /// `R_ijk8 = e0 - e_i - e_j - e_k`.
    Rijk8,
    /// `R_i8 = 2e0 - (e1 + … + e7) + e_i`.
    Ri8,
}

/// A root `±R_I`, `I ⊂ {1..8}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootLabel {
    /// Bit `i - 1` set for each `i ∈ I`.
    set: u8,
    negative: bool,
}

fn indices_of(set: u8) -> Vec<u8> {
    (1..=8u8).filter(|i| set >> (i - 1) & 1 == 1).collect()
}

fn mask_of(indices: &[u8]) -> Option<u8> {
    let mut set = 0u8;
    for &i in indices {
        if !(1..=8).contains(&i) || set >> (i - 1) & 1 == 1 {
            return None;
        }
        set |= 1 << (i - 1);
    }
    Some(set)
}

fn all_but(i: u8) -> PicVector {
    let mut c = [-1; 8];
    c[0] = 0;
    c[i as usize] = 0;
    PicVector(c)
}

impl RootLabel {
    /// The positive root with index set `I`; `|I| = 4` requires `8 ∈ I`.
    pub fn new(indices: &[u8]) -> Result<Self, E7Error> {
        let set = mask_of(indices).ok_or_else(|| E7Error::Parse(format!("{indices:?}")))?;
        let has8 = set & 0x80 != 0;
        match (indices.len(), has8) {
            (2, _) | (4, true) => Ok(Self {
                set,
                negative: false,
            }),
            _ => Err(E7Error::Parse(format!("{indices:?}"))),
        }
    }

    pub fn indices(&self) -> Vec<u8> {
        indices_of(self.set)
    }

    pub fn kind(&self) -> RootKind {
        match (self.set.count_ones(), self.set & 0x80 != 0) {
            (2, false) => RootKind::Rij,
            (2, true) => RootKind::Ri8,
            _ => RootKind::Rijk8,
        }
    }

    pub fn is_positive(&self) -> bool {
        !self.negative
    }

    pub fn negate(self) -> Self {
        Self {
            negative: !self.negative,
            ..self
        }
    }

    /// The positive root `R_I` of the same pair.
    pub fn positive(self) -> Self {
        Self {
            negative: false,
            ..self
        }
    }

    pub fn pic(&self) -> PicVector {
        let idx = self.indices();
        let v = match self.kind() {
            RootKind::Rij => PicVector::e(idx[0] as usize) - PicVector::e(idx[1] as usize),
            RootKind::Rijk8 => idx[..3]
                .iter()
                .fold(PicVector::e(0), |acc, &i| acc - PicVector::e(i as usize)),
            RootKind::Ri8 => 2 * PicVector::e(0) + all_but(0) + PicVector::e(idx[0] as usize),
        };
        if self.negative {
            -v
        } else {
            v
        }
    }

    fn sort_key(&self) -> (bool, RootKind, Vec<u8>) {
        (self.negative, self.kind(), self.indices())
    }
}

impl PartialOrd for RootLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RootLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

fn digits(set: u8) -> String {
    indices_of(set)
        .iter()
        .map(|i| char::from(b'0' + i))
        .collect()
}

impl fmt::Display for RootLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}R{}",
            if self.negative { "-" } else { "" },
            digits(self.set)
        )
    }
}

impl fmt::Debug for RootLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `[-]<letter><ascending digits>`.
fn parse_signed(s: &str, letter: char) -> Result<(bool, Vec<u8>), E7Error> {
    let err = || E7Error::Parse(s.to_string());
    let (negative, rest) = match s.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, s),
    };
    let rest = rest.strip_prefix(letter).ok_or_else(err)?;
    let idx: Vec<u8> = rest
        .chars()
        .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(err))
        .collect::<Result<_, _>>()?;
    if idx.windows(2).any(|w| w[0] >= w[1]) {
        return Err(err());
    }
    Ok((negative, idx))
}

impl FromStr for RootLabel {
    type Err = E7Error;

    fn from_str(s: &str) -> Result<Self, E7Error> {
        let (negative, idx) = parse_signed(s, 'R')?;
        let r = Self::new(&idx).map_err(|_| E7Error::Parse(s.to_string()))?;
        Ok(if negative { r.negate() } else { r })
    }
}

impl Serialize for RootLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RootLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// A weight `±Ω_S` of `V(ω7)`, `S = {i, j} ⊂ {1..8}`.
///
/// `+Ω_ij` is the class `2e0 - (e1+…+e7) + e_i + e_j` and `+Ω_i8` is
/// `3e0 - (e1+…+e7) - e_i`. The class of `-Ω_S` is `-K_S - Ω_S`, so both
/// representatives satisfy `[l, K_S] = 1` and `[l, l] = 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightLabel {
    negative: bool,
    i: u8,
    j: u8,
}

impl WeightLabel {
    pub fn new(i: u8, j: u8) -> Result<Self, E7Error> {
        if !(1 <= i && i < j && j <= 8) {
            return Err(E7Error::Parse(format!("W{i}{j}")));
        }
        Ok(Self {
            negative: false,
            i,
            j,
        })
    }

    pub fn pair(&self) -> (u8, u8) {
        (self.i, self.j)
    }

    pub fn is_positive(&self) -> bool {
        !self.negative
    }

    pub fn negate(self) -> Self {
        Self {
            negative: !self.negative,
            ..self
        }
    }

    pub fn positive(self) -> Self {
        Self {
            negative: false,
            ..self
        }
    }

    /// The exceptional class representing this weight.
    pub fn pic(&self) -> PicVector {
        let (i, j) = (self.i as usize, self.j as usize);
        let omega = if j == 8 {
            3 * PicVector::e(0) + all_but(0) - PicVector::e(i)
        } else {
            2 * PicVector::e(0) + all_but(0) + PicVector::e(i) + PicVector::e(j)
        };
        if self.negative {
            -PicVector::canonical() - omega
        } else {
            omega
        }
    }

    /// `2 (l - ([l,K]/[K,K]) K) = 2l + K`, twice the projection to `K⊥`.
    pub fn projection_doubled(&self) -> PicVector {
        2 * self.pic() + PicVector::canonical()
    }
}

impl fmt::Display for WeightLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}W{}{}",
            if self.negative { "-" } else { "" },
            self.i,
            self.j
        )
    }
}

impl fmt::Debug for WeightLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for WeightLabel {
    type Err = E7Error;

    fn from_str(s: &str) -> Result<Self, E7Error> {
        let (negative, idx) = parse_signed(s, 'W')?;
        let w = match idx[..] {
            [i, j] => Self::new(i, j).map_err(|_| E7Error::Parse(s.to_string()))?,
            _ => return Err(E7Error::Parse(s.to_string())),
        };
        Ok(if negative { w.negate() } else { w })
    }
}

impl Serialize for WeightLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for WeightLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// The 63 positive roots: 21 `R_ij`, then 35 `R_ijk8`, then 7 `R_i8`.
pub fn enumerate_roots() -> Vec<(RootLabel, PicVector)> {
    let mut out = Vec::with_capacity(63);
    for i in 1..=7u8 {
        for j in i + 1..=7 {
            out.push(RootLabel::new(&[i, j]).expect("valid"));
        }
    }
    for i in 1..=7u8 {
        for j in i + 1..=7 {
            for k in j + 1..=7 {
                out.push(RootLabel::new(&[i, j, k, 8]).expect("valid"));
            }
        }
    }
    for i in 1..=7u8 {
        out.push(RootLabel::new(&[i, 8]).expect("valid"));
    }
    out.into_iter().map(|r| (r, r.pic())).collect()
}

/// The 28 positive weights: 21 `Ω_ij` with `j ≤ 7`, then 7 `Ω_i8`.
pub fn enumerate_weights() -> Vec<(WeightLabel, PicVector)> {
    let mut out = Vec::with_capacity(28);
    for j8 in [false, true] {
        for i in 1..=7u8 {
            for j in i + 1..=8 {
                if (j == 8) == j8 {
                    out.push(WeightLabel::new(i, j).expect("valid"));
                }
            }
        }
    }
    out.into_iter().map(|w| (w, w.pic())).collect()
}

/// All 56 signed weights, positives first.
pub fn signed_weights() -> Vec<WeightLabel> {
    let pos: Vec<WeightLabel> = enumerate_weights().into_iter().map(|(w, _)| w).collect();
    pos.iter()
        .copied()
        .chain(pos.iter().map(|w| w.negate()))
        .collect()
}

/// `(ω, α)` with `ω` the `K⊥`-projection of the weight class. Roots lie in
/// `K⊥`, so this equals the raw Picard pairing.
pub fn weight_root_pairing(w: WeightLabel, r: RootLabel) -> i64 {
    let doubled = w.projection_doubled().pairing(&r.pic());
    debug_assert_eq!(doubled % 2, 0);
    doubled / 2
}

/// Brute-force scan of `n0 ∈ [-3, 3]`, `n_i ∈ [-2, 2]`: the vectors of `K⊥`
/// with norm 2, and the classes with `[l, K_S] = 1`, `[l, l] = 1`.
pub fn census_scan() -> (Vec<PicVector>, Vec<PicVector>) {
    let k = PicVector::canonical();
    let (mut roots, mut weights) = (Vec::new(), Vec::new());
    for n0 in -3..=3i64 {
        for code in 0..5i64.pow(7) {
            let mut c = [n0, 0, 0, 0, 0, 0, 0, 0];
            let mut rest = code;
            for slot in c.iter_mut().skip(1) {
                *slot = rest % 5 - 2;
                rest /= 5;
            }
            let v = PicVector(c);
            let (norm, deg) = (v.pairing(&v), v.pairing(&k));
            if norm == 2 && deg == 0 {
                roots.push(v);
            } else if norm == 1 && deg == 1 {
                weights.push(v);
            }
        }
    }
    roots.sort();
    weights.sort();
    (roots, weights)
}
