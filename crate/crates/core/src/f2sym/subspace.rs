use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::vector::{check_rank, SympVector};
use super::F2Error;

/// A totally isotropic subspace of `V_k`.
///
/// The basis is kept in reduced echelon form so two equal subspaces compare
/// equal field by field.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsotropicSubspace {
    k: u8,
    points: Vec<SympVector>,
    basis: Vec<SympVector>,
}

fn reduced_echelon(vectors: &[SympVector], k: u8) -> Vec<SympVector> {
    let mut rows: Vec<u8> = vectors
        .iter()
        .map(|v| v.bits())
        .filter(|&b| b != 0)
        .collect();
    let mut rank = 0;
    for bit in (0..2 * k).rev() {
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
    rows.truncate(rank);
    rows.into_iter()
        .map(|b| SympVector::from_bits_unchecked(k, b))
        .collect()
}

/// All nonzero elements of the span, sorted.
fn span_points(basis: &[SympVector]) -> Vec<SympVector> {
    let mut pts: Vec<SympVector> = (1u32..(1 << basis.len()))
        .map(|mask| {
            basis
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold(0u8, |acc, (_, v)| acc ^ v.bits())
        })
        .map(|b| SympVector::from_bits_unchecked(basis[0].rank(), b))
        .collect();
    pts.sort();
    pts
}

impl IsotropicSubspace {
    /// Spans the given vectors; they must be independent and pairwise
    /// orthogonal under `E`.
    pub fn from_basis(basis: &[SympVector]) -> Result<Self, F2Error> {
        let first = basis.first().ok_or_else(|| F2Error::Parse(String::new()))?;
        let k = first.rank();
        for v in basis {
            first.same_rank(*v)?;
        }
        for (i, a) in basis.iter().enumerate() {
            for b in &basis[i + 1..] {
                if a.pairing(*b) != 0 {
                    return Err(F2Error::NotIsotropic(a.to_string(), b.to_string()));
                }
            }
        }
        let reduced = reduced_echelon(basis, k);
        if reduced.len() != basis.len() {
            return Err(F2Error::Dependent);
        }
        Ok(Self {
            k,
            points: span_points(&reduced),
            basis: reduced,
        })
    }

    /// The standard Lagrangian `L_k × {0}`.
    pub fn standard(k: u8) -> Result<Self, F2Error> {
        check_rank(k)?;
        let basis: Vec<_> = (0..k as usize)
            .map(|i| SympVector::basis(k, i))
            .collect::<Result<_, _>>()?;
        Self::from_basis(&basis)
    }

    pub fn rank(&self) -> u8 {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SympVector] {
        &self.basis
    }

    /// Sorted nonzero elements, `2^dim - 1` of them.
    pub fn points(&self) -> &[SympVector] {
        &self.points
    }

    pub fn contains(&self, v: SympVector) -> bool {
        v.is_zero() || self.points.binary_search(&v).is_ok()
    }

    pub fn is_lagrangian(&self) -> bool {
        self.dim() == self.k as usize
    }

    /// Codimension-one subspaces (the lines of the Fano plane when `self` is a
    /// Lagrangian of `V_3`), ordered by their sorted point lists.
    pub fn hyperplanes(&self) -> Vec<IsotropicSubspace> {
        let d = self.dim();
        let mut out: BTreeSet<IsotropicSubspace> = BTreeSet::new();
        for functional in 1u32..(1 << d) {
            let kernel: Vec<SympVector> = (1u32..(1 << d))
                .filter(|c| (c & functional).count_ones() % 2 == 0)
                .map(|c| {
                    let bits = (0..d)
                        .filter(|i| c >> i & 1 == 1)
                        .fold(0u8, |acc, i| acc ^ self.basis[i].bits());
                    SympVector::from_bits_unchecked(self.k, bits)
                })
                .collect();
            let reduced = reduced_echelon(&kernel, self.k);
            out.insert(Self {
                k: self.k,
                points: span_points(&reduced),
                basis: reduced,
            });
        }
        out.into_iter().collect()
    }
}

/// Every Lagrangian subspace of `V_k`, duplicate-free, ordered by sorted point
/// list.
pub fn enumerate_lagrangians(k: u8) -> Result<Vec<IsotropicSubspace>, F2Error> {
    check_rank(k)?;
    let mut found: BTreeSet<IsotropicSubspace> = BTreeSet::new();
    let mut stack: Vec<SympVector> = Vec::with_capacity(k as usize);
    extend_isotropic(k, &mut stack, &mut found);
    Ok(found.into_iter().collect())
}

fn extend_isotropic(k: u8, chosen: &mut Vec<SympVector>, found: &mut BTreeSet<IsotropicSubspace>) {
    if chosen.len() == k as usize {
        let s = IsotropicSubspace::from_basis(chosen)
            .expect("chosen vectors are isotropic and independent");
        found.insert(s);
        return;
    }
    let span: Vec<SympVector> = if chosen.is_empty() {
        Vec::new()
    } else {
        span_points(chosen)
    };
    // only extend with vectors larger than the largest point so far, so each
    // subspace is reached through few bases
    let floor = span.last().map(|v| v.bits()).unwrap_or(0);
    for v in SympVector::nonzero(k).expect("valid rank") {
        if v.bits() <= floor || span.contains(&v) {
            continue;
        }
        if chosen.iter().all(|c| c.pairing(v) == 0) {
            chosen.push(v);
            extend_isotropic(k, chosen, found);
            chosen.pop();
        }
    }
}

impl fmt::Display for IsotropicSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.basis.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for IsotropicSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IsotropicSubspace[{self}]")
    }
}

impl FromStr for IsotropicSubspace {
    type Err = F2Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let basis: Vec<SympVector> = s.split(',').map(|p| p.parse()).collect::<Result<_, _>>()?;
        Self::from_basis(&basis)
    }
}

impl serde::Serialize for IsotropicSubspace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lagrangian_counts() {
        assert_eq!(enumerate_lagrangians(1).unwrap().len(), 3);
        assert_eq!(enumerate_lagrangians(2).unwrap().len(), 15);
        assert_eq!(enumerate_lagrangians(3).unwrap().len(), 135);
    }

    /// Independent count: ordered isotropic bases divided by |GL(k, F2)|.
    #[test]
    fn counts_agree_with_basis_counting() {
        fn ordered_bases(k: u8, chosen: &mut Vec<SympVector>) -> usize {
            if chosen.len() == k as usize {
                return 1;
            }
            let span = if chosen.is_empty() {
                vec![]
            } else {
                span_points(chosen)
            };
            let cands: Vec<_> = SympVector::nonzero(k)
                .unwrap()
                .filter(|v| !span.contains(v) && chosen.iter().all(|c| c.pairing(*v) == 0))
                .collect();
            cands
                .into_iter()
                .map(|v| {
                    chosen.push(v);
                    let n = ordered_bases(k, chosen);
                    chosen.pop();
                    n
                })
                .sum()
        }
        let gl = [1usize, 1, 6, 168];
        for k in 1..=3u8 {
            let n = ordered_bases(k, &mut vec![]);
            assert_eq!(n % gl[k as usize], 0);
            assert_eq!(n / gl[k as usize], enumerate_lagrangians(k).unwrap().len());
        }
        assert_eq!(ordered_bases(3, &mut vec![]), 63 * 30 * 12);
    }

    #[test]
    fn every_member_is_maximal_isotropic() {
        let ls = enumerate_lagrangians(3).unwrap();
        for l in &ls {
            assert_eq!(l.points().len(), 7);
            assert!(l.is_lagrangian());
            for a in l.points() {
                for b in l.points() {
                    assert_eq!(a.pairing(*b), 0);
                }
            }
            // maximal: nothing outside is orthogonal to all points
            for v in SympVector::nonzero(3).unwrap().filter(|v| !l.contains(*v)) {
                assert!(l.points().iter().any(|p| p.pairing(v) == 1));
            }
        }
        let mut sorted = ls.clone();
        sorted.sort_by(|a, b| a.points().cmp(b.points()));
        assert_eq!(sorted, ls);
    }

    #[test]
    fn standard_and_fano_lines() {
        let l = IsotropicSubspace::standard(3).unwrap();
        assert_eq!(l.to_string(), "100:000,010:000,001:000");
        let lines = l.hyperplanes();
        assert_eq!(lines.len(), 7);
        for m in &lines {
            assert_eq!(m.points().len(), 3);
            let p = m.points();
            assert_eq!(p[0] + p[1], p[2]);
        }
        // any two points lie on exactly one line
        for a in l.points() {
            for b in l.points().iter().filter(|b| *b != a) {
                assert_eq!(
                    lines
                        .iter()
                        .filter(|m| m.contains(*a) && m.contains(*b))
                        .count(),
                    1
                );
            }
        }
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            "100:000,000:100".parse::<IsotropicSubspace>(),
            Err(F2Error::NotIsotropic(..))
        ));
        assert!(matches!(
            "100:000,100:000".parse::<IsotropicSubspace>(),
            Err(F2Error::Dependent)
        ));
        let l: IsotropicSubspace = "110:000,010:000,001:000".parse().unwrap();
        assert_eq!(l, IsotropicSubspace::standard(3).unwrap());
    }
}
