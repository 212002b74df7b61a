use std::fmt;

use serde::Serialize;

use crate::f2sym::{IsotropicSubspace, SympVector};

use super::labels::{
    enumerate_weights, signed_weights, weight_root_pairing, RootLabel, WeightLabel,
};
use super::reduction::{root_records, roots_over};
use super::E7Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanoPoint {
    pub v: SympVector,
    pub root: RootLabel,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanoLine {
    /// Index shared by the three roots; present only for the standard
    /// Lagrangian.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<u8>,
    pub points: Vec<SympVector>,
    pub roots: Vec<RootLabel>,
    pub weights: Vec<WeightLabel>,
}

/// `V(ω7)` restricted to the seven `sl(2)`'s of a Lagrangian: one summand per
/// line of the Fano plane `P(L)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanoDecomposition {
    pub lagrangian: IsotropicSubspace,
    pub points: Vec<FanoPoint>,
    pub lines: Vec<FanoLine>,
}

fn weight_order(w: &WeightLabel) -> (bool, u8, u8) {
    let (i, j) = w.pair();
    (j == 8, i, j)
}

/// The index common to three roots `R_{a··8}`, if there is exactly one below 8.
fn shared_index(roots: &[RootLabel]) -> Option<u8> {
    let common: Vec<u8> = (1..=7u8)
        .filter(|i| roots.iter().all(|r| r.indices().contains(i)))
        .collect();
    match common[..] {
        [a] => Some(a),
        _ => None,
    }
}

/// Splits the 28 positive weights over the seven lines of `P(L)`.
///
/// A line takes the weights pairing to `±1` with its three roots and to `0`
/// with the other four. Lines are ordered by their shared index for the
/// standard Lagrangian and by point list otherwise.
pub fn restriction_decomposition(l: &IsotropicSubspace) -> Result<FanoDecomposition, E7Error> {
    let roots = roots_over(l)?;
    let points: Vec<FanoPoint> = l
        .points()
        .iter()
        .zip(&roots)
        .map(|(&v, &root)| FanoPoint { v, root })
        .collect();
    let standard = *l == IsotropicSubspace::standard(3)?;
    let positive: Vec<WeightLabel> = enumerate_weights().into_iter().map(|(w, _)| w).collect();
    let mut lines = Vec::with_capacity(7);
    let mut used = 0usize;
    for m in l.hyperplanes() {
        let on: Vec<&FanoPoint> = points.iter().filter(|p| m.contains(p.v)).collect();
        let line_roots: Vec<RootLabel> = on.iter().map(|p| p.root).collect();
        let mut weights: Vec<WeightLabel> = positive
            .iter()
            .copied()
            .filter(|&w| {
                points.iter().all(|p| {
                    let pr = weight_root_pairing(w, p.root).abs();
                    if line_roots.contains(&p.root) {
                        pr == 1
                    } else {
                        pr == 0
                    }
                })
            })
            .collect();
        if weights.len() != 4 {
            return Err(E7Error::InternalInconsistency(format!(
                "line {m} carries {} weights",
                weights.len()
            )));
        }
        weights.sort_by_key(weight_order);
        used += weights.len();
        let a = if standard {
            shared_index(&line_roots)
        } else {
            None
        };
        lines.push(FanoLine {
            a,
            points: on.iter().map(|p| p.v).collect(),
            roots: line_roots,
            weights,
        });
    }
    if used != 28 {
        return Err(E7Error::InternalInconsistency(format!(
            "lines carry {used} weights"
        )));
    }
    if standard {
        lines.sort_by_key(|ln| ln.a);
    }
    Ok(FanoDecomposition {
        lagrangian: l.clone(),
        points,
        lines,
    })
}

/// For each positive root `α`, the number of signed weights with `(λ, α) = 0`
/// and with `(λ, α) = 1`.
pub fn root_multiplicities() -> Vec<(RootLabel, usize, usize)> {
    let ws = signed_weights();
    root_records()
        .iter()
        .map(|r| {
            let n0 = ws
                .iter()
                .filter(|&&w| weight_root_pairing(w, r.label) == 0)
                .count();
            let n1 = ws
                .iter()
                .filter(|&&w| weight_root_pairing(w, r.label) == 1)
                .count();
            (r.label, n0, n1)
        })
        .collect()
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for FanoDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "lagrangian {}", self.lagrangian)?;
        for p in &self.points {
            writeln!(f, "point {}  {}", p.v, p.root)?;
        }
        for ln in &self.lines {
            let a = ln.a.map_or_else(|| "-".to_string(), |a| a.to_string());
            writeln!(
                f,
                "line {a}  {}  |  {}  |  {}",
                join(&ln.points),
                join(&ln.roots),
                join(&ln.weights)
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2sym::enumerate_lagrangians;

    fn names<T: ToString>(xs: &[T]) -> Vec<String> {
        let mut v: Vec<String> = xs.iter().map(T::to_string).collect();
        v.sort();
        v
    }

    #[test]
    fn standard_lines() {
        let d = restriction_decomposition(&IsotropicSubspace::standard(3).unwrap()).unwrap();
        assert_eq!(
            d.lines.iter().map(|l| l.a).collect::<Vec<_>>(),
            (1..=7).map(Some).collect::<Vec<_>>()
        );
        let first = &d.lines[0];
        assert_eq!(names(&first.roots), ["R1238", "R1458", "R1678"]);
        assert_eq!(
            first
                .weights
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>(),
            ["W23", "W45", "W67", "W18"]
        );
        assert_eq!(
            d.lines[6]
                .weights
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>(),
            ["W16", "W24", "W35", "W78"]
        );
        let json = serde_json::to_value(&d).unwrap();
        assert_eq!(json["lagrangian"], "100:000,010:000,001:000");
        assert_eq!(json["lines"][0]["a"], 1);
        assert_eq!(json["points"][0]["v"], "001:000");
        assert_eq!(json["points"][0]["root"], "R3578");
    }

    #[test]
    fn every_lagrangian_partitions_the_weights() {
        for l in enumerate_lagrangians(3).unwrap() {
            let d = restriction_decomposition(&l).unwrap();
            assert_eq!(d.lines.len(), 7);
            let mut all: Vec<WeightLabel> =
                d.lines.iter().flat_map(|ln| ln.weights.clone()).collect();
            all.sort();
            all.dedup();
            assert_eq!(all.len(), 28);
            for ln in &d.lines {
                assert_eq!(ln.points.len(), 3);
                assert!((ln.points[0] + ln.points[1] + ln.points[2]).is_zero());
            }
            // 7 lines × 8 signed weights
            assert_eq!(
                d.lines.iter().map(|ln| 2 * ln.weights.len()).sum::<usize>(),
                56
            );
            if l != IsotropicSubspace::standard(3).unwrap() {
                assert!(d.lines.iter().all(|ln| ln.a.is_none()));
                assert!(serde_json::to_value(&d).unwrap()["lines"][0]
                    .get("a")
                    .is_none());
            }
        }
    }

    #[test]
    fn multiplicities() {
        let m = root_multiplicities();
        assert_eq!(m.len(), 63);
        assert!(m.iter().all(|&(_, n0, n1)| n0 == 32 && n1 == 12));
    }

    #[test]
    fn text_form() {
        let d = restriction_decomposition(&IsotropicSubspace::standard(3).unwrap()).unwrap();
        let text = d.to_string();
        assert!(text.starts_with("lagrangian 100:000,010:000,001:000\n"));
        assert!(text
            .contains("line 1  011:000 101:000 110:000  |  R1238 R1458 R1678  |  W23 W45 W67 W18"));
    }
}
