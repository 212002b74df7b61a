use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::vector::{check_rank, SympVector};
use super::F2Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(b: u8) -> Self {
        if b & 1 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// The quadratic form `q_w(v) = x*(x) + E(v, w)` on `V_k`.
///
/// The label `w = (ε, ε')` also names the symmetric form `Q[ε,ε']` (even
/// labels) or the alternating form `A[ε,ε']` (odd labels).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadLabel {
    w: SympVector,
    parity: Parity,
}

impl QuadLabel {
    pub fn new(w: SympVector) -> Self {
        Self {
            w,
            parity: Parity::from_bit(w.self_pairing()),
        }
    }

    /// Builds a label with a declared parity, rejecting a mismatch.
    pub fn with_parity(w: SympVector, parity: Parity) -> Result<Self, F2Error> {
        let label = Self::new(w);
        if label.parity != parity {
            return Err(F2Error::ParityMismatch(w.to_string()));
        }
        Ok(label)
    }

    pub fn label(&self) -> SympVector {
        self.w
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn rank(&self) -> u8 {
        self.w.rank()
    }

    #[inline]
    pub fn eval(&self, v: SympVector) -> u8 {
        v.self_pairing() ^ v.pairing(self.w)
    }

    /// Number of vectors (including 0) where the form vanishes.
    pub fn zero_count(&self) -> usize {
        SympVector::all(self.rank())
            .expect("valid rank")
            .filter(|&v| self.eval(v) == 0)
            .count()
    }
}

pub fn quad_eval(q: QuadLabel, v: SympVector) -> Result<u8, F2Error> {
    q.w.same_rank(v)?;
    Ok(q.eval(v))
}

/// The form `u ↦ q(t_v(u))`: `q_w` itself when `q_w(v) = 1`, else `q_{v+w}`.
pub fn quad_transform(v: SympVector, q: QuadLabel) -> Result<QuadLabel, F2Error> {
    q.w.same_rank(v)?;
    Ok(if q.eval(v) == 1 {
        q
    } else {
        QuadLabel::new(q.w + v)
    })
}

/// All labels of the given parity in packed-word order, each paired with its
/// number of zeros.
pub fn enumerate_quad_forms(k: u8, parity: Parity) -> Result<Vec<(QuadLabel, usize)>, F2Error> {
    check_rank(k)?;
    Ok(SympVector::all(k)?
        .map(QuadLabel::new)
        .filter(|q| q.parity == parity)
        .map(|q| (q, q.zero_count()))
        .collect())
}

/// `2^{k-1}(2^k+1)` for even forms and `2^{k-1}(2^k-1)` for odd ones: both the
/// number of labels of that parity and the zero count of each.
pub fn expected_class_size(k: u8, parity: Parity) -> usize {
    let half = 1usize << (k - 1);
    let full = 1usize << k;
    match parity {
        Parity::Even => half * (full + 1),
        Parity::Odd => half * (full - 1),
    }
}

impl fmt::Display for QuadLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.parity {
            Parity::Even => "Q",
            Parity::Odd => "A",
        };
        write!(f, "{tag}[{}]", self.w)
    }
}

impl fmt::Debug for QuadLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for QuadLabel {
    type Err = F2Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || F2Error::Parse(s.to_string());
        let parity = match s.get(..2) {
            Some("Q[") => Parity::Even,
            Some("A[") => Parity::Odd,
            _ => return Err(bad()),
        };
        let inner = s[2..].strip_suffix(']').ok_or_else(bad)?;
        Self::with_parity(inner.parse()?, parity)
    }
}

impl Serialize for QuadLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for QuadLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> SympVector {
        s.parse().unwrap()
    }

    #[test]
    fn eval_examples() {
        let q0 = QuadLabel::new(v("000:000"));
        assert_eq!(quad_eval(q0, v("101:100")).unwrap(), 1);
        let qw = QuadLabel::new(v("101:110"));
        assert_eq!(qw.parity(), Parity::Odd);
        for s in [
            "101:100", "011:000", "111:111", "101:001", "001:111", "101:011",
        ] {
            assert_eq!(qw.eval(v(s)), 1, "{s}");
        }
        // closed form x*(x) + x1 + x2 + x*1 + x*3
        for u in SympVector::all(3).unwrap() {
            let (x, xs) = (u.x(), u.xstar());
            let expect = u.self_pairing() ^ (x >> 2 & 1) ^ (x >> 1 & 1) ^ (xs >> 2 & 1) ^ (xs & 1);
            assert_eq!(qw.eval(u), expect);
        }
        for k in 1..=4 {
            for w in SympVector::all(k).unwrap() {
                assert_eq!(QuadLabel::new(w).eval(SympVector::zero(k).unwrap()), 0);
            }
        }
    }

    #[test]
    fn transform_fixed_when_form_is_one() {
        for w in SympVector::all(3).unwrap() {
            let q = QuadLabel::new(w);
            for t in SympVector::all(3).unwrap() {
                let out = quad_transform(t, q).unwrap();
                if q.eval(t) == 1 {
                    assert_eq!(out, q);
                }
                assert_eq!(out.parity(), q.parity());
                // pointwise: out(u) = q(t_v(u))
                for u in SympVector::all(3).unwrap() {
                    assert_eq!(out.eval(u), q.eval(t.transvect(u)));
                }
            }
        }
    }

    #[test]
    fn transform_moves_label() {
        let q0 = QuadLabel::new(v("000:000"));
        let out = quad_transform(v("110:000"), q0).unwrap();
        assert_eq!(out.label(), v("110:000"));
        assert_eq!(
            quad_transform(v("000:000"), QuadLabel::new(v("101:110")))
                .unwrap()
                .label(),
            v("101:110")
        );
    }

    #[test]
    fn label_shift_identity_k2_exhaustive() {
        let all: Vec<_> = SympVector::all(2).unwrap().collect();
        for &u in &all {
            for &w in &all {
                for &x in &all {
                    let lhs = QuadLabel::new(u + w).eval(x);
                    assert_eq!(lhs, QuadLabel::new(w).eval(x) ^ x.pairing(u));
                    // polarization
                    let q = QuadLabel::new(w);
                    assert_eq!(q.eval(u + x), q.eval(u) ^ q.eval(x) ^ u.pairing(x));
                }
            }
        }
    }

    #[test]
    fn counts_match_formulas() {
        for k in 1..=4 {
            for parity in [Parity::Even, Parity::Odd] {
                let forms = enumerate_quad_forms(k, parity).unwrap();
                let n = expected_class_size(k, parity);
                assert_eq!(forms.len(), n);
                assert!(forms.iter().all(|&(_, z)| z == n));
            }
        }
        let even3 = enumerate_quad_forms(3, Parity::Even).unwrap();
        assert_eq!((even3.len(), even3[0].1), (36, 36));
        let odd3 = enumerate_quad_forms(3, Parity::Odd).unwrap();
        assert_eq!((odd3.len(), odd3[0].1), (28, 28));
        let odd1 = enumerate_quad_forms(1, Parity::Odd).unwrap();
        assert_eq!(odd1.len(), 1);
        assert_eq!(odd1[0].0.label(), v("1:1"));
        let zeros: Vec<_> = SympVector::all(1)
            .unwrap()
            .filter(|&u| odd1[0].0.eval(u) == 0)
            .collect();
        assert_eq!(zeros, vec![v("0:0")]);
    }

    #[test]
    fn transitivity_by_connecting_transvection() {
        for k in 1..=3 {
            let labels: Vec<_> = SympVector::all(k).unwrap().map(QuadLabel::new).collect();
            for a in &labels {
                for b in labels.iter().filter(|b| b.parity() == a.parity()) {
                    let t = a.label() + b.label();
                    assert_eq!(quad_transform(t, *a).unwrap(), *b);
                }
            }
        }
    }

    #[test]
    fn text_forms() {
        let q: QuadLabel = "A[101:110]".parse().unwrap();
        assert_eq!(q.to_string(), "A[101:110]");
        assert_eq!(
            "Q[00:11]".parse::<QuadLabel>().unwrap().parity(),
            Parity::Even
        );
        assert!("Q[101:110]".parse::<QuadLabel>().is_err());
        assert!("X[1:0]".parse::<QuadLabel>().is_err());
    }
}
