use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::heisenberg::CycloDyadic;

/// Coefficient ring for [`Polynomial`].
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(n: i64) -> Self;
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
}

impl Ring for CycloDyadic {
    fn zero() -> Self {
        CycloDyadic::ZERO
    }
    fn one() -> Self {
        CycloDyadic::ONE
    }
    fn is_zero(&self) -> bool {
        CycloDyadic::is_zero(self)
    }
    fn from_i64(n: i64) -> Self {
        CycloDyadic::from_int(n)
    }
}

/// A monomial as the sorted multiset of its variable indices.
pub type Monomial = Vec<u16>;

/// A polynomial in `X_σ` (index `σ`) and `Y_σ` (index `2^k + σ`), `σ ∈ L_k`.
///
/// Terms are kept in a `BTreeMap` keyed by monomial, so iteration order is
/// canonical and zero coefficients never appear.
#[derive(Clone, PartialEq)]
pub struct Polynomial<C> {
    k: u8,
    terms: BTreeMap<Monomial, C>,
}

/// Integer polynomials, the home of the forms `Q[ε,ε']` and `A[ε,ε']`.
pub type ExactPolynomial = Polynomial<BigInt>;

impl<C: Ring> Polynomial<C> {
    pub fn zero(k: u8) -> Self {
        Self {
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(k: u8, c: C) -> Self {
        let mut p = Self::zero(k);
        p.add_term(Vec::new(), c);
        p
    }

    pub fn x(k: u8, sigma: u8) -> Self {
        Self::monomial(k, vec![sigma as u16], C::one())
    }

    pub fn y(k: u8, sigma: u8) -> Self {
        Self::monomial(k, vec![(1u16 << k) + sigma as u16], C::one())
    }

    pub fn monomial(k: u8, mut vars: Monomial, c: C) -> Self {
        vars.sort_unstable();
        let mut p = Self::zero(k);
        p.add_term(vars, c);
        p
    }

    pub fn rank(&self) -> u8 {
        self.k
    }

    /// Number of variables, `X` and `Y` together.
    pub fn num_vars(&self) -> usize {
        2 << self.k
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &[u16]) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.k);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.k, C::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces variable `j` by `images[j]`.
    pub fn substitute(&self, images: &[Polynomial<C>]) -> Self {
        let mut out = Self::zero(self.k);
        for (m, c) in &self.terms {
            let mut term = Self::constant(self.k, c.clone());
            for &v in m {
                term = &term * &images[v as usize];
            }
            out = &out + &term;
        }
        out
    }

    /// Maps coefficients into another ring.
    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        let mut out = Polynomial::zero(self.k);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    fn var_name(&self, v: u16) -> String {
        let n = 1u16 << self.k;
        let (letter, sigma) = if v < n { ('X', v) } else { ('Y', v - n) };
        let bits: String = (0..self.k)
            .rev()
            .map(|i| if sigma >> i & 1 == 1 { '1' } else { '0' })
            .collect();
        format!("{letter}_{{{bits}}}")
    }

    fn monomial_text(&self, m: &[u16]) -> String {
        if m.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < m.len() {
            let run = m[i..].iter().take_while(|&&v| v == m[i]).count();
            let name = self.var_name(m[i]);
            parts.push(if run == 1 {
                name
            } else {
                format!("{name}^{run}")
            });
            i += run;
        }
        parts.join("·")
    }

    /// The sorted term list, each `"coef * X_{abc}·X_{def}"`.
    pub fn term_strings(&self) -> Vec<String> {
        self.terms
            .iter()
            .map(|(m, c)| format!("{c} * {}", self.monomial_text(m)))
            .collect()
    }
}

impl Polynomial<BigInt> {
    /// Exact conversion into the cyclotomic ring, for substitution by
    /// normalizer matrices.
    pub fn to_cyclo(&self) -> Polynomial<CycloDyadic> {
        self.map_coeffs(|c| CycloDyadic::from_int(c.to_i64().expect("coefficient fits in i64")))
    }
}

impl<C: Ring> Add for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn add(self, rhs: Self) -> Polynomial<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<C: Ring> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        self.scale(&-C::one())
    }
}

impl<C: Ring> std::ops::Sub for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn sub(self, rhs: Self) -> Polynomial<C> {
        self + &(-rhs)
    }
}

impl<C: Ring> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, rhs: Self) -> Polynomial<C> {
        let mut out = Polynomial::zero(self.k.max(rhs.k));
        for (ma, a) in &self.terms {
            for (mb, b) in &rhs.terms {
                let mut m = Vec::with_capacity(ma.len() + mb.len());
                // merge two sorted lists
                let (mut i, mut j) = (0, 0);
                while i < ma.len() || j < mb.len() {
                    if j == mb.len() || (i < ma.len() && ma[i] <= mb[j]) {
                        m.push(ma[i]);
                        i += 1;
                    } else {
                        m.push(mb[j]);
                        j += 1;
                    }
                }
                out.add_term(m, a.clone() * b.clone());
            }
        }
        out
    }
}

impl<C: Ring> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&self.term_strings().join(" + "))
    }
}

impl<C: Ring> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<C: Ring> serde::Serialize for Polynomial<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.term_strings().serialize(s)
    }
}
