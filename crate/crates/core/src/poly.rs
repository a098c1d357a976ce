//! Exponent vectors and sparse polynomials with exact rational coefficients.
//!
//! A [`Poly`] is only a finite map from monomials to coefficients. Whether it
//! lives in a skew ring `R` (as a standard expression) or in the commutative
//! ring `S = gr(R)` is decided by the presentation it is used with.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_vec(xs: &[i64]) -> Vec<Rat> {
    xs.iter().map(|&x| rat(x)).collect()
}

pub fn dot(w: &[Rat], e: &[u32]) -> Rat {
    debug_assert_eq!(w.len(), e.len());
    let mut acc = Rat::zero();
    for (wi, &ei) in w.iter().zip(e) {
        if ei != 0 && !wi.is_zero() {
            acc += wi * Rat::from_integer(BigInt::from(ei));
        }
    }
    acc
}

pub fn dot_rat(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

/// Exponent vector of a standard monomial `x^a y^b`, stored as one vector
/// with the `x` block first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// True when `self` divides `other` componentwise.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(
                other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect(),
            ))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn weighted_degree(&self, w: &[Rat]) -> Rat {
        dot(w, &self.0)
    }

    /// Indices of variables with nonzero exponent.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub(crate) fn exps_mut(&mut self) -> &mut Vec<u32> {
        &mut self.0
    }
}

/// Sparse polynomial: monomial → nonzero rational coefficient.
///
/// Iteration order is the lexicographic order of exponent vectors, so all
/// printing and hashing is deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn term(m: Monomial, c: Rat) -> Self {
        let mut p = Poly::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(Monomial::var(nvars, i), Rat::one())
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut p = Poly::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        assert_eq!(m.nvars(), self.nvars, "monomial arity mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &Poly, c: &Rat) {
        if c.is_zero() {
            return;
        }
        for (m, k) in &other.terms {
            self.add_term(m.clone(), k * c);
        }
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    /// Multiply every monomial by `m` (no coefficient change).
    pub fn shift(&self, m: &Monomial) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    /// Product in the commutative polynomial ring.
    pub fn mul_commutative(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow_commutative(&self, e: u32) -> Poly {
        let mut out = Poly::one(self.nvars);
        for _ in 0..e {
            out = out.mul_commutative(self);
        }
        out
    }

    /// Maximum of `w · e` over the support; `None` for the zero polynomial.
    pub fn max_weight(&self, w: &[Rat]) -> Option<Rat> {
        self.terms.keys().map(|m| m.weighted_degree(w)).max()
    }

    /// Sum of the terms of maximal `w`-weight.
    pub fn top_part(&self, w: &[Rat]) -> Poly {
        let Some(top) = self.max_weight(w) else {
            return Poly::zero(self.nvars);
        };
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weighted_degree(w) == top)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous(&self, w: &[Rat]) -> bool {
        let mut it = self.terms.keys().map(|m| m.weighted_degree(w));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn map_monomials(&self, nvars: usize, f: impl Fn(&Monomial) -> Monomial) -> Poly {
        let mut out = Poly::zero(nvars);
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }

    /// Insert a new variable at position `idx` with exponent `e(m)`.
    pub fn insert_var(&self, idx: usize, e: impl Fn(&Monomial) -> u32) -> Poly {
        self.map_monomials(self.nvars + 1, |m| {
            let mut v = m.exps().to_vec();
            v.insert(idx, e(m));
            Monomial::new(v)
        })
    }

    /// Drop the variable at `idx` (substitute it by 1).
    pub fn remove_var(&self, idx: usize) -> Poly {
        self.map_monomials(self.nvars - 1, |m| {
            let mut v = m.exps().to_vec();
            v.remove(idx);
            Monomial::new(v)
        })
    }

    /// Largest power of variable `idx` dividing every term.
    pub fn var_content(&self, idx: usize) -> u32 {
        self.terms.keys().map(|m| m.exps()[idx]).min().unwrap_or(0)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Constant term when the polynomial is a nonzero constant.
    pub fn as_constant(&self) -> Option<&Rat> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_one() {
                return Some(c);
            }
        }
        None
    }

    /// Degree in the variables `range`.
    pub fn partial_degree(&self, range: std::ops::Range<usize>) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| m.exps()[range.clone()].iter().sum())
            .max()
    }

    /// Renders with the given variable names, largest monomial first.
    pub fn fmt_with(&self, names: &[String]) -> String {
        self.fmt_terms(names, self.terms.iter().rev())
    }

    /// Renders terms in the given order.
    pub fn fmt_terms<'a>(
        &self,
        names: &[String],
        terms: impl Iterator<Item = (&'a Monomial, &'a Rat)>,
    ) -> String {
        let mut s = String::new();
        for (i, (m, c)) in terms.enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = fmt_monomial(m, names);
            if mono.is_empty() {
                s.push_str(&abs.to_string());
            } else if abs.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&abs.to_string());
                s.push('*');
                s.push_str(&mono);
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

pub fn fmt_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[i].clone()),
            _ => parts.push(format!("{}^{}", names[i], e)),
        }
    }
    parts.join("*")
}

pub(crate) fn ser_rat<S: serde::Serializer>(x: &Rat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

pub(crate) fn ser_rat_vec<S: serde::Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

pub fn fmt_rat_vec(v: &[Rat]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("z{}", i)).collect();
        f.write_str(&self.fmt_with(&names))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, &Rat::one());
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, &-Rat::one());
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rat::one())
    }
}

/// Primitive integer direction of a rational vector (positive rescaling only).
pub fn primitive(v: &[Rat]) -> Vec<Rat> {
    use num_integer::Integer;
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return v.to_vec();
    }
    ints.into_iter().map(|x| Rat::from_integer(x / &g)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_cancels_to_zero() {
        let x = Poly::var(2, 0);
        assert!((&x - &x).is_zero());
    }

    #[test]
    fn formatting() {
        let names = vec!["x".to_string(), "y".to_string()];
        let p = Poly::from_terms(
            2,
            [
                (Monomial::new(vec![2, 0]), rat(1)),
                (Monomial::new(vec![0, 1]), rat(-3)),
                (Monomial::new(vec![0, 0]), rat_frac(1, 2)),
            ],
        );
        assert_eq!(p.fmt_with(&names), "x^2 - 3*y + 1/2");
    }

    #[test]
    fn primitive_vectors() {
        let v = vec![rat_frac(1, 2), rat(-1), rat_frac(3, 2)];
        assert_eq!(primitive(&v), rat_vec(&[1, -2, 3]));
    }

    #[test]
    fn divisibility() {
        let a = Monomial::new(vec![1, 2]);
        let b = Monomial::new(vec![2, 2]);
        assert!(a.divides(&b));
        assert_eq!(a.quotient_of(&b), Some(Monomial::new(vec![1, 0])));
        assert_eq!(b.quotient_of(&a), None);
    }
}
