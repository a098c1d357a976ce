//! Weight vectors, filtration degrees, initial forms and the polynomial region.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{dot_rat, fmt_rat_vec, primitive, rat, Poly, Rat};
use crate::ring::RingPresentation;

/// A weight `(u, v)` on the generators `x_1..x_m, y_1..y_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector {
    pub u: Vec<Rat>,
    pub v: Vec<Rat>,
}

impl WeightVector {
    pub fn new(u: Vec<Rat>, v: Vec<Rat>) -> Self {
        WeightVector { u, v }
    }

    /// Splits a flat vector `(u, v)` after the first `m` entries.
    pub fn from_flat(m: usize, w: &[Rat]) -> Self {
        WeightVector {
            u: w[..m].to_vec(),
            v: w[m..].to_vec(),
        }
    }

    pub fn from_ints(m: usize, w: &[i64]) -> Self {
        let w: Vec<Rat> = w.iter().map(|&x| rat(x)).collect();
        Self::from_flat(m, &w)
    }

    pub fn flat(&self) -> Vec<Rat> {
        self.u.iter().chain(&self.v).cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.u.len() + self.v.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_integral(&self) -> bool {
        self.u.iter().chain(&self.v).all(|x| x.is_integer())
    }

    pub fn is_positive(&self) -> bool {
        self.u.iter().chain(&self.v).all(|x| x.is_positive())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.u.iter().chain(&self.v).all(|x| !x.is_negative())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        WeightVector {
            u: self.u.iter().map(|x| x * c).collect(),
            v: self.v.iter().map(|x| x * c).collect(),
        }
    }

    pub(crate) fn check(&self, ring: &RingPresentation) -> Result<()> {
        if self.u.len() != ring.m() {
            return Err(Error::DimensionMismatch {
                expected: ring.m(),
                got: self.u.len(),
            });
        }
        if self.v.len() != ring.n() {
            return Err(Error::DimensionMismatch {
                expected: ring.n(),
                got: self.v.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", fmt_rat_vec(&self.flat()))
    }
}

/// Filtration degree of `f`: the largest `⌈u⌉·a + ⌈v⌉·b` over its terms, or
/// `None` (standing for −∞) when `f = 0`.
pub fn degree(ring: &RingPresentation, f: &Poly, w: &WeightVector) -> Result<Option<Rat>> {
    w.check(ring)?;
    ring.check_poly(f)?;
    let ceil: Vec<Rat> = w.flat().iter().map(|x| x.ceil()).collect();
    Ok(f.max_weight(&ceil))
}

/// Sum of the terms of `f` of maximal `w`-weight, read as an element of
/// `S = k[x̄, ȳ]`. Uses the raw rational weight.
pub fn initial_form(ring: &RingPresentation, f: &Poly, w: &WeightVector) -> Result<Poly> {
    w.check(ring)?;
    ring.check_poly(f)?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(f.top_part(&w.flat()))
}

/// `coeffs · (u, v) + constant`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LinearForm {
    #[serde(serialize_with = "crate::poly::ser_rat_vec")]
    pub coeffs: Vec<Rat>,
    #[serde(serialize_with = "crate::poly::ser_rat")]
    pub constant: Rat,
}

impl LinearForm {
    pub fn homogeneous(coeffs: Vec<Rat>) -> Self {
        LinearForm {
            coeffs,
            constant: Rat::zero(),
        }
    }

    pub fn eval(&self, w: &[Rat]) -> Rat {
        dot_rat(&self.coeffs, w) + &self.constant
    }

    /// Renders `L > 0` with negative terms moved to the right, e.g.
    /// `v1 + v3 > v2`.
    pub fn fmt_strict(&self, names: &[String]) -> String {
        let mut lhs = Vec::new();
        let mut rhs = Vec::new();
        for (c, name) in self.coeffs.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            let a = c.abs();
            let t = if a.is_one() {
                name.clone()
            } else {
                format!("{}*{}", a, name)
            };
            if c.is_positive() {
                lhs.push(t);
            } else {
                rhs.push(t);
            }
        }
        if self.constant.is_positive() {
            lhs.push(self.constant.to_string());
        } else if self.constant.is_negative() {
            rhs.push((-&self.constant).to_string());
        }
        let side = |v: Vec<String>| {
            if v.is_empty() {
                "0".to_string()
            } else {
                v.join(" + ")
            }
        };
        format!("{} > {}", side(lhs), side(rhs))
    }
}

/// A finite system of strict inequalities `L(u, v) > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HalfspaceSystem {
    pub names: Vec<String>,
    pub strict: Vec<LinearForm>,
}

impl HalfspaceSystem {
    pub fn contains(&self, w: &[Rat]) -> bool {
        self.strict.iter().all(|l| l.eval(w).is_positive())
    }

    pub fn is_empty(&self) -> bool {
        self.strict.is_empty()
    }
}

impl fmt::Display for HalfspaceSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .strict
            .iter()
            .map(|l| l.fmt_strict(&self.names))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

/// Weight-space coordinate names `u1..um, v1..vn`.
pub fn weight_names(ring: &RingPresentation) -> Vec<String> {
    (1..=ring.m())
        .map(|j| format!("u{}", j))
        .chain((1..=ring.n()).map(|i| format!("v{}", i)))
        .collect()
}

/// The inequalities `deg(product) − deg(term) > 0`, one per monomial of each
/// relation entry, as primitive integer vectors, deduplicated and sorted.
pub fn pr_halfspaces(ring: &RingPresentation) -> HalfspaceSystem {
    let mut forms: Vec<LinearForm> = Vec::new();
    for (product, q) in ring.relations() {
        for mono in q.monomials() {
            let diff: Vec<Rat> = product
                .exps()
                .iter()
                .zip(mono.exps())
                .map(|(&a, &b)| Rat::from_integer(BigInt::from(a as i64 - b as i64)))
                .collect();
            let f = LinearForm::homogeneous(primitive(&diff));
            if !forms.contains(&f) {
                forms.push(f);
            }
        }
    }
    forms.sort_by(|a, b| b.cmp(a));
    HalfspaceSystem {
        names: weight_names(ring),
        strict: forms,
    }
}

pub fn pr_contains(ring: &RingPresentation, w: &WeightVector) -> Result<bool> {
    w.check(ring)?;
    Ok(pr_halfspaces(ring).contains(&w.flat()))
}

/// `(1, p·1)` with `p` one more than the largest `x`-degree of a relation
/// entry. Positive and inside the polynomial region.
pub fn pr_sample_positive(ring: &RingPresentation) -> WeightVector {
    let m = ring.m();
    let p = ring
        .relations()
        .iter()
        .filter_map(|(_, q)| q.partial_degree(0..m))
        .max()
        .unwrap_or(0)
        + 1;
    WeightVector {
        u: vec![Rat::one(); m],
        v: vec![rat(p as i64); ring.n()],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat_vec, Monomial};

    #[test]
    fn degree_of_zero_is_minus_infinity() {
        let a2 = RingPresentation::weyl(2).unwrap();
        let w = WeightVector::from_ints(2, &[1, 1, 1, 3]);
        assert_eq!(degree(&a2, &Poly::zero(4), &w).unwrap(), None);
        let x2y2 = Poly::term(Monomial::new(vec![0, 1, 0, 1]), rat(1));
        assert_eq!(degree(&a2, &x2y2, &w).unwrap(), Some(rat(4)));
    }

    #[test]
    fn ceiling_applies_to_degree_only() {
        let a1 = RingPresentation::weyl(1).unwrap();
        let w = WeightVector::new(rat_vec(&[1]), vec![crate::poly::rat_frac(1, 2)]);
        let y = Poly::var(2, 1);
        assert_eq!(degree(&a1, &y, &w).unwrap(), Some(rat(1)));
        let f = &y + &Poly::one(2);
        assert_eq!(initial_form(&a1, &f, &w).unwrap(), y);
    }

    #[test]
    fn sl2_region_text() {
        let r = RingPresentation::sl2();
        assert_eq!(pr_halfspaces(&r).to_string(), "v1 + v3 > v2, v2 > 0");
    }

    #[test]
    fn weyl_region_text() {
        let r = RingPresentation::weyl(2).unwrap();
        assert_eq!(pr_halfspaces(&r).to_string(), "u1 + v1 > 0, u2 + v2 > 0");
    }
}
