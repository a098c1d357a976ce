//! Multiplicative monomial orders: weight refinements of a base term order,
//! and the lift of such an order to a Rees ring.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly, Rat};
use crate::ring::RingPresentation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseOrder {
    Lex,
    GrLex,
    GRevLex,
}

impl FromStr for BaseOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "lex" => Ok(BaseOrder::Lex),
            "grlex" | "deglex" => Ok(BaseOrder::GrLex),
            "grevlex" | "degrevlex" => Ok(BaseOrder::GRevLex),
            other => Err(Error::InvalidInput(format!("unknown order '{}'", other))),
        }
    }
}

impl fmt::Display for BaseOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BaseOrder::Lex => "lex",
            BaseOrder::GrLex => "grlex",
            BaseOrder::GRevLex => "grevlex",
        })
    }
}

/// Monomials are compared by each weight vector in turn, then by the base
/// order on the variables listed in `priority` (most significant first).
///
/// A lifted order lives on a Rees ring whose variable 0 is `x0`: `x0` is
/// ignored by the base comparison and only breaks the remaining ties, where
/// the smaller power of `x0` is the larger monomial. On elements homogeneous
/// for a positive grading this is exactly the order used to compute with a
/// weight that has negative entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    nvars: usize,
    base: BaseOrder,
    priority: Vec<usize>,
    weights: Vec<Vec<Rat>>,
    lifted: bool,
}

impl MonomialOrder {
    /// Base order with natural priority `x1 > .. > xm > y1 > .. > yn`.
    pub fn new(base: BaseOrder, nvars: usize) -> Self {
        MonomialOrder {
            nvars,
            base,
            priority: (0..nvars).collect(),
            weights: Vec::new(),
            lifted: false,
        }
    }

    pub fn grevlex(nvars: usize) -> Self {
        Self::new(BaseOrder::GRevLex, nvars)
    }

    /// Replaces the variable priority; `priority` must be a permutation.
    pub fn with_priority(mut self, priority: Vec<usize>) -> Result<Self> {
        let mut sorted = priority.clone();
        sorted.sort_unstable();
        let expected: Vec<usize> = self.base_vars().collect();
        if sorted != expected {
            return Err(Error::InvalidInput(
                "variable priority must be a permutation".into(),
            ));
        }
        self.priority = priority;
        Ok(self)
    }

    /// `≺_w`: compare by `w` first, then by `self`.
    pub fn refine(&self, w: &[Rat]) -> Self {
        assert_eq!(w.len(), self.nvars, "weight length");
        let mut out = self.clone();
        out.weights.insert(0, w.to_vec());
        out
    }

    /// The lift of `self` to the Rees ring with `x0` prepended.
    pub fn lift(&self) -> Self {
        assert!(!self.lifted, "order is already lifted");
        MonomialOrder {
            nvars: self.nvars + 1,
            base: self.base,
            priority: self.priority.iter().map(|&i| i + 1).collect(),
            weights: self
                .weights
                .iter()
                .map(|w| {
                    let mut v = vec![Rat::zero()];
                    v.extend(w.iter().cloned());
                    v
                })
                .collect(),
            lifted: true,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn base(&self) -> BaseOrder {
        self.base
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn weights(&self) -> &[Vec<Rat>] {
        &self.weights
    }

    pub fn is_lifted(&self) -> bool {
        self.lifted
    }

    fn base_vars(&self) -> std::ops::Range<usize> {
        if self.lifted {
            1..self.nvars
        } else {
            0..self.nvars
        }
    }

    /// True when `1` is the smallest monomial, i.e. the order is a well order.
    pub fn is_term_order(&self) -> bool {
        if self.lifted {
            return false;
        }
        (0..self.nvars).all(|i| {
            match self.weights.iter().map(|w| &w[i]).find(|c| !c.is_zero()) {
                Some(c) => c.is_positive(),
                None => true,
            }
        })
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exps(), b.exps());
        for w in &self.weights {
            let o = a.weighted_degree(w).cmp(&b.weighted_degree(w));
            if o != Ordering::Equal {
                return o;
            }
        }
        let o = self.cmp_base(ea, eb);
        if o != Ordering::Equal {
            return o;
        }
        if self.lifted {
            eb[0].cmp(&ea[0])
        } else {
            Ordering::Equal
        }
    }

    fn cmp_base(&self, ea: &[u32], eb: &[u32]) -> Ordering {
        let deg = |e: &[u32]| self.priority.iter().map(|&i| e[i] as u64).sum::<u64>();
        match self.base {
            BaseOrder::Lex => self.lex(ea, eb),
            BaseOrder::GrLex => deg(ea).cmp(&deg(eb)).then_with(|| self.lex(ea, eb)),
            BaseOrder::GRevLex => deg(ea).cmp(&deg(eb)).then_with(|| {
                for &i in self.priority.iter().rev() {
                    let o = eb[i].cmp(&ea[i]);
                    if o != Ordering::Equal {
                        return o;
                    }
                }
                Ordering::Equal
            }),
        }
    }

    fn lex(&self, ea: &[u32], eb: &[u32]) -> Ordering {
        for &i in &self.priority {
            let o = ea[i].cmp(&eb[i]);
            if o != Ordering::Equal {
                return o;
            }
        }
        Ordering::Equal
    }

    /// Leading monomial and coefficient of a nonzero polynomial.
    pub fn lead<'a>(&self, f: &'a Poly) -> Option<(&'a Monomial, &'a Rat)> {
        f.terms().max_by(|x, y| self.cmp(x.0, y.0))
    }

    pub fn lead_monomial(&self, f: &Poly) -> Option<Monomial> {
        self.lead(f).map(|(m, _)| m.clone())
    }

    /// Renders `f` with terms in decreasing order.
    pub fn fmt_poly(&self, f: &Poly, names: &[String]) -> String {
        let mut terms: Vec<_> = f.terms().collect();
        terms.sort_by(|x, y| self.cmp(y.0, x.0));
        f.fmt_terms(names, terms.into_iter())
    }
}

/// Conditions (M1)/(M2): every monomial of a relation entry is smaller than
/// the product monomial it corrects.
pub fn validate_order(ring: &RingPresentation, ord: &MonomialOrder) -> bool {
    if ord.nvars() != ring.nvars() {
        return false;
    }
    ring.relations().iter().all(|(product, q)| {
        q.monomials()
            .all(|m| ord.cmp(m, product) == Ordering::Less)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, rat_vec};

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn grevlex_vs_grlex() {
        let gl = MonomialOrder::new(BaseOrder::GrLex, 3);
        let grl = MonomialOrder::grevlex(3);
        // x*z^2 vs y^3
        let (a, b) = (mono(&[1, 0, 2]), mono(&[0, 3, 0]));
        assert_eq!(gl.cmp(&a, &b), Ordering::Greater);
        assert_eq!(grl.cmp(&a, &b), Ordering::Less);
    }

    #[test]
    fn weight_refinement_and_term_order() {
        let o = MonomialOrder::grevlex(2).refine(&rat_vec(&[1, -1]));
        assert!(!o.is_term_order());
        assert_eq!(o.cmp(&mono(&[0, 1]), &mono(&[0, 0])), Ordering::Less);
        let o = MonomialOrder::grevlex(2).refine(&rat_vec(&[0, 0]));
        assert!(o.is_term_order());
        let o = MonomialOrder::grevlex(2)
            .refine(&rat_vec(&[-5, 1]))
            .refine(&rat_vec(&[1, 0]));
        assert!(o.is_term_order());
    }

    #[test]
    fn lifted_order_prefers_small_x0() {
        let o = MonomialOrder::grevlex(1).refine(&[rat(1)]).lift();
        assert!(!o.is_term_order());
        assert_eq!(o.cmp(&mono(&[0, 1]), &mono(&[3, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&mono(&[5, 2]), &mono(&[0, 1])), Ordering::Greater);
    }

    #[test]
    fn sl2_order_conditions() {
        let r = RingPresentation::sl2();
        let bad = MonomialOrder::new(BaseOrder::Lex, 3)
            .with_priority(vec![1, 0, 2])
            .unwrap();
        assert!(!validate_order(&r, &bad));
        assert!(validate_order(&r, &MonomialOrder::new(BaseOrder::GrLex, 3)));
        let a2 = RingPresentation::weyl(2).unwrap();
        assert!(validate_order(&a2, &MonomialOrder::new(BaseOrder::Lex, 4)));
    }
}
