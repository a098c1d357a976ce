//! Homogenization by a central degree-one element `x0`.
//!
//! For an integer weight `(u, v)` in the polynomial region, the Rees ring is
//! the almost centralizing extension of `B[x0]` whose relation entries carry
//! the powers of `x0` that make every relation `(1, u, v)`-homogeneous. The
//! new variable sits at index 0, shifting every original index by one.

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::filtration::{pr_contains, WeightVector};
use crate::poly::{Monomial, Poly, Rat};
use crate::ring::RingPresentation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReesPresentation {
    base: RingPresentation,
    ring: RingPresentation,
    weight: WeightVector,
}

fn to_u32(x: &Rat) -> u32 {
    x.to_integer().try_into().expect("x0 exponent fits in u32")
}

impl ReesPresentation {
    /// The original ring `R`.
    pub fn base(&self) -> &RingPresentation {
        &self.base
    }

    /// The Rees ring, with `x0` as its first `x` generator.
    pub fn ring(&self) -> &RingPresentation {
        &self.ring
    }

    pub fn weight(&self) -> &WeightVector {
        &self.weight
    }

    /// The grading `(1, u, v)` of the Rees ring.
    pub fn grading(&self) -> Vec<Rat> {
        let mut g = vec![Rat::from_integer(1.into())];
        g.extend(self.weight.flat());
        g
    }

    /// Homogenizes a nonzero element of `R`: each term `x^a y^b` is multiplied
    /// by `x0^(d - u·a - v·b)` where `d` is the degree of `f`.
    pub fn homogenize(&self, f: &Poly) -> Result<Poly> {
        self.base.check_poly(f)?;
        let w = self.weight.flat();
        let d = f.max_weight(&w).ok_or(Error::ZeroPolynomial)?;
        Ok(f.insert_var(0, |m| to_u32(&(&d - m.weighted_degree(&w)))))
    }

    /// Substitutes `x0 = 1`.
    pub fn dehomogenize(&self, f: &Poly) -> Poly {
        f.remove_var(0)
    }

    /// Lifts an exponent vector of `R` to the Rees ring with `x0` power `k`.
    pub fn lift_monomial(&self, m: &Monomial, k: u32) -> Monomial {
        let mut e = m.exps().to_vec();
        e.insert(0, k);
        Monomial::new(e)
    }
}

/// Builds the Rees ring of `ring` for an integer weight in its polynomial
/// region.
pub fn rees_presentation(ring: &RingPresentation, w: &WeightVector) -> Result<ReesPresentation> {
    w.check(ring)?;
    if !w.is_integral() {
        return Err(Error::NonIntegerWeight);
    }
    if !pr_contains(ring, w)? {
        return Err(Error::NotInPolynomialRegion);
    }
    let (m, n) = (ring.m(), ring.n());
    let nv = m + n + 1;
    let wf = w.flat();
    let lift = |q: &Poly, product_deg: Rat| -> Poly {
        q.insert_var(0, |mono| {
            let k = &product_deg - mono.weighted_degree(&wf);
            debug_assert!(!k.is_negative());
            to_u32(&k)
        })
    };
    let (mut q1, mut q2) = RingPresentation::zero_tables(m + 1, n);
    for i in 0..n {
        for j in 0..m {
            let d = &wf[m + i] + &wf[j];
            q1[i][j + 1] = lift(ring.q1(i, j), d);
        }
        for j in 0..n {
            let d = &wf[m + i] + &wf[m + j];
            q2[i][j] = lift(ring.q2(i, j), d);
        }
    }
    debug_assert!(q1.iter().flatten().all(|p| p.nvars() == nv || p.is_zero()));
    let mut names = vec!["x0".to_string()];
    names.extend(ring.names().iter().cloned());
    let rees = RingPresentation::new(m + 1, n, q1, q2)?.with_names(names)?;
    Ok(ReesPresentation {
        base: ring.clone(),
        ring: rees,
        weight: w.clone(),
    })
}

/// Free-function form of [`ReesPresentation::homogenize`].
pub fn homogenize(rees: &ReesPresentation, f: &Poly) -> Result<Poly> {
    rees.homogenize(f)
}

/// Free-function form of [`ReesPresentation::dehomogenize`].
pub fn dehomogenize(rees: &ReesPresentation, f: &Poly) -> Poly {
    rees.dehomogenize(f)
}
