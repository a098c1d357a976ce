//! Weighted Hilbert series of `S/J` for monomial ideals `J`, and the
//! quasi-polynomials describing their coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::poly::{Monomial, Rat};

/// `numerator(t) / ∏ (1 - t^c)` over the entries `c` of `denominator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    /// Coefficients of `t^0, t^1, ...`.
    pub numerator: Vec<BigInt>,
    pub denominator: Vec<u32>,
}

fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn sub_shifted(a: &mut Vec<BigInt>, b: &[BigInt], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, BigInt::zero());
    }
    for (k, c) in b.iter().enumerate() {
        a[k + shift] -= c;
    }
}

/// Numerator of the series of `S/J` over `∏ (1 - t^w_i)`, by splitting off
/// one generator at a time: `N(J + m) = N(J) - t^deg(m) N(J : m)`.
fn numerator(gens: &[Monomial], weights: &[u32]) -> Vec<BigInt> {
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if gens.iter().any(Monomial::is_one) {
        return Vec::new();
    }
    let nv = weights.len();
    let (last, rest) = gens.split_last().unwrap();
    let base = MonomialIdeal::new(nv, rest.iter().cloned());
    let mut n = numerator(base.gens(), weights);
    let colon = base.quotient(last);
    let deg: u64 = last
        .exps()
        .iter()
        .zip(weights)
        .map(|(&e, &w)| e as u64 * w as u64)
        .sum();
    let q = if colon.is_zero() {
        vec![BigInt::one()]
    } else {
        numerator(colon.gens(), weights)
    };
    sub_shifted(&mut n, &q, deg as usize);
    trim(n)
}

pub fn hilbert_series_monomial(j: &MonomialIdeal, weights: &[i64]) -> Result<HilbertSeries> {
    if weights.len() != j.nvars() {
        return Err(Error::DimensionMismatch {
            expected: j.nvars(),
            got: weights.len(),
        });
    }
    if weights.iter().any(|&w| w <= 0) {
        return Err(Error::NotPositive);
    }
    let w: Vec<u32> = weights.iter().map(|&x| x as u32).collect();
    Ok(HilbertSeries {
        numerator: trim(numerator(j.gens(), &w)),
        denominator: w,
    })
}

impl HilbertSeries {
    /// Series of the partial sums `Σ_{j ≤ i} h_j`.
    pub fn cumulative(&self) -> HilbertSeries {
        let mut d = self.denominator.clone();
        d.push(1);
        HilbertSeries {
            numerator: self.numerator.clone(),
            denominator: d,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    /// Coefficients of `t^0..=t^upto`.
    pub fn coefficients(&self, upto: usize) -> Vec<BigInt> {
        let mut c = vec![BigInt::zero(); upto + 1];
        for (k, a) in self.numerator.iter().enumerate().take(upto + 1) {
            c[k] = a.clone();
        }
        for &d in &self.denominator {
            let d = d as usize;
            for k in d..=upto {
                let prev = c[k - d].clone();
                c[k] += prev;
            }
        }
        c
    }

    /// Order of the pole at `t = 1`; `None` for the zero series.
    pub fn pole_order(&self) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        // Divide by (1 - t) while the numerator vanishes at 1.
        let mut p = self.numerator.clone();
        let mut mult = 0;
        while p.iter().fold(BigInt::zero(), |a, b| a + b).is_zero() {
            // p(t) = (1 - t) q(t), q_k = Σ_{j ≤ k} p_j
            let mut q = Vec::with_capacity(p.len());
            let mut acc = BigInt::zero();
            for c in &p[..p.len() - 1] {
                acc += c;
                q.push(acc.clone());
            }
            p = trim(q);
            mult += 1;
        }
        Some(self.denominator.len() - mult)
    }

    /// Value of the numerator at 1 after cancelling every factor `1 - t`
    /// from numerator and denominator, up to the positive factor
    /// `∏ c_j`; positive for a nonzero module.
    pub fn reduced_numerator_at_one(&self) -> Option<BigInt> {
        if self.is_zero() {
            return None;
        }
        let mut p = self.numerator.clone();
        while p.iter().fold(BigInt::zero(), |a, b| a + b).is_zero() {
            let mut q = Vec::new();
            let mut acc = BigInt::zero();
            for c in &p[..p.len() - 1] {
                acc += c;
                q.push(acc.clone());
            }
            p = trim(q);
        }
        Some(p.iter().fold(BigInt::zero(), |a, b| a + b))
    }

    pub fn period(&self) -> u64 {
        self.denominator
            .iter()
            .fold(1u64, |acc, &c| acc.lcm(&(c as u64)))
    }
}

/// Degree of the eventual quasi-polynomial of the coefficients of `h`
/// (or of their partial sums): pole order at `t = 1` minus one. `None` for
/// the zero module.
pub fn quasi_poly_degree(h: &HilbertSeries, cumulative: bool) -> Option<i64> {
    let s = if cumulative { h.cumulative() } else { h.clone() };
    s.pole_order().map(|p| p as i64 - 1)
}

/// `i ↦ Q_{i mod p}(i)` with one polynomial per residue class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPolynomial {
    pub period: u64,
    /// `polys[j][k]` is the coefficient of `i^k` in `Q_j`.
    pub polys: Vec<Vec<Rat>>,
}

impl QuasiPolynomial {
    pub fn eval(&self, i: u64) -> Rat {
        let q = &self.polys[(i % self.period) as usize];
        let x = Rat::from_integer(BigInt::from(i));
        q.iter().rev().fold(Rat::zero(), |acc, c| acc * &x + c)
    }

    /// Largest degree among the residue polynomials; `None` if all vanish.
    pub fn degree(&self) -> Option<usize> {
        self.polys
            .iter()
            .filter_map(|q| q.iter().rposition(|c| !c.is_zero()))
            .max()
    }

    /// Interpolates `values` with polynomials of degree at most `degree`,
    /// using `degree + 1` points of each residue class starting at `start`.
    pub fn fit(period: u64, degree: usize, start: u64, values: impl Fn(u64) -> BigInt) -> Self {
        let mut polys = Vec::with_capacity(period as usize);
        for j in 0..period {
            let first = start + (j + period - start % period) % period;
            let xs: Vec<u64> = (0..=degree as u64).map(|k| first + k * period).collect();
            let ys: Vec<Rat> = xs.iter().map(|&x| Rat::from_integer(values(x))).collect();
            polys.push(interpolate(&xs, &ys));
        }
        QuasiPolynomial { period, polys }
    }
}

/// Power-basis coefficients of the interpolating polynomial (Newton form,
/// then expanded).
fn interpolate(xs: &[u64], ys: &[Rat]) -> Vec<Rat> {
    let n = xs.len();
    let x: Vec<Rat> = xs.iter().map(|&v| Rat::from_integer(BigInt::from(v))).collect();
    let mut dd = ys.to_vec();
    for k in 1..n {
        for i in (k..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&x[i] - &x[i - k]);
        }
    }
    let mut coeffs = vec![Rat::zero(); n];
    for k in (0..n).rev() {
        // coeffs = coeffs * (t - x_k) + dd[k]
        let mut next = vec![Rat::zero(); n];
        for (d, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if d + 1 < n {
                next[d + 1] += c;
            }
            next[d] -= c * &x[k];
        }
        next[0] += &dd[k];
        coeffs = next;
    }
    coeffs
}

/// Number of monomials of weighted degree exactly `d` outside `j`
/// (enumeration, for checking).
pub fn count_standard_monomials(j: &MonomialIdeal, weights: &[i64], d: i64) -> BigInt {
    fn rec(
        j: &MonomialIdeal,
        w: &[i64],
        k: usize,
        left: i64,
        e: &mut Vec<u32>,
        acc: &mut BigInt,
    ) {
        if k == w.len() {
            if left == 0 && !j.contains(&Monomial::new(e.clone())) {
                *acc += 1;
            }
            return;
        }
        let mut a = 0;
        while a as i64 * w[k] <= left {
            e[k] = a;
            rec(j, w, k + 1, left - a as i64 * w[k], e, acc);
            a += 1;
        }
        e[k] = 0;
    }
    let mut acc = BigInt::zero();
    let mut e = vec![0; weights.len()];
    rec(j, weights, 0, d, &mut e, &mut acc);
    acc
}

/// True when the leading coefficient sign is positive for every residue of
/// maximal degree (growth is eventually positive).
pub fn leading_positive(q: &QuasiPolynomial) -> bool {
    let Some(d) = q.degree() else { return true };
    q.polys
        .iter()
        .filter_map(|p| p.get(d))
        .all(|c| !c.is_negative())
}
