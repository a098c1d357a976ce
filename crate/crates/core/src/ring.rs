//! Almost centralizing extensions `R` of `B = k[x_1..x_m]`.
//!
//! `R` is generated by commuting `x_1..x_m` and `y_1..y_n` subject to
//!
//! ```text
//! y_i x_j - x_j y_i = Q1[i][j](x)
//! y_i y_j - y_j y_i = Q2[i][j](x, y)     (at most linear in y)
//! ```
//!
//! Elements are kept as standard expressions `Σ κ x^a y^b` ([`Poly`]) with the
//! `x` block first in the exponent vector. Generators are indexed from zero:
//! `x_j` is variable `j`, `y_i` is variable `m + i`.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{rat, Monomial, Poly, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingPresentation {
    m: usize,
    n: usize,
    /// `q1[i][j] = y_i x_j - x_j y_i`, an element of `B`.
    q1: Vec<Vec<Poly>>,
    /// `q2[i][j] = y_i y_j - y_j y_i`.
    q2: Vec<Vec<Poly>>,
    names: Vec<String>,
}

fn default_names(m: usize, n: usize) -> Vec<String> {
    (1..=m)
        .map(|j| format!("x{}", j))
        .chain((1..=n).map(|i| format!("y{}", i)))
        .collect()
}

impl RingPresentation {
    /// Builds a presentation from raw tables. Only shapes and the degree
    /// conditions on entries are checked here; consistency is the job of
    /// [`validate_presentation`].
    pub fn new(m: usize, n: usize, q1: Vec<Vec<Poly>>, q2: Vec<Vec<Poly>>) -> Result<Self> {
        let nv = m + n;
        if q1.len() != n || q1.iter().any(|row| row.len() != m) {
            return Err(Error::InvalidInput("Q1 table must be n x m".into()));
        }
        if q2.len() != n || q2.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidInput("Q2 table must be n x n".into()));
        }
        for p in q1.iter().flatten().chain(q2.iter().flatten()) {
            if p.nvars() != nv {
                return Err(Error::DimensionMismatch {
                    expected: nv,
                    got: p.nvars(),
                });
            }
        }
        for p in q1.iter().flatten() {
            if p.partial_degree(m..nv).unwrap_or(0) > 0 {
                return Err(Error::InvalidInput(
                    "Q1 entries must not involve the y variables".into(),
                ));
            }
        }
        for p in q2.iter().flatten() {
            if p.partial_degree(m..nv).unwrap_or(0) > 1 {
                return Err(Error::InvalidInput(
                    "Q2 entries must be at most linear in the y variables".into(),
                ));
            }
        }
        Ok(RingPresentation {
            m,
            n,
            q1,
            q2,
            names: default_names(m, n),
        })
    }

    /// Polynomial ring in `m + n` commuting variables.
    pub fn commutative(m: usize, n: usize) -> Self {
        let nv = m + n;
        RingPresentation {
            m,
            n,
            q1: vec![vec![Poly::zero(nv); m]; n],
            q2: vec![vec![Poly::zero(nv); n]; n],
            names: default_names(m, n),
        }
    }

    /// The Weyl algebra `A_n(k)`: `y_i x_j - x_j y_i = δ_ij`.
    pub fn weyl(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("Weyl algebra needs n >= 1".into()));
        }
        let mut r = Self::commutative(n, n);
        for i in 0..n {
            r.q1[i][i] = Poly::one(2 * n);
        }
        Ok(r)
    }

    /// `U(sl_2)` in the basis `y1, y2, y3` with `[y2,y3] = 2y3`,
    /// `[y2,y1] = -2y1`, `[y1,y3] = y2`.
    pub fn sl2() -> Self {
        let mut r = Self::commutative(0, 3);
        let y = |i: usize| Poly::var(3, i);
        r.set_bracket_yy(1, 2, y(2).scale(&rat(2)));
        r.set_bracket_yy(1, 0, y(0).scale(&rat(-2)));
        r.set_bracket_yy(0, 2, y(1));
        r
    }

    /// Sets `y_i y_j - y_j y_i = p` and the antisymmetric partner entry.
    pub fn set_bracket_yy(&mut self, i: usize, j: usize, p: Poly) {
        self.q2[j][i] = -&p;
        self.q2[i][j] = p;
    }

    pub fn set_bracket_yx(&mut self, i: usize, j: usize, p: Poly) {
        self.q1[i][j] = p;
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                got: names.len(),
            });
        }
        self.names = names;
        Ok(self)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.m + self.n
    }

    /// Copies of the `Q1` and `Q2` tables.
    pub fn tables(&self) -> (Vec<Vec<Poly>>, Vec<Vec<Poly>>) {
        (self.q1.clone(), self.q2.clone())
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn q1(&self, i: usize, j: usize) -> &Poly {
        &self.q1[i][j]
    }

    pub fn q2(&self, i: usize, j: usize) -> &Poly {
        &self.q2[i][j]
    }

    pub fn is_commutative(&self) -> bool {
        self.q1.iter().flatten().all(Poly::is_zero) && self.q2.iter().flatten().all(Poly::is_zero)
    }

    /// Index of `x_j` / `y_i` in exponent vectors.
    pub fn x_index(&self, j: usize) -> usize {
        j
    }

    pub fn y_index(&self, i: usize) -> usize {
        self.m + i
    }

    /// All relation entries as `(product monomial, entry)`: the monomial
    /// `x_j y_i` for `Q1[i][j]` and `y_i y_j` for `Q2[i][j]`.
    pub fn relations(&self) -> Vec<(Monomial, &Poly)> {
        let nv = self.nvars();
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.m {
                let mut e = vec![0; nv];
                e[self.x_index(j)] += 1;
                e[self.y_index(i)] += 1;
                out.push((Monomial::new(e), &self.q1[i][j]));
            }
            for j in 0..self.n {
                let mut e = vec![0; nv];
                e[self.y_index(i)] += 1;
                e[self.y_index(j)] += 1;
                out.push((Monomial::new(e), &self.q2[i][j]));
            }
        }
        out
    }

    pub(crate) fn check_poly(&self, f: &Poly) -> Result<()> {
        if f.nvars() != self.nvars() {
            return Err(Error::PresentationMismatch(format!(
                "polynomial has {} variables, ring has {}",
                f.nvars(),
                self.nvars()
            )));
        }
        Ok(())
    }

    pub fn fmt_poly(&self, f: &Poly) -> String {
        f.fmt_with(&self.names)
    }
}

/// Multiplication engine with a memo table for `y_i · y^b`.
///
/// `y_i` acts on `B` as a derivation with `[y_i, x_j] = Q1[i][j]`, so
/// `y_i x^a = x^a y_i + Σ_j a_j x^(a-e_j) Q1[i][j]`; moving `y_i` into `y^b`
/// uses `Q2`. Every correction term has strictly smaller `y`-degree, which
/// bounds the recursion depth by the `y`-degree of the operands.
pub struct Multiplier<'a> {
    ring: &'a RingPresentation,
    cache: HashMap<(usize, Vec<u32>), Poly>,
}

impl<'a> Multiplier<'a> {
    pub fn new(ring: &'a RingPresentation) -> Self {
        Multiplier {
            ring,
            cache: HashMap::new(),
        }
    }

    pub fn ring(&self) -> &RingPresentation {
        self.ring
    }

    /// Standard expression of `f · g`.
    pub fn mul(&mut self, f: &Poly, g: &Poly) -> Poly {
        let nv = self.ring.nvars();
        let mut out = Poly::zero(nv);
        if f.is_zero() || g.is_zero() {
            return out;
        }
        for (mono, c) in f.terms() {
            let p = self.mul_monomial(mono, g);
            out.add_assign_scaled(&p, c);
        }
        out
    }

    /// `x^a y^b · g` for a standard monomial.
    pub fn mul_monomial(&mut self, mono: &Monomial, g: &Poly) -> Poly {
        let m = self.ring.m;
        let mut p = g.clone();
        let e = mono.exps();
        for i in (0..self.ring.n).rev() {
            for _ in 0..e[m + i] {
                p = self.left_mul_y(i, &p);
            }
        }
        let mut xa = vec![0; self.ring.nvars()];
        xa[..m].copy_from_slice(&e[..m]);
        p.shift(&Monomial::new(xa))
    }

    /// `y_i · p` for a standard expression `p`.
    pub fn left_mul_y(&mut self, i: usize, p: &Poly) -> Poly {
        let m = self.ring.m;
        let nv = self.ring.nvars();
        let mut out = Poly::zero(nv);
        for (mono, c) in p.terms() {
            let e = mono.exps();
            let b = e[m..].to_vec();
            let mut xa = vec![0; nv];
            xa[..m].copy_from_slice(&e[..m]);
            let xa = Monomial::new(xa);
            let yb = self.y_times_ymono(i, &b);
            out.add_assign_scaled(&yb.shift(&xa), c);
            for j in 0..m {
                let aj = e[j];
                if aj == 0 || self.ring.q1[i][j].is_zero() {
                    continue;
                }
                let mut rest = mono.clone();
                rest.exps_mut()[j] -= 1;
                let corr = self.ring.q1[i][j].shift(&rest);
                out.add_assign_scaled(&corr, &(c * rat(aj as i64)));
            }
        }
        out
    }

    /// `y_i · y^b` where `b` is a pure `y` exponent vector of length `n`.
    fn y_times_ymono(&mut self, i: usize, b: &[u32]) -> Poly {
        let key = (i, b.to_vec());
        if let Some(p) = self.cache.get(&key) {
            return p.clone();
        }
        let m = self.ring.m;
        let nv = self.ring.nvars();
        let ymono = |b: &[u32]| {
            let mut e = vec![0; nv];
            e[m..].copy_from_slice(b);
            Monomial::new(e)
        };
        let result = match b.iter().position(|&e| e > 0) {
            Some(k) if k < i => {
                let mut rest = b.to_vec();
                rest[k] -= 1;
                // y_i y_k y^rest = y_k (y_i y^rest) + Q2[i][k] y^rest
                let inner = self.y_times_ymono(i, &rest);
                let mut out = self.left_mul_y(k, &inner);
                let q = self.ring.q2[i][k].clone();
                for (qm, qc) in q.terms() {
                    let qe = qm.exps();
                    let mut xa = vec![0; nv];
                    xa[..m].copy_from_slice(&qe[..m]);
                    let xa = Monomial::new(xa);
                    match qe[m..].iter().position(|&e| e > 0) {
                        Some(l) => {
                            let p = self.y_times_ymono(l, &rest);
                            out.add_assign_scaled(&p.shift(&xa), qc);
                        }
                        None => {
                            out.add_term(xa.mul(&ymono(&rest)), qc.clone());
                        }
                    }
                }
                out
            }
            _ => {
                let mut e = b.to_vec();
                e[i] += 1;
                Poly::term(ymono(&e), Rat::one())
            }
        };
        self.cache.insert(key, result.clone());
        result
    }
}

/// Standard expression of `f · g`.
pub fn multiply(ring: &RingPresentation, f: &Poly, g: &Poly) -> Result<Poly> {
    ring.check_poly(f)?;
    ring.check_poly(g)?;
    Ok(Multiplier::new(ring).mul(f, g))
}

/// Normalizes a word of generator indices by rewriting adjacent inversions,
/// always choosing the leftmost one.
pub fn normalize_word(ring: &RingPresentation, word: &[usize]) -> Poly {
    normalize_word_with(ring, word, |inv| inv[0])
}

/// Normalizes a word, letting `pick` choose which inversion (given the list of
/// inversion positions) to rewrite next. Uses an explicit work stack.
///
/// Letters are ordered `x_1 < .. < x_m < y_1 < .. < y_n`; a word without
/// inversions is a standard monomial.
pub fn normalize_word_with<F>(ring: &RingPresentation, word: &[usize], mut pick: F) -> Poly
where
    F: FnMut(&[usize]) -> usize,
{
    let m = ring.m;
    let nv = ring.nvars();
    let mut out = Poly::zero(nv);
    let mut stack: Vec<(Vec<usize>, Rat)> = vec![(word.to_vec(), Rat::one())];
    while let Some((w, c)) = stack.pop() {
        let inversions: Vec<usize> = (0..w.len().saturating_sub(1))
            .filter(|&p| w[p] > w[p + 1])
            .collect();
        if inversions.is_empty() {
            let mut e = vec![0; nv];
            for &g in &w {
                e[g] += 1;
            }
            out.add_term(Monomial::new(e), c);
            continue;
        }
        let p = pick(&inversions);
        let (a, b) = (w[p], w[p + 1]);
        let mut swapped = w.clone();
        swapped.swap(p, p + 1);
        stack.push((swapped, c.clone()));
        if a < m {
            continue;
        }
        let corr = if b < m {
            &ring.q1[a - m][b]
        } else {
            &ring.q2[a - m][b - m]
        };
        for (qm, qc) in corr.terms() {
            let mut letters = Vec::new();
            for (g, &e) in qm.exps().iter().enumerate() {
                letters.extend(std::iter::repeat_n(g, e as usize));
            }
            let mut nw = w[..p].to_vec();
            nw.extend(letters);
            nw.extend_from_slice(&w[p + 2..]);
            stack.push((nw, &c * qc));
        }
    }
    out
}

/// Necessary consistency check for a relation table: antisymmetry of `Q2`,
/// degree conditions, and agreement of both bracketings (and of two rewriting
/// strategies) on every triple of generators. Not a proof of the PBW property.
pub fn validate_presentation(ring: &RingPresentation) -> bool {
    let n = ring.n;
    let nv = ring.nvars();
    for i in 0..n {
        if !ring.q2[i][i].is_zero() {
            return false;
        }
        for j in 0..n {
            if ring.q2[i][j] != -&ring.q2[j][i] {
                return false;
            }
        }
    }
    for p in ring.q1.iter().flatten() {
        if p.partial_degree(ring.m..nv).unwrap_or(0) > 0 {
            return false;
        }
    }
    for p in ring.q2.iter().flatten() {
        if p.partial_degree(ring.m..nv).unwrap_or(0) > 1 {
            return false;
        }
    }
    let mut mul = Multiplier::new(ring);
    let gens: Vec<Poly> = (0..nv).map(|g| Poly::var(nv, g)).collect();
    for a in 0..nv {
        for b in 0..nv {
            let ab = mul.mul(&gens[a], &gens[b]);
            for c in 0..nv {
                let bc = mul.mul(&gens[b], &gens[c]);
                let left = mul.mul(&ab, &gens[c]);
                let right = mul.mul(&gens[a], &bc);
                if left != right {
                    return false;
                }
                let word = [a, b, c];
                let lw = normalize_word(ring, &word);
                let rw = normalize_word_with(ring, &word, |inv| inv[inv.len() - 1]);
                if lw != rw || lw != left {
                    return false;
                }
            }
        }
    }
    true
}

impl RingPresentation {
    /// Zero relation tables with the given shape.
    pub fn zero_tables(m: usize, n: usize) -> (Vec<Vec<Poly>>, Vec<Vec<Poly>>) {
        let nv = m + n;
        (
            vec![vec![Poly::zero(nv); m]; n],
            vec![vec![Poly::zero(nv); n]; n],
        )
    }

    /// The constant `c` as an element of the ring.
    pub fn constant(&self, c: Rat) -> Poly {
        if c.is_zero() {
            Poly::zero(self.nvars())
        } else {
            Poly::constant(self.nvars(), c)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn mono(e: &[u32]) -> Poly {
        Poly::term(Monomial::new(e.to_vec()), Rat::one())
    }

    #[test]
    fn weyl_tables() {
        let a1 = RingPresentation::weyl(1).unwrap();
        assert_eq!(a1.q1(0, 0), &Poly::one(2));
        let a2 = RingPresentation::weyl(2).unwrap();
        assert!(a2.q1(0, 1).is_zero());
        assert_eq!(a2.q1(1, 1), &Poly::one(4));
        assert!(RingPresentation::weyl(0).is_err());
    }

    #[test]
    fn sl2_tables() {
        let r = RingPresentation::sl2();
        assert_eq!(r.q2(0, 2), &Poly::var(3, 1));
        assert_eq!(r.q2(2, 1), &Poly::var(3, 2).scale(&rat(-2)));
        assert!(validate_presentation(&r));
    }

    #[test]
    fn weyl_y_times_x() {
        let a1 = RingPresentation::weyl(1).unwrap();
        let y = Poly::var(2, 1);
        let x = Poly::var(2, 0);
        let p = multiply(&a1, &y, &x).unwrap();
        assert_eq!(p, &mono(&[1, 1]) + &Poly::one(2));
        let x2 = mono(&[2, 0]);
        let p = multiply(&a1, &y, &x2).unwrap();
        assert_eq!(p, &mono(&[2, 1]) + &mono(&[1, 0]).scale(&rat(2)));
    }

    #[test]
    fn identity_is_neutral() {
        let a2 = RingPresentation::weyl(2).unwrap();
        let f = &mono(&[1, 0, 2, 1]) + &mono(&[0, 3, 0, 0]);
        assert_eq!(multiply(&a2, &f, &Poly::one(4)).unwrap(), f);
        assert_eq!(multiply(&a2, &Poly::one(4), &f).unwrap(), f);
    }

    #[test]
    fn word_normalization_matches_multiply() {
        let r = RingPresentation::sl2();
        // y3 y2 y1
        let p = normalize_word(&r, &[2, 1, 0]);
        let mut mul = Multiplier::new(&r);
        let q = mul.mul(&Poly::var(3, 2), &mul_pair(&r, 1, 0));
        assert_eq!(p, q);
    }

    fn mul_pair(r: &RingPresentation, a: usize, b: usize) -> Poly {
        multiply(r, &Poly::var(r.nvars(), a), &Poly::var(r.nvars(), b)).unwrap()
    }

    #[test]
    fn validation_rejects_non_antisymmetric() {
        let (q1, mut q2) = RingPresentation::zero_tables(0, 2);
        q2[0][1] = Poly::var(2, 0);
        q2[1][0] = Poly::var(2, 0);
        let r = RingPresentation::new(0, 2, q1, q2).unwrap();
        assert!(!validate_presentation(&r));
    }

    #[test]
    fn validation_rejects_inconsistent_brackets() {
        // [y1,x1] = 1, [y2,x1] = x1, [y1,y2] = 0 breaks associativity on (y2, y1, x1).
        let mut r = RingPresentation::commutative(1, 2);
        r.set_bracket_yx(0, 0, Poly::one(3));
        r.set_bracket_yx(1, 0, Poly::var(3, 0));
        assert!(!validate_presentation(&r));
    }

    #[test]
    fn two_dim_lie_algebra_is_consistent() {
        let mut r = RingPresentation::commutative(0, 2);
        r.set_bracket_yy(0, 1, Poly::var(2, 0));
        assert!(validate_presentation(&r));
    }

    #[test]
    fn rejects_bad_shapes() {
        let (mut q1, q2) = RingPresentation::zero_tables(1, 1);
        q1[0][0] = Poly::var(2, 1);
        assert!(RingPresentation::new(1, 1, q1, q2).is_err());
    }
}
