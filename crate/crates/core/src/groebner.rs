//! Division, Buchberger completion for left ideals, and initial ideals with
//! respect to term orders and weight vectors.
//!
//! Orders that are not term orders are never used for reduction directly.
//! Weights with negative entries go through a Rees ring homogenized by a
//! positive vector, where each graded piece is finite and the lifted order
//! is well founded.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::filtration::{pr_contains, pr_sample_positive, WeightVector};
use crate::monomial::MonomialIdeal;
use crate::order::{validate_order, MonomialOrder};
use crate::poly::{Monomial, Poly, Rat};
use crate::rees::{rees_presentation, ReesPresentation};
use crate::ring::{Multiplier, RingPresentation};

/// Resource limits. Exceeding any of them is reported as
/// [`Error::BudgetExceeded`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GbConfig {
    pub max_pairs: usize,
    /// Largest graded degree of an S-pair that will be processed.
    pub max_degree: Option<Rat>,
    /// Reduction steps allowed in a single normal form computation.
    pub max_steps: usize,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig {
            max_pairs: 100_000,
            max_degree: None,
            max_steps: 5_000_000,
        }
    }
}

impl GbConfig {
    /// Defaults overridden by `SKEWGB_MAX_PAIRS` and `SKEWGB_MAX_DEGREE`.
    pub fn from_env() -> Result<Self> {
        let mut cfg = GbConfig::default();
        if let Ok(s) = std::env::var("SKEWGB_MAX_PAIRS") {
            cfg.max_pairs = s
                .trim()
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad SKEWGB_MAX_PAIRS '{}'", s)))?;
        }
        if let Ok(s) = std::env::var("SKEWGB_MAX_DEGREE") {
            let d: Rat = s
                .trim()
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad SKEWGB_MAX_DEGREE '{}'", s)))?;
            cfg.max_degree = Some(d);
        }
        Ok(cfg)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    elements: Vec<Poly>,
    leads: Vec<Monomial>,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Monic elements, sorted by increasing initial monomial.
    pub fn elements(&self) -> &[Poly] {
        &self.elements
    }

    pub fn leads(&self) -> &[Monomial] {
        &self.leads
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.leads.iter().any(Monomial::is_one)
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        let nv = self.order.nvars();
        MonomialIdeal::new(nv, self.leads.iter().cloned())
    }

    pub fn into_elements(self) -> Vec<Poly> {
        self.elements
    }
}

fn monic(f: &Poly, ord: &MonomialOrder) -> Poly {
    let (_, c) = ord.lead(f).expect("nonzero");
    f.scale(&c.recip())
}

/// Full reduction of `f` by `basis` (pairs of initial monomial and monic
/// element), multiplying basis elements on the left.
fn reduce(
    mul: &mut Multiplier,
    f: &Poly,
    basis: &[(Monomial, Poly)],
    ord: &MonomialOrder,
    max_steps: usize,
) -> Result<Poly> {
    let nv = f.nvars();
    let mut p = f.clone();
    let mut r = Poly::zero(nv);
    let mut steps = 0usize;
    while let Some((lm, lc)) = ord.lead(&p).map(|(m, c)| (m.clone(), c.clone())) {
        steps += 1;
        if steps > max_steps {
            return Err(Error::BudgetExceeded(format!(
                "normal form exceeded {} reduction steps",
                max_steps
            )));
        }
        match basis.iter().find(|(l, _)| l.divides(&lm)) {
            Some((l, g)) => {
                let q = l.quotient_of(&lm).expect("divides");
                let prod = mul.mul_monomial(&q, g);
                p.add_assign_scaled(&prod, &-lc);
            }
            None => {
                p.add_term(lm.clone(), -lc.clone());
                r.add_term(lm, lc);
            }
        }
    }
    Ok(r)
}

fn check_setup(ring: &RingPresentation, ord: &MonomialOrder) -> Result<()> {
    if ord.nvars() != ring.nvars() {
        return Err(Error::DimensionMismatch {
            expected: ring.nvars(),
            got: ord.nvars(),
        });
    }
    if !validate_order(ring, ord) {
        return Err(Error::InvalidInput(
            "order violates the multiplicative conditions for this ring".into(),
        ));
    }
    Ok(())
}

/// Remainder of `f` on division by `g` (left multiples only).
pub fn normal_form(
    ring: &RingPresentation,
    f: &Poly,
    g: &[Poly],
    ord: &MonomialOrder,
) -> Result<Poly> {
    normal_form_with(ring, f, g, ord, &GbConfig::default())
}

pub fn normal_form_with(
    ring: &RingPresentation,
    f: &Poly,
    g: &[Poly],
    ord: &MonomialOrder,
    cfg: &GbConfig,
) -> Result<Poly> {
    check_setup(ring, ord)?;
    ring.check_poly(f)?;
    let mut basis = Vec::new();
    for h in g {
        ring.check_poly(h)?;
        if !h.is_zero() {
            let h = monic(h, ord);
            basis.push((ord.lead_monomial(&h).unwrap(), h));
        }
    }
    let mut mul = Multiplier::new(ring);
    reduce(&mut mul, f, &basis, ord, cfg.max_steps)
}

/// Reduced Gröbner basis of the left ideal generated by `gens`, with pairs
/// selected by total degree of their lcm.
pub fn buchberger(
    ring: &RingPresentation,
    gens: &[Poly],
    ord: &MonomialOrder,
) -> Result<GroebnerBasis> {
    buchberger_with(ring, gens, ord, &GbConfig::default(), None)
}

/// As [`buchberger`], selecting pairs by the `grading`-degree of their lcm.
///
/// With a non-term order the caller must supply generators homogeneous for a
/// positive `grading` compatible with the ring; each graded piece is then
/// finite and the completion terminates degree by degree.
pub fn buchberger_with(
    ring: &RingPresentation,
    gens: &[Poly],
    ord: &MonomialOrder,
    cfg: &GbConfig,
    grading: Option<&[Rat]>,
) -> Result<GroebnerBasis> {
    check_setup(ring, ord)?;
    let nv = ring.nvars();
    let ones = vec![Rat::one(); nv];
    let grading = grading.unwrap_or(&ones);
    if grading.len() != nv {
        return Err(Error::DimensionMismatch {
            expected: nv,
            got: grading.len(),
        });
    }
    if !ord.is_term_order() {
        for g in gens {
            if !g.is_homogeneous(grading) {
                return Err(Error::InvalidInput(
                    "non-term order requires homogeneous generators".into(),
                ));
            }
        }
    }
    let commutative = ring.is_commutative();
    let mut mul = Multiplier::new(ring);
    let mut basis: Vec<(Monomial, Poly)> = Vec::new();
    let mut heap: BinaryHeap<Reverse<(Rat, usize, usize)>> = BinaryHeap::new();

    let push_pairs = |basis: &[(Monomial, Poly)],
                      heap: &mut BinaryHeap<Reverse<(Rat, usize, usize)>>| {
        let j = basis.len() - 1;
        for i in 0..j {
            let l = basis[i].0.lcm(&basis[j].0);
            heap.push(Reverse((l.weighted_degree(grading), i, j)));
        }
    };

    for g in gens {
        ring.check_poly(g)?;
        let r = reduce(&mut mul, g, &basis, ord, cfg.max_steps)?;
        if r.is_zero() {
            continue;
        }
        let r = monic(&r, ord);
        let lm = ord.lead_monomial(&r).unwrap();
        if lm.is_one() {
            return Ok(unit_basis(ord, nv));
        }
        basis.push((lm, r));
        push_pairs(&basis, &mut heap);
    }

    let mut processed = 0usize;
    while let Some(Reverse((deg, i, j))) = heap.pop() {
        if let Some(max) = &cfg.max_degree {
            if &deg > max {
                return Err(Error::BudgetExceeded(format!(
                    "S-pair of degree {} exceeds the degree limit {}",
                    deg, max
                )));
            }
        }
        processed += 1;
        if processed > cfg.max_pairs {
            return Err(Error::BudgetExceeded(format!(
                "more than {} S-pairs",
                cfg.max_pairs
            )));
        }
        let (li, fi) = &basis[i];
        let (lj, fj) = &basis[j];
        if commutative && li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let mut s = mul.mul_monomial(&li.quotient_of(&l).unwrap(), fi);
        let t = mul.mul_monomial(&lj.quotient_of(&l).unwrap(), fj);
        s.add_assign_scaled(&t, &-Rat::one());
        let r = reduce(&mut mul, &s, &basis, ord, cfg.max_steps)?;
        if r.is_zero() {
            continue;
        }
        let r = monic(&r, ord);
        let lm = ord.lead_monomial(&r).unwrap();
        if lm.is_one() {
            return Ok(unit_basis(ord, nv));
        }
        basis.push((lm, r));
        push_pairs(&basis, &mut heap);
    }

    interreduce(&mut mul, basis, ord, cfg)
}

fn unit_basis(ord: &MonomialOrder, nv: usize) -> GroebnerBasis {
    GroebnerBasis {
        order: ord.clone(),
        elements: vec![Poly::one(nv)],
        leads: vec![Monomial::one(nv)],
        reduced: true,
    }
}

fn interreduce(
    mul: &mut Multiplier,
    basis: Vec<(Monomial, Poly)>,
    ord: &MonomialOrder,
    cfg: &GbConfig,
) -> Result<GroebnerBasis> {
    let mut minimal: Vec<(Monomial, Poly)> = Vec::new();
    for (k, (l, f)) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(k2, (l2, _))| {
            k2 != k && l2.divides(l) && (l2 != l || k2 < k)
        });
        if !redundant {
            minimal.push((l.clone(), f.clone()));
        }
    }
    let mut out: Vec<(Monomial, Poly)> = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let (l, f) = &minimal[k];
        let others: Vec<(Monomial, Poly)> = minimal
            .iter()
            .enumerate()
            .filter(|(k2, _)| *k2 != k)
            .map(|(_, p)| p.clone())
            .collect();
        let mut tail = f.clone();
        let c = tail.coeff(l);
        tail.add_term(l.clone(), -c);
        let mut g = reduce(mul, &tail, &others, ord, cfg.max_steps)?;
        g.add_term(l.clone(), Rat::one());
        out.push((l.clone(), g));
    }
    out.sort_by(|a, b| ord.cmp(&a.0, &b.0));
    Ok(GroebnerBasis {
        order: ord.clone(),
        leads: out.iter().map(|(l, _)| l.clone()).collect(),
        elements: out.into_iter().map(|(_, g)| g).collect(),
        reduced: true,
    })
}

/// Initial monomial ideal for a term order.
pub fn initial_ideal_order(
    ring: &RingPresentation,
    gens: &[Poly],
    ord: &MonomialOrder,
) -> Result<MonomialIdeal> {
    if !ord.is_term_order() {
        return Err(Error::InvalidInput("not a term order".into()));
    }
    Ok(buchberger(ring, gens, ord)?.initial_ideal())
}

/// How to compute with a weight vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Route {
    /// Direct for nonnegative weights, homogenized otherwise.
    #[default]
    Auto,
    /// Buchberger under the refined order; needs a nonnegative weight.
    Direct,
    /// Through the Rees ring of a positive vector, optionally saturating the
    /// homogenized generators by `x0` first.
    Homogenized { saturate: bool },
}

/// Rees ring of the standard positive vector together with a generating set
/// of `Ĩ`, the homogenization of the ideal (saturated by `x0` when asked).
pub fn homogenized_ideal(
    ring: &RingPresentation,
    gens: &[Poly],
    saturate: bool,
    cfg: &GbConfig,
) -> Result<(ReesPresentation, Vec<Poly>)> {
    let pos = pr_sample_positive(ring);
    let rees = rees_presentation(ring, &pos)?;
    let mut hs = Vec::new();
    for g in gens {
        ring.check_poly(g)?;
        if !g.is_zero() {
            hs.push(rees.homogenize(g)?);
        }
    }
    if !saturate || hs.is_empty() {
        return Ok((rees, hs));
    }
    // With fewer powers of x0 always larger, x0 divides an initial monomial
    // only if it divides the whole (homogeneous) element.
    let rv = rees.ring().nvars();
    let mut e0 = vec![Rat::zero(); rv];
    e0[0] = -Rat::one();
    let ord = MonomialOrder::grevlex(rv).refine(&e0);
    let grading = rees.grading();
    let gb = buchberger_with(rees.ring(), &hs, &ord, cfg, Some(&grading))?;
    let sat = gb
        .elements()
        .iter()
        .map(|g| {
            let k = g.var_content(0);
            let mut e = vec![0; rv];
            e[0] = k;
            let d = Monomial::new(e);
            g.map_monomials(rv, |m| d.quotient_of(m).unwrap())
        })
        .collect();
    Ok((rees, sat))
}

/// Reduced Gröbner basis of `Ĩ` in the Rees ring under the lift of
/// `≺_w` (tiebreak `tiebreak`), for any weight `w`.
pub fn rees_groebner(
    ring: &RingPresentation,
    gens: &[Poly],
    w: &WeightVector,
    tiebreak: &MonomialOrder,
    saturate: bool,
    cfg: &GbConfig,
) -> Result<(ReesPresentation, GroebnerBasis)> {
    w.check(ring)?;
    let (rees, hs) = homogenized_ideal(ring, gens, saturate, cfg)?;
    let ord = tiebreak.refine(&w.flat()).lift();
    let grading = rees.grading();
    let gb = buchberger_with(rees.ring(), &hs, &ord, cfg, Some(&grading))?;
    Ok((rees, gb))
}

/// A Gröbner basis of the ideal for `≺_w`. Reduced on the direct route; on
/// the homogenized route it is the dehomogenized reduced Rees basis.
pub fn weight_groebner(
    ring: &RingPresentation,
    gens: &[Poly],
    w: &WeightVector,
    tiebreak: &MonomialOrder,
    route: Route,
    cfg: &GbConfig,
) -> Result<Vec<Poly>> {
    w.check(ring)?;
    if !pr_contains(ring, w)? {
        return Err(Error::NotInPolynomialRegion);
    }
    let direct = match route {
        Route::Auto => w.is_nonnegative(),
        Route::Direct => {
            if !w.is_nonnegative() {
                return Err(Error::InvalidInput(
                    "the direct route needs a nonnegative weight".into(),
                ));
            }
            true
        }
        Route::Homogenized { .. } => false,
    };
    if direct {
        let ord = tiebreak.refine(&w.flat());
        return Ok(buchberger_with(ring, gens, &ord, cfg, None)?.into_elements());
    }
    let saturate = matches!(route, Route::Homogenized { saturate: true });
    let (rees, gb) = rees_groebner(ring, gens, w, tiebreak, saturate, cfg)?;
    let mut out: Vec<Poly> = Vec::new();
    for g in gb.elements() {
        let d = rees.dehomogenize(g);
        if !d.is_zero() && !out.contains(&d) {
            out.push(d);
        }
    }
    Ok(out)
}

/// Generators of `in_w(I) ⊂ S`: the initial forms of a Gröbner basis for
/// `≺_w` with the grevlex tiebreak.
pub fn initial_ideal_weight(
    ring: &RingPresentation,
    gens: &[Poly],
    w: &WeightVector,
) -> Result<Vec<Poly>> {
    initial_ideal_weight_with(
        ring,
        gens,
        w,
        &MonomialOrder::grevlex(ring.nvars()),
        Route::Auto,
        &GbConfig::default(),
    )
}

pub fn initial_ideal_weight_with(
    ring: &RingPresentation,
    gens: &[Poly],
    w: &WeightVector,
    tiebreak: &MonomialOrder,
    route: Route,
    cfg: &GbConfig,
) -> Result<Vec<Poly>> {
    let g = weight_groebner(ring, gens, w, tiebreak, route, cfg)?;
    let wf = w.flat();
    Ok(g.iter().map(|f| f.top_part(&wf)).collect())
}

/// Canonical generating set of an ideal of the commutative ring with the
/// same number of variables: its reduced grevlex Gröbner basis. Two ideals
/// are equal iff their canonical forms are equal.
pub fn canonical_ideal(nvars: usize, gens: &[Poly], cfg: &GbConfig) -> Result<Vec<Poly>> {
    let s = RingPresentation::commutative(nvars, 0);
    Ok(buchberger_with(&s, gens, &MonomialOrder::grevlex(nvars), cfg, None)?.into_elements())
}

/// Lead monomials of a Gröbner basis in `S` (commutative) for `ord`.
pub fn commutative_initial(gens: &[Poly], ord: &MonomialOrder, cfg: &GbConfig) -> Result<MonomialIdeal> {
    let s = RingPresentation::commutative(ord.nvars(), 0);
    Ok(buchberger_with(&s, gens, ord, cfg, None)?.initial_ideal())
}

/// True when every element of `a` lies in the ideal generated by `b`
/// (commutative ring).
pub fn commutative_contains(b: &[Poly], a: &[Poly], cfg: &GbConfig) -> Result<bool> {
    let Some(nv) = a.iter().chain(b).map(Poly::nvars).next() else {
        return Ok(true);
    };
    let s = RingPresentation::commutative(nv, 0);
    let ord = MonomialOrder::grevlex(nv);
    let gb = buchberger_with(&s, b, &ord, cfg, None)?;
    for f in a {
        if !normal_form_with(&s, f, gb.elements(), &ord, cfg)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::BaseOrder;
    use crate::poly::{rat, rat_vec};

    fn p(nv: usize, terms: &[(&[u32], i64)]) -> Poly {
        Poly::from_terms(
            nv,
            terms
                .iter()
                .map(|(e, c)| (Monomial::new(e.to_vec()), rat(*c))),
        )
    }

    #[test]
    fn normal_form_examples() {
        let a1 = RingPresentation::weyl(1).unwrap();
        let ord = MonomialOrder::new(BaseOrder::GrLex, 2);
        let y = Poly::var(2, 1);
        let x = Poly::var(2, 0);
        let xy = crate::ring::multiply(&a1, &x, &y).unwrap();
        assert!(normal_form(&a1, &xy, std::slice::from_ref(&y), &ord).unwrap().is_zero());
        let yx = crate::ring::multiply(&a1, &y, &x).unwrap();
        assert_eq!(normal_form(&a1, &yx, std::slice::from_ref(&y), &ord).unwrap(), Poly::one(2));
        assert!(normal_form(&a1, &y, std::slice::from_ref(&y), &ord).unwrap().is_zero());
    }

    #[test]
    fn commutative_lex_example() {
        let s = RingPresentation::commutative(2, 0);
        let ord = MonomialOrder::new(BaseOrder::Lex, 2);
        let g = buchberger(&s, &[p(2, &[(&[2, 0], 1), (&[0, 1], -1)]), Poly::var(2, 0)], &ord).unwrap();
        assert_eq!(g.elements(), &[Poly::var(2, 1), Poly::var(2, 0)]);
    }

    #[test]
    fn principal_ideal_is_its_own_basis() {
        let a1 = RingPresentation::weyl(1).unwrap();
        let f = &Poly::var(2, 1) - &Poly::one(2);
        let g = buchberger(&a1, std::slice::from_ref(&f), &MonomialOrder::new(BaseOrder::GrLex, 2)).unwrap();
        assert_eq!(g.elements(), &[f]);
    }

    #[test]
    fn example_a_is_unit_ideal() {
        let a2 = RingPresentation::weyl(2).unwrap();
        let gens = vec![
            &Poly::var(4, 2) - &Poly::one(4),
            &Poly::var(4, 3) - &Poly::one(4),
        ];
        let w = WeightVector::from_ints(2, &[2, 2, -1, -1]);
        let ini = initial_ideal_weight(&a2, &gens, &w).unwrap();
        let canon = canonical_ideal(4, &ini, &GbConfig::default()).unwrap();
        assert_eq!(canon, vec![Poly::one(4)]);
    }

    #[test]
    fn example_b_gb_element() {
        let a2 = RingPresentation::weyl(2).unwrap();
        // y1^2 - y2, x1*y1 + 2*x2*y2
        let gens = vec![
            p(4, &[(&[0, 0, 2, 0], 1), (&[0, 0, 0, 1], -1)]),
            p(4, &[(&[1, 0, 1, 0], 1), (&[0, 1, 0, 1], 2)]),
        ];
        let ord = MonomialOrder::new(BaseOrder::GrLex, 4).refine(&rat_vec(&[1, 1, 1, 3]));
        let gb = buchberger(&a2, &gens, &ord).unwrap();
        assert!(gb.leads().contains(&Monomial::new(vec![0, 1, 2, 0])));
        let combo = p(4, &[(&[1, 0, 1, 0], 1), (&[0, 1, 2, 0], 2)]);
        assert!(normal_form(&a2, &combo, gb.elements(), &ord).unwrap().is_zero());
    }

    #[test]
    fn saturation_agrees() {
        let a2 = RingPresentation::weyl(2).unwrap();
        let gens = vec![
            p(4, &[(&[0, 0, 2, 0], 1), (&[0, 0, 0, 1], -1)]),
            p(4, &[(&[1, 0, 1, 0], 1), (&[0, 1, 0, 1], 2)]),
        ];
        let w = WeightVector::from_ints(2, &[2, 1, -1, 1]);
        let tb = MonomialOrder::grevlex(4);
        let cfg = GbConfig::default();
        let a = initial_ideal_weight_with(&a2, &gens, &w, &tb, Route::Homogenized { saturate: false }, &cfg).unwrap();
        let b = initial_ideal_weight_with(&a2, &gens, &w, &tb, Route::Homogenized { saturate: true }, &cfg).unwrap();
        assert_eq!(canonical_ideal(4, &a, &cfg).unwrap(), canonical_ideal(4, &b, &cfg).unwrap());
    }
}
