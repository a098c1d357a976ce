//! Gröbner cones, the ε-perturbation identity, Gröbner walks and fan
//! enumeration by wall crossing.
//!
//! Every computation goes through `Ĩ`, the `x0`-saturated homogenization of
//! the ideal by the standard positive vector. For a weight `w` the relevant
//! object is `in_(0,w)(Ĩ)`, read off the reduced Rees basis for the lift of
//! `≺_w`; dehomogenizing it gives `in_w(I)`. The cones below are the slices
//! `w0 = 0` of the Gröbner fan of `Ĩ`. Inside the Gröbner region slices with
//! the same `in_w(I)` are merged into the class cone of `I`; outside it a
//! class of `I` may be split into several cones, which are then flagged as
//! lying outside the region.

use std::collections::{HashMap, VecDeque};

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::filtration::{pr_contains, pr_halfspaces, pr_sample_positive, WeightVector};
use crate::groebner::{
    buchberger_with, canonical_ideal, commutative_initial, homogenized_ideal,
    initial_ideal_weight_with, GbConfig, GroebnerBasis, Route,
};
use crate::monomial::MonomialIdeal;
use crate::order::MonomialOrder;
use crate::poly::{dot_rat, rat, Monomial, Poly, Rat};
use crate::polyhedral::Cone;
use crate::rees::ReesPresentation;
use crate::ring::RingPresentation;

/// A relatively open Gröbner cone in weight space `(u, v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerCone {
    /// Canonical constraints `E z = 0`, `S z > 0`, including the polynomial
    /// region.
    pub cone: Cone,
    /// A relative interior point.
    pub witness: Vec<Rat>,
    /// Reduced basis defining the cone (dehomogenized when it came from the
    /// Rees ring), monic, with initial monomials in `marker_leads`.
    pub marker: Vec<Poly>,
    pub marker_leads: Vec<Monomial>,
    /// Canonical generators of `in_w(I) ⊂ S` for `w` in the cone.
    pub initial: Vec<Poly>,
    /// A positive point of the cone, when the cone meets the positive orthant.
    pub positive_witness: Option<Vec<Rat>>,
}

impl GroebnerCone {
    pub fn in_gr(&self) -> bool {
        self.positive_witness.is_some()
    }

    pub fn contains(&self, w: &[Rat]) -> bool {
        self.cone.contains(w)
    }

    pub fn equalities(&self) -> &[Vec<Rat>] {
        &self.cone.equalities
    }

    pub fn strict(&self) -> &[Vec<Rat>] {
        &self.cone.strict
    }

    pub fn is_monomial(&self) -> bool {
        self.initial.iter().all(Poly::is_monomial)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerFan {
    /// Maximal cones, sorted by their canonical constraints.
    pub cones: Vec<GroebnerCone>,
    /// Index pairs `(i, j)`, `i < j`, of cones sharing a facet.
    pub adjacency: Vec<(usize, usize)>,
    /// False when the enumeration budget ran out before the fan was closed.
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanConfig {
    pub gb: GbConfig,
    pub max_cones: usize,
    pub seed: u64,
}

impl Default for FanConfig {
    fn default() -> Self {
        FanConfig {
            gb: GbConfig::default(),
            max_cones: 500,
            seed: 0x5eed,
        }
    }
}

/// One step of a Gröbner walk: the open parameter interval `(from, to)` of
/// the segment, its constant initial ideal, and the initial ideal at `from`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkStep {
    pub from: Rat,
    pub to: Rat,
    pub wall_initial: Vec<Poly>,
    pub wall_kdim: Option<usize>,
    pub initial: Vec<Poly>,
    pub kdim: Option<usize>,
}

/// Result of a walk; `end_initial` is the initial ideal at the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk {
    pub steps: Vec<WalkStep>,
    pub end_initial: Vec<Poly>,
    pub end_kdim: Option<usize>,
}

impl Walk {
    /// Interior breakpoints (the walls crossed).
    pub fn walls(&self) -> Vec<Rat> {
        self.steps.iter().skip(1).map(|s| s.from.clone()).collect()
    }

    /// True when every interval and every breakpoint has the same dimension.
    pub fn constant_kdim(&self) -> bool {
        let mut all = self
            .steps
            .iter()
            .flat_map(|s| [s.wall_kdim, s.kdim])
            .chain(std::iter::once(self.end_kdim));
        match all.next() {
            None => true,
            Some(first) => all.all(|d| d == first),
        }
    }
}

/// An ideal of `R` prepared for weight-space computations.
pub struct FanIdeal {
    ring: RingPresentation,
    rees: ReesPresentation,
    hgens: Vec<Poly>,
    pr: Vec<Vec<Rat>>,
    tiebreak: MonomialOrder,
    cfg: GbConfig,
}

fn lift_weight(w: &[Rat]) -> Vec<Rat> {
    let mut v = vec![Rat::zero()];
    v.extend(w.iter().cloned());
    v
}

fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn axpy(a: &[Rat], t: &Rat, d: &[Rat]) -> Vec<Rat> {
    a.iter().zip(d).map(|(x, y)| x + t * y).collect()
}

/// Exponent difference `a - b` of two Rees monomials, dropping `x0`.
fn rees_diff(a: &Monomial, b: &Monomial) -> Vec<Rat> {
    a.exps()[1..]
        .iter()
        .zip(&b.exps()[1..])
        .map(|(&x, &y)| rat(x as i64 - y as i64))
        .collect()
}

fn kdim_of(ideal: &[Poly], nvars: usize, cfg: &GbConfig) -> Result<Option<usize>> {
    if ideal.is_empty() {
        return Ok(Some(nvars));
    }
    Ok(commutative_initial(ideal, &MonomialOrder::grevlex(nvars), cfg)?.krull_dim())
}

impl FanIdeal {
    pub fn new(ring: &RingPresentation, gens: &[Poly], cfg: &GbConfig) -> Result<Self> {
        let (rees, hgens) = homogenized_ideal(ring, gens, true, cfg)?;
        let pr = pr_halfspaces(ring).strict.into_iter().map(|l| l.coeffs).collect();
        Ok(FanIdeal {
            ring: ring.clone(),
            rees,
            hgens,
            pr,
            tiebreak: MonomialOrder::grevlex(ring.nvars()),
            cfg: cfg.clone(),
        })
    }

    pub fn ring(&self) -> &RingPresentation {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.ring.nvars()
    }

    /// Generators of the saturated homogenization `Ĩ`.
    pub fn homogenized_generators(&self) -> &[Poly] {
        &self.hgens
    }

    pub fn rees(&self) -> &ReesPresentation {
        &self.rees
    }

    fn check_pr(&self, w: &[Rat]) -> Result<()> {
        if w.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: w.len(),
            });
        }
        if !self.pr.iter().all(|h| dot_rat(h, w).is_positive()) {
            return Err(Error::NotInPolynomialRegion);
        }
        Ok(())
    }

    /// Reduced Rees basis for the lift of the tiebreak refined by `weights`
    /// (first entry most significant).
    fn rees_gb(&self, weights: &[&[Rat]]) -> Result<GroebnerBasis> {
        let mut ord = self.tiebreak.clone();
        for w in weights.iter().rev() {
            ord = ord.refine(w);
        }
        let ord = ord.lift();
        let grading = self.rees.grading();
        buchberger_with(self.rees.ring(), &self.hgens, &ord, &self.cfg, Some(&grading))
    }

    fn initial_from_gb(&self, gb: &GroebnerBasis, w: &[Rat]) -> Result<Vec<Poly>> {
        let lw = lift_weight(w);
        let forms: Vec<Poly> = gb
            .elements()
            .iter()
            .map(|g| self.rees.dehomogenize(&g.top_part(&lw)))
            .collect();
        canonical_ideal(self.dim(), &forms, &self.cfg)
    }

    /// Canonical generators of `in_w(I)`.
    pub fn initial_ideal(&self, w: &[Rat]) -> Result<Vec<Poly>> {
        self.check_pr(w)?;
        let gb = self.rees_gb(&[w])?;
        self.initial_from_gb(&gb, w)
    }

    /// Canonical generators of `in_(0,w)(Ĩ)`, which identify the cone of `w`.
    pub fn rees_initial_ideal(&self, w: &[Rat]) -> Result<Vec<Poly>> {
        self.check_pr(w)?;
        let gb = self.rees_gb(&[w])?;
        self.rees_key(&gb, w)
    }

    fn rees_key(&self, gb: &GroebnerBasis, w: &[Rat]) -> Result<Vec<Poly>> {
        let lw = lift_weight(w);
        let forms: Vec<Poly> = gb.elements().iter().map(|g| g.top_part(&lw)).collect();
        canonical_ideal(self.rees.ring().nvars(), &forms, &self.cfg)
    }

    /// The cone of `w` as a slice of the fan of `Ĩ`. Defined on all of the
    /// polynomial region.
    pub fn rees_cone(&self, w: &[Rat]) -> Result<GroebnerCone> {
        self.check_pr(w)?;
        let gb = self.rees_gb(&[w])?;
        let lw = lift_weight(w);
        let mut eqs = Vec::new();
        let mut strict = self.pr.clone();
        for (g, lead) in gb.elements().iter().zip(gb.leads()) {
            let top = g.max_weight(&lw).expect("nonzero");
            for t in g.monomials() {
                if t == lead {
                    continue;
                }
                let d = rees_diff(lead, t);
                if t.weighted_degree(&lw) == top {
                    eqs.push(d);
                } else {
                    strict.push(d);
                }
            }
        }
        let cone = Cone::new(self.dim(), eqs, strict);
        if !cone.contains(w) {
            return Err(Error::VerificationFailed(
                "weight is not inside its own cone".into(),
            ));
        }
        let witness = cone
            .relative_interior_point()
            .ok_or_else(|| Error::VerificationFailed("empty cone".into()))?;
        let positive_witness = cone.meets_positive_orthant();
        let mut marker = Vec::new();
        let mut marker_leads = Vec::new();
        for (g, l) in gb.elements().iter().zip(gb.leads()) {
            let d = self.rees.dehomogenize(g);
            let dl = Monomial::new(l.exps()[1..].to_vec());
            if !marker_leads.contains(&dl) {
                let c = d.coeff(&dl);
                marker.push(d.scale(&c.recip()));
                marker_leads.push(dl);
            }
        }
        Ok(GroebnerCone {
            cone,
            witness,
            marker,
            marker_leads,
            initial: self.initial_from_gb(&gb, w)?,
            positive_witness,
        })
    }

    /// True when the initial ideal of `w` is also that of a positive vector.
    pub fn gr_contains(&self, w: &[Rat]) -> Result<bool> {
        Ok(self.rees_cone(w)?.in_gr())
    }

    /// The cone of a weight in the Gröbner region, described by the reduced
    /// basis of `I` for `≺_w'` at a positive point `w'` of the class: terms
    /// of each initial form are tied, all other terms are strictly smaller.
    pub fn cone_of(&self, w: &[Rat]) -> Result<GroebnerCone> {
        let slice = self.rees_cone(w)?;
        let Some(pos) = slice.positive_witness.clone() else {
            return Err(Error::OutsideGroebnerRegion);
        };
        let ord = self.tiebreak.refine(&pos);
        let gb = buchberger_with(
            &self.ring,
            &self.rees.base_generators(&self.hgens),
            &ord,
            &self.cfg,
            None,
        )?;
        let mut eqs = Vec::new();
        let mut strict = self.pr.clone();
        for (g, lead) in gb.elements().iter().zip(gb.leads()) {
            let top = g.max_weight(&pos).expect("nonzero");
            for t in g.monomials() {
                if t == lead {
                    continue;
                }
                let d = sub(&to_rat(lead), &to_rat(t));
                if t.weighted_degree(&pos) == top {
                    eqs.push(d);
                } else {
                    strict.push(d);
                }
            }
        }
        let cone = Cone::new(self.dim(), eqs, strict);
        if !cone.contains(w) {
            return Err(Error::VerificationFailed(
                "cone of the class does not contain the weight".into(),
            ));
        }
        let witness = cone
            .relative_interior_point()
            .ok_or_else(|| Error::VerificationFailed("empty cone".into()))?;
        let forms: Vec<Poly> = gb.elements().iter().map(|g| g.top_part(&pos)).collect();
        let positive_witness = cone.meets_positive_orthant();
        Ok(GroebnerCone {
            cone,
            witness,
            marker: gb.elements().to_vec(),
            marker_leads: gb.leads().to_vec(),
            initial: canonical_ideal(self.dim(), &forms, &self.cfg)?,
            positive_witness,
        })
    }

    pub fn same_class(&self, w1: &[Rat], w2: &[Rat]) -> Result<bool> {
        Ok(self.initial_ideal(w1)? == self.initial_ideal(w2)?)
    }

    /// Largest `ε0` such that `in_(w'+εr)(I)` is constant for `0 < ε < ε0`,
    /// read off the marker basis of `w'` refined by `r` and the polynomial
    /// region. Verifies `in_r(in_w'(I)) = in_(w'+ε0/2·r)(I)` before returning.
    pub fn epsilon_threshold(&self, base: &[Rat], r: &[Rat]) -> Result<Rat> {
        self.check_pr(base)?;
        if r.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: r.len(),
            });
        }
        let gb = self.rees_gb(&[base, r])?;
        let mut eps: Option<Rat> = None;
        let mut consider = |d: &[Rat]| {
            let a = dot_rat(d, base);
            let b = dot_rat(d, r);
            if a.is_positive() && b.is_negative() {
                let ratio = a / -b;
                if eps.as_ref().is_none_or(|e| ratio < *e) {
                    eps = Some(ratio);
                }
            }
        };
        for (g, lead) in gb.elements().iter().zip(gb.leads()) {
            for t in g.monomials() {
                if t != lead {
                    consider(&rees_diff(lead, t));
                }
            }
        }
        for h in &self.pr {
            consider(h);
        }
        let eps = eps.unwrap_or_else(Rat::one);

        let inner = self.initial_from_gb(&gb, base)?;
        let s = RingPresentation::commutative(self.dim(), 0);
        let lhs = if inner.is_empty() {
            Vec::new()
        } else {
            let rw = WeightVector::from_flat(self.dim(), r);
            let forms = initial_ideal_weight_with(
                &s,
                &inner,
                &rw,
                &MonomialOrder::grevlex(self.dim()),
                Route::Auto,
                &self.cfg,
            )?;
            canonical_ideal(self.dim(), &forms, &self.cfg)?
        };
        let half = &eps / rat(2);
        let rhs = self.initial_ideal(&axpy(base, &half, r))?;
        if lhs != rhs {
            return Err(Error::VerificationFailed(
                "perturbation identity failed".into(),
            ));
        }
        Ok(eps)
    }

    /// Walks the segment from `w1` to `w2` (both positive) and certifies the
    /// initial ideals on both sides of every wall.
    pub fn walk(&self, w1: &[Rat], w2: &[Rat]) -> Result<Walk> {
        self.check_pr(w1)?;
        self.check_pr(w2)?;
        if !w1.iter().chain(w2).all(Signed::is_positive) {
            return Err(Error::NotPositive);
        }
        let n = self.dim();
        let d = sub(w2, w1);
        let at = |s: &Rat| axpy(w1, s, &d);
        let s_ring = RingPresentation::commutative(n, 0);
        let in_s = |ideal: &[Poly], w: &[Rat]| -> Result<Vec<Poly>> {
            if ideal.is_empty() {
                return Ok(Vec::new());
            }
            let wv = WeightVector::from_flat(n, w);
            let forms = initial_ideal_weight_with(
                &s_ring,
                ideal,
                &wv,
                &MonomialOrder::grevlex(n),
                Route::Direct,
                &self.cfg,
            )?;
            canonical_ideal(n, &forms, &self.cfg)
        };
        let mut steps = Vec::new();
        let mut s = Rat::zero();
        loop {
            let here = at(&s);
            let wall = self.initial_ideal(&here)?;
            let eps = self.epsilon_threshold(&here, &d)?;
            let room = Rat::one() - &s;
            let step = if eps < room { eps } else { room };
            let mid_s = &s + &step / rat(2);
            let mid = at(&mid_s);
            let cone = self.rees_cone(&mid)?;
            let mut next = Rat::one();
            for c in &cone.cone.strict {
                let cd = dot_rat(c, &d);
                if cd.is_negative() {
                    let t = -dot_rat(c, w1) / cd;
                    if t < next {
                        next = t;
                    }
                }
            }
            let initial = cone.initial.clone();
            if in_s(&wall, w2)? != initial {
                return Err(Error::VerificationFailed(format!(
                    "walk: leaving the wall at {} does not match the next interval",
                    s
                )));
            }
            let next_ideal = self.initial_ideal(&at(&next))?;
            if in_s(&next_ideal, w1)? != initial {
                return Err(Error::VerificationFailed(format!(
                    "walk: reaching the wall at {} does not match the interval",
                    next
                )));
            }
            steps.push(WalkStep {
                from: s.clone(),
                to: next.clone(),
                wall_kdim: kdim_of(&wall, n, &self.cfg)?,
                wall_initial: wall,
                kdim: kdim_of(&initial, n, &self.cfg)?,
                initial,
            });
            if next.is_one() {
                return Ok(Walk {
                    steps,
                    end_kdim: kdim_of(&next_ideal, n, &self.cfg)?,
                    end_initial: next_ideal,
                });
            }
            s = next;
        }
    }

    /// Enumerates the maximal cones inside the polynomial region by crossing
    /// every facet that is not a facet of the region itself.
    pub fn enumerate(&self, fcfg: &FanConfig) -> Result<GroebnerFan> {
        let n = self.dim();
        let mut rng = ChaCha8Rng::seed_from_u64(fcfg.seed);
        let pr_cone = Cone::new(n, vec![], self.pr.clone());
        let seed = pr_sample_positive(&self.ring).flat();
        let first = self.generic_neighbor(&seed, None, &mut rng)?;
        let mut cones: Vec<(Vec<Poly>, GroebnerCone)> = Vec::new();
        let mut index: HashMap<Vec<Poly>, usize> = HashMap::new();
        let mut adjacency: Vec<(usize, usize)> = Vec::new();
        let mut queue = VecDeque::new();
        index.insert(first.0.clone(), 0);
        cones.push(first);
        queue.push_back(0usize);
        let mut complete = true;
        while let Some(ci) = queue.pop_front() {
            let cone = cones[ci].1.clone();
            for (k, s) in cone.cone.strict.iter().enumerate() {
                if pr_cone.strict.contains(s) {
                    continue;
                }
                let Some(p) = cone.cone.facet_point(k) else {
                    continue;
                };
                let dir: Vec<Rat> = s.iter().map(|x| -x).collect();
                let (key, nb) = self.generic_neighbor(&p, Some(&dir), &mut rng)?;
                let nj = match index.get(&key) {
                    Some(&j) => j,
                    None => {
                        if cones.len() >= fcfg.max_cones {
                            complete = false;
                            continue;
                        }
                        let j = cones.len();
                        index.insert(key.clone(), j);
                        cones.push((key, nb));
                        queue.push_back(j);
                        j
                    }
                };
                if nj != ci {
                    let e = (ci.min(nj), ci.max(nj));
                    if !adjacency.contains(&e) {
                        adjacency.push(e);
                    }
                }
            }
        }
        let (cones, adjacency) = self.merge_classes(cones, adjacency)?;
        let mut order: Vec<usize> = (0..cones.len()).collect();
        order.sort_by(|&a, &b| {
            let (ca, cb) = (&cones[a].1.cone, &cones[b].1.cone);
            (&ca.strict, &ca.equalities).cmp(&(&cb.strict, &cb.equalities))
        });
        let mut pos = vec![0; cones.len()];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        let mut adjacency: Vec<(usize, usize)> = adjacency
            .into_iter()
            .map(|(a, b)| (pos[a].min(pos[b]), pos[a].max(pos[b])))
            .collect();
        adjacency.sort();
        let mut slots: Vec<Option<GroebnerCone>> = cones.into_iter().map(|(_, c)| Some(c)).collect();
        let cones = order.iter().map(|&o| slots[o].take().unwrap()).collect();
        Ok(GroebnerFan {
            cones,
            adjacency,
            complete,
        })
    }

    /// Inside the Gröbner region several slices can share one initial ideal
    /// of `I`; replaces them by the class cone. Slices outside the region
    /// are kept as they are.
    #[allow(clippy::type_complexity)]
    fn merge_classes(
        &self,
        slices: Vec<(Vec<Poly>, GroebnerCone)>,
        adjacency: Vec<(usize, usize)>,
    ) -> Result<(Vec<(Vec<Poly>, GroebnerCone)>, Vec<(usize, usize)>)> {
        let mut classes: Vec<GroebnerCone> = Vec::new();
        let mut target: Vec<Option<usize>> = vec![None; slices.len()];
        for (i, (_, c)) in slices.iter().enumerate() {
            if let Some(j) = classes.iter().position(|k| k.contains(&c.witness)) {
                target[i] = Some(j);
            } else if c.in_gr() {
                target[i] = Some(classes.len());
                classes.push(self.cone_of(&c.witness)?);
            }
        }
        for (i, (_, c)) in slices.iter().enumerate() {
            if target[i].is_none() {
                target[i] = classes.iter().position(|k| k.contains(&c.witness));
            }
        }
        let mut out: Vec<(Vec<Poly>, GroebnerCone)> = classes
            .into_iter()
            .map(|k| (k.initial.clone(), k))
            .collect();
        let mut index = Vec::with_capacity(slices.len());
        for (i, s) in slices.into_iter().enumerate() {
            match target[i] {
                Some(j) => index.push(j),
                None => {
                    index.push(out.len());
                    out.push(s);
                }
            }
        }
        let mut adj: Vec<(usize, usize)> = Vec::new();
        for (a, b) in adjacency {
            let (a, b) = (index[a], index[b]);
            if a != b {
                let e = (a.min(b), a.max(b));
                if !adj.contains(&e) {
                    adj.push(e);
                }
            }
        }
        Ok((out, adj))
    }

    /// Steps from `p` along `dir` (or a random direction) by half the exact
    /// threshold and returns the full-dimensional cone reached, trying fresh
    /// random directions when the step lands on a lower-dimensional cone.
    fn generic_neighbor(
        &self,
        p: &[Rat],
        dir: Option<&[Rat]>,
        rng: &mut ChaCha8Rng,
    ) -> Result<(Vec<Poly>, GroebnerCone)> {
        let n = self.dim();
        let mut dir: Vec<Rat> = match dir {
            Some(d) => d.to_vec(),
            None => (0..n).map(|_| rat(rng.gen_range(-7..=7))).collect(),
        };
        let mut base = p.to_vec();
        for _ in 0..64 {
            let eps = self.epsilon_threshold(&base, &dir)?;
            let q = axpy(&base, &(eps / rat(2)), &dir);
            let cone = self.rees_cone(&q)?;
            if cone.cone.is_full_dimensional() {
                let key = self.rees_initial_ideal(&q)?;
                return Ok((key, cone));
            }
            // Still on a wall: perturb within a small box around q.
            base = q;
            dir = (0..n).map(|_| rat(rng.gen_range(-7..=7))).collect();
        }
        Err(Error::BudgetExceeded(
            "could not reach a full-dimensional cone".into(),
        ))
    }

    /// Union of the reduced bases of all maximal cones, each element scaled
    /// so that its lex-largest coefficient is 1.
    pub fn universal_gb(&self, fcfg: &FanConfig) -> Result<Vec<Poly>> {
        let fan = self.enumerate(fcfg)?;
        if !fan.complete {
            return Err(Error::BudgetExceeded("fan enumeration incomplete".into()));
        }
        let mut out: Vec<Poly> = Vec::new();
        for c in &fan.cones {
            for g in &c.marker {
                let (_, top) = g.terms().next_back().expect("nonzero");
                let g = g.scale(&top.recip());
                if !out.contains(&g) {
                    out.push(g);
                }
            }
        }
        out.sort_by(|a, b| a.terms().rev().cmp(b.terms().rev()));
        Ok(out)
    }
}

fn to_rat(m: &Monomial) -> Vec<Rat> {
    m.exps().iter().map(|&e| rat(e as i64)).collect()
}

impl ReesPresentation {
    /// Dehomogenizes Rees elements back into the base ring.
    pub fn base_generators(&self, hs: &[Poly]) -> Vec<Poly> {
        hs.iter().map(|h| self.dehomogenize(h)).collect()
    }
}

pub fn cone_of(
    ring: &RingPresentation,
    gens: &[Poly],
    w: &WeightVector,
) -> Result<GroebnerCone> {
    w.check(ring)?;
    FanIdeal::new(ring, gens, &GbConfig::default())?.cone_of(&w.flat())
}

pub fn same_class(
    ring: &RingPresentation,
    gens: &[Poly],
    w1: &WeightVector,
    w2: &WeightVector,
) -> Result<bool> {
    w1.check(ring)?;
    w2.check(ring)?;
    FanIdeal::new(ring, gens, &GbConfig::default())?.same_class(&w1.flat(), &w2.flat())
}

pub fn epsilon_threshold(
    ring: &RingPresentation,
    gens: &[Poly],
    base: &WeightVector,
    r: &[Rat],
) -> Result<Rat> {
    base.check(ring)?;
    FanIdeal::new(ring, gens, &GbConfig::default())?.epsilon_threshold(&base.flat(), r)
}

pub fn gr_region_contains(
    ring: &RingPresentation,
    gens: &[Poly],
    w: &WeightVector,
) -> Result<bool> {
    if !pr_contains(ring, w)? {
        return Err(Error::NotInPolynomialRegion);
    }
    FanIdeal::new(ring, gens, &GbConfig::default())?.gr_contains(&w.flat())
}

pub fn walk(
    ring: &RingPresentation,
    gens: &[Poly],
    w1: &WeightVector,
    w2: &WeightVector,
) -> Result<Walk> {
    w1.check(ring)?;
    w2.check(ring)?;
    FanIdeal::new(ring, gens, &GbConfig::default())?.walk(&w1.flat(), &w2.flat())
}

pub fn enumerate_fan(ring: &RingPresentation, gens: &[Poly]) -> Result<GroebnerFan> {
    let cfg = FanConfig::default();
    FanIdeal::new(ring, gens, &cfg.gb)?.enumerate(&cfg)
}

pub fn universal_gb(ring: &RingPresentation, gens: &[Poly]) -> Result<Vec<Poly>> {
    let cfg = FanConfig::default();
    FanIdeal::new(ring, gens, &cfg.gb)?.universal_gb(&cfg)
}

/// Monomial ideal of the initial monomials of a cone's marker basis.
pub fn marker_ideal(c: &GroebnerCone, nvars: usize) -> MonomialIdeal {
    MonomialIdeal::new(nvars, c.marker_leads.iter().cloned())
}
