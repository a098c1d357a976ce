//! Characteristic ideals, Gelfand–Kirillov dimension and the component
//! dimension check for cyclic modules `M = R/I`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::filtration::{pr_contains, pr_sample_positive, WeightVector};
use crate::groebner::{
    buchberger_with, canonical_ideal, commutative_initial, initial_ideal_weight_with, GbConfig,
    Route,
};
use crate::monomial::MonomialIdeal;
use crate::order::MonomialOrder;
use crate::poly::{fmt_monomial, Poly};
use crate::ring::RingPresentation;

/// `in_w(I) ⊂ S` in canonical form, with its radical when it is monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharIdeal {
    pub generators: Vec<Poly>,
    pub monomial: Option<MonomialIdeal>,
    pub radical: Option<MonomialIdeal>,
}

impl CharIdeal {
    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.as_constant().is_some())
    }

    pub fn is_monomial(&self) -> bool {
        self.monomial.is_some()
    }
}

pub fn char_ideal(ring: &RingPresentation, gens: &[Poly], w: &WeightVector) -> Result<CharIdeal> {
    char_ideal_with(ring, gens, w, &GbConfig::default())
}

pub fn char_ideal_with(
    ring: &RingPresentation,
    gens: &[Poly],
    w: &WeightVector,
    cfg: &GbConfig,
) -> Result<CharIdeal> {
    let nv = ring.nvars();
    let forms = initial_ideal_weight_with(
        ring,
        gens,
        w,
        &MonomialOrder::grevlex(nv),
        Route::Auto,
        cfg,
    )?;
    let generators = canonical_ideal(nv, &forms, cfg)?;
    let monomial = if generators.iter().all(Poly::is_monomial) {
        Some(MonomialIdeal::new(
            nv,
            generators.iter().map(|g| g.monomials().next().unwrap().clone()),
        ))
    } else {
        None
    };
    let radical = monomial.as_ref().map(MonomialIdeal::radical);
    Ok(CharIdeal {
        generators,
        monomial,
        radical,
    })
}

/// GK dimension of `R/I` for the filtration of a positive weight: the Krull
/// dimension of `in_≺w(I)`. `None` when `I = R` (zero module).
pub fn gk_dim(ring: &RingPresentation, gens: &[Poly], w: &WeightVector) -> Result<Option<usize>> {
    gk_dim_with(ring, gens, w, &GbConfig::default())
}

pub fn gk_dim_with(
    ring: &RingPresentation,
    gens: &[Poly],
    w: &WeightVector,
    cfg: &GbConfig,
) -> Result<Option<usize>> {
    w.check(ring)?;
    if !w.is_positive() {
        return Err(Error::NotPositive);
    }
    if !pr_contains(ring, w)? {
        return Err(Error::NotInPolynomialRegion);
    }
    let ord = MonomialOrder::grevlex(ring.nvars()).refine(&w.flat());
    let gb = buchberger_with(ring, gens, &ord, cfg, None)?;
    Ok(gb.initial_ideal().krull_dim())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "VACUOUS-PASS")]
    VacuousPass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "UNSUPPORTED")]
    Unsupported,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::VacuousPass => "VACUOUS-PASS",
            Verdict::Fail => "FAIL",
            Verdict::Unsupported => "UNSUPPORTED",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ComponentEntry {
    pub vars: Vec<String>,
    pub dim: usize,
    pub pass: bool,
    pub within_gkdim: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ComponentReport {
    pub weight: Vec<String>,
    pub char_ideal: Vec<String>,
    pub is_monomial: bool,
    pub radical: Option<Vec<String>>,
    pub components: Vec<ComponentEntry>,
    /// Dimension of the characteristic variety; `None` when it is empty.
    pub total_dim: Option<usize>,
    pub bound: usize,
    pub gkdim: Option<usize>,
    pub verdict: Verdict,
}

impl ComponentReport {
    pub fn is_empty_variety(&self) -> bool {
        self.total_dim.is_none()
    }

    /// Every listed component lies between the bound and the GK dimension.
    pub fn sandwich_holds(&self) -> bool {
        self.components.iter().all(|c| c.pass && c.within_gkdim)
    }
}

/// Checks that every irreducible component of the characteristic variety
/// has dimension at least `bound` and at most the GK dimension. Minimal
/// primes are only computed for monomial characteristic ideals; otherwise
/// only the total dimension is reported.
pub fn verify_component_bound(
    ring: &RingPresentation,
    gens: &[Poly],
    w: &WeightVector,
    bound: usize,
) -> Result<ComponentReport> {
    verify_component_bound_with(ring, gens, w, bound, &GbConfig::default())
}

pub fn verify_component_bound_with(
    ring: &RingPresentation,
    gens: &[Poly],
    w: &WeightVector,
    bound: usize,
    cfg: &GbConfig,
) -> Result<ComponentReport> {
    let nv = ring.nvars();
    let names = ring.names();
    let ci = char_ideal_with(ring, gens, w, cfg)?;
    let gkdim = gk_dim_with(ring, gens, &pr_sample_positive(ring), cfg)?;
    let total_dim = if ci.generators.is_empty() {
        Some(nv)
    } else {
        commutative_initial(&ci.generators, &MonomialOrder::grevlex(nv), cfg)?.krull_dim()
    };
    let mut components = Vec::new();
    let verdict = if total_dim.is_none() {
        Verdict::VacuousPass
    } else if let Some(rad) = &ci.radical {
        for p in rad.minimal_primes() {
            let dim = nv - p.len();
            components.push(ComponentEntry {
                vars: p.iter().map(|&v| names[v].clone()).collect(),
                dim,
                pass: dim >= bound,
                within_gkdim: gkdim.is_some_and(|g| dim <= g),
            });
        }
        if components.iter().all(|c| c.pass) {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    } else {
        Verdict::Unsupported
    };
    let fmt_ideal = |m: &MonomialIdeal| -> Vec<String> {
        m.gens().iter().map(|g| fmt_monomial(g, names)).collect()
    };
    Ok(ComponentReport {
        weight: w.flat().iter().map(|x| x.to_string()).collect(),
        char_ideal: ci.generators.iter().map(|g| ring.fmt_poly(g)).collect(),
        is_monomial: ci.monomial.is_some(),
        radical: ci.radical.as_ref().map(fmt_ideal),
        components,
        total_dim,
        bound,
        gkdim,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, Monomial};

    fn p(nv: usize, terms: &[(&[u32], i64)]) -> Poly {
        Poly::from_terms(
            nv,
            terms.iter().map(|(e, c)| (Monomial::new(e.to_vec()), rat(*c))),
        )
    }

    fn example_b() -> (RingPresentation, Vec<Poly>) {
        (
            RingPresentation::weyl(2).unwrap(),
            vec![
                p(4, &[(&[0, 0, 2, 0], 1), (&[0, 0, 0, 1], -1)]),
                p(4, &[(&[1, 0, 1, 0], 1), (&[0, 1, 0, 1], 2)]),
            ],
        )
    }

    #[test]
    fn example_b_components() {
        let (r, g) = example_b();
        let w = WeightVector::from_ints(2, &[1, 1, 1, 3]);
        let rep = verify_component_bound(&r, &g, &w, 2).unwrap();
        assert_eq!(rep.radical.as_deref(), Some(&["y2".to_string(), "x2*y1".to_string()][..]));
        assert_eq!(rep.components.len(), 2);
        assert!(rep.components.iter().all(|c| c.dim == 2));
        assert_eq!(rep.verdict, Verdict::Pass);
        assert_eq!(rep.gkdim, Some(2));
    }

    #[test]
    fn example_a_is_vacuous() {
        let r = RingPresentation::weyl(2).unwrap();
        let g = vec![
            p(4, &[(&[0, 0, 1, 0], 1), (&[0, 0, 0, 0], -1)]),
            p(4, &[(&[0, 0, 0, 1], 1), (&[0, 0, 0, 0], -1)]),
        ];
        let w = WeightVector::from_ints(2, &[2, 2, -1, -1]);
        let rep = verify_component_bound(&r, &g, &w, 2).unwrap();
        assert_eq!(rep.char_ideal, vec!["1".to_string()]);
        assert_eq!(rep.verdict, Verdict::VacuousPass);
    }

    #[test]
    fn gk_dims() {
        let a1 = RingPresentation::weyl(1).unwrap();
        let w = WeightVector::from_ints(1, &[1, 1]);
        assert_eq!(gk_dim(&a1, &[Poly::var(2, 1)], &w).unwrap(), Some(1));
        assert_eq!(gk_dim(&a1, &[], &w).unwrap(), Some(2));
        let (r, g) = example_b();
        assert_eq!(gk_dim(&r, &g, &WeightVector::from_ints(2, &[1, 1, 1, 1])).unwrap(), Some(2));
    }
}
