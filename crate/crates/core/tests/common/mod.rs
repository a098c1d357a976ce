#![allow(dead_code)]

use proptest::prelude::*;
use skewgb::{rat, Monomial, Poly, RingPresentation};

/// Exponent vectors with total degree at most `max_deg`.
pub fn exps(nv: usize, max_deg: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..=max_deg, nv).prop_map(move |mut e| {
        let mut left = max_deg;
        for x in e.iter_mut() {
            *x = (*x).min(left);
            left -= *x;
        }
        e
    })
}

pub fn poly(nv: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((exps(nv, max_deg), -5i64..=5), 1..=max_terms).prop_map(move |ts| {
        Poly::from_terms(nv, ts.into_iter().map(|(e, c)| (Monomial::new(e), rat(c))))
    })
}

pub fn nonzero_poly(nv: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Poly> {
    poly(nv, max_deg, max_terms).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn p(nv: usize, terms: &[(&[u32], i64)]) -> Poly {
    Poly::from_terms(
        nv,
        terms.iter().map(|(e, c)| (Monomial::new(e.to_vec()), rat(*c))),
    )
}

/// Small ideals of A1 and A2 used across the property suites.
pub fn corpus() -> Vec<(RingPresentation, Vec<Poly>)> {
    let a1 = RingPresentation::weyl(1).unwrap();
    let a2 = RingPresentation::weyl(2).unwrap();
    let parse = |r: &RingPresentation, s: &str| skewgb::parse_ideal(r, s).unwrap();
    vec![
        (a1.clone(), parse(&a1, "y1^2 - x1")),
        (a1.clone(), parse(&a1, "x1*y1 - 2")),
        (a1.clone(), parse(&a1, "y1^2 + x1^3")),
        (a1.clone(), parse(&a1, "y1^2 - x1*y1 + 1")),
        (a2.clone(), parse(&a2, "y1^2 - y2; x1*y1 + 2*x2*y2")),
        (a2.clone(), parse(&a2, "x1*y1 + x2*y2")),
        (a2.clone(), parse(&a2, "x1*y1 - 1; y2^2 - x2")),
        (a2.clone(), parse(&a2, "y1 - y2; x1*y2")),
        (a2.clone(), parse(&a2, "y1*y2 - x1")),
    ]
}
