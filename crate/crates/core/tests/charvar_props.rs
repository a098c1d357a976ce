mod common;

use common::{corpus, nonzero_poly};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewgb::charvar::{gk_dim, verify_component_bound, Verdict};
use skewgb::groebner::{commutative_initial, initial_ideal_weight_with, GbConfig};
use skewgb::hilbert::{count_standard_monomials, hilbert_series_monomial, quasi_poly_degree, QuasiPolynomial};
use skewgb::{buchberger, MonomialIdeal, MonomialOrder, Poly, Rat, RingPresentation, Route, WeightVector};

fn kdim(gens: &[Poly], nv: usize) -> Option<usize> {
    if gens.is_empty() {
        return Some(nv);
    }
    commutative_initial(gens, &MonomialOrder::grevlex(nv), &GbConfig::default())
        .unwrap()
        .krull_dim()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn weight_initial_ideals_do_not_gain_dimension(
        gens in prop::collection::vec(nonzero_poly(3, 3, 3), 1..=2),
        w in prop::collection::vec(-3i64..=3, 3),
        pos in prop::collection::vec(1i64..=4, 3),
    ) {
        let s = RingPresentation::commutative(3, 0);
        let cfg = GbConfig::default();
        let tb = MonomialOrder::grevlex(3);
        let d = kdim(&gens, 3);
        let w = WeightVector::from_ints(3, &w);
        let inw = initial_ideal_weight_with(&s, &gens, &w, &tb, Route::Auto, &cfg).unwrap();
        let dw = kdim(&inw, 3);
        // None (unit ideal) is below every dimension.
        prop_assert!(dw <= d);
        let p = WeightVector::from_ints(3, &pos);
        let inp = initial_ideal_weight_with(&s, &gens, &p, &tb, Route::Auto, &cfg).unwrap();
        prop_assert_eq!(kdim(&inp, 3), d);
    }
}

fn positive_weight(rng: &mut ChaCha8Rng, nv: usize) -> WeightVector {
    let flat: Vec<i64> = (0..nv).map(|_| rng.gen_range(1..=6)).collect();
    WeightVector::from_ints(nv / 2, &flat)
}

#[test]
fn gk_dimension_is_weight_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for (r, gens) in corpus() {
        let dims: Vec<_> = (0..5)
            .map(|_| gk_dim(&r, &gens, &positive_weight(&mut rng, r.nvars())).unwrap())
            .collect();
        assert!(dims.iter().all(|d| *d == dims[0]), "{dims:?}");
    }
}

/// Initial monomial ideals of the corpus under weight-refined orders.
fn monomial_ideals() -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    let mut out = vec![MonomialIdeal::zero(2), MonomialIdeal::unit(3)];
    for (r, gens) in corpus() {
        let w = positive_weight(&mut rng, r.nvars());
        let ord = MonomialOrder::grevlex(r.nvars()).refine(&w.flat());
        out.push(buchberger(&r, &gens, &ord).unwrap().initial_ideal());
    }
    out
}

#[test]
fn hilbert_series_matches_counting() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for j in monomial_ideals() {
        let nv = j.nvars();
        let weights: Vec<i64> = (0..nv).map(|_| rng.gen_range(1..=3)).collect();
        let h = hilbert_series_monomial(&j, &weights).unwrap();
        let coeffs = h.coefficients(12);
        for d in 0..=12 {
            assert_eq!(coeffs[d], count_standard_monomials(&j, &weights, d as i64));
        }
        let cum = h.cumulative();
        let Some(deg) = quasi_poly_degree(&h, true) else {
            assert!(j.is_unit());
            continue;
        };
        assert_eq!(Some(deg as usize), j.krull_dim());
        let c = cum.coefficients(80);
        let q = QuasiPolynomial::fit(cum.period(), deg as usize, 50, |i| c[i as usize].clone());
        for i in 50..=80u64 {
            assert_eq!(q.eval(i), Rat::from_integer(c[i as usize].clone()));
        }
        assert_eq!(q.degree(), Some(deg as usize));
        assert!(c[80] > BigInt::from(0));
    }
}

#[test]
fn minimal_primes_recompose_the_radical() {
    for j in monomial_ideals() {
        if j.is_unit() {
            continue;
        }
        let nv = j.nvars();
        let primes = j.minimal_primes();
        let mut acc = MonomialIdeal::unit(nv);
        for p in &primes {
            acc = acc.intersect(&MonomialIdeal::prime(nv, p));
        }
        assert_eq!(acc, j.radical());
        assert_eq!(j.krull_dim(), primes.iter().map(|p| nv - p.len()).max());
    }
}

#[test]
fn component_dimensions_are_sandwiched() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    for (r, gens) in corpus() {
        for _ in 0..3 {
            // Mixed-sign weights in the polynomial region.
            let n = r.n();
            let u: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
            let v: Vec<i64> = u.iter().map(|a| 1 - a + rng.gen_range(0..3)).collect();
            let flat: Vec<i64> = u.into_iter().chain(v).collect();
            let w = WeightVector::from_ints(n, &flat);
            let rep = verify_component_bound(&r, &gens, &w, n).unwrap();
            match rep.verdict {
                Verdict::Pass | Verdict::VacuousPass => assert!(rep.sandwich_holds()),
                Verdict::Unsupported => assert!(!rep.is_monomial),
                Verdict::Fail => panic!("component below n for {w}"),
            }
        }
    }
}
