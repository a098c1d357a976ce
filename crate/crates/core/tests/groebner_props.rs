mod common;

use std::collections::BTreeSet;

use common::{corpus, poly};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewgb::groebner::{
    canonical_ideal, commutative_initial, initial_ideal_weight_with, weight_groebner, GbConfig,
};
use skewgb::{
    buchberger, initial_ideal_order, multiply, normal_form, BaseOrder, MonomialIdeal,
    MonomialOrder, Poly, RingPresentation, Route, WeightVector,
};

fn random_order(rng: &mut ChaCha8Rng, nv: usize) -> MonomialOrder {
    let base = [BaseOrder::Lex, BaseOrder::GrLex, BaseOrder::GRevLex][rng.gen_range(0..3)];
    let mut perm: Vec<usize> = (0..nv).collect();
    perm.shuffle(rng);
    MonomialOrder::new(base, nv).with_priority(perm).unwrap()
}

/// Integer weight of `A_n` with `u_i + v_i > 0`; entries may be negative.
fn random_weight(rng: &mut ChaCha8Rng, n: usize, nonnegative: bool) -> WeightVector {
    let lo = if nonnegative { 0 } else { -3 };
    let u: Vec<i64> = (0..n).map(|_| rng.gen_range(lo..=3)).collect();
    let v: Vec<i64> = u
        .iter()
        .map(|a| {
            let lo = if nonnegative { (1 - a).max(0) } else { 1 - a };
            rng.gen_range(lo..=lo + 3)
        })
        .collect();
    let mut flat = u;
    flat.extend(v);
    WeightVector::from_ints(n, &flat)
}

fn leads(gens: &[Poly], ord: &MonomialOrder) -> MonomialIdeal {
    let nv = ord.nvars();
    MonomialIdeal::new(nv, gens.iter().filter_map(|g| ord.lead_monomial(g)))
}

#[test]
fn initial_of_initial_is_refined_initial() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let cases = corpus();
    let cfg = GbConfig::default();
    for k in 0..30 {
        let (r, gens) = &cases[k % cases.len()];
        let nv = r.nvars();
        let w = random_weight(&mut rng, r.n(), k % 2 == 0);
        let tb = random_order(&mut rng, nv);
        let forms = initial_ideal_weight_with(r, gens, &w, &tb, Route::Auto, &cfg).unwrap();
        let lhs = commutative_initial(&forms, &tb, &cfg).unwrap();
        let refined = tb.refine(&w.flat());
        let basis = weight_groebner(r, gens, &w, &tb, Route::Auto, &cfg).unwrap();
        let rhs = leads(&basis, &refined);
        assert_eq!(lhs, rhs, "case {k}, weight {w}");
    }
}

#[test]
fn initial_forms_form_a_groebner_basis() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let cfg = GbConfig::default();
    for (r, gens) in corpus() {
        let nv = r.nvars();
        let w = random_weight(&mut rng, r.n(), true);
        let tb = random_order(&mut rng, nv);
        let basis = weight_groebner(&r, &gens, &w, &tb, Route::Direct, &cfg).unwrap();
        let wf = w.flat();
        let forms: Vec<Poly> = basis.iter().map(|g| g.top_part(&wf)).collect();
        // No new initial monomials appear when completing the forms.
        assert_eq!(commutative_initial(&forms, &tb, &cfg).unwrap(), leads(&forms, &tb));
        // Reducedness carries over to the forms.
        let ls: Vec<_> = forms.iter().map(|f| tb.lead_monomial(f).unwrap()).collect();
        for (i, f) in forms.iter().enumerate() {
            assert_eq!(tb.lead(f).unwrap().1, &skewgb::rat(1));
            for m in f.monomials() {
                for (j, l) in ls.iter().enumerate() {
                    assert!(i == j || !l.divides(m), "form {i} not reduced by lead {j}");
                }
            }
        }
    }
}

#[test]
fn initial_ideal_ignores_generators_and_tiebreak() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let cfg = GbConfig::default();
    for (r, gens) in corpus() {
        let nv = r.nvars();
        let w = random_weight(&mut rng, r.n(), false);
        let canon = |gs: &[Poly], tb: &MonomialOrder| {
            let forms = initial_ideal_weight_with(&r, gs, &w, tb, Route::Auto, &cfg).unwrap();
            canonical_ideal(nv, &forms, &cfg).unwrap()
        };
        let base = canon(&gens, &MonomialOrder::grevlex(nv));
        // Same ideal, different generators: add a left combination.
        let mut more = gens.clone();
        let c = multiply(&r, &Poly::var(nv, nv - 1), &gens[0]).unwrap();
        more.push(&c + &gens[gens.len() - 1]);
        more.reverse();
        assert_eq!(canon(&more, &MonomialOrder::grevlex(nv)), base);
        let tb = random_order(&mut rng, nv);
        assert_eq!(canon(&gens, &tb), base);
    }
}

#[test]
fn finitely_many_initial_ideals() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let (r, gens) = corpus().swap_remove(4);
    let mut seen = BTreeSet::new();
    let mut after_half = 0;
    for k in 0..200 {
        let ord = random_order(&mut rng, r.nvars());
        let j = initial_ideal_order(&r, &gens, &ord).unwrap();
        seen.insert(j.gens().to_vec());
        if k == 99 {
            after_half = seen.len();
        }
    }
    assert_eq!(seen.len(), after_half, "new initial ideals kept appearing");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn ideal_members_reduce_to_zero(
        k in 0usize..9,
        coeffs in prop::collection::vec(poly(4, 2, 3), 3),
    ) {
        let (r, gens) = corpus().swap_remove(k);
        let nv = r.nvars();
        let ord = MonomialOrder::grevlex(nv);
        let gb = buchberger(&r, &gens, &ord).unwrap();
        let mut f = Poly::zero(nv);
        for (a, g) in coeffs.iter().zip(gens.iter().cycle()) {
            let a = Poly::from_terms(nv, a.terms().map(|(m, c)| {
                (skewgb::Monomial::new(m.exps()[..nv].to_vec()), c.clone())
            }));
            f = &f + &multiply(&r, &a, g).unwrap();
        }
        prop_assert!(normal_form(&r, &f, gb.elements(), &ord).unwrap().is_zero());
        for (i, g) in gb.elements().iter().enumerate() {
            let rest: Vec<Poly> = gb.elements().iter().enumerate()
                .filter(|(j, _)| *j != i).map(|(_, h)| h.clone()).collect();
            prop_assert!(!normal_form(&r, g, &rest, &ord).unwrap().is_zero());
        }
    }
}

#[test]
fn weights_outside_region_fail() {
    let r = RingPresentation::weyl(1).unwrap();
    let gens = skewgb::parse_ideal(&r, "y1").unwrap();
    let w = WeightVector::from_ints(1, &[-1, 1]);
    let e = weight_groebner(&r, &gens, &w, &MonomialOrder::grevlex(2), Route::Auto, &GbConfig::default());
    assert_eq!(e.unwrap_err(), skewgb::Error::NotInPolynomialRegion);
}

#[test]
fn saturation_does_not_change_initial_ideals() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let cfg = GbConfig::default();
    for (k, (r, gens)) in corpus().iter().enumerate() {
        let nv = r.nvars();
        for j in 0..3 {
            let w = random_weight(&mut rng, r.n(), j == 0);
            let tb = random_order(&mut rng, nv);
            let [plain, saturated] = [false, true].map(|saturate| {
                let forms = initial_ideal_weight_with(
                    r,
                    gens,
                    &w,
                    &tb,
                    Route::Homogenized { saturate },
                    &cfg,
                )
                .unwrap();
                canonical_ideal(nv, &forms, &cfg).unwrap()
            });
            assert_eq!(plain, saturated, "case {k}, weight {w}");
        }
    }
}
