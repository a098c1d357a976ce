mod common;

use common::{nonzero_poly, poly};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewgb::ring::normalize_word_with;
use skewgb::{multiply, normalize_word, rat, validate_presentation, Monomial, Poly, RingPresentation};

fn lie_solvable() -> RingPresentation {
    // [y1, y2] = y1 acting on k[x1] by [y2, x1] = x1
    let mut r = RingPresentation::commutative(1, 2);
    r.set_bracket_yy(0, 1, Poly::var(3, 1));
    r.set_bracket_yx(1, 0, Poly::var(3, 0));
    r
}

fn rings() -> Vec<RingPresentation> {
    vec![
        RingPresentation::weyl(2).unwrap(),
        RingPresentation::sl2(),
        RingPresentation::weyl(3).unwrap(),
        lie_solvable(),
    ]
}

#[test]
fn shipped_presentations_validate() {
    for r in rings() {
        assert!(validate_presentation(&r));
    }
    // y1 acting by x1 violates the Jacobi identity with [y1, y2] = y1.
    let mut bad = lie_solvable();
    bad.set_bracket_yx(0, 0, Poly::var(3, 0));
    assert!(!validate_presentation(&bad));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rewriting_order_does_not_matter(
        k in 0usize..4,
        word in prop::collection::vec(0usize..64, 0..=6),
        seed in any::<u64>(),
    ) {
        let r = &rings()[k];
        let word: Vec<usize> = word.into_iter().map(|g| g % r.nvars()).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = normalize_word(r, &word);
        let b = normalize_word_with(r, &word, |inv| inv[rng.gen_range(0..inv.len())]);
        let c = normalize_word_with(r, &word, |inv| inv[inv.len() - 1]);
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(&a, &c);
    }

    #[test]
    fn associativity_weyl(f in poly(4, 4, 3), g in poly(4, 4, 3), h in poly(4, 4, 3)) {
        let r = RingPresentation::weyl(2).unwrap();
        let lhs = multiply(&r, &multiply(&r, &f, &g).unwrap(), &h).unwrap();
        let rhs = multiply(&r, &f, &multiply(&r, &g, &h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn associativity_sl2(f in poly(3, 4, 3), g in poly(3, 4, 3), h in poly(3, 4, 3)) {
        let r = RingPresentation::sl2();
        let lhs = multiply(&r, &multiply(&r, &f, &g).unwrap(), &h).unwrap();
        let rhs = multiply(&r, &f, &multiply(&r, &g, &h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn associativity_solvable(f in poly(3, 3, 3), g in poly(3, 3, 3), h in poly(3, 3, 3)) {
        let r = lie_solvable();
        let lhs = multiply(&r, &multiply(&r, &f, &g).unwrap(), &h).unwrap();
        let rhs = multiply(&r, &f, &multiply(&r, &g, &h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn commutative_degeneration(f in poly(5, 4, 4), g in poly(5, 4, 4)) {
        let r = RingPresentation::commutative(2, 3);
        prop_assert_eq!(multiply(&r, &f, &g).unwrap(), f.mul_commutative(&g));
    }

    #[test]
    fn monomial_products_have_expected_top(
        k in 0usize..4,
        a in prop::collection::vec(0u32..3, 4),
        b in prop::collection::vec(0u32..3, 4),
    ) {
        let r = &rings()[k];
        let nv = r.nvars();
        let a = Monomial::new(a.into_iter().cycle().take(nv).collect());
        let b = Monomial::new(b.into_iter().cycle().take(nv).collect());
        let prod = multiply(r, &Poly::term(a.clone(), rat(1)), &Poly::term(b.clone(), rat(1))).unwrap();
        let top = a.mul(&b);
        prop_assert_eq!(prod.coeff(&top), rat(1));
        // Every other term has strictly smaller total degree.
        for m in prod.monomials() {
            prop_assert!(m == &top || m.degree() < top.degree());
        }
    }

    #[test]
    fn nonzero_times_nonzero(f in nonzero_poly(4, 3, 3), g in nonzero_poly(4, 3, 3)) {
        let r = RingPresentation::weyl(2).unwrap();
        prop_assert!(!multiply(&r, &f, &g).unwrap().is_zero());
    }
}
