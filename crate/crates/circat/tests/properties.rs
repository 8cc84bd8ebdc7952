//! Structural invariants checked over randomized inputs: field axioms for
//! the scalar type, division with remainder for polynomials, dagger and
//! monoidal laws for linear and affine relations, functoriality of the
//! connectivity and wiring functors, and functoriality of free-term
//! evaluation.

mod common;

use circat::circuit::{element_label_pool, random_circuit};
use circat::freeprop::{evaluate, random_term, typecheck, LinRelAlgebra, Signature, Term};
use circat::kfield::{ratio, Polynomial, Scalar};
use circat::linrel::LinRel;
use circat::setcat::Corelation;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn poly_strategy() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-4i64..=4, 1i64..=3), 0..=3).prop_map(|coeffs| {
        Polynomial::from_coeffs(coeffs.into_iter().map(|(n, d)| ratio(n, d)).collect())
    })
}

fn nonzero_poly_strategy() -> impl Strategy<Value = Polynomial> {
    poly_strategy().prop_filter("denominator must be nonzero", |p| !p.is_zero())
}

fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    (poly_strategy(), nonzero_poly_strategy()).prop_map(|(n, d)| Scalar::new(n, d).unwrap())
}

proptest! {
    #[test]
    fn scalar_addition_and_multiplication_commute_and_associate(
        a in scalar_strategy(),
        b in scalar_strategy(),
        c in scalar_strategy(),
    ) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn scalar_multiplication_distributes_over_addition(
        a in scalar_strategy(),
        b in scalar_strategy(),
        c in scalar_strategy(),
    ) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn scalar_units_and_inverses_behave(a in scalar_strategy()) {
        prop_assert_eq!(&a + &Scalar::zero(), a.clone());
        prop_assert_eq!(&a * &Scalar::one(), a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
        prop_assert_eq!(-&(-&a), a.clone());
        if a.is_zero() {
            prop_assert!(a.inv().is_err());
            prop_assert!(Scalar::one().checked_div(&a).is_err());
        } else {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
            prop_assert_eq!(a.checked_div(&a).unwrap(), Scalar::one());
        }
    }

    #[test]
    fn scalar_text_form_round_trips(a in scalar_strategy()) {
        let text = a.to_string();
        let back: Scalar = text.parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn polynomial_division_decomposes_the_dividend(
        a in poly_strategy(),
        b in poly_strategy(),
    ) {
        if b.is_zero() {
            prop_assert!(a.div_rem(&b).is_err());
        } else {
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.is_zero() || r.degree().unwrap() < b.degree().unwrap());
        }
    }
}

#[test]
fn dagger_is_an_involution_and_reverses_composition() {
    for case in 0..200u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(20_000 + case);
        let (a, b, c) = (
            rng.gen_range(0..=3usize),
            rng.gen_range(0..=3usize),
            rng.gen_range(0..=3usize),
        );
        let f = common::random_linrel(&mut rng, a, b);
        let g = common::random_linrel(&mut rng, b, c);
        assert_eq!(f.dagger().dagger(), f, "case {case}: involution");
        assert_eq!(
            f.compose(&g).unwrap().dagger(),
            g.dagger().compose(&f.dagger()).unwrap(),
            "case {case}: anti-homomorphism"
        );
        assert_eq!(
            f.tensor(&g).dagger(),
            f.dagger().tensor(&g.dagger()),
            "case {case}: dagger respects tensor"
        );
    }
}

#[test]
fn linear_relations_satisfy_interchange() {
    for case in 0..200u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(21_000 + case);
        let dims: Vec<usize> = (0..6).map(|_| rng.gen_range(0..=2)).collect();
        let f = common::random_linrel(&mut rng, dims[0], dims[1]);
        let h = common::random_linrel(&mut rng, dims[1], dims[2]);
        let g = common::random_linrel(&mut rng, dims[3], dims[4]);
        let k = common::random_linrel(&mut rng, dims[4], dims[5]);
        assert_eq!(
            f.tensor(&g).compose(&h.tensor(&k)).unwrap(),
            f.compose(&h).unwrap().tensor(&g.compose(&k).unwrap()),
            "case {case}"
        );
    }
}

#[test]
fn affine_relations_satisfy_interchange() {
    for case in 0..200u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(22_000 + case);
        let dims: Vec<usize> = (0..6).map(|_| rng.gen_range(0..=2)).collect();
        let f = common::random_affrel(&mut rng, dims[0], dims[1]);
        let h = common::random_affrel(&mut rng, dims[1], dims[2]);
        let g = common::random_affrel(&mut rng, dims[3], dims[4]);
        let k = common::random_affrel(&mut rng, dims[4], dims[5]);
        assert_eq!(
            f.tensor(&g).compose(&h.tensor(&k)).unwrap(),
            f.compose(&h).unwrap().tensor(&g.compose(&k).unwrap()),
            "case {case}"
        );
    }
}

#[test]
fn braiding_is_natural_for_linear_relations() {
    for case in 0..200u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(23_000 + case);
        let (a, b, c, d) = (
            rng.gen_range(0..=3usize),
            rng.gen_range(0..=3usize),
            rng.gen_range(0..=3usize),
            rng.gen_range(0..=3usize),
        );
        let f = common::random_linrel(&mut rng, a, b);
        let g = common::random_linrel(&mut rng, c, d);
        assert_eq!(
            f.tensor(&g).compose(&LinRel::braiding(b, d)).unwrap(),
            LinRel::braiding(a, c).compose(&g.tensor(&f)).unwrap(),
            "case {case}"
        );
        // The braiding is its own inverse up to swapping the sides.
        assert_eq!(
            LinRel::braiding(a, b)
                .compose(&LinRel::braiding(b, a))
                .unwrap(),
            LinRel::identity(a + b),
            "case {case}: braiding inverse"
        );
    }
}

#[test]
fn braiding_is_natural_for_corelations() {
    for case in 0..150u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(24_000 + case);
        let (a, b, c, d) = (
            rng.gen_range(0..=4usize),
            rng.gen_range(0..=4usize),
            rng.gen_range(0..=4usize),
            rng.gen_range(0..=4usize),
        );
        let f = common::random_corelation(&mut rng, a, b);
        let g = common::random_corelation(&mut rng, c, d);
        assert_eq!(
            f.tensor(&g).compose(&Corelation::braiding(b, d)).unwrap(),
            Corelation::braiding(a, c).compose(&g.tensor(&f)).unwrap(),
            "case {case}"
        );
    }
}

#[test]
fn wiring_semantics_of_corelations_is_functorial() {
    for case in 0..200u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(25_000 + case);
        let (a, b, c) = (
            rng.gen_range(0..=4usize),
            rng.gen_range(0..=4usize),
            rng.gen_range(0..=4usize),
        );
        let f = common::random_corelation(&mut rng, a, b);
        let g = common::random_corelation(&mut rng, b, c);
        assert_eq!(
            f.compose(&g).unwrap().wire_relation(),
            f.wire_relation().compose(&g.wire_relation()).unwrap(),
            "case {case}: composition"
        );
        assert_eq!(
            f.tensor(&g).wire_relation(),
            f.wire_relation().tensor(&g.wire_relation()),
            "case {case}: tensor"
        );
        assert_eq!(
            Corelation::identity(a).wire_relation(),
            LinRel::identity(2 * a),
            "case {case}: identity"
        );
    }
}

#[test]
fn connectivity_of_circuits_is_functorial() {
    let labels = element_label_pool();
    for case in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(26_000 + case);
        let (a, b, c) = (
            rng.gen_range(0..=3usize),
            rng.gen_range(0..=3usize),
            rng.gen_range(0..=3usize),
        );
        let f = random_circuit(&mut rng, a, b, 5, 5, &labels);
        let g = random_circuit(&mut rng, b, c, 5, 5, &labels);
        let composed = f.compose(&g).unwrap();
        assert_eq!(
            composed.component_cospan().corelation(),
            f.component_cospan()
                .corelation()
                .compose(&g.component_cospan().corelation())
                .unwrap(),
            "case {case}: composition"
        );
        assert_eq!(
            f.tensor(&g).component_cospan().corelation(),
            f.component_cospan()
                .corelation()
                .tensor(&g.component_cospan().corelation()),
            "case {case}: tensor"
        );
    }
}

/// Draws a term with the requested domain arity by scanning seeds; falls
/// back to the identity when the scan misses (kept deterministic).
fn term_with_dom(sig: &Signature, dom: usize, base_seed: u64) -> Term {
    for offset in 0..400u64 {
        let t = random_term(sig, 6, base_seed + offset);
        if typecheck(&t, sig).unwrap().0 == dom {
            return t;
        }
    }
    Term::Id(dom)
}

#[test]
fn term_evaluation_is_functorial() {
    let sig = Signature::signal_flow();
    for case in 0..100u64 {
        let f = random_term(&sig, 6, 27_000 + case);
        let g = random_term(&sig, 6, 28_000 + case);
        let (fa, fb) = typecheck(&f, &sig).unwrap();
        let (_, gb) = typecheck(&g, &sig).unwrap();
        // Tensor needs no arity match.
        assert_eq!(
            evaluate(&LinRelAlgebra, &sig, &Term::par(f.clone(), g.clone())).unwrap(),
            evaluate(&LinRelAlgebra, &sig, &f)
                .unwrap()
                .tensor(&evaluate(&LinRelAlgebra, &sig, &g).unwrap()),
            "case {case}: tensor"
        );
        // Composition: draw continuations with matching domains.
        let h = term_with_dom(&sig, fb, 29_000 + 1_000 * case);
        let k = term_with_dom(&sig, gb, 30_000 + 1_000 * case);
        assert_eq!(
            evaluate(&LinRelAlgebra, &sig, &Term::seq(f.clone(), h.clone())).unwrap(),
            evaluate(&LinRelAlgebra, &sig, &f)
                .unwrap()
                .compose(&evaluate(&LinRelAlgebra, &sig, &h).unwrap())
                .unwrap(),
            "case {case}: composition"
        );
        // Interchange ties the two together.
        let lhs = Term::seq(
            Term::par(f.clone(), g.clone()),
            Term::par(h.clone(), k.clone()),
        );
        let rhs = Term::par(Term::seq(f.clone(), h), Term::seq(g.clone(), k));
        assert_eq!(
            evaluate(&LinRelAlgebra, &sig, &lhs).unwrap(),
            evaluate(&LinRelAlgebra, &sig, &rhs).unwrap(),
            "case {case}: interchange"
        );
        // Identities are neutral on both sides.
        assert_eq!(
            evaluate(&LinRelAlgebra, &sig, &Term::seq(Term::Id(fa), f.clone())).unwrap(),
            evaluate(&LinRelAlgebra, &sig, &f).unwrap(),
            "case {case}: left identity"
        );
        assert_eq!(
            evaluate(&LinRelAlgebra, &sig, &Term::seq(g.clone(), Term::Id(gb))).unwrap(),
            evaluate(&LinRelAlgebra, &sig, &g).unwrap(),
            "case {case}: right identity"
        );
    }
}
