use proptest::prelude::*;

use hilbstab::groebner::buchberger;
use hilbstab::hilbert::{hilbert_function, HilbertPolynomial};
use hilbstab::poly::{monomials_of_degree, Ideal, Polynomial};
use hilbstab::stability::{hilbert_mumford_index, hilbert_mumford_index_with, ideal_side_index};
use hilbstab::{Monomial, MonomialOrder, OneParamSubgroup, Ring, Scalar, TieBreak, Q};

const NVARS: usize = 3;

fn rational() -> impl Strategy<Value = Q> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Q::new(n.into(), d.into()))
}

fn monomial(max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, NVARS).prop_map(Monomial::new)
}

fn polynomial() -> impl Strategy<Value = Polynomial<Q>> {
    prop::collection::vec((monomial(3), rational()), 0..5).prop_map(|t| Polynomial::from_terms(NVARS, t))
}

/// Homogeneous quadrics with small integer coefficients.
fn quadric() -> impl Strategy<Value = Polynomial<Q>> {
    let monos = monomials_of_degree(NVARS, 2);
    let len = monos.len();
    prop::collection::vec((0..len, -3i64..=3), 1..4).prop_map(move |t| {
        Polynomial::from_terms(NVARS, t.into_iter().map(|(i, c)| (monos[i].clone(), Q::from_i64(c))))
    })
}

fn quadrics() -> impl Strategy<Value = Vec<Polynomial<Q>>> {
    prop::collection::vec(quadric(), 1..4).prop_map(|v| v.into_iter().filter(|p| !p.is_zero()).collect())
}

fn weights() -> impl Strategy<Value = OneParamSubgroup> {
    prop::collection::vec(-6i64..=6, NVARS).prop_map(OneParamSubgroup::new)
}

fn initial_sets(gens: &[Polynomial<Q>], order: &MonomialOrder) -> Vec<Vec<Monomial>> {
    let gb = buchberger(NVARS, gens, order).unwrap();
    (1..=3).map(|m| gb.initial_ideal_degree(m).into_iter().collect()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in polynomial(), b in polynomial(), c in polynomial()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn weight_is_additive(a in monomial(5), b in monomial(5), rho in weights()) {
        let lhs = a.mul(&b).weight(&rho).unwrap();
        prop_assert_eq!(lhs, a.weight(&rho).unwrap() + b.weight(&rho).unwrap());
    }

    #[test]
    fn print_parse_round_trip(p in polynomial()) {
        let ring = Ring::indexed("x", NVARS);
        let text = ring.format(&p);
        let back: Polynomial<Q> = ring.parse(&text).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(ring.format(&back), text);
    }

    #[test]
    fn bases_are_valid_and_presentation_free(gens in quadrics(), rho in weights(), scale in 1i64..5, rot in 0usize..3) {
        prop_assume!(!gens.is_empty());
        for order in [MonomialOrder::GradedLex, MonomialOrder::GradedRevLex, MonomialOrder::weighted(rho.clone())] {
            let gb = buchberger(NVARS, &gens, &order).unwrap();
            prop_assert!(gb.satisfies_buchberger_criterion());
            prop_assert!(gb.is_reduced());
            let mut other: Vec<Polynomial<Q>> = gens.iter().map(|g| g.scale(&Q::from_i64(-scale))).collect();
            let k = rot % other.len();
            other.rotate_left(k);
            other.reverse();
            prop_assert_eq!(initial_sets(&gens, &order), initial_sets(&other, &order));
        }
    }

    #[test]
    fn index_invariances(gens in quadrics(), rho in weights(), c in -5i64..=5, k in 1i64..=4, m in 1u32..=3) {
        prop_assume!(!gens.is_empty());
        let ideal = Ideal::new(Ring::indexed("x", NVARS), gens).unwrap();
        // Translation invariance needs the true dimension of the quotient.
        let gb = buchberger(NVARS, ideal.generators(), &MonomialOrder::GradedRevLex).unwrap();
        let p = HilbertPolynomial::constant(Q::from_i64(hilbert_function(&gb, m) as i64));
        let mq = Q::from_i64(m as i64);
        let base = hilbert_mumford_index(&ideal, &mq, &rho, &p).unwrap().index;
        prop_assert_eq!(&hilbert_mumford_index(&ideal, &mq, &rho.translate(c), &p).unwrap().index, &base);
        prop_assert_eq!(hilbert_mumford_index(&ideal, &mq, &rho.scale(k), &p).unwrap().index, base.clone() * Q::from_i64(k));
        let revlex = hilbert_mumford_index_with(&ideal, &mq, &rho, &p, TieBreak::GradedRevLex).unwrap().index;
        prop_assert_eq!(&revlex, &base);
        prop_assert_eq!(&ideal_side_index(&ideal, &mq, &rho, &p).unwrap(), &base);
    }

    #[test]
    fn scalar_subgroups_are_trivial(gens in quadrics(), c in -9i64..=9) {
        prop_assume!(!gens.is_empty());
        let ideal = Ideal::new(Ring::indexed("x", NVARS), gens).unwrap();
        let p = HilbertPolynomial::linear(Q::from_i64(2), Q::from_i64(1));
        let rho = OneParamSubgroup::new(vec![c; NVARS]);
        let r = hilbert_mumford_index(&ideal, &Q::from_i64(2), &rho, &p).unwrap();
        // Only the P(m) versus HF(m) mismatch survives a scalar subgroup.
        let expected = Q::from_i64(2 * c) * (p.eval_int(2) - Q::from_i64(r.hilbert_function_value as i64));
        prop_assert_eq!(r.index, expected);
    }
}
