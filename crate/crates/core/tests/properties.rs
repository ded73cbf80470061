use std::sync::Arc;

use fermconic::algebra::Algebra;
use fermconic::resultant::resultant;
use fermconic::{AlphaBeta, Fp, FpPoly, Monomial, QPoly, QuadRelations, RatFunc, Rational, Vars};
use proptest::prelude::*;

const P: u64 = 1_000_003;

fn xyz() -> Vars {
    Vars::new(&["x", "y", "z"])
}

fn qpoly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(((0u16..4, 0u16..4, 0u16..4), -9i64..10), 0..6).prop_map(|ts| {
        let terms = ts
            .into_iter()
            .map(|((a, b, c), k)| (Monomial::from_exps(&[a, b, c]), Rational::from(k)))
            .collect();
        QPoly::from_terms(&xyz(), &(), terms)
    })
}

fn nonzero_qpoly() -> impl Strategy<Value = QPoly> {
    qpoly().prop_filter("nonzero", |p| !p.is_zero())
}

fn rational_point() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-20i64..21, 1i64..6).prop_map(|(n, d)| Rational::new(n, d)), 3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in qpoly(), b in qpoly(), c in qpoly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &a.one_like(), a.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in qpoly(), b in qpoly(), pt in rational_point()) {
        prop_assert_eq!((&a * &b).eval(&pt), a.eval(&pt) * b.eval(&pt));
        prop_assert_eq!((&a + &b).eval(&pt), a.eval(&pt) + b.eval(&pt));
    }

    #[test]
    fn leibniz(a in qpoly(), b in qpoly(), i in 0usize..3) {
        let lhs = (&a * &b).partial(i);
        let rhs = &(&a.partial(i) * &b) + &(&a * &b.partial(i));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exact_division_round_trip(a in qpoly(), b in nonzero_qpoly()) {
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn monic_division(f in qpoly(), low in qpoly()) {
        // g = x^3 + (terms of x-degree < 3)
        let g = QPoly::gens(&xyz(), &());
        let low_terms: Vec<_> = low.terms().iter().filter(|(m, _)| m.exp(0) < 3).cloned().collect();
        let divisor = &g[0].pow(3) + &QPoly::from_terms(&xyz(), &(), low_terms);
        let (q, r) = f.div_rem_monic_in(&divisor, 0).unwrap();
        prop_assert_eq!(&(&q * &divisor) + &r, f);
        prop_assert!(r.is_zero() || r.degree_in(0) < 3);
    }

    #[test]
    fn resultant_vanishes_on_a_common_factor(a in nonzero_qpoly(), b in nonzero_qpoly(), k in 1i64..5) {
        let g = QPoly::gens(&xyz(), &());
        let c = &g[0] - &g[1].scale(&Rational::from(k));
        let (f1, f2) = (&a * &c, &b * &c);
        let r = resultant(&f1, &f2, 0).unwrap();
        prop_assert!(r.is_zero());
    }

    #[test]
    fn resultant_with_a_linear_factor_is_evaluation(h in nonzero_qpoly()) {
        // Res_x(x - y, h) = h(y, y, z)
        let g = QPoly::gens(&xyz(), &());
        prop_assume!(h.degree_in(0) > 0);
        let lin = &g[0] - &g[1];
        let r = resultant(&lin, &h, 0).unwrap();
        let at = h.compose(&[g[1].clone(), g[1].clone(), g[2].clone()]).unwrap();
        prop_assert_eq!(r, at);
    }
}

fn fp_const(v: u64) -> RatFunc<Fp> {
    RatFunc::from_poly(FpPoly::constant_like(
        &FpPoly::zero(&Vars::new(&["t"]), &P),
        Fp::from_u64(v, P),
    ))
}

/// Split relations (α − a1)(α − a2), (β − b1)(β − b2) over F_p.
fn split(a1: u64, a2: u64, b1: u64, b2: u64) -> Arc<QuadRelations<Fp>> {
    let f = |v: u64| Fp::from_u64(v, P);
    let c = |v: Fp| fp_const(v.value());
    Arc::new(
        QuadRelations::new(
            [c(f(a1) * f(a2)), c(-(f(a1) + f(a2))), fp_const(1)],
            [c(f(b1) * f(b2)), c(-(f(b1) + f(b2))), fp_const(1)],
        )
        .unwrap(),
    )
}

fn at_roots(x: &AlphaBeta<Fp>, a: u64, b: u64) -> Fp {
    let v = |r: &RatFunc<Fp>| r.eval(&[Fp::from_u64(0, P)]).unwrap();
    let [c00, c10, c01, c11] = x.parts();
    let (a, b) = (Fp::from_u64(a, P), Fp::from_u64(b, P));
    v(c00) + v(c10) * a + v(c01) * b + v(c11) * a * b
}

fn element(rel: &Arc<QuadRelations<Fp>>) -> impl Strategy<Value = AlphaBeta<Fp>> {
    let rel = rel.clone();
    prop::array::uniform4(0..P).prop_map(move |c| AlphaBeta::from_parts(c.map(fp_const), &rel))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn alphabeta_over_fp_respects_every_root_choice(
        roots in prop::array::uniform4(0..P),
        seeds in prop::array::uniform3(prop::array::uniform4(0..P)),
    ) {
        let [a1, a2, b1, b2] = roots;
        let rel = split(a1, a2, b1, b2);
        let [x, y, z] = seeds.map(|c| AlphaBeta::from_parts(c.map(fp_const), &rel));
        let lhs = x.times(&y.plus(&z));
        for (a, b) in [(a1, b1), (a1, b2), (a2, b1), (a2, b2)] {
            prop_assert_eq!(at_roots(&lhs, a, b), at_roots(&x, a, b) * (at_roots(&y, a, b) + at_roots(&z, a, b)));
        }
        prop_assert_eq!(at_roots(&x.conj_alpha(), a1, b1), at_roots(&x, a2, b1));
        prop_assert_eq!(at_roots(&x.conj_beta(), a1, b1), at_roots(&x, a1, b2));
        let back = x.conj_alpha().conj_alpha();
        prop_assert_eq!(back.parts(), x.parts());
    }

    #[test]
    fn alphabeta_inverse(x in element(&split(2, 5, 7, 11))) {
        prop_assume!(!x.norm().is_zero());
        let inv = x.inv().unwrap();
        let one = x.times(&inv);
        prop_assert!(one.minus(&one.one_like()).is_zero_elem());
    }
}
