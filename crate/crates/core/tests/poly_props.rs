use std::sync::Arc;

use num_traits::Zero;
use pmcx_core::poly::{gcd_univariate, Monomial, Polynomial, VarArena};
use pmcx_core::{rat, Poly, RatFun, Rational};
use proptest::prelude::*;

type Terms = Vec<(Vec<u32>, i64)>;

fn arena() -> Arc<VarArena> {
    VarArena::new(["x", "y", "z"]).unwrap()
}

fn terms(nvars: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = Terms> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, nvars), -6i64..=6), 0..=max_terms)
}

fn build(arena: &Arc<VarArena>, t: &Terms) -> Poly {
    Polynomial::from_terms(
        arena,
        t.iter().map(|(e, c)| (Monomial::from_exponents(e.clone()), rat(*c, 1))),
    )
}

fn point() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-9i64..=9, 1i64..=5).prop_map(|(n, d)| rat(n, d)), 3)
}

proptest! {
    #[test]
    fn ring_axioms(a in terms(3, 3, 5), b in terms(3, 3, 5), c in terms(3, 3, 5)) {
        let ar = arena();
        let (a, b, c) = (build(&ar, &a), build(&ar, &b), build(&ar, &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(&ar), a.clone());
        prop_assert_eq!(&a + &Polynomial::zero(&ar), a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in terms(3, 3, 5), b in terms(3, 3, 5), p in point()) {
        let ar = arena();
        let (a, b) = (build(&ar, &a), build(&ar, &b));
        prop_assert_eq!((&a + &b).eval(&p), a.eval(&p) + b.eval(&p));
        prop_assert_eq!((&a * &b).eval(&p), a.eval(&p) * b.eval(&p));
        prop_assert_eq!((-&a).eval(&p), -a.eval(&p));
    }

    #[test]
    fn product_degree_is_additive(a in terms(3, 3, 5), b in terms(3, 3, 5)) {
        let ar = arena();
        let (a, b) = (build(&ar, &a), build(&ar, &b));
        prop_assume!(!a.is_zero() && !b.is_zero());
        prop_assert_eq!((&a * &b).degree(), a.degree() + b.degree());
    }

    #[test]
    fn exact_division_recovers_factor(a in terms(3, 3, 5), b in terms(3, 2, 4)) {
        let ar = arena();
        let (a, b) = (build(&ar, &a), build(&ar, &b));
        prop_assume!(!b.is_zero());
        let q = (&a * &b).div_exact(&b).unwrap();
        prop_assert_eq!(&q * &b, &a * &b);
        prop_assert_eq!(q, a);
    }

    #[test]
    fn inexact_division_is_reported(a in terms(1, 3, 4)) {
        let ar = VarArena::new(["x"]).unwrap();
        let a = build(&ar, &a);
        let x = Polynomial::var(&ar, 0);
        let shifted = &(&a * &x) + &Polynomial::one(&ar);
        prop_assert!(shifted.div_exact(&x).is_err());
    }

    #[test]
    fn parse_display_round_trip(a in terms(3, 3, 5)) {
        let ar = arena();
        let a = build(&ar, &a);
        prop_assert_eq!(Polynomial::parse(&ar, &a.to_string()).unwrap(), a);
    }

    #[test]
    fn univariate_gcd_divides_and_contains_common_factor(
        f in terms(1, 3, 3), g in terms(1, 3, 3), h in terms(1, 2, 3)
    ) {
        let ar = VarArena::new(["x"]).unwrap();
        let (f, g, h) = (build(&ar, &f), build(&ar, &g), build(&ar, &h));
        prop_assume!(!h.is_zero() && !(f.is_zero() && g.is_zero()));
        let (a, b) = (&f * &h, &g * &h);
        let d = gcd_univariate(&a, &b).unwrap();
        prop_assert!(a.div_exact(&d).is_ok());
        prop_assert!(b.div_exact(&d).is_ok());
        prop_assert!(d.div_exact(&h).is_ok());
        prop_assert_eq!(d.leading_coeff(), rat(1, 1));
    }

    #[test]
    fn rational_function_field_ops(
        a in terms(2, 2, 3), b in terms(2, 2, 3), c in terms(2, 2, 3), d in terms(2, 2, 3),
        p in prop::collection::vec((-9i64..=9, 1i64..=5).prop_map(|(n, d)| rat(n, d)), 2),
    ) {
        let ar = VarArena::new(["x", "y"]).unwrap();
        let (a, b, c, d) = (build(&ar, &a), build(&ar, &b), build(&ar, &c), build(&ar, &d));
        prop_assume!(!b.is_zero() && !d.is_zero());
        prop_assume!(!b.eval(&p).is_zero() && !d.eval(&p).is_zero());
        let r = RatFun::new(a, b).unwrap();
        let s = RatFun::new(c, d).unwrap();
        let (rv, sv) = (r.eval(&p).unwrap(), s.eval(&p).unwrap());
        prop_assert_eq!(r.add(&s).eval(&p).unwrap(), &rv + &sv);
        prop_assert_eq!(r.mul(&s).eval(&p).unwrap(), &rv * &sv);
        prop_assert!(r.add(&s).sub(&s).cross_eq(&r));
        prop_assert!(r.simplify().cross_eq(&r));
    }
}
