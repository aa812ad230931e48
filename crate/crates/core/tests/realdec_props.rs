use num_traits::One;
use pmcx_core::realdec::{
    isolate_roots, simplest_between, solve_constraint_uni, sturm_count, AlgebraicNumber, Endpoint, Rel, SemiSet1D,
    UniPoly,
};
use pmcx_core::{rat, Rational};
use proptest::prelude::*;

fn q() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn coeffs() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-5i64..=5, 2..=6)
        .prop_map(|c| UniPoly::new(c.into_iter().map(|v| rat(v, 1)).collect()))
        .prop_filter("non-constant", |p| p.degree() >= 1)
}

fn product_of_roots(roots: &[Rational]) -> UniPoly {
    roots
        .iter()
        .fold(UniPoly::constant(Rational::one()), |acc, r| acc.mul(&UniPoly::linear_root(r)))
}

fn rel() -> impl Strategy<Value = Rel> {
    prop::sample::select(Rel::ALL.to_vec())
}

fn semiset() -> impl Strategy<Value = SemiSet1D> {
    prop::collection::vec((q(), q(), any::<bool>()), 0..=3).prop_map(|parts| {
        parts.into_iter().fold(SemiSet1D::empty(), |acc, (a, b, point)| {
            let piece = if point || a == b {
                SemiSet1D::point(AlgebraicNumber::rational(a))
            } else {
                SemiSet1D::open_rat(a.clone().min(b.clone()), a.max(b))
            };
            acc.union(&piece)
        })
    })
}

proptest! {
    #[test]
    fn rational_roots_are_recovered(mut roots in prop::collection::btree_set(q(), 1..=5)) {
        let roots: Vec<Rational> = std::mem::take(&mut roots).into_iter().collect();
        let f = product_of_roots(&roots);
        let found = isolate_roots(&f);
        prop_assert_eq!(found.len(), roots.len());
        for (a, r) in found.iter().zip(&roots) {
            prop_assert_eq!(a.as_rational(), Some(r));
        }
        prop_assert_eq!(sturm_count(&f, &Endpoint::NegInf, &Endpoint::PosInf), roots.len());
    }

    #[test]
    fn roots_are_sorted_and_isolated(f in coeffs()) {
        let roots = isolate_roots(&f);
        prop_assert!(roots.windows(2).all(|w| w[0] < w[1]));
        for r in &roots {
            prop_assert_eq!(r.sign_of(&f), 0);
            let (lo, hi) = r.interval();
            prop_assert!(lo <= hi);
        }
        prop_assert_eq!(roots.len(), sturm_count(&f, &Endpoint::NegInf, &Endpoint::PosInf));
    }

    #[test]
    fn sign_between_roots_is_constant(f in coeffs(), x in q()) {
        let roots = isolate_roots(&f);
        let s = f.sign_at(&x);
        let xa = AlgebraicNumber::rational(x.clone());
        prop_assert_eq!(xa.sign_of(&f), s);
        let below = roots.iter().filter(|r| **r < xa).count();
        if s != 0 {
            let lo = if below == 0 { None } else { Some(&roots[below - 1]) };
            let hi = roots.get(below);
            let mid = match (lo, hi) {
                (Some(a), Some(b)) => a.rational_between(b),
                (Some(a), None) => a.upper() + Rational::one(),
                (None, Some(b)) => b.lower() - Rational::one(),
                (None, None) => x.clone() + Rational::one(),
            };
            prop_assert_eq!(f.sign_at(&mid), s);
        }
    }

    #[test]
    fn sturm_count_matches_isolation(f in coeffs(), a in q(), b in q()) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let expected = isolate_roots(&f)
            .iter()
            .filter(|r| r.cmp_rational(&lo).is_gt() && r.cmp_rational(&hi).is_le())
            .count();
        prop_assert_eq!(sturm_count(&f, &Endpoint::At(lo), &Endpoint::At(hi)), expected);
    }

    #[test]
    fn constraint_sets_match_pointwise_signs(f in coeffs(), r in rel(), xs in prop::collection::vec(q(), 8)) {
        let set = solve_constraint_uni(&f, r, &SemiSet1D::full());
        for x in xs.iter().chain(isolate_roots(&f).iter().filter_map(|a| a.as_rational())) {
            prop_assert_eq!(set.contains_rational(x), r.holds_sign(f.sign_at(x)), "{} at {}", set, x);
        }
    }

    #[test]
    fn semiset_boolean_laws(a in semiset(), b in semiset(), xs in prop::collection::vec(q(), 10)) {
        let (u, i, d, c) = (a.union(&b), a.intersect(&b), a.diff(&b), a.complement());
        for x in &xs {
            let (ina, inb) = (a.contains_rational(x), b.contains_rational(x));
            prop_assert_eq!(u.contains_rational(x), ina || inb);
            prop_assert_eq!(i.contains_rational(x), ina && inb);
            prop_assert_eq!(d.contains_rational(x), ina && !inb);
            prop_assert_eq!(c.contains_rational(x), !ina);
        }
        prop_assert_eq!(c.complement(), a.clone());
        prop_assert_eq!(a.union(&a.complement()), SemiSet1D::full());
        prop_assert!(a.intersect(&a.complement()).is_empty());
        if let Some(s) = a.sample() {
            prop_assert!(a.contains(&s));
        } else {
            prop_assert!(a.is_empty());
        }
    }

    #[test]
    fn simplest_between_lies_strictly_inside(a in q(), b in q()) {
        prop_assume!(a != b);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let s = simplest_between(&lo, &hi);
        prop_assert!(lo < s && s < hi);
        let den: i64 = s.denom().try_into().unwrap();
        for d in 1..den {
            let n = (&lo * rat(d, 1)).floor() + Rational::one();
            prop_assert!(n / rat(d, 1) >= hi, "denominator {} fits in ({}, {})", d, lo, hi);
        }
    }
}
