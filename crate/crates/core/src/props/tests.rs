use super::*;
use crate::linsolve::SolverKind;
use crate::model::Pmc;
use crate::poly::{Polynomial, RationalFunction};
use crate::{rat, Error, Poly, RatFun};

pub(crate) const CYCLIC: &str = "\
@params x
@states s0 s1 g f
@edges
s0 g : x
s0 s1 : 1 - x
s1 f : x
s1 s0 : 1 - x
";

fn rf(m: &Pmc, n: &str, d: &str) -> RatFun {
    let p = |s: &str| Poly::parse(m.arena(), s).unwrap();
    RationalFunction::new(p(n), p(d)).unwrap()
}

fn label(m: &Pmc, l: &str) -> Vec<bool> {
    m.states_with(l)
}

#[test]
fn simple_until() {
    let m = Pmc::parse("@params x\n@states s0 g f\n@edges\ns0 g : x\ns0 f : 1 - x\n").unwrap();
    let us = until_system(&m, &[true; 3], &label(&m, "g")).unwrap();
    assert_eq!(us.system.n(), 1);
    assert_eq!(us.system.b()[0], Poly::parse(m.arena(), "x").unwrap());
    let r = reach(&m, &label(&m, "g"), SolverKind::Bareiss).unwrap();
    assert!(r.values[0].cross_eq(&rf(&m, "x", "1")));
    assert!(r.zero_states[2] && r.one_states[1]);
}

#[test]
fn cyclic_reach() {
    let m = Pmc::parse(CYCLIC).unwrap();
    let g = label(&m, "g");
    let r = reach(&m, &g, SolverKind::Bareiss).unwrap();
    assert!(r.values[0].cross_eq(&rf(&m, "1", "2 - x")));
    assert_eq!(r.values[0].eval(&[rat(1, 2)]).unwrap(), rat(2, 3));
    for kind in [SolverKind::BareissScc, SolverKind::RfGcd, SolverKind::NaiveFf, SolverKind::Cramer] {
        let other = reach(&m, &g, kind).unwrap();
        for s in 0..m.num_states() {
            assert!(other.values[s].cross_eq(&r.values[s]), "{kind} at {s}");
        }
    }
    assert!(r.zero_states[3]);
    assert_eq!(r.values[3], RatFun::zero(m.arena()));
    assert_eq!(r.values[2], RatFun::one(m.arena()));
}

#[test]
fn until_respects_t1() {
    let m = Pmc::parse(CYCLIC).unwrap();
    // Only s0 may be passed through: s1 blocks the cycle.
    let t1 = vec![true, false, false, false];
    let r = until(&m, &t1, &label(&m, "g"), SolverKind::Bareiss).unwrap();
    assert!(r.values[0].cross_eq(&rf(&m, "x", "1")));
    assert!(r.zero_states[1]);
}

#[test]
fn identically_one_detected() {
    let m = Pmc::parse("@params x\n@states a b g\n@edges\na b : x\na g : 1 - x\nb g : 1\n").unwrap();
    let r = reach(&m, &label(&m, "g"), SolverKind::Bareiss).unwrap();
    assert!(r.one_states.iter().all(|&o| o));
    assert_eq!(r.rows(), 0);
}

#[test]
fn expected_weight_examples() {
    let m = Pmc::parse("@params w\n@states s0 g\n@edges\ns0 g : 1\n@weights\ns0 : w\ng : 5\n").unwrap();
    let e = expected_weight(&m, &label(&m, "g"), SolverKind::Bareiss).unwrap();
    assert_eq!(e.values[0].as_ref().unwrap(), &rf(&m, "w", "1"));
    assert_eq!(e.values[1].as_ref().unwrap(), &RatFun::zero(m.arena()));

    let m = Pmc::parse("@states s0 g\n@edges\ns0 g : 1/2\ns0 s0 : 1/2\n@weights\ns0 : 1\n").unwrap();
    let e = expected_weight(&m, &label(&m, "g"), SolverKind::Bareiss).unwrap();
    assert_eq!(e.values[0].as_ref().unwrap().eval(&[]).unwrap(), rat(2, 1));

    let chain = "@params x\n@states s0 s1 s2 g\n@edges\ns0 s1 : 1\ns1 s2 : 1\ns2 g : 1\n";
    let m = Pmc::parse(&format!("{chain}@weights\ns0 : 1\ns1 : 1\ns2 : 1\n")).unwrap();
    let e = expected_weight(&m, &label(&m, "g"), SolverKind::Bareiss).unwrap();
    assert_eq!(e.values[0].as_ref().unwrap(), &rf(&m, "3", "1"));
    assert!(e.param_free_matrix);
    let m = Pmc::parse(&format!("{chain}@weights\ns0 : 1\ns1 : x\ns2 : x^2\n")).unwrap();
    let e = expected_weight(&m, &label(&m, "g"), SolverKind::Bareiss).unwrap();
    let v = e.values[0].as_ref().unwrap();
    assert!(v.den().is_one());
    assert_eq!(v.num(), &Poly::parse(m.arena(), "1 + x + x^2").unwrap());
}

#[test]
fn expected_weight_requires_almost_sure() {
    let m = Pmc::parse(CYCLIC).unwrap();
    let err = expected_weight(&m, &label(&m, "g"), SolverKind::Bareiss).unwrap_err();
    assert_eq!(err, Error::NotAlmostSure(vec!["f".to_string()]));
    let all = expected_weight_all(&m, &label(&m, "g"), SolverKind::Bareiss).unwrap();
    assert!(all.values[0].is_none() && all.values[2].is_some());
}

#[test]
fn steady_state_examples() {
    let m = Pmc::parse("@states s0 s1\n@edges\ns0 s0 : 1/2\ns0 s1 : 1/2\ns1 s0 : 1/2\ns1 s1 : 1/2\n@weights\ns1 : 1\n").unwrap();
    let mp = mean_payoff(&m, &[true, true], SolverKind::Bareiss).unwrap();
    assert_eq!(mp.steady[0].zeta[0].eval(&[]).unwrap(), rat(1, 2));
    assert_eq!(mp.values[0].eval(&[]).unwrap(), rat(1, 2));

    let m = Pmc::parse("@params x\n@states a b\n@edges\na b : x\na a : 1 - x\nb a : 1\n@weights\nb : 1\n").unwrap();
    let mp = mean_payoff(&m, &[true, true], SolverKind::Bareiss).unwrap();
    assert!(mp.values[0].cross_eq(&rf(&m, "x", "1 + x")));
    assert!(mp.steady[0].zeta[1].cross_eq(&rf(&m, "x", "1 + x")));
    let total = mp.steady[0].zeta.iter().fold(RatFun::zero(m.arena()), |acc, z| acc.add(z));
    assert!(total.cross_eq(&RatFun::one(m.arena())));
}

#[test]
fn mean_payoff_over_traps() {
    let m = Pmc::parse("@params q\n@states s0 a b\n@edges\ns0 a : q\ns0 b : 1 - q\n@weights\nb : 1\n").unwrap();
    let mp = mean_payoff(&m, &[true; 3], SolverKind::Bareiss).unwrap();
    assert!(mp.values[0].cross_eq(&rf(&m, "1 - q", "1")));
    // Weight outside T does not count.
    let mp = mean_payoff(&m, &[true, true, false], SolverKind::Bareiss).unwrap();
    assert!(mp.values[0].is_zero());
}

#[test]
fn weights_double() {
    let m = Pmc::parse("@params x\n@states s0 s1 g\n@edges\ns0 s1 : 1/2\ns0 g : 1/2\ns1 s0 : 1/3\ns1 g : 2/3\n@weights\ns0 : x\ns1 : x^2 + 1\n").unwrap();
    let g = label(&m, "g");
    let e1 = expected_weight(&m, &g, SolverKind::Bareiss).unwrap();
    let mut m2 = m.clone();
    for s in 0..2 {
        let w = m.weight(s).scale(&rat(2, 1));
        m2.set_weight(s, w).unwrap();
    }
    let e2 = expected_weight(&m2, &g, SolverKind::Bareiss).unwrap();
    for s in 0..3 {
        let a = e1.values[s].as_ref().unwrap();
        let b = e2.values[s].as_ref().unwrap();
        assert!(b.cross_eq(&a.mul_poly(&Polynomial::constant(m.arena(), rat(2, 1)))));
    }
}
