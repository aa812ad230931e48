use std::time::Duration;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::linsolve::SolverKind;
use crate::pctl::until_prob;
use crate::props::reach;
use crate::Poly;

#[test]
fn parameter_counts() {
    for n in 2..=5 {
        assert_eq!(gen_complete(n).unwrap().num_params(), n * (n + 1));
    }
    assert_eq!(gen_ij(4, 3).unwrap().num_params(), 4);
    assert_eq!(gen_ij(5, 2).unwrap().num_params(), 5);
    assert_eq!(gen_expfam(3).unwrap().num_states(), 6);
}

#[test]
fn spec_parsing() {
    assert_eq!("complete:4".parse::<GenSpec>().unwrap(), GenSpec::Complete { n: 4 });
    assert_eq!("ij:4,3".parse::<GenSpec>().unwrap(), GenSpec::Ij { n: 4, k: 3 });
    assert_eq!("ij:4:3".parse::<GenSpec>().unwrap().to_string(), "ij:4:3");
    assert!("ij:4:5".parse::<GenSpec>().is_err());
    assert!("complete:1".parse::<GenSpec>().is_err());
    assert!("expfam:0".parse::<GenSpec>().is_err());
    assert!("cube:3".parse::<GenSpec>().is_err());
}

#[test]
fn expfam_numerators() {
    let m = gen_expfam(2).unwrap();
    let r = reach(&m, &m.states_with("goal"), SolverKind::Bareiss).unwrap();
    let v = r.values[0].simplify();
    let p = |s: &str| Poly::parse(m.arena(), s).unwrap();
    assert!(v.cross_eq(&crate::RatFun::new(p("1 + x1 + x2 + x1*x2"), p("4")).unwrap()));
    assert_eq!(v.num().num_terms(), 4);
    let m = gen_expfam(1).unwrap();
    let r = reach(&m, &m.states_with("goal"), SolverKind::Bareiss).unwrap();
    assert_eq!(r.values[0].num().num_terms(), 2);
}

#[test]
fn samplers_are_admissible() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for spec in [
        GenSpec::Complete { n: 3 },
        GenSpec::Ij { n: 4, k: 2 },
        GenSpec::Expfam { k: 4 },
    ] {
        let m = spec.generate().unwrap();
        for _ in 0..5 {
            let p = spec.sample_admissible(&mut rng);
            assert!(m.violations_at(&p).is_empty(), "{spec}");
        }
    }
}

#[test]
fn ring_stabilises() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for (n, k) in [(3, 3), (4, 1), (4, 3), (5, 2)] {
        let spec = GenSpec::Ij { n, k };
        let m = spec.generate().unwrap();
        let goal = m.states_with("goal");
        assert_eq!(goal[0], k == 1);
        let r = reach(&m, &goal, SolverKind::BareissScc).unwrap();
        for _ in 0..3 {
            let p = spec.sample_admissible(&mut rng);
            let mc = m.instantiate_at(&p).unwrap();
            let exact = until_prob(&mc, &vec![true; m.num_states()], &goal);
            assert!(exact.iter().all(|v| *v == crate::rat(1, 1)));
            assert_eq!(r.values[0].eval(&p).unwrap(), crate::rat(1, 1));
        }
    }
}

#[test]
fn bench_complete_agrees() {
    let solvers = [SolverKind::Bareiss, SolverKind::BareissScc, SolverKind::RfGcd, SolverKind::NaiveFf];
    let report = run_bench(GenSpec::Complete { n: 3 }, &solvers, Duration::from_secs(120), 9).unwrap();
    assert_eq!(report.runs.len(), 4);
    assert_eq!(report.cross_checks.len(), 6);
    assert!(report.all_equal(), "{}", report.table());
    assert_eq!(report.valuation_check, Some(Verdict::Equal));
    let deg = |k: SolverKind| report.runs.iter().find(|r| r.solver == k).unwrap().max_degree.unwrap();
    assert!(deg(SolverKind::NaiveFf) >= deg(SolverKind::Bareiss));
    let json = serde_json::to_string(&report).unwrap();
    assert!(json.contains("\"cross-multiplication\""));
}

#[test]
fn bench_timeout_is_recorded() {
    let report = run_bench(GenSpec::Complete { n: 4 }, &[SolverKind::NaiveFf], Duration::from_millis(1), 0).unwrap();
    assert!(report.runs[0].timed_out || report.runs[0].error.is_none());
}
