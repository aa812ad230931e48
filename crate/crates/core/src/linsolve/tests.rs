use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::bench::random::{random_block_system, random_system};
use crate::poly::{Polynomial, VarArena};
use crate::{rat, Error, LinSystem, Poly, RatFun, Rational};

fn consts(a: &[&[i64]], b: &[i64]) -> LinSystem {
    let arena = VarArena::empty();
    let c = |v: i64| Poly::constant(&arena, rat(v, 1));
    LinSystem::new(
        &arena,
        a.iter().map(|r| r.iter().map(|&v| c(v)).collect()).collect(),
        b.iter().map(|&v| c(v)).collect(),
    )
    .unwrap()
}

fn values(sol: &Solution<Rational>) -> Vec<Rational> {
    sol.entries.iter().map(|e| e.eval(&[]).unwrap()).collect()
}

fn cyclic() -> (LinSystem, impl Fn(&str) -> Poly) {
    let arena = VarArena::new(["x"]).unwrap();
    let p = {
        let arena = arena.clone();
        move |s: &str| Poly::parse(&arena, s).unwrap()
    };
    let sys = LinSystem::new(
        &arena,
        vec![vec![p("1"), p("-(1 - x)")], vec![p("-(1 - x)"), p("1")]],
        vec![p("x"), p("0")],
    )
    .unwrap();
    (sys, p)
}

#[test]
fn two_by_two_constant() {
    let sys = consts(&[&[2, 1], &[1, 3]], &[1, 2]);
    let sol = solve_bareiss(&sys).unwrap();
    assert_eq!(values(&sol), vec![rat(1, 5), rat(3, 5)]);
    assert_eq!(sol.trace.pivots[1].constant_value(), Some(rat(5, 1)));
    // Numerators before the shared denominator: b1 = 1, b2' = 3.
    assert_eq!(sol.entries[0].num().constant_value(), Some(rat(1, 1)));
    assert_eq!(sol.entries[1].num().constant_value(), Some(rat(3, 1)));
    for kind in SolverKind::ALL {
        assert_eq!(values(&solve(&sys, kind).unwrap()), vec![rat(1, 5), rat(3, 5)], "{kind}");
    }
}

#[test]
fn cramer_determinants() {
    let sys = consts(&[&[2, 1], &[1, 3]], &[1, 2]);
    let sol = cramer_oracle(&sys).unwrap();
    assert_eq!(sol.entries[0].den().constant_value(), Some(rat(5, 1)));
    assert_eq!(sol.entries[0].num().constant_value(), Some(rat(1, 1)));
    assert_eq!(sol.entries[1].num().constant_value(), Some(rat(3, 1)));
    let one = consts(&[&[4]], &[3]);
    assert_eq!(values(&cramer_oracle(&one).unwrap()), vec![rat(3, 4)]);
}

#[test]
fn identity_returns_rhs() {
    let sys = consts(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], &[7, -2, 5]);
    for kind in SolverKind::ALL {
        assert_eq!(values(&solve(&sys, kind).unwrap()), vec![rat(7, 1), rat(-2, 1), rat(5, 1)]);
    }
}

#[test]
fn parametric_cycle() {
    let (sys, p) = cyclic();
    let sol = solve_bareiss(&sys).unwrap();
    let expected = RatFun::new(p("1"), p("2 - x")).unwrap();
    assert!(sol.entries[0].cross_eq(&expected));
    assert_eq!(sol.entries[0].num(), &p("x"));
    assert_eq!(sol.entries[0].den(), &p("2*x - x^2"));
    let rf = solve_rf_gcd(&sys).unwrap();
    assert_eq!(rf.entries[0].num(), &p("-1"));
    assert_eq!(rf.entries[0].den(), &p("x - 2"));
    for kind in SolverKind::ALL {
        assert!(solve(&sys, kind).unwrap().cross_eq(&sol), "{kind}");
    }
}

#[test]
fn shared_denominator() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10 {
        let sys = random_system(&mut rng, 4, 1, 2, 0.2);
        let sol = solve_bareiss(&sys).unwrap();
        let last = sol.trace.pivots.last().unwrap();
        assert!(sol.entries.iter().all(|e| e.den() == last));
    }
}

#[test]
fn zero_pivot_swaps() {
    let sys = consts(&[&[0, 1], &[1, 0]], &[3, 4]);
    let sol = solve_bareiss(&sys).unwrap();
    assert_eq!(values(&sol), vec![rat(4, 1), rat(3, 1)]);
    assert_eq!(sol.trace.swaps(), 1);
    assert_eq!(sol.trace.steps[0].swapped_with, Some(1));
}

#[test]
fn singular_detected() {
    let sys = consts(&[&[1, 2], &[2, 4]], &[1, 1]);
    for kind in SolverKind::ALL {
        assert_eq!(solve(&sys, kind).unwrap_err(), Error::Singular, "{kind}");
    }
}

#[test]
fn naive_degree_grows_faster() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let sys = random_system(&mut rng, 4, 1, 3, 0.0);
    let bareiss = solve_bareiss(&sys).unwrap();
    let naive = solve_naive_ff(&sys).unwrap();
    assert!(naive.cross_eq(&bareiss));
    assert!(naive.trace.max_degree > bareiss.trace.max_degree);
}

#[test]
fn one_by_one_identical() {
    let arena = VarArena::new(["x"]).unwrap();
    let p = |s: &str| Poly::parse(&arena, s).unwrap();
    let sys = LinSystem::new(&arena, vec![vec![p("1 + x")]], vec![p("x^2")]).unwrap();
    let a = solve_bareiss(&sys).unwrap();
    let b = solve_naive_ff(&sys).unwrap();
    assert_eq!(a.entries[0].num(), b.entries[0].num());
    assert_eq!(a.entries[0].den(), b.entries[0].den());
}

#[test]
fn single_block_matches_plain() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let sys = random_system(&mut rng, 4, 1, 2, 0.1);
    let n = sys.n();
    let blocked = sys.clone().with_blocks(vec![0..n]).unwrap();
    let a = solve_bareiss(&sys).unwrap();
    let b = solve_bareiss_scc(&blocked).unwrap();
    for (x, y) in a.entries.iter().zip(&b.entries) {
        assert_eq!(x.num(), y.num());
        assert_eq!(x.den(), y.den());
    }
}

#[test]
fn acyclic_chain_blocks() {
    // p0 - x p1 = 0, p1 = x: two 1x1 blocks.
    let arena = VarArena::new(["x"]).unwrap();
    let p = |s: &str| Poly::parse(&arena, s).unwrap();
    let sys = LinSystem::new(
        &arena,
        vec![vec![p("1 + x"), p("-x")], vec![p("0"), p("2 - x")]],
        vec![p("0"), p("x")],
    )
    .unwrap()
    .with_blocks(vec![0..1, 1..2])
    .unwrap();
    let scc = solve_bareiss_scc(&sys).unwrap();
    let plain = solve_bareiss(&sys).unwrap();
    assert!(scc.cross_eq(&plain));
    assert_eq!(scc.entries[1].den(), &p("2 - x"));
    assert_eq!(scc.entries[0].den(), &p("(1 + x)*(2 - x)"));
    assert_ne!(scc.entries[0].den(), scc.entries[1].den());
}

#[test]
fn three_blocks_smaller_denominators() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..5 {
        let sys = random_block_system(&mut rng, &[2, 1, 2], 1, 2);
        let scc = solve_bareiss_scc(&sys).unwrap();
        let plain = solve_bareiss(&sys).unwrap();
        assert!(scc.cross_eq(&plain));
        let shared = plain.entries[0].den().degree();
        assert!(scc.entries.iter().all(|e| e.den().degree() <= shared));
    }
}

#[test]
fn stair_form_enforced() {
    let sys = consts(&[&[1, 0], &[1, 1]], &[1, 1]);
    assert_eq!(sys.with_blocks(vec![0..1, 1..2]).unwrap_err(), Error::StairForm(1, 0));
}

#[test]
fn param_rhs_examples() {
    let arena = VarArena::new(["x"]).unwrap();
    let p = |s: &str| Poly::parse(&arena, s).unwrap();
    let id = vec![vec![rat(1, 1), rat(0, 1)], vec![rat(0, 1), rat(1, 1)]];
    assert_eq!(solve_param_rhs(&id, &[p("x"), p("1 - x")]).unwrap(), vec![p("x"), p("1 - x")]);
    let diag = vec![vec![rat(2, 1), rat(0, 1)], vec![rat(0, 1), rat(4, 1)]];
    assert_eq!(
        solve_param_rhs(&diag, &[p("x"), p("x^2")]).unwrap(),
        vec![p("x/2"), p("x^2/4")]
    );
}

#[test]
fn cramer_refuses_large() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let sys = random_system(&mut rng, 7, 0, 1, 0.0);
    assert_eq!(cramer_oracle(&sys).unwrap_err(), Error::OracleTooLarge { n: 7, max: 6 });
}

#[test]
fn leading_minor_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..10 {
        let sys = random_system(&mut rng, 4, 1, 2, 0.3);
        let sol = solve_bareiss(&sys).unwrap();
        let perm = &sol.trace.row_perm;
        for m in 0..sys.n() {
            let minor: Vec<Vec<Poly>> = (0..=m)
                .map(|i| sys.a()[perm[i]][..=m].to_vec())
                .collect();
            assert_eq!(det_cofactor(&minor), sol.trace.pivots[m]);
        }
    }
}

#[test]
fn dump_and_trace_format() {
    let (sys, _) = cyclic();
    assert_eq!(sys.dump(), "[1; x - 1] | x\n[x - 1; 1] | 0\n");
    let log = solve_bareiss(&sys).unwrap().trace.to_string();
    assert!(log.starts_with("solver=bareiss d=1"));
    assert!(log.contains("step=1 local=1 pivot=0 divisor_deg=0 max_deg=2"));
}

#[test]
fn generic_over_f64() {
    let arena = VarArena::empty();
    let c = |v: f64| Polynomial::<f64>::constant(&arena, v);
    let sys = crate::LinSystemF64::new(
        &arena,
        vec![vec![c(2.0), c(1.0)], vec![c(1.0), c(3.0)]],
        vec![c(1.0), c(2.0)],
    )
    .unwrap();
    let sol = solve_bareiss(&sys).unwrap();
    let v: Vec<f64> = sol.entries.iter().map(|e| e.eval(&[]).unwrap()).collect();
    assert!((v[0] - 0.2).abs() < 1e-12 && (v[1] - 0.6).abs() < 1e-12);
}
