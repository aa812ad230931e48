use num_traits::Zero;
use pmcx_core::bench::random::{random_block_system, random_poly, random_rational, random_system};
use pmcx_core::linsolve::{
    cramer_oracle, solve, solve_bareiss, solve_dense, solve_param_rhs, ParamLinSystem, SolverKind,
};
use pmcx_core::poly::VarArena;
use pmcx_core::{Poly, Rational};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

const SOLVERS: [SolverKind; 4] = [SolverKind::Bareiss, SolverKind::BareissScc, SolverKind::NaiveFf, SolverKind::RfGcd];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn solvers_match_cramer(seed in any::<u64>(), n in 1usize..=4, d in 1u32..=2, k in 1usize..=2) {
        let sys = random_system(&mut rng(seed), n, d, k, 0.3);
        let oracle = cramer_oracle(&sys).unwrap();
        for kind in SOLVERS {
            let sol = solve(&sys, kind).unwrap();
            prop_assert!(sol.cross_eq(&oracle), "{kind} on\n{}", sys.dump());
        }
    }

    #[test]
    fn solution_satisfies_system(seed in any::<u64>(), n in 1usize..=5, d in 1u32..=2, k in 1usize..=3) {
        let mut r = rng(seed);
        let sys = random_system(&mut r, n, d, k, 0.3);
        let sol = solve_bareiss(&sys).unwrap();
        let point: Vec<Rational> = (0..k).map(|_| random_rational(&mut r, 4, 9)).collect();
        let av: Vec<Vec<Rational>> = sys.a().iter().map(|row| row.iter().map(|p| p.eval(&point)).collect()).collect();
        let bv: Vec<Rational> = sys.b().iter().map(|p| p.eval(&point)).collect();
        if let Ok(exact) = solve_dense(&av, &bv) {
            for (e, v) in sol.entries.iter().zip(&exact) {
                if let Ok(s) = e.eval(&point) {
                    prop_assert_eq!(&s, v);
                }
            }
        }
    }

    #[test]
    fn stratified_matches_plain(seed in any::<u64>(), sizes in prop::collection::vec(1usize..=3, 1..=3)) {
        let sys = random_block_system(&mut rng(seed), &sizes, 1, 2);
        let plain = solve_bareiss(&sys).unwrap();
        let strat = solve(&sys, SolverKind::BareissScc).unwrap();
        prop_assert!(plain.cross_eq(&strat));
        prop_assert!(strat.trace.degree_bound_violations().is_empty());
    }

    #[test]
    fn param_rhs_matches_bareiss(seed in any::<u64>(), n in 1usize..=5, d in 0u32..=3) {
        let mut r = rng(seed);
        let arena = VarArena::new(["x", "y"]).unwrap();
        let a: Vec<Vec<Rational>> = loop {
            let a: Vec<Vec<Rational>> = (0..n).map(|_| (0..n).map(|_| random_rational(&mut r, 3, 4)).collect()).collect();
            if solve_dense(&a, &vec![Rational::zero(); n]).is_ok() {
                break a;
            }
        };
        let b: Vec<Poly> = (0..n).map(|_| random_poly(&mut r, &arena, d, 3)).collect();
        let fast = solve_param_rhs(&a, &b).unwrap();
        let ap: Vec<Vec<Poly>> = a.iter().map(|row| row.iter().map(|c| Poly::constant(&arena, c.clone())).collect()).collect();
        let sys = ParamLinSystem::new(&arena, ap, b.clone()).unwrap();
        let slow = solve_bareiss(&sys).unwrap();
        let bdeg = b.iter().map(Poly::degree).max().unwrap_or(0);
        for (f, s) in fast.iter().zip(&slow.entries) {
            prop_assert!(pmcx_core::RatFun::from_poly(f.clone()).cross_eq(s));
            prop_assert!(f.degree() <= bdeg);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn bareiss_degree_bound_and_exactness(seed in any::<u64>(), n in 1usize..=6, d in 1u32..=2, k in 1usize..=3) {
        let sys = random_system(&mut rng(seed), n, d, k, 0.25);
        for kind in [SolverKind::Bareiss, SolverKind::BareissScc] {
            let sol = solve(&sys, kind).unwrap();
            prop_assert!(sol.trace.degree_bound_violations().is_empty(), "{}", sol.trace);
            prop_assert!(sol.trace.divisions > 0 || n == 1);
        }
    }
}
