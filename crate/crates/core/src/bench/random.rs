//! Seeded random polynomials and linear systems for property suites.

use std::sync::Arc;

use rand::Rng;

use crate::linsolve::{solve_dense, ParamLinSystem};
use crate::poly::{Monomial, Polynomial, VarArena};
use crate::{Poly, Rational};

/// Small random rational in `[-range, range]` with denominator up to `den`.
pub fn random_rational<R: Rng>(rng: &mut R, range: i64, den: i64) -> Rational {
    let d = rng.gen_range(1..=den);
    let n = rng.gen_range(-range * d..=range * d);
    Rational::new(n.into(), d.into())
}

/// Random polynomial of total degree at most `d` with up to `terms` terms.
pub fn random_poly<R: Rng>(rng: &mut R, arena: &Arc<VarArena>, d: u32, terms: usize) -> Poly {
    let k = arena.len();
    let mut out = Vec::with_capacity(terms);
    for _ in 0..terms {
        let mut exps = vec![0u32; k];
        if k > 0 {
            let deg = rng.gen_range(0..=d);
            for _ in 0..deg {
                exps[rng.gen_range(0..k)] += 1;
            }
        }
        let c = Rational::from_integer(rng.gen_range(-5i64..=5).into());
        out.push((Monomial::from_exponents(exps), c));
    }
    Polynomial::from_terms(arena, out)
}

/// Random `n×n` system with entry degree at most `d` over `k` variables.
/// A fraction `zero_density` of off-diagonal entries is forced to zero so
/// that pivoting paths get exercised. Retries until the matrix is
/// nonsingular at a random rational point (hence over the function field).
pub fn random_system<R: Rng>(rng: &mut R, n: usize, d: u32, k: usize, zero_density: f64) -> ParamLinSystem<Rational> {
    let names: Vec<String> = (1..=k).map(|i| format!("x{i}")).collect();
    let arena = VarArena::new(names).expect("distinct names");
    loop {
        let a: Vec<Vec<Poly>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        if rng.gen_bool(zero_density) {
                            Polynomial::zero(&arena)
                        } else {
                            random_poly(rng, &arena, d, 3)
                        }
                    })
                    .collect()
            })
            .collect();
        let b: Vec<Poly> = (0..n).map(|_| random_poly(rng, &arena, d, 3)).collect();
        let point: Vec<Rational> = (0..k).map(|_| random_rational(rng, 3, 7)).collect();
        let av: Vec<Vec<Rational>> = a
            .iter()
            .map(|row| row.iter().map(|p| p.eval(&point)).collect())
            .collect();
        let zeros = vec![Rational::from_integer(0.into()); n];
        if solve_dense(&av, &zeros).is_ok() {
            return ParamLinSystem::new(&arena, a, b).expect("well-formed");
        }
    }
}

/// Random block upper triangular system: `sizes` gives the diagonal block
/// sizes, entries strictly below the block diagonal are zero.
pub fn random_block_system<R: Rng>(rng: &mut R, sizes: &[usize], d: u32, k: usize) -> ParamLinSystem<Rational> {
    let n: usize = sizes.iter().sum();
    let mut blocks = Vec::new();
    let mut start = 0;
    for &s in sizes {
        blocks.push(start..start + s);
        start += s;
    }
    loop {
        let base = random_system(rng, n, d, k, 0.2);
        let mut a = base.a().to_vec();
        for blk in &blocks {
            for i in blk.end..n {
                for j in blk.clone() {
                    a[i][j] = Polynomial::zero(base.arena());
                }
            }
        }
        let point: Vec<Rational> = (0..k).map(|_| random_rational(rng, 3, 7)).collect();
        let av: Vec<Vec<Rational>> = a
            .iter()
            .map(|row| row.iter().map(|p| p.eval(&point)).collect())
            .collect();
        let zeros = vec![Rational::from_integer(0.into()); n];
        if solve_dense(&av, &zeros).is_ok() {
            return ParamLinSystem::new(base.arena(), a, base.b().to_vec())
                .and_then(|s| s.with_blocks(blocks.clone()))
                .expect("stair form by construction");
        }
    }
}
