//! Cramer's rule with cofactor determinants. Test oracle only: the cost is
//! exponential in `n`, hence the size cap.

use std::collections::HashMap;

use super::{ParamLinSystem, Solution, SolveTrace, SolverKind};
use crate::error::{Error, Result};
use crate::poly::{Polynomial, RationalFunction, Scalar};

pub const DEFAULT_CRAMER_BOUND: usize = 6;

/// Determinant by Laplace expansion along successive rows, memoised on the
/// set of remaining columns.
pub fn det_cofactor<C: Scalar>(m: &[Vec<Polynomial<C>>]) -> Polynomial<C> {
    let n = m.len();
    assert!(n < 64, "cofactor determinant limited to 63 columns");
    let arena = m[0][0].arena().clone();
    let mut memo: HashMap<u64, Polynomial<C>> = HashMap::new();
    fn go<C: Scalar>(
        m: &[Vec<Polynomial<C>>],
        cols: u64,
        memo: &mut HashMap<u64, Polynomial<C>>,
        arena: &std::sync::Arc<crate::poly::VarArena>,
    ) -> Polynomial<C> {
        if cols == 0 {
            return Polynomial::one(arena);
        }
        if let Some(d) = memo.get(&cols) {
            return d.clone();
        }
        let n = m.len();
        let row = n - cols.count_ones() as usize;
        let mut acc = Polynomial::zero(arena);
        let mut pos = 0;
        for j in 0..n {
            if cols & (1 << j) == 0 {
                continue;
            }
            if !m[row][j].is_zero() {
                let minor = go(m, cols & !(1 << j), memo, arena);
                let term = &m[row][j] * &minor;
                acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            pos += 1;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    go(m, (1u64 << n) - 1, &mut memo, &arena)
}

pub fn cramer_oracle<C: Scalar>(sys: &ParamLinSystem<C>) -> Result<Solution<C>> {
    cramer_oracle_bounded(sys, DEFAULT_CRAMER_BOUND)
}

pub fn cramer_oracle_bounded<C: Scalar>(
    sys: &ParamLinSystem<C>,
    bound: usize,
) -> Result<Solution<C>> {
    let n = sys.n();
    if n > bound {
        return Err(Error::OracleTooLarge { n, max: bound });
    }
    let mut trace = SolveTrace::new(SolverKind::Cramer, sys.degree(), n);
    if n == 0 {
        return Ok(Solution {
            entries: Vec::new(),
            trace,
        });
    }
    let det = det_cofactor(sys.a());
    if det.is_zero() {
        return Err(Error::Singular);
    }
    let mut entries = Vec::with_capacity(n);
    for i in 0..n {
        let mut ai: Vec<Vec<Polynomial<C>>> = sys.a().to_vec();
        for (row, rhs) in ai.iter_mut().zip(sys.b()) {
            row[i] = rhs.clone();
        }
        let num = det_cofactor(&ai);
        trace.max_degree = trace.max_degree.max(num.degree());
        entries.push(RationalFunction::new(num, det.clone())?);
    }
    trace.max_degree = trace.max_degree.max(det.degree());
    Ok(Solution { entries, trace })
}
