use super::{ParamLinSystem, Solution, SolveTrace, SolverKind, StepRecord};
use crate::error::{Error, Result};
use crate::poly::{Polynomial, RationalFunction, Scalar};

fn deg<C: Scalar>(r: &RationalFunction<C>) -> u32 {
    r.num().degree().max(r.den().degree())
}

/// Textbook Gaussian elimination over rational functions, simplifying after
/// every update. Besides [`RationalFunction::simplify`] (content, monomials,
/// univariate gcd), common factors are found by trial division with the
/// numerators and denominators of earlier pivots, which are the factors
/// elimination introduces.
pub fn solve_rf_gcd<C: Scalar>(sys: &ParamLinSystem<C>) -> Result<Solution<C>> {
    let n = sys.n();
    let mut trace = SolveTrace::new(SolverKind::RfGcd, sys.degree(), n);
    let mut a: Vec<Vec<RationalFunction<C>>> = sys
        .a()
        .iter()
        .map(|row| row.iter().cloned().map(RationalFunction::from_poly).collect())
        .collect();
    let mut b: Vec<RationalFunction<C>> =
        sys.b().iter().cloned().map(RationalFunction::from_poly).collect();

    let mut factors: Vec<Polynomial<C>> = Vec::new();
    let reduce = |v: RationalFunction<C>, factors: &[Polynomial<C>]| v.cancel_factors(factors).simplify();

    for m in 0..n {
        let mut swapped = None;
        if a[m][m].is_zero() {
            let r = (m + 1..n).find(|&r| !a[r][m].is_zero()).ok_or(Error::Singular)?;
            a.swap(m, r);
            b.swap(m, r);
            trace.row_perm.swap(m, r);
            swapped = Some(r);
        }
        for p in [a[m][m].num(), a[m][m].den()] {
            if !p.is_constant() && !factors.contains(p) {
                factors.push(p.clone());
            }
        }
        if m + 1 == n {
            break;
        }
        let mut max_deg = 0;
        for i in m + 1..n {
            if a[i][m].is_zero() {
                continue;
            }
            let factor = reduce(a[i][m].div(&a[m][m])?, &factors);
            trace.divisions += 1;
            for j in m + 1..n {
                if a[m][j].is_zero() {
                    continue;
                }
                let v = reduce(a[i][j].sub(&factor.mul(&a[m][j])), &factors);
                max_deg = max_deg.max(deg(&v));
                a[i][j] = v;
            }
            let v = reduce(b[i].sub(&factor.mul(&b[m])), &factors);
            max_deg = max_deg.max(deg(&v));
            b[i] = v;
            a[i][m] = RationalFunction::zero(sys.arena());
        }
        trace.steps.push(StepRecord {
            step: m + 1,
            local_step: m + 1,
            pivot_row: m,
            swapped_with: swapped,
            divisor_degree: deg(&a[m][m]),
            max_degree: max_deg,
        });
        trace.max_degree = trace.max_degree.max(max_deg);
    }

    let mut p: Vec<RationalFunction<C>> = vec![RationalFunction::zero(sys.arena()); n];
    for m in (0..n).rev() {
        let mut acc = b[m].clone();
        for i in m + 1..n {
            if !a[m][i].is_zero() {
                acc = reduce(acc.sub(&a[m][i].mul(&p[i])), &factors);
            }
        }
        p[m] = reduce(acc.div(&a[m][m])?, &factors);
        trace.divisions += 1;
        trace.max_degree = trace.max_degree.max(deg(&p[m]));
    }
    trace.pivots = (0..n)
        .map(|i| a[i][i].num().clone())
        .collect();
    Ok(Solution { entries: p, trace })
}
