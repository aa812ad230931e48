//! One-step fraction-free (Bareiss) elimination.
//!
//! Step `m` replaces every entry below and right of the pivot by
//! `(a[m][m]*a[i][j] - a[i][m]*a[m][j]) / a[m-1][m-1]`, a division that is
//! always exact. After step `m` the pivot equals the leading principal minor of
//! order `m + 1` of the row-permuted input, and entry degrees stay below
//! `(m + 1) * d`.
//!
//! The stratified variant takes a block partition in which the matrix is
//! block upper triangular (strongly connected components in topological
//! order). Elimination then never leaves a block, and back substitution
//! scales each unknown by `a*(block)`, the product of the last diagonal
//! entries of its own block and all later blocks, rather than by one global
//! determinant.

use std::collections::HashMap;
use std::ops::Range;

use super::{ParamLinSystem, Solution, SolveTrace, SolverKind, StepRecord};
use crate::error::{Error, Result};
use crate::poly::{Polynomial, RationalFunction, Scalar};

pub(crate) struct Work<C: Scalar> {
    pub a: Vec<Vec<Polynomial<C>>>,
    pub b: Vec<Polynomial<C>>,
    pub trace: SolveTrace<C>,
}

impl<C: Scalar> Work<C> {
    pub fn new(sys: &ParamLinSystem<C>, solver: SolverKind) -> Self {
        Work {
            a: sys.a().to_vec(),
            b: sys.b().to_vec(),
            trace: SolveTrace::new(solver, sys.degree(), sys.n()),
        }
    }

    pub fn div(&mut self, num: &Polynomial<C>, den: &Polynomial<C>) -> Result<Polynomial<C>> {
        self.trace.divisions += 1;
        if den.is_one() {
            return Ok(num.clone());
        }
        num.div_exact(den)
    }

    /// Ensure a nonzero pivot at `m`, swapping with the nearest lower row of
    /// the block that has a nonzero entry in column `m`.
    pub fn pivot(&mut self, m: usize, block_end: usize) -> Result<Option<usize>> {
        if !self.a[m][m].is_zero() {
            return Ok(None);
        }
        let r = (m + 1..block_end)
            .find(|&r| !self.a[r][m].is_zero())
            .ok_or(Error::Singular)?;
        self.a.swap(m, r);
        self.b.swap(m, r);
        self.trace.row_perm.swap(m, r);
        Ok(Some(r))
    }

    /// Fraction-free triangulation of rows `block`, touching columns
    /// `block.start..n`. With `exact_divisor == false` the division by the
    /// previous pivot is skipped (naive fraction-free elimination).
    pub fn triangulate(&mut self, block: Range<usize>, exact_divisor: bool) -> Result<()> {
        let n = self.b.len();
        let mut prev = Polynomial::one(self.b[0].arena());
        for m in block.clone() {
            let swapped = self.pivot(m, block.end)?;
            if m + 1 == block.end {
                break;
            }
            let pivot = self.a[m][m].clone();
            let mut max_deg = 0;
            for i in m + 1..block.end {
                let factor = std::mem::replace(&mut self.a[i][m], Polynomial::zero(pivot.arena()));
                for j in m + 1..n {
                    let updated = if factor.is_zero() {
                        &pivot * &self.a[i][j]
                    } else {
                        &(&pivot * &self.a[i][j]) - &(&factor * &self.a[m][j])
                    };
                    let v = if exact_divisor && !updated.is_zero() {
                        self.div(&updated, &prev)?
                    } else {
                        updated
                    };
                    max_deg = max_deg.max(v.degree());
                    self.a[i][j] = v;
                }
                let updated = &(&pivot * &self.b[i]) - &(&factor * &self.b[m]);
                let v = if exact_divisor && !updated.is_zero() {
                    self.div(&updated, &prev)?
                } else {
                    updated
                };
                max_deg = max_deg.max(v.degree());
                self.b[i] = v;
            }
            self.trace.steps.push(StepRecord {
                step: m + 1,
                local_step: m - block.start + 1,
                pivot_row: m,
                swapped_with: swapped,
                divisor_degree: prev.degree(),
                max_degree: max_deg,
            });
            self.trace.max_degree = self.trace.max_degree.max(max_deg);
            if exact_divisor {
                prev = pivot;
            }
        }
        Ok(())
    }
}

/// Plain one-step elimination over the whole matrix: every entry shares denominator `a[n-1][n-1]`.
pub fn solve_bareiss<C: Scalar>(sys: &ParamLinSystem<C>) -> Result<Solution<C>> {
    let n = sys.n();
    stratified(sys, &[0..n], SolverKind::Bareiss)
}

/// SCC-stratified Bareiss. Uses the system's block partition, or a single
/// block when none is attached.
pub fn solve_bareiss_scc<C: Scalar>(sys: &ParamLinSystem<C>) -> Result<Solution<C>> {
    let n = sys.n();
    let single = [0..n];
    let blocks = sys.blocks().unwrap_or(&single);
    stratified(sys, blocks, SolverKind::BareissScc)
}

fn stratified<C: Scalar>(
    sys: &ParamLinSystem<C>,
    blocks: &[Range<usize>],
    kind: SolverKind,
) -> Result<Solution<C>> {
    let n = sys.n();
    if n == 0 {
        return Ok(Solution {
            entries: Vec::new(),
            trace: SolveTrace::new(kind, 0, 0),
        });
    }
    let mut w = Work::new(sys, kind);
    for blk in blocks {
        w.triangulate(blk.clone(), true)?;
    }
    w.trace.pivots = (0..n).map(|i| w.a[i][i].clone()).collect();

    // Determinant of each diagonal block is its last pivot.
    let block_of: Vec<usize> = {
        let mut v = vec![0; n];
        for (k, blk) in blocks.iter().enumerate() {
            for i in blk.clone() {
                v[i] = k;
            }
        }
        v
    };
    let dets: Vec<Polynomial<C>> = blocks.iter().map(|b| w.a[b.end - 1][b.end - 1].clone()).collect();
    // astar[k] = product of dets of blocks k..; scaling ratio between blocks
    // k <= l is the product of dets k..l-1.
    let mut astar = vec![Polynomial::one(sys.arena()); blocks.len()];
    let mut acc = Polynomial::one(sys.arena());
    for k in (0..blocks.len()).rev() {
        acc = &acc * &dets[k];
        astar[k] = acc.clone();
    }
    let mut ratios: HashMap<(usize, usize), Polynomial<C>> = HashMap::new();
    let mut ratio = |k: usize, l: usize| -> Polynomial<C> {
        ratios
            .entry((k, l))
            .or_insert_with(|| {
                dets[k..l]
                    .iter()
                    .fold(Polynomial::one(sys.arena()), |p, d| &p * d)
            })
            .clone()
    };

    for m in (0..n - 1).rev() {
        let k = block_of[m];
        let mut acc = &astar[k] * &w.b[m];
        for i in m + 1..n {
            if w.a[m][i].is_zero() || w.b[i].is_zero() {
                continue;
            }
            let mut t = &w.a[m][i] * &w.b[i];
            let l = block_of[i];
            if l != k {
                t = &t * &ratio(k, l);
            }
            acc = &acc - &t;
        }
        let pivot = w.a[m][m].clone();
        let v = w.div(&acc, &pivot)?;
        w.trace.max_degree = w.trace.max_degree.max(v.degree());
        w.b[m] = v;
    }

    let entries = (0..n)
        .map(|i| RationalFunction::new(w.b[i].clone(), astar[block_of[i]].clone()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Solution {
        entries,
        trace: w.trace,
    })
}

/// Fraction-free elimination without the exact divisor. Kept to show the
/// degree doubling the one-step variant avoids.
pub fn solve_naive_ff<C: Scalar>(sys: &ParamLinSystem<C>) -> Result<Solution<C>> {
    let n = sys.n();
    if n == 0 {
        return Ok(Solution {
            entries: Vec::new(),
            trace: SolveTrace::new(SolverKind::NaiveFf, 0, 0),
        });
    }
    let mut w = Work::new(sys, SolverKind::NaiveFf);
    w.triangulate(0..n, false)?;
    w.trace.pivots = (0..n).map(|i| w.a[i][i].clone()).collect();
    let ann = w.a[n - 1][n - 1].clone();
    for m in (0..n - 1).rev() {
        let mut acc = &ann * &w.b[m];
        for i in m + 1..n {
            if !w.a[m][i].is_zero() {
                acc = &acc - &(&w.a[m][i] * &w.b[i]);
            }
        }
        let pivot = w.a[m][m].clone();
        let v = w.div(&acc, &pivot)?;
        w.trace.max_degree = w.trace.max_degree.max(v.degree());
        w.b[m] = v;
    }
    let entries = w
        .b
        .iter()
        .map(|num| RationalFunction::new(num.clone(), ann.clone()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Solution {
        entries,
        trace: w.trace,
    })
}
