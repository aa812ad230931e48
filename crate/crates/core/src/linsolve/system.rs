use std::fmt;
use std::ops::Range;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, RationalFunction, Scalar, VarArena};

/// Dense parametric system `A·p = b` with polynomial entries.
#[derive(Clone, Debug)]
pub struct ParamLinSystem<C: Scalar> {
    arena: Arc<VarArena>,
    a: Vec<Vec<Polynomial<C>>>,
    b: Vec<Polynomial<C>>,
    blocks: Option<Vec<Range<usize>>>,
}

impl<C: Scalar> ParamLinSystem<C> {
    pub fn new(
        arena: &Arc<VarArena>,
        a: Vec<Vec<Polynomial<C>>>,
        b: Vec<Polynomial<C>>,
    ) -> Result<Self> {
        let n = b.len();
        if a.len() != n || a.iter().any(|row| row.len() != n) {
            return Err(Error::Usage(format!(
                "matrix must be {n}x{n} to match the right-hand side"
            )));
        }
        let same = |p: &Polynomial<C>| VarArena::same(p.arena(), arena);
        if !a.iter().flatten().all(same) || !b.iter().all(same) {
            return Err(Error::ArenaMismatch);
        }
        Ok(ParamLinSystem {
            arena: arena.clone(),
            a,
            b,
            blocks: None,
        })
    }

    /// Attach a block partition (contiguous, in order, covering `0..n`).
    /// Entries below the diagonal are only allowed inside a block.
    pub fn with_blocks(mut self, blocks: Vec<Range<usize>>) -> Result<Self> {
        let n = self.n();
        let mut next = 0;
        for r in &blocks {
            if r.start != next || r.end <= r.start {
                return Err(Error::Usage(format!("blocks must tile 0..{n}")));
            }
            next = r.end;
        }
        if next != n {
            return Err(Error::Usage(format!("blocks must tile 0..{n}")));
        }
        for r in &blocks {
            for i in r.end..n {
                for j in 0..r.end {
                    if !self.a[i][j].is_zero() {
                        return Err(Error::StairForm(i, j));
                    }
                }
            }
        }
        self.blocks = Some(blocks);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.b.len()
    }

    pub fn arena(&self) -> &Arc<VarArena> {
        &self.arena
    }

    pub fn a(&self) -> &[Vec<Polynomial<C>>] {
        &self.a
    }

    pub fn b(&self) -> &[Polynomial<C>] {
        &self.b
    }

    pub fn blocks(&self) -> Option<&[Range<usize>]> {
        self.blocks.as_deref()
    }

    /// Maximal total degree over all entries of `A` and `b`.
    pub fn degree(&self) -> u32 {
        self.a
            .iter()
            .flatten()
            .chain(self.b.iter())
            .map(Polynomial::degree)
            .max()
            .unwrap_or(0)
    }

    /// True when every entry of `A` is a constant.
    pub fn matrix_is_constant(&self) -> bool {
        self.a.iter().flatten().all(Polynomial::is_constant)
    }

    /// Debug dump, one `[p; p; ...] | b` line per row.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (row, rhs) in self.a.iter().zip(&self.b) {
            let cells: Vec<String> = row.iter().map(|p| p.to_string()).collect();
            out.push_str(&format!("[{}] | {}\n", cells.join("; "), rhs));
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolverKind {
    Bareiss,
    BareissScc,
    NaiveFf,
    RfGcd,
    Cramer,
}

impl SolverKind {
    pub const ALL: [SolverKind; 5] = [
        SolverKind::Bareiss,
        SolverKind::BareissScc,
        SolverKind::NaiveFf,
        SolverKind::RfGcd,
        SolverKind::Cramer,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SolverKind::Bareiss => "bareiss",
            SolverKind::BareissScc => "bareiss-scc",
            SolverKind::NaiveFf => "naive-ff",
            SolverKind::RfGcd => "rf-gcd",
            SolverKind::Cramer => "cramer",
        }
    }
}

impl FromStr for SolverKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SolverKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown solver `{s}`")))
    }
}

impl fmt::Display for SolverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One elimination step (column `step - 1` eliminated).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepRecord {
    /// Global 1-based step index.
    pub step: usize,
    /// 1-based step index inside the current block (equals `step` without
    /// stratification). Degree bounds are stated against this count.
    pub local_step: usize,
    pub pivot_row: usize,
    pub swapped_with: Option<usize>,
    pub divisor_degree: u32,
    /// Largest degree among the entries written in this step.
    pub max_degree: u32,
}

#[derive(Clone, Debug)]
pub struct SolveTrace<C: Scalar> {
    pub solver: SolverKind,
    /// Maximal entry degree of the input system.
    pub input_degree: u32,
    pub steps: Vec<StepRecord>,
    /// `row_perm[k]` is the original index of the row that ended in position k.
    pub row_perm: Vec<usize>,
    /// Diagonal of the triangulated matrix.
    pub pivots: Vec<Polynomial<C>>,
    /// Exact divisions performed (all verified remainder-free).
    pub divisions: usize,
    /// Largest degree seen anywhere, back substitution included.
    pub max_degree: u32,
}

impl<C: Scalar> SolveTrace<C> {
    pub(crate) fn new(solver: SolverKind, input_degree: u32, n: usize) -> Self {
        SolveTrace {
            solver,
            input_degree,
            steps: Vec::new(),
            row_perm: (0..n).collect(),
            pivots: Vec::new(),
            divisions: 0,
            max_degree: input_degree,
        }
    }

    pub fn swaps(&self) -> usize {
        self.steps.iter().filter(|s| s.swapped_with.is_some()).count()
    }

    /// Steps whose written entries exceed `(local_step + 1) * input_degree`.
    pub fn degree_bound_violations(&self) -> Vec<&StepRecord> {
        self.steps
            .iter()
            .filter(|s| s.max_degree > (s.local_step as u32 + 1) * self.input_degree)
            .collect()
    }
}

impl<C: Scalar> fmt::Display for SolveTrace<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "solver={} d={} divisions={} max_degree={}",
            self.solver, self.input_degree, self.divisions, self.max_degree
        )?;
        for s in &self.steps {
            write!(
                f,
                "step={} local={} pivot={} divisor_deg={} max_deg={}",
                s.step, s.local_step, s.pivot_row, s.divisor_degree, s.max_degree
            )?;
            if let Some(r) = s.swapped_with {
                write!(f, " swap={r}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct Solution<C: Scalar> {
    pub entries: Vec<RationalFunction<C>>,
    pub trace: SolveTrace<C>,
}

impl<C: Scalar> Solution<C> {
    /// Entry-wise semantic equality.
    pub fn cross_eq(&self, other: &Self) -> bool {
        self.entries.len() == other.entries.len()
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| a.cross_eq(b))
    }
}
