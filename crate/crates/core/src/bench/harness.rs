//! Runs reachability on a generated model with several solvers, records
//! sizes, degrees and times, and checks that all solvers agree.

use std::sync::mpsc;
use std::sync::Arc;
use std::thread;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::gen::GenSpec;
use crate::error::{Error, Result};
use crate::linsolve::SolverKind;
use crate::model::Pmc;
use crate::pctl::until_prob;
use crate::props::{reach, ReachResult};
use crate::{RatFun, Rational};

/// Cross-multiplication is skipped above this many product terms; the
/// solutions are then compared at random admissible valuations.
pub const CROSS_TERM_LIMIT: usize = 200_000;

#[derive(Clone, Debug, Serialize)]
pub struct BenchRun {
    pub solver: SolverKind,
    /// Rows of the solved linear system.
    pub rows: usize,
    pub params: usize,
    pub millis: Option<f64>,
    pub max_degree: Option<u32>,
    pub divisions: Option<usize>,
    /// Steps whose entries exceed the `(m+1)·d` degree bound.
    pub degree_violations: Option<usize>,
    /// Total terms in numerator and denominator at the initial state.
    pub init_terms: Option<usize>,
    /// No inexact division occurred.
    pub exact: bool,
    pub timed_out: bool,
    pub error: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Equal,
    Unequal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckMethod {
    CrossMultiplication,
    Valuations,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossCheck {
    pub a: SolverKind,
    pub b: SolverKind,
    pub method: CheckMethod,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub model: String,
    pub states: usize,
    pub params: usize,
    pub seed: u64,
    pub timeout_secs: f64,
    pub runs: Vec<BenchRun>,
    pub cross_checks: Vec<CrossCheck>,
    /// Every finished solver matches the exact instantiated solution at
    /// random admissible valuations.
    pub valuation_check: Option<Verdict>,
}

impl BenchReport {
    /// False when some pair of solvers or some valuation check disagreed.
    pub fn all_equal(&self) -> bool {
        self.cross_checks.iter().all(|c| c.verdict == Verdict::Equal)
            && self.valuation_check != Some(Verdict::Unequal)
    }

    pub fn table(&self) -> String {
        let mut out = format!(
            "model={} states={} params={} seed={}\n{:<12} {:>6} {:>12} {:>8} {:>10} {:>6}\n",
            self.model, self.states, self.params, self.seed, "solver", "rows", "time[ms]", "maxdeg", "terms", "exact"
        );
        for r in &self.runs {
            let time = match (r.millis, r.timed_out, &r.error) {
                (_, true, _) => "timeout".to_string(),
                (_, _, Some(_)) => "error".to_string(),
                (Some(t), _, _) => format!("{t:.1}"),
                _ => "-".to_string(),
            };
            let opt = |v: Option<String>| v.unwrap_or_else(|| "-".to_string());
            out.push_str(&format!(
                "{:<12} {:>6} {:>12} {:>8} {:>10} {:>6}\n",
                r.solver.name(),
                r.rows,
                time,
                opt(r.max_degree.map(|d| d.to_string())),
                opt(r.init_terms.map(|d| d.to_string())),
                r.exact
            ));
            if let Some(e) = &r.error {
                out.push_str(&format!("  {}: {e}\n", r.solver.name()));
            }
        }
        for c in &self.cross_checks {
            out.push_str(&format!("{} vs {}: {:?} ({:?})\n", c.a.name(), c.b.name(), c.verdict, c.method));
        }
        if let Some(v) = self.valuation_check {
            out.push_str(&format!("instantiated solutions: {v:?}\n"));
        }
        out
    }
}

type Outcome = (BenchRun, Option<ReachResult>);

fn run_one(m: &Pmc, target: &[bool], solver: SolverKind) -> Outcome {
    let start = Instant::now();
    let res = reach(m, target, solver);
    let millis = start.elapsed().as_secs_f64() * 1000.0;
    let mut run = BenchRun {
        solver,
        rows: 0,
        params: m.num_params(),
        millis: Some(millis),
        max_degree: None,
        divisions: None,
        degree_violations: None,
        init_terms: None,
        exact: true,
        timed_out: false,
        error: None,
    };
    match res {
        Ok(r) => {
            run.rows = r.rows();
            if let Some(sol) = &r.solution {
                run.max_degree = Some(sol.trace.max_degree);
                run.divisions = Some(sol.trace.divisions);
                run.degree_violations = Some(sol.trace.degree_bound_violations().len());
            }
            let v = &r.values[m.init()];
            run.init_terms = Some(v.num().num_terms() + v.den().num_terms());
            (run, Some(r))
        }
        Err(e) => {
            run.exact = !matches!(e, Error::InexactDivision(_));
            run.error = Some(e.to_string());
            (run, None)
        }
    }
}

fn eval_all(r: &ReachResult, point: &[Rational]) -> Option<Vec<Rational>> {
    r.values.iter().map(|v: &RatFun| v.eval(point).ok()).collect()
}

/// Reachability of `goal` on `spec`'s model with every solver in `solvers`,
/// each on its own thread with its own deadline.
pub fn run_bench(spec: GenSpec, solvers: &[SolverKind], timeout: Duration, seed: u64) -> Result<BenchReport> {
    let m = Arc::new(spec.generate()?);
    let target = Arc::new(m.states_with("goal"));
    let (tx, rx) = mpsc::channel::<(usize, Outcome)>();
    for (i, &solver) in solvers.iter().enumerate() {
        let (m, target, tx) = (m.clone(), target.clone(), tx.clone());
        thread::spawn(move || {
            let out = run_one(&m, &target, solver);
            let _ = tx.send((i, out));
        });
    }
    drop(tx);
    let deadline = Instant::now() + timeout;
    let mut outcomes: Vec<Option<Outcome>> = vec![None; solvers.len()];
    while outcomes.iter().any(Option::is_none) {
        let left = deadline.saturating_duration_since(Instant::now());
        match rx.recv_timeout(left) {
            Ok((i, out)) => outcomes[i] = Some(out),
            Err(_) => break,
        }
    }
    let mut runs = Vec::with_capacity(solvers.len());
    let mut results: Vec<(SolverKind, ReachResult)> = Vec::new();
    for (i, out) in outcomes.into_iter().enumerate() {
        match out {
            Some((run, res)) => {
                if let Some(r) = res {
                    results.push((run.solver, r));
                }
                runs.push(run);
            }
            None => runs.push(BenchRun {
                solver: solvers[i],
                rows: 0,
                params: m.num_params(),
                millis: None,
                max_degree: None,
                divisions: None,
                degree_violations: None,
                init_terms: None,
                exact: true,
                timed_out: true,
                error: None,
            }),
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<Vec<Rational>> = (0..3).map(|_| spec.sample_admissible(&mut rng)).collect();
    let mut cross_checks = Vec::new();
    for i in 0..results.len() {
        for j in i + 1..results.len() {
            let (a, ra) = &results[i];
            let (b, rb) = &results[j];
            let size: usize = ra
                .values
                .iter()
                .zip(&rb.values)
                .map(|(x, y)| x.num().num_terms() * y.den().num_terms() + y.num().num_terms() * x.den().num_terms())
                .sum();
            let (method, equal) = if size <= CROSS_TERM_LIMIT {
                let eq = ra.values.iter().zip(&rb.values).all(|(x, y)| x.cross_eq(y));
                (CheckMethod::CrossMultiplication, eq)
            } else {
                let eq = points.iter().all(|p| eval_all(ra, p) == eval_all(rb, p));
                (CheckMethod::Valuations, eq)
            };
            cross_checks.push(CrossCheck {
                a: *a,
                b: *b,
                method,
                verdict: if equal { Verdict::Equal } else { Verdict::Unequal },
            });
        }
    }

    let valuation_check = (!results.is_empty()).then(|| {
        let ok = points.iter().all(|p| {
            let Ok(mc) = m.instantiate_at(p) else {
                return false;
            };
            let exact = until_prob(&mc, &vec![true; m.num_states()], &target);
            results.iter().all(|(_, r)| eval_all(r, p).as_ref() == Some(&exact))
        });
        if ok {
            Verdict::Equal
        } else {
            Verdict::Unequal
        }
    });

    Ok(BenchReport {
        model: spec.to_string(),
        states: m.num_states(),
        params: m.num_params(),
        seed,
        timeout_secs: timeout.as_secs_f64(),
        runs,
        cross_checks,
        valuation_check,
    })
}
