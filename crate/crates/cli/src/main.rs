use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use pmcx_core::bench::{run_bench, GenSpec};
use pmcx_core::linsolve::SolverKind;
use pmcx_core::model::Pmc;
use pmcx_core::pctl::{self, Formula};
use pmcx_core::props;
use pmcx_core::{Error, RatFun, Rational, Result, Valuation};

#[derive(Parser)]
#[command(name = "pmcx", version, about = "Exact analysis of parametric Markov chains")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reachability probability of a label as a rational function.
    SolveReach {
        model: PathBuf,
        #[arg(long)]
        target: String,
        #[arg(long, default_value = "bareiss-scc")]
        solver: String,
        /// Also evaluate at a valuation, e.g. `x=1/3,y=0.25`.
        #[arg(long)]
        eval: Option<String>,
        /// Print the elimination trace.
        #[arg(long)]
        trace: bool,
    },
    /// Expected weight accumulated until the label is reached.
    SolveExp {
        model: PathBuf,
        #[arg(long)]
        target: String,
        #[arg(long, default_value = "bareiss-scc")]
        solver: String,
        #[arg(long)]
        eval: Option<String>,
    },
    /// Expected long-run average weight collected in labelled states.
    SolveMp {
        model: PathBuf,
        #[arg(long)]
        target: String,
        #[arg(long, default_value = "bareiss-scc")]
        solver: String,
        #[arg(long)]
        eval: Option<String>,
    },
    /// Model checking of a state formula at the initial state.
    Check {
        model: PathBuf,
        #[arg(long)]
        formula: String,
        #[arg(long, value_enum, default_value_t = Mode::Exists)]
        mode: Mode,
        /// Check the chain instantiated at this valuation instead.
        #[arg(long)]
        eval: Option<String>,
    },
    /// Write a benchmark model.
    Gen {
        #[arg(value_enum)]
        family: Family,
        params: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Solve a generated model with several solvers and compare.
    Bench {
        /// `complete:N`, `ij:N:K` or `expfam:K`.
        spec: String,
        #[arg(long, default_value = "bareiss,bareiss-scc,rf-gcd")]
        solvers: String,
        #[arg(long, default_value_t = 60.0)]
        timeout: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exists,
    Forall,
    All,
    Nonnested,
    Monotone,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Complete,
    Ij,
    Expfam,
}

fn load(path: &PathBuf) -> Result<Pmc> {
    let text = fs::read_to_string(path).map_err(|e| Error::Usage(format!("{}: {e}", path.display())))?;
    Pmc::parse(&text)
}

fn target(m: &Pmc, label: &str) -> Result<Vec<bool>> {
    let t = m.states_with(label);
    if !t.contains(&true) {
        return Err(Error::Usage(format!("no state carries label `{label}`")));
    }
    Ok(t)
}

fn point(m: &Pmc, eval: &Option<String>) -> Result<Option<Vec<Rational>>> {
    eval.as_ref()
        .map(|e| Valuation::parse(e)?.point(m.arena()))
        .transpose()
}

fn print_values(m: &Pmc, values: &[Option<RatFun>], at: &Option<Vec<Rational>>) -> Result<()> {
    for (s, v) in values.iter().enumerate() {
        let name = m.state_name(s);
        match (v, at) {
            (None, _) => println!("{name}: inf"),
            (Some(v), None) => println!("{name}: {}", v.simplify()),
            (Some(v), Some(p)) => println!("{name}: {} = {}", v.simplify(), v.eval(p)?),
        }
    }
    Ok(())
}

fn show_point(m: &Pmc, p: &pmcx_core::realdec::AlgebraicNumber) -> String {
    let name = m.arena().names().first().cloned().unwrap_or_else(|| "x".to_string());
    format!("{name} = {p}")
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::SolveReach {
            model,
            target: label,
            solver,
            eval,
            trace,
        } => {
            let m = load(&model)?;
            let t = target(&m, &label)?;
            let at = point(&m, &eval)?;
            let r = props::reach(&m, &t, solver.parse()?)?;
            let values: Vec<Option<RatFun>> = r.values.iter().cloned().map(Some).collect();
            print_values(&m, &values, &at)?;
            if trace {
                if let Some(sol) = &r.solution {
                    print!("{}", sol.trace);
                }
            }
            Ok(0)
        }
        Command::SolveExp {
            model,
            target: label,
            solver,
            eval,
        } => {
            let m = load(&model)?;
            let t = target(&m, &label)?;
            let at = point(&m, &eval)?;
            let r = props::expected_weight_all(&m, &t, solver.parse()?)?;
            print_values(&m, &r.values, &at)?;
            Ok(0)
        }
        Command::SolveMp {
            model,
            target: label,
            solver,
            eval,
        } => {
            let m = load(&model)?;
            let t = target(&m, &label)?;
            let at = point(&m, &eval)?;
            let r = props::mean_payoff(&m, &t, solver.parse()?)?;
            let values: Vec<Option<RatFun>> = r.values.iter().cloned().map(Some).collect();
            print_values(&m, &values, &at)?;
            Ok(0)
        }
        Command::Check {
            model,
            formula,
            mode,
            eval,
        } => {
            let m = load(&model)?;
            let f = Formula::parse(&formula)?;
            if let Some(p) = point(&m, &eval)? {
                let sat = pctl::check_concrete(&m.instantiate_at(&p)?, &f);
                let names: Vec<&str> = sat.iter().map(|&s| m.state_name(s)).collect();
                println!("sat: {{{}}}", names.join(", "));
                let yes = sat.contains(&m.init());
                println!("{}", if yes { "yes" } else { "no" });
                return Ok(if yes { 0 } else { 1 });
            }
            match mode {
                Mode::All => {
                    for pair in pctl::sat_all_univar(&m, &f)?.root_pairs() {
                        let names: Vec<&str> = pair.states.iter().map(|&s| m.state_name(s)).collect();
                        println!("{} : {{{}}}", pair.gamma, names.join(", "));
                    }
                    Ok(0)
                }
                Mode::Forall => {
                    let a = pctl::mc_forall_univar(&m, &f)?;
                    match (&a.point, a.yes) {
                        (_, true) => println!("yes"),
                        (Some(p), false) => println!("no, counterexample {}", show_point(&m, p)),
                        (None, false) => println!("no, no admissible valuation"),
                    }
                    Ok(if a.yes { 0 } else { 1 })
                }
                Mode::Exists | Mode::Nonnested | Mode::Monotone => {
                    let a = match mode {
                        Mode::Nonnested => pctl::mc_nonnested_univar(&m, &f)?,
                        Mode::Monotone => pctl::mc_monotone_univar(&m, &f)?,
                        _ => pctl::mc_exists_univar(&m, &f)?,
                    };
                    match &a.point {
                        Some(p) if a.yes => println!("yes, witness {}", show_point(&m, p)),
                        _ => println!("no"),
                    }
                    Ok(if a.yes { 0 } else { 1 })
                }
            }
        }
        Command::Gen {
            family,
            params,
            output,
        } => {
            let spec = match (family, params.as_slice()) {
                (Family::Complete, [n]) => GenSpec::Complete { n: *n },
                (Family::Ij, [n, k]) => GenSpec::Ij { n: *n, k: *k },
                (Family::Expfam, [k]) => GenSpec::Expfam { k: *k },
                _ => return Err(Error::Usage("complete N | ij N K | expfam K".to_string())),
            };
            let text = spec.generate()?.to_text();
            match output {
                Some(path) => fs::write(&path, text).map_err(|e| Error::Usage(format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Command::Bench {
            spec,
            solvers,
            timeout,
            seed,
            json,
        } => {
            let spec: GenSpec = spec.parse()?;
            let solvers = solvers
                .split(',')
                .map(|s| s.trim().parse::<SolverKind>())
                .collect::<Result<Vec<_>>>()?;
            if !(timeout > 0.0) {
                return Err(Error::Usage("timeout must be positive".to_string()));
            }
            let report = run_bench(spec, &solvers, Duration::from_secs_f64(timeout), seed)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                print!("{}", report.table());
            }
            Ok(if report.all_equal() { 0 } else { 3 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_internal() { 3 } else { 2 })
        }
    }
}
