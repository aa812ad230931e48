use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

const CYCLIC: &str = "\
@params x
@states s0 s1 g f
@init s0
@edges
s0 g : x
s0 s1 : 1 - x
s1 f : x
s1 s0 : 1 - x
@constraints
x > 0
x < 1
@labels
g : g
";

fn model(name: &str, text: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

fn pmcx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pmcx")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn solve_reach_with_eval() {
    let m = model("reach.pmc", CYCLIC);
    let o = pmcx(&["solve-reach", m.to_str().unwrap(), "--target", "g", "--eval", "x=1/3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("s0: (-1)/(x - 2) = 3/5"), "{}", stdout(&o));
}

#[test]
fn solvers_agree_on_output() {
    let m = model("solvers.pmc", CYCLIC);
    let outs: Vec<String> = ["bareiss", "bareiss-scc", "naive-ff", "rf-gcd"]
        .iter()
        .map(|s| {
            let o = pmcx(&["solve-reach", m.to_str().unwrap(), "--target", "g", "--solver", s, "--eval", "x=1/5"]);
            assert_eq!(o.status.code(), Some(0));
            stdout(&o).lines().map(|l| l.rsplit(" = ").next().unwrap().to_string()).collect::<Vec<_>>().join(",")
        })
        .collect();
    assert!(outs.windows(2).all(|w| w[0] == w[1]), "{outs:?}");
}

#[test]
fn check_modes_and_exit_codes() {
    let m = model("check.pmc", CYCLIC);
    let p = m.to_str().unwrap();
    let yes = pmcx(&["check", p, "--formula", "P>=2/3 [F \"g\"]"]);
    assert_eq!(yes.status.code(), Some(0));
    assert!(stdout(&yes).starts_with("yes, witness x = "));
    let no = pmcx(&["check", p, "--formula", "P>=2/3 [F \"g\"]", "--mode", "forall"]);
    assert_eq!(no.status.code(), Some(1));
    assert!(stdout(&no).starts_with("no, counterexample"));
    let all = pmcx(&["check", p, "--formula", "P>=2/3 [F \"g\"]", "--mode", "all"]);
    assert_eq!(all.status.code(), Some(0));
    assert_eq!(stdout(&all).lines().count(), 2, "{}", stdout(&all));
    let concrete = pmcx(&["check", p, "--formula", "P>=2/3 [F \"g\"]", "--eval", "x=1/4"]);
    assert_eq!(concrete.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    let m = model("usage.pmc", CYCLIC);
    let p = m.to_str().unwrap();
    let bad_formula = pmcx(&["check", p, "--formula", "P>=2 [F \"g\"]"]);
    assert_eq!(bad_formula.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad_formula.stderr).contains("1:"));
    assert_eq!(pmcx(&["solve-reach", p, "--target", "nowhere"]).status.code(), Some(2));
    assert_eq!(pmcx(&["solve-reach", "/nonexistent.pmc", "--target", "g"]).status.code(), Some(2));
    assert_eq!(pmcx(&["gen", "ij", "2", "1"]).status.code(), Some(2));
    assert_eq!(pmcx(&["solve-reach", p]).status.code(), Some(2));
}

#[test]
fn expectation_infinite_and_mean_payoff() {
    let text = "@params x\n@states a b\n@init a\n@edges\na b : x\na a : 1 - x\nb a : 1\n@constraints\nx > 0\nx < 1\n@weights\nb : 1\n@labels\na : a\nb : b\n";
    let m = model("mp.pmc", text);
    let o = pmcx(&["solve-mp", m.to_str().unwrap(), "--target", "b", "--eval", "x=1/2"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("= 1/3"), "{}", stdout(&o));
    let m = model("exp.pmc", CYCLIC);
    let o = pmcx(&["solve-exp", m.to_str().unwrap(), "--target", "g"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("s0: inf"));
}

#[test]
fn gen_then_solve() {
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("expfam3.pmc");
    let o = pmcx(&["gen", "expfam", "3", "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = pmcx(&["solve-reach", out.to_str().unwrap(), "--target", "goal", "--eval", "x1=0,x2=0,x3=0"]);
    assert!(stdout(&o).lines().next().unwrap().ends_with("= 1/8"), "{}", stdout(&o));
}

#[test]
fn bench_json() {
    let o = pmcx(&["bench", "complete:3", "--solvers", "bareiss,rf-gcd", "--timeout", "120", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["params"], 12);
    assert_eq!(v["cross_checks"][0]["verdict"], "equal");
}
