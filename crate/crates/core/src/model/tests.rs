use super::*;
use crate::poly::Valuation;
use crate::realdec::SemiSet1D;
use crate::{rat, Error, Poly, RatFun};

const SIMPLE: &str = "\
@params x
@states s0 g f
@init s0
@edges
s0 g : x
s0 f : 1 - x
";

fn val(x: crate::Rational) -> Valuation {
    Valuation::new().with("x", x)
}

#[test]
fn parse_simple() {
    let m = Pmc::parse(SIMPLE).unwrap();
    assert_eq!(m.num_states(), 3);
    assert_eq!(m.num_edges(), 2);
    assert_eq!(m.init(), 0);
    assert!(m.is_trap(1) && m.is_trap(2));
    assert!(m.labels(1).contains("g"));
}

#[test]
fn parse_rational_coefficients() {
    let m = Pmc::parse("@params x\n@states a b\n@edges\na b : 1/2 + x^2\n").unwrap();
    assert_eq!(m.transition(0, 1), Poly::parse(m.arena(), "x^2 + 1/2").unwrap());
}

#[test]
fn parse_errors() {
    let err = Pmc::parse("@states s0 g\n@edges\ns0 s9 : 1\n").unwrap_err();
    assert!(err.to_string().contains("s9"), "{err}");
    assert!(matches!(err, Error::Parse { line: 3, col: 4, .. }));
    let err = Pmc::parse("@states a b\n@edges\na b : 1/2\na b : 1/2\n").unwrap_err();
    assert_eq!(err, Error::DuplicateEdge("a".into(), "b".into()));
    let err = Pmc::parse("@params x\n@states a b\n@edges\na b : x +* 2\n").unwrap_err();
    assert!(matches!(err, Error::Parse { line: 4, .. }), "{err}");
    let err = Pmc::parse("@states a b\n@edges\na b : y\n").unwrap_err();
    assert_eq!(err, Error::UnknownVariable("y".into()));
    assert!(Pmc::parse("@states a\n").is_err());
}

#[test]
fn round_trip() {
    let text = "\
# comment
@weights
s0 : 2*x
@labels
g : goal target
s0 : start
@params x y
@states s0 s1 g f
@init s1
@edges
s0 s1 : 1/2 + x   # trailing comment
s0 g : 1/2 - x
s1 f : y
s1 s0 : 1 - y
@constraints
x + y <= 1
x > 0
";
    let m = Pmc::parse(text).unwrap();
    let printed = m.to_text();
    let again = Pmc::parse(&printed).unwrap();
    assert_eq!(m, again);
    assert_eq!(again.init(), 1);
    assert_eq!(again.states_with("goal"), vec![false, false, true, false]);
    assert!(again.labels(3).is_empty());
    assert_eq!(again.constraints().len(), 2);
}

#[test]
fn admissibility() {
    let m = Pmc::parse(SIMPLE).unwrap();
    assert!(m.check_admissible(&val(rat(1, 2))).unwrap().is_empty());
    let v = m.check_admissible(&val(rat(1, 1))).unwrap();
    assert_eq!(v.len(), 1);
    assert!(matches!(&v[0], Violation::EdgeNotPositive { to, .. } if to == "f"));
    let m2 = Pmc::parse(&format!("{SIMPLE}@constraints\nx >= 2/3\n")).unwrap();
    let v = m2.check_admissible(&val(rat(1, 2))).unwrap();
    assert!(matches!(&v[..], [Violation::Constraint { .. }]));
}

#[test]
fn chi_and_admissible_set() {
    let m = Pmc::parse(SIMPLE).unwrap();
    // Row sum x + (1 - x) is syntactically 1 and dropped.
    assert_eq!(m.admissible_chi().len(), 2);
    assert_eq!(m.admissible_set().unwrap(), SemiSet1D::open_rat(rat(0, 1), rat(1, 1)));
    let m2 = Pmc::parse(&format!("{SIMPLE}@constraints\nx >= 1/2\n")).unwrap();
    assert_eq!(m2.admissible_set().unwrap().to_string(), "{1/2} ∪ (1/2, 1)");
    let m3 = Pmc::parse("@states a b\n@edges\na b : 1/2\na a : 1/2\n").unwrap();
    let chi = m3.admissible_chi();
    assert_eq!(chi.len(), 2);
    assert!(chi.iter().all(|c| c.rel == Rel::Gt));
    assert!(m3.admissible_set().unwrap().is_full());
}

#[test]
fn graph_examples() {
    let chain = Pmc::parse("@states a b c\n@edges\na b : 1\nb c : 1\n").unwrap();
    let gi = chain.graph_info();
    assert_eq!(gi.sccs, vec![vec![0], vec![1], vec![2]]);
    assert_eq!(gi.bottom, vec![false, false, true]);
    assert_eq!(gi.traps, vec![2]);

    let cyc = Pmc::parse("@states s0 s1 g\n@edges\ns0 s1 : 1/2\ns0 g : 1/2\ns1 s0 : 1\n").unwrap();
    let gi = cyc.graph_info();
    assert_eq!(gi.sccs, vec![vec![0, 1], vec![2]]);
    assert_eq!(gi.bottom, vec![false, true]);

    let mut text = String::from("@states a b c d\n@edges\n");
    for s in ["a", "b", "c", "d"] {
        for t in ["a", "b", "c", "d"] {
            text.push_str(&format!("{s} {t} : 1/4\n"));
        }
    }
    let gi = Pmc::parse(&text).unwrap().graph_info();
    assert_eq!(gi.sccs.len(), 1);
    assert_eq!(gi.bottom, vec![true]);
}

#[test]
fn traps() {
    let m = Pmc::parse("@states s0 g h\n@edges\ns0 g : 1\ng h : 1\n").unwrap();
    assert_eq!(m.make_traps(&[false; 3]), m);
    let t = m.make_traps(&[false, true, false]);
    assert!(t.is_trap(1) && !t.is_trap(0));
    let all = m.make_traps(&[true; 3]);
    assert_eq!(all.num_edges(), 0);
}

#[test]
fn polynomialize_examples() {
    let m = Pmc::parse("@params x\n@states s t f\n@edges\ns t : 1/2\ns f : 1/2\n").unwrap();
    let p = |s: &str| Poly::parse(m.arena(), s).unwrap();
    let rf = RatFun::new(p("x"), p("1 + x")).unwrap();
    let half = RatFun::new(p("1"), p("2")).unwrap();
    let out = m.polynomialize(&[(0, 1, rf.clone()), (0, 2, half)]).unwrap();
    assert_eq!(out.arena().names(), &["x".to_string(), "u_s_t".to_string()]);
    let q = |s: &str| Poly::parse(out.arena(), s).unwrap();
    assert_eq!(out.transition(0, 1), q("x*u_s_t"));
    assert_eq!(out.transition(0, 2), q("1/2"));
    assert_eq!(out.constraints().len(), 1);
    assert_eq!(out.constraints()[0].to_string(), "x*u_s_t + u_s_t = 1");

    let two = m.polynomialize(&[(0, 1, rf.clone()), (0, 2, rf)]).unwrap();
    assert_eq!(two.num_params(), 3);
    assert_eq!(two.constraints().len(), 2);
}

#[test]
fn imc_examples() {
    let iv = Interval::parse("[1/3, 1/2]").unwrap();
    let m = imc_to_pmc(&["s", "t"], "s", &[("s", "t", iv)]).unwrap();
    assert_eq!(m.arena().names(), &["x_s_t".to_string()]);
    let cs: Vec<String> = m.constraints().iter().map(|c| c.to_string()).collect();
    assert_eq!(cs, vec!["x_s_t >= 1/3", "x_s_t <= 1/2"]);

    let m = imc_to_pmc(&["s", "t"], "s", &[("s", "t", Interval::parse("[1/2, 1/2]").unwrap())]).unwrap();
    assert_eq!(m.constraints()[0].to_string(), "x_s_t = 1/2");

    let m = imc_to_pmc(&["s", "t"], "s", &[("s", "t", Interval::parse("(0, 1]").unwrap())]).unwrap();
    assert_eq!(m.constraints()[0].rel, Rel::Gt);

    let bad = Interval::parse("[2/3, 1/3]").unwrap();
    assert!(matches!(imc_to_pmc(&["s", "t"], "s", &[("s", "t", bad)]), Err(Error::InvalidInterval(_))));
}

#[test]
fn instantiate_examples() {
    let m = Pmc::parse(SIMPLE).unwrap();
    let mc = m.instantiate(&val(rat(1, 3))).unwrap();
    assert_eq!(mc.prob(0, 1), rat(1, 3));
    assert_eq!(mc.prob(0, 2), rat(2, 3));
    assert!(matches!(m.instantiate(&val(rat(0, 1))), Err(Error::Inadmissible(_))));
    let c = Pmc::parse("@states a b\n@edges\na b : 1/3\na a : 2/3\n").unwrap();
    let mc = c.instantiate(&Valuation::new()).unwrap();
    assert_eq!(mc.prob(0, 0), rat(2, 3));
}
