use super::ast::{Ast, PathAst};
use super::concrete::{check_concrete, check_concrete_all};
use super::dag::{Formula, Node};
use super::symbolic::{outcome_region, require_univariate, sat_all_univar, Quantities};
use crate::error::{Error, Result};
use crate::linsolve::SolverKind;
use crate::model::Pmc;
use crate::realdec::{monotone_info, AlgebraicNumber, Rel, SemiSet1D};
use crate::Rational;

/// Answer to a yes/no question over the admissible set. `point` is a
/// witness for an existential yes or a counterexample for a universal no.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Answer {
    pub yes: bool,
    pub point: Option<AlgebraicNumber>,
}

impl Answer {
    pub fn rational_point(&self) -> Option<&Rational> {
        self.point.as_ref().and_then(AlgebraicNumber::as_rational)
    }
}

/// Confirms on the instantiated chain that the initial state satisfies `f`.
fn verify(m: &Pmc, f: &Formula, point: &AlgebraicNumber) -> Result<()> {
    let Some(q) = point.as_rational() else {
        return Ok(());
    };
    let mc = m.instantiate_at(&vec![q.clone(); m.num_params()])?;
    if !check_concrete(&mc, f).contains(&m.init()) {
        return Err(Error::Invariant(format!("witness {q} fails on the instantiated chain for {f}")));
    }
    Ok(())
}

/// Is there an admissible valuation under which the initial state satisfies `f`?
pub fn mc_exists_univar(m: &Pmc, f: &Formula) -> Result<Answer> {
    let table = sat_all_univar(m, f)?;
    let root = f.root();
    let init = m.init();
    let cells = &table.decomposition().cells;
    let good = |open: bool, rational: bool| {
        cells.iter().find(|c| c.sat[root][init] && c.is_open() == open && c.sample.is_some() == rational)
    };
    let Some(cell) = good(true, true).or_else(|| good(false, true)).or_else(|| good(false, false)) else {
        return Ok(Answer { yes: false, point: None });
    };
    let point = cell.point();
    verify(m, f, &point)?;
    Ok(Answer {
        yes: true,
        point: Some(point),
    })
}

/// Does the initial state satisfy `f` under every admissible valuation?
/// Decided as the negation of the existential question for `¬f`.
pub fn mc_forall_univar(m: &Pmc, f: &Formula) -> Result<Answer> {
    let r = mc_exists_univar(m, &f.negate())?;
    Ok(Answer {
        yes: !r.yes,
        point: r.point,
    })
}

/// Existential question for a formula without nested quantitative
/// operators: one constraint per operator at the initial state, combined as
/// sets of parameter values.
pub fn mc_nonnested_univar(m: &Pmc, f: &Formula) -> Result<Answer> {
    if f.is_nested() {
        return Err(Error::NestedFormula);
    }
    require_univariate(m)?;
    let domain = m.admissible_set()?;
    let init = m.init();
    let mut q = Quantities::new(m, SolverKind::BareissScc);
    // Parameter-independent state sets of the operands, and the region where
    // the initial state satisfies each node.
    let mut sets: Vec<Option<Vec<bool>>> = Vec::with_capacity(f.len());
    let mut regions: Vec<SemiSet1D> = Vec::with_capacity(f.len());
    let fixed = |v: &[bool]| if v[init] { domain.clone() } else { SemiSet1D::empty() };
    for node in f.nodes() {
        let (set, region) = match node {
            Node::True => {
                let v = vec![true; m.num_states()];
                let r = fixed(&v);
                (Some(v), r)
            }
            Node::Atom(a) => {
                let v = m.states_with(a);
                let r = fixed(&v);
                (Some(v), r)
            }
            Node::Not(a) => (
                sets[*a].as_ref().map(|v| v.iter().map(|&b| !b).collect()),
                domain.diff(&regions[*a]),
            ),
            Node::And(a, b) => (
                match (&sets[*a], &sets[*b]) {
                    (Some(x), Some(y)) => Some(x.iter().zip(y).map(|(&p, &q)| p && q).collect()),
                    _ => None,
                },
                regions[*a].intersect(&regions[*b]),
            ),
            quantitative => {
                let operands: Vec<Vec<bool>> = sets
                    .iter()
                    .map(|s| s.clone().unwrap_or_default())
                    .collect();
                if quantitative.children().iter().any(|&c| sets[c].is_none()) {
                    return Err(Error::NestedFormula);
                }
                let outcomes = q.outcomes(quantitative, &operands)?;
                (None, outcome_region(&outcomes[init], &domain)?)
            }
        };
        sets.push(set);
        regions.push(region);
    }
    let Some(point) = regions[f.root()].sample() else {
        return Ok(Answer { yes: false, point: None });
    };
    verify(m, f, &point)?;
    Ok(Answer {
        yes: true,
        point: Some(point),
    })
}

/// First subformula outside the monotone fragment, given the states every
/// incoming path of which uses only non-decreasing edges.
pub fn fragment_violation(m: &Pmc, ast: &Ast, s_plus: &[bool]) -> Option<String> {
    let path_violation = |p: &PathAst| {
        p.operands()
            .into_iter()
            .find_map(|a| fragment_violation(m, a, s_plus))
    };
    match ast {
        Ast::True => None,
        Ast::Atom(a) => {
            let states = m.states_with(a);
            (0..m.num_states())
                .any(|s| states[s] && !s_plus[s])
                .then(|| ast.to_string())
        }
        Ast::And(a, b) | Ast::Or(a, b) => {
            fragment_violation(m, a, s_plus).or_else(|| fragment_violation(m, b, s_plus))
        }
        Ast::Prob {
            rel: Rel::Ge | Rel::Gt,
            path,
            ..
        } => path_violation(path),
        _ => Some(ast.to_string()),
    }
}

/// Existential question for a formula of the monotone fragment. Decided by
/// the general engine; the satisfaction sets are additionally checked to
/// grow with the parameter.
pub fn mc_monotone_univar(m: &Pmc, f: &Formula) -> Result<Answer> {
    require_univariate(m)?;
    let domain = m.admissible_set()?;
    let info = monotone_info(m, &domain)?;
    let s_plus: Vec<bool> = (0..m.num_states()).map(|s| info.s_plus.contains(&s)).collect();
    if let Some(node) = fragment_violation(m, f.ast(), &s_plus) {
        return Err(Error::OutsideFragment(node));
    }
    let table = sat_all_univar(m, f)?;
    let root = f.root();
    for pair in table.decomposition().cells.windows(2) {
        let (lo, hi) = (&pair[0].sat[root], &pair[1].sat[root]);
        if lo.iter().zip(hi).any(|(&a, &b)| a && !b) {
            return Err(Error::Invariant(format!("satisfaction set of {f} shrinks as the parameter grows")));
        }
    }
    mc_exists_univar(m, f)
}

/// Satisfaction vectors of all nodes at one rational valuation.
pub fn check_at(m: &Pmc, f: &Formula, point: &[Rational]) -> Result<Vec<Vec<bool>>> {
    Ok(check_concrete_all(&m.instantiate_at(point)?, f))
}
