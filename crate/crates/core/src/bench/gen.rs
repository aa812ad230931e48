//! Benchmark model families. Every generated model labels its target states
//! `goal` and has the initial state first.

use std::fmt;
use std::str::FromStr;

use num_traits::One;
use rand::Rng;

use crate::error::{Error, Result};
use crate::model::{Constraint, Pmc};
use crate::poly::{Polynomial, VarArena};
use crate::realdec::Rel;
use crate::{rat, Poly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenSpec {
    /// `n` fully connected transient states plus goal and fail sinks.
    Complete { n: usize },
    /// Token ring with `n` positions and `k` initial tokens.
    Ij { n: usize, k: usize },
    /// Chain of `k` parametric steps toward the goal.
    Expfam { k: usize },
}

impl GenSpec {
    pub fn validate(self) -> Result<Self> {
        let ok = match self {
            GenSpec::Complete { n } => n >= 2,
            GenSpec::Ij { n, k } => (3..=20).contains(&n) && (1..=n).contains(&k),
            GenSpec::Expfam { k } => k >= 1,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::Usage(format!("parameters out of range for {self}")))
        }
    }

    pub fn generate(self) -> Result<Pmc> {
        match self.validate()? {
            GenSpec::Complete { n } => gen_complete(n),
            GenSpec::Ij { n, k } => gen_ij(n, k),
            GenSpec::Expfam { k } => gen_expfam(k),
        }
    }

    /// A random admissible valuation of the generated model, in arena order.
    pub fn sample_admissible<R: Rng>(self, rng: &mut R) -> Vec<Rational> {
        match self {
            GenSpec::Complete { n } => {
                let mut point = Vec::with_capacity(n * (n + 1));
                for _ in 0..n {
                    let raw: Vec<Rational> = (0..=n).map(|_| rat(rng.gen_range(1..=20), 1)).collect();
                    let total: Rational = raw.iter().sum();
                    point.extend(raw.into_iter().map(|r| r / &total));
                }
                point
            }
            GenSpec::Ij { n, .. } => (0..n).map(|_| rat(rng.gen_range(1..100), 100)).collect(),
            GenSpec::Expfam { k } => (0..k).map(|_| rat(rng.gen_range(-99..100), 100)).collect(),
        }
    }
}

impl fmt::Display for GenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenSpec::Complete { n } => write!(f, "complete:{n}"),
            GenSpec::Ij { n, k } => write!(f, "ij:{n}:{k}"),
            GenSpec::Expfam { k } => write!(f, "expfam:{k}"),
        }
    }
}

impl FromStr for GenSpec {
    type Err = Error;

    /// `complete:N`, `ij:N:K` (or `ij:N,K`), `expfam:K`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Usage(format!("bad generator spec `{s}`"));
        let mut parts = s.split([':', ',']);
        let family = parts.next().ok_or_else(bad)?;
        let nums: Vec<usize> = parts
            .map(|p| p.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let spec = match (family, nums.as_slice()) {
            ("complete", [n]) => GenSpec::Complete { n: *n },
            ("ij", [n, k]) => GenSpec::Ij { n: *n, k: *k },
            ("expfam", [k]) => GenSpec::Expfam { k: *k },
            _ => return Err(bad()),
        };
        spec.validate()
    }
}

fn var(arena: &std::sync::Arc<VarArena>, name: &str) -> Poly {
    Polynomial::var(arena, arena.index_of(name).expect("declared variable"))
}

/// Complete graph over `n` transient states, each also linked to `goal` and
/// `fail`, with one parameter `p_i_j` per transition and row sums constrained
/// to one: `n·(n+1)` parameters.
pub fn gen_complete(n: usize) -> Result<Pmc> {
    GenSpec::Complete { n }.validate()?;
    let mut states: Vec<String> = (0..n).map(|i| format!("t{i}")).collect();
    states.extend(["goal".to_string(), "fail".to_string()]);
    let targets = |i: usize| (0..n + 2).filter(move |&j| j != i);
    let names: Vec<String> = (0..n)
        .flat_map(|i| targets(i).map(move |j| format!("p_{i}_{j}")))
        .collect();
    let arena = VarArena::new(names.iter().map(String::as_str))?;
    let mut m = Pmc::new(&arena, states)?;
    for i in 0..n {
        let mut sum = Polynomial::zero(&arena);
        for j in targets(i) {
            let p = var(&arena, &format!("p_{i}_{j}"));
            sum = &sum + &p;
            m.add_edge(i, j, p)?;
        }
        m.add_constraint(Constraint::new(sum, Rel::Eq, Polynomial::one(&arena)))?;
    }
    label_goal(&mut m, |s| s == n);
    Ok(m)
}

/// Token ring with `n` positions and `k` tokens initially on positions
/// `0..k`. A uniformly chosen token at position `i` moves left with
/// probability `x_i` and right with `1 - x_i`; tokens meeting merge.
/// Configurations with a single token are labelled `goal`.
pub fn gen_ij(n: usize, k: usize) -> Result<Pmc> {
    GenSpec::Ij { n, k }.validate()?;
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let arena = VarArena::new(names.iter().map(String::as_str))?;
    let start: u64 = (1u64 << k) - 1;
    let mut configs = vec![start];
    let mut edges: Vec<Vec<(u64, Poly)>> = Vec::new();
    let mut next = 0;
    while next < configs.len() {
        let c = configs[next];
        next += 1;
        let tokens: Vec<usize> = (0..n).filter(|&i| c >> i & 1 == 1).collect();
        let share = rat(1, tokens.len() as i64);
        let mut out: Vec<(u64, Poly)> = Vec::new();
        for &i in &tokens {
            let x = var(&arena, &names[i]);
            let left = (i + n - 1) % n;
            let right = (i + 1) % n;
            let stay = Polynomial::one(&arena);
            for (dest, p) in [(left, x.clone()), (right, &stay - &x)] {
                let d = (c & !(1u64 << i)) | (1u64 << dest);
                let p = p.scale(&share);
                match out.iter_mut().find(|(t, _)| *t == d) {
                    Some((_, q)) => *q = &*q + &p,
                    None => out.push((d, p)),
                }
                if !configs.contains(&d) {
                    configs.push(d);
                }
            }
        }
        edges.push(out);
    }
    let name = |c: u64| -> String {
        let bits: String = (0..n).map(|i| if c >> i & 1 == 1 { '1' } else { '0' }).collect();
        format!("c{bits}")
    };
    let mut m = Pmc::new(&arena, configs.iter().map(|&c| name(c)))?;
    for (s, out) in edges.into_iter().enumerate() {
        for (d, p) in out {
            let t = configs.iter().position(|&c| c == d).expect("visited");
            m.add_edge(s, t, p)?;
        }
    }
    label_goal(&mut m, |s| configs[s].count_ones() == 1);
    Ok(m)
}

/// Chain `s0 → s1 → … → sk → goal` where step `i` succeeds with
/// `(1 + x_i)/2` and otherwise falls to `fail`; each `x_i` ranges over
/// `(-1, 1)`. The goal probability from `s0` is `∏(1 + x_i) / 2^k`.
pub fn gen_expfam(k: usize) -> Result<Pmc> {
    GenSpec::Expfam { k }.validate()?;
    let names: Vec<String> = (1..=k).map(|i| format!("x{i}")).collect();
    let arena = VarArena::new(names.iter().map(String::as_str))?;
    let mut states: Vec<String> = (0..=k).map(|i| format!("s{i}")).collect();
    states.extend(["goal".to_string(), "fail".to_string()]);
    let mut m = Pmc::new(&arena, states)?;
    let (goal, fail) = (k + 1, k + 2);
    let half = rat(1, 2);
    let one = Polynomial::one(&arena);
    for i in 1..=k {
        let x = var(&arena, &names[i - 1]);
        m.add_edge(i - 1, i, (&one + &x).scale(&half))?;
        m.add_edge(i - 1, fail, (&one - &x).scale(&half))?;
        m.add_constraint(Constraint::new(x.clone(), Rel::Gt, -Polynomial::one(&arena)))?;
        m.add_constraint(Constraint::new(x, Rel::Lt, Polynomial::one(&arena)))?;
    }
    m.add_edge(k, goal, Polynomial::constant(&arena, Rational::one()))?;
    label_goal(&mut m, |s| s == goal);
    Ok(m)
}

fn label_goal(m: &mut Pmc, is_goal: impl Fn(usize) -> bool) {
    for s in 0..m.num_states() {
        let name = m.state_name(s).to_string();
        m.add_label(s, name);
        if is_goal(s) {
            m.add_label(s, "goal");
        }
    }
}
