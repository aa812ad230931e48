//! Line-oriented model files:
//!
//! ```text
//! @params x
//! @states s0 g f
//! @init s0
//! @edges
//! s0 g : x
//! s0 f : 1 - x
//! @constraints
//! x >= 1/10
//! @labels
//! g : goal
//! @weights
//! s0 : 2*x
//! ```
//!
//! `#` starts a comment. Sections may come in any order; `@edges` is
//! required. Without `@labels` every state is labelled by its own name.

use std::fmt;

use super::{Constraint, Pmc};
use crate::error::{Error, Result};
use crate::poly::VarArena;
use crate::realdec::Rel;
use crate::Poly;

#[derive(Default)]
struct Sections<'a> {
    params: Option<(usize, Vec<&'a str>)>,
    states: Option<(usize, Vec<&'a str>)>,
    init: Option<(usize, usize, &'a str)>,
    edges: Option<Vec<Line<'a>>>,
    constraints: Vec<Line<'a>>,
    labels: Option<Vec<Line<'a>>>,
    weights: Vec<Line<'a>>,
}

/// A body line: 1-based line number, byte offset of `text` in the raw line.
struct Line<'a> {
    no: usize,
    offset: usize,
    text: &'a str,
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(a, _)| a)
}

fn col_of(raw: &str, part: &str) -> usize {
    part.as_ptr() as usize - raw.as_ptr() as usize + 1
}

fn with_position(e: Error, line: usize, offset: usize) -> Error {
    match e {
        Error::Parse { col, msg, .. } => Error::parse(line, offset + col, msg),
        other => other,
    }
}

fn parse_poly(arena: &std::sync::Arc<VarArena>, text: &str, line: usize, col: usize) -> Result<Poly> {
    let trimmed = text.trim_start();
    let lead = text.len() - trimmed.len();
    Poly::parse(arena, trimmed.trim_end()).map_err(|e| with_position(e, line, col - 1 + lead))
}

/// Splits `lhs rel rhs` at the first relation symbol.
fn split_relation(text: &str) -> Option<(&str, Rel, &str)> {
    let i = text.find(['<', '>', '='])?;
    let rest = &text[i..];
    let (rel, len) = if rest.starts_with("<=") {
        (Rel::Le, 2)
    } else if rest.starts_with(">=") {
        (Rel::Ge, 2)
    } else if rest.starts_with('<') {
        (Rel::Lt, 1)
    } else if rest.starts_with('>') {
        (Rel::Gt, 1)
    } else {
        (Rel::Eq, 1)
    };
    Some((&text[..i], rel, &text[i + len..]))
}

impl Pmc {
    pub fn parse(text: &str) -> Result<Pmc> {
        let mut sec = Sections::default();
        let mut current: Option<&str> = None;
        for (i, raw) in text.lines().enumerate() {
            let no = i + 1;
            let body = strip_comment(raw);
            let trimmed = body.trim();
            if trimmed.is_empty() {
                continue;
            }
            if let Some(header) = trimmed.strip_prefix('@') {
                let mut words = header.split_whitespace();
                let name = words.next().unwrap_or("");
                let args: Vec<&str> = words.collect();
                let dup = || Error::parse(no, col_of(raw, trimmed), format!("section @{name} given twice"));
                match name {
                    "params" => {
                        if sec.params.replace((no, args)).is_some() {
                            return Err(dup());
                        }
                    }
                    "states" => {
                        if sec.states.replace((no, args)).is_some() {
                            return Err(dup());
                        }
                    }
                    "init" => {
                        let [s] = args.as_slice() else {
                            return Err(Error::parse(no, col_of(raw, trimmed), "@init takes one state"));
                        };
                        if sec.init.replace((no, col_of(raw, s), s)).is_some() {
                            return Err(dup());
                        }
                    }
                    "edges" | "constraints" | "labels" | "weights" => {
                        if !args.is_empty() {
                            return Err(Error::parse(
                                no,
                                col_of(raw, args[0]),
                                format!("@{name} takes no arguments"),
                            ));
                        }
                        match name {
                            "edges" if sec.edges.is_some() => return Err(dup()),
                            "labels" if sec.labels.is_some() => return Err(dup()),
                            "edges" => sec.edges = Some(Vec::new()),
                            "labels" => sec.labels = Some(Vec::new()),
                            _ => {}
                        }
                    }
                    _ => {
                        return Err(Error::parse(no, col_of(raw, trimmed), format!("unknown section @{name}")));
                    }
                }
                current = Some(name).filter(|n| matches!(*n, "edges" | "constraints" | "labels" | "weights"));
                continue;
            }
            let line = Line {
                no,
                offset: col_of(raw, body) - 1,
                text: body,
            };
            match current {
                Some("edges") => sec.edges.as_mut().expect("opened").push(line),
                Some("constraints") => sec.constraints.push(line),
                Some("labels") => sec.labels.as_mut().expect("opened").push(line),
                Some("weights") => sec.weights.push(line),
                _ => {
                    return Err(Error::parse(no, col_of(raw, trimmed), "content outside a section"));
                }
            }
        }
        build(sec)
    }

    /// Model file text; parses back to an equal model.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

fn build(sec: Sections<'_>) -> Result<Pmc> {
    let params = sec.params.map(|(_, p)| p).unwrap_or_default();
    let arena = VarArena::new(params.iter().copied())?;
    let (_, states) = sec
        .states
        .ok_or_else(|| Error::InvalidModel("missing @states section".to_string()))?;
    let mut m = Pmc::new(&arena, states.iter().copied())?;
    let state = |name: &str, line: usize, col: usize| {
        m.state_index(name)
            .map_err(|_| Error::parse(line, col, format!("unknown state `{name}`")))
    };
    let init = match sec.init {
        Some((no, col, s)) => state(s, no, col)?,
        None => 0,
    };
    let edges = sec
        .edges
        .ok_or_else(|| Error::InvalidModel("missing @edges section".to_string()))?;

    let mut parsed_edges = Vec::new();
    for l in &edges {
        let (head, poly) = l
            .text
            .split_once(':')
            .ok_or_else(|| Error::parse(l.no, l.offset + 1, "expected `from to : polynomial`"))?;
        let names: Vec<&str> = head.split_whitespace().collect();
        let [from, to] = names.as_slice() else {
            return Err(Error::parse(l.no, l.offset + 1, "expected `from to : polynomial`"));
        };
        let col = |part: &str| l.offset + col_of(l.text, part);
        let s = state(from, l.no, col(from))?;
        let t = state(to, l.no, col(to))?;
        let p = parse_poly(&arena, poly, l.no, col(poly))?;
        parsed_edges.push((l.no, s, t, p));
    }
    let mut constraints = Vec::new();
    for l in &sec.constraints {
        let (lhs, rel, rhs) = split_relation(l.text)
            .ok_or_else(|| Error::parse(l.no, l.offset + 1, "expected a relation (<, <=, >, >=, =)"))?;
        let col = |part: &str| l.offset + col_of(l.text, part);
        constraints.push(Constraint::new(
            parse_poly(&arena, lhs, l.no, col(lhs))?,
            rel,
            parse_poly(&arena, rhs, l.no, col(rhs))?,
        ));
    }
    let mut labels = Vec::new();
    for l in sec.labels.iter().flatten() {
        let (name, rest) = l
            .text
            .split_once(':')
            .ok_or_else(|| Error::parse(l.no, l.offset + 1, "expected `state : label ...`"))?;
        let name = name.trim();
        let s = state(name, l.no, l.offset + col_of(l.text, name))?;
        labels.push((s, rest.split_whitespace().map(str::to_string).collect::<Vec<_>>()));
    }
    let mut weights = Vec::new();
    for l in &sec.weights {
        let (name, poly) = l
            .text
            .split_once(':')
            .ok_or_else(|| Error::parse(l.no, l.offset + 1, "expected `state : polynomial`"))?;
        let name = name.trim();
        let s = state(name, l.no, l.offset + col_of(l.text, name))?;
        let w = parse_poly(&arena, poly, l.no, l.offset + col_of(l.text, poly))?;
        weights.push((s, w));
    }

    m.set_init(init);
    for (no, s, t, p) in parsed_edges {
        m.add_edge(s, t, p).map_err(|e| match e {
            Error::InvalidModel(msg) => Error::parse(no, 1, msg),
            other => other,
        })?;
    }
    for c in constraints {
        m.add_constraint(c)?;
    }
    if sec.labels.is_some() {
        m.clear_labels();
    }
    for (s, ls) in labels {
        for l in ls {
            m.add_label(s, l);
        }
    }
    for (s, w) in weights {
        m.set_weight(s, w)?;
    }
    Ok(m)
}

impl fmt::Display for Pmc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.arena().is_empty() {
            writeln!(f, "@params {}", self.arena().names().join(" "))?;
        }
        writeln!(f, "@states {}", self.states().join(" "))?;
        writeln!(f, "@init {}", self.state_name(self.init()))?;
        writeln!(f, "@edges")?;
        for (s, t, p) in self.edges() {
            writeln!(f, "{} {} : {}", self.state_name(s), self.state_name(t), p)?;
        }
        if !self.constraints().is_empty() {
            writeln!(f, "@constraints")?;
            for c in self.constraints() {
                writeln!(f, "{c}")?;
            }
        }
        if self.has_explicit_labels() {
            writeln!(f, "@labels")?;
            for s in 0..self.num_states() {
                let ls = self.labels(s);
                if !ls.is_empty() {
                    let ls: Vec<&str> = ls.iter().map(String::as_str).collect();
                    writeln!(f, "{} : {}", self.state_name(s), ls.join(" "))?;
                }
            }
        }
        let weighted: Vec<usize> = (0..self.num_states()).filter(|&s| !self.weight(s).is_zero()).collect();
        if !weighted.is_empty() {
            writeln!(f, "@weights")?;
            for s in weighted {
                writeln!(f, "{} : {}", self.state_name(s), self.weight(s))?;
            }
        }
        Ok(())
    }
}
