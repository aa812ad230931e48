use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use super::{parse_rational, VarArena};
use crate::error::{Error, Result};

/// Assignment of exact rational values to parameter names.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Valuation(BTreeMap<String, BigRational>);

impl Valuation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: impl Into<String>, value: BigRational) -> Self {
        self.0.insert(name.into(), value);
        self
    }

    pub fn set(&mut self, name: impl Into<String>, value: BigRational) {
        self.0.insert(name.into(), value);
    }

    pub fn get(&self, name: &str) -> Option<&BigRational> {
        self.0.get(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &BigRational)> {
        self.0.iter()
    }

    /// Parse `x=1/3,y=0.25`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut v = Valuation::new();
        for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (name, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Usage(format!("expected name=value, got `{part}`")))?;
            let q = parse_rational(value)
                .ok_or_else(|| Error::Usage(format!("bad rational `{value}`")))?;
            v.set(name.trim(), q);
        }
        Ok(v)
    }

    /// Values in arena order; every arena variable must be assigned.
    pub fn point(&self, arena: &VarArena) -> Result<Vec<BigRational>> {
        arena
            .names()
            .iter()
            .map(|n| {
                self.0
                    .get(n)
                    .cloned()
                    .ok_or_else(|| Error::UnknownVariable(n.clone()))
            })
            .collect()
    }

    pub fn from_point(arena: &VarArena, point: &[BigRational]) -> Self {
        Valuation(
            arena
                .names()
                .iter()
                .cloned()
                .zip(point.iter().cloned())
                .collect(),
        )
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(","))
    }
}
