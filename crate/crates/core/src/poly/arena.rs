use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered set of variable names. Position in the list is the variable's index
/// in every exponent vector built over this arena.
#[derive(Clone)]
pub struct VarArena {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl VarArena {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut arena = VarArena {
            names: Vec::new(),
            index: HashMap::new(),
        };
        for name in names {
            arena.push(name.into())?;
        }
        Ok(Arc::new(arena))
    }

    pub fn empty() -> Arc<Self> {
        Arc::new(VarArena {
            names: Vec::new(),
            index: HashMap::new(),
        })
    }

    fn push(&mut self, name: String) -> Result<usize> {
        if self.index.contains_key(&name) {
            return Err(Error::DuplicateVariable(name));
        }
        let i = self.names.len();
        self.index.insert(name.clone(), i);
        self.names.push(name);
        Ok(i)
    }

    /// New arena with `extra` appended after the existing variables.
    pub fn extended<I, S>(&self, extra: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut arena = self.clone();
        for name in extra {
            arena.push(name.into())?;
        }
        Ok(Arc::new(arena))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn same(a: &Arc<Self>, b: &Arc<Self>) -> bool {
        Arc::ptr_eq(a, b) || a.names == b.names
    }
}

impl PartialEq for VarArena {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for VarArena {}

impl fmt::Debug for VarArena {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names.iter()).finish()
    }
}
