use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// The ordered variables of a polynomial ring `K[x_1, .., x_n]`.
#[derive(Clone, PartialEq, Eq)]
pub struct VarContext {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

/// Shared handle to a [`VarContext`].
pub type Ctx = Arc<VarContext>;

impl VarContext {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Result<Ctx> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::precondition("empty variable name"));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::precondition(format!("duplicate variable `{name}`")));
            }
        }
        Ok(Arc::new(VarContext { names, index }))
    }

    /// Context with variables `x1, .., xn`.
    pub fn numbered(prefix: &str, n: usize) -> Ctx {
        VarContext::new((1..=n).map(|i| format!("{prefix}{i}"))).expect("distinct names")
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

    /// A new context with `extra` appended after the current variables.
    pub fn extended<S: Into<String>, I: IntoIterator<Item = S>>(&self, extra: I) -> Result<Ctx> {
        VarContext::new(
            self.names
                .iter()
                .cloned()
                .chain(extra.into_iter().map(Into::into)),
        )
    }
}

impl fmt::Debug for VarContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.names).finish()
    }
}

pub(crate) fn same_ctx(a: &Ctx, b: &Ctx) -> bool {
    Arc::ptr_eq(a, b) || a.names == b.names
}

pub(crate) fn ensure_same(a: &Ctx, b: &Ctx) -> Result<()> {
    if same_ctx(a, b) {
        Ok(())
    } else {
        Err(Error::ContextMismatch)
    }
}
