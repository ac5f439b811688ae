use std::env;

use crate::error::{Error, Result};

/// Environment variable read by [`Caps::from_env`], e.g.
/// `MDEPTH_CAPS="lattice=50000,faces=1048576"`.
pub const CAPS_ENV: &str = "MDEPTH_CAPS";

/// Resource limits for the exponential parts of the workbench.
///
/// Exceeding a limit is reported as [`Error::Resource`] instead of running
/// unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Monomials in any intermediate generating set (powers, intersections).
    pub monomials: usize,
    /// Degrees in an lcm lattice.
    pub lattice: usize,
    /// Faces of a single simplicial complex.
    pub faces: usize,
    /// Candidate bases during set-covering vertex enumeration.
    pub bases: usize,
    /// Maximal cliques of a graph.
    pub cliques: usize,
    /// Largest graph for which every induced subgraph is inspected.
    pub induced_vertices: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            monomials: 200_000,
            lattice: 100_000,
            faces: 1 << 22,
            bases: 5_000_000,
            cliques: 100_000,
            induced_vertices: 12,
        }
    }
}

impl Caps {
    /// Defaults overridden by the `MDEPTH_CAPS` variable when it is set.
    pub fn from_env() -> Result<Self> {
        match env::var(CAPS_ENV) {
            Ok(spec) => Caps::default().with_overrides(&spec),
            Err(_) => Ok(Caps::default()),
        }
    }

    /// Apply a comma separated `key=value` list.
    pub fn with_overrides(mut self, spec: &str) -> Result<Self> {
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::precondition(format!("cap `{item}` is not key=value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::precondition(format!("cap `{item}` has a non-integer value")))?;
            match key.trim() {
                "monomials" => self.monomials = value,
                "lattice" => self.lattice = value,
                "faces" => self.faces = value,
                "bases" => self.bases = value,
                "cliques" => self.cliques = value,
                "induced" | "induced_vertices" => self.induced_vertices = value,
                other => return Err(Error::precondition(format!("unknown cap `{other}`"))),
            }
        }
        Ok(self)
    }

    pub(crate) fn check(what: &'static str, count: usize, cap: usize) -> Result<()> {
        if count > cap {
            Err(Error::Resource { what, cap })
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides_parse() {
        let caps = Caps::default().with_overrides("lattice=10, faces = 20").unwrap();
        assert_eq!(caps.lattice, 10);
        assert_eq!(caps.faces, 20);
        assert_eq!(caps.monomials, Caps::default().monomials);
    }

    #[test]
    fn bad_override_rejected() {
        assert!(Caps::default().with_overrides("lattice").is_err());
        assert!(Caps::default().with_overrides("bogus=1").is_err());
        assert!(Caps::default().with_overrides("faces=x").is_err());
    }
}
