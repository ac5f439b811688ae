use rayon::prelude::*;
use serde::Serialize;

use super::Clutter;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::homology::{betti_table, depth_zero_witness, Field, WitnessOutcome};
use crate::ideal::{Monomial, MonomialIdeal, VarSet};

/// Bounded comparison of ordinary and symbolic powers.  `holds_up_to_k`
/// means `I^k = I^(k)` was verified for every `k <= max_k`, nothing more.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MfmcReport {
    pub max_k: u32,
    pub holds_up_to_k: bool,
    pub fails_at_k: Option<u32>,
    /// A generator of `I^(k)` outside `I^k` at the first failure.
    pub witness: Option<Monomial>,
}

pub fn mfmc_bounded(clutter: &Clutter, max_k: u32, caps: &Caps) -> Result<MfmcReport> {
    if max_k < 2 {
        return Err(Error::precondition("mfmc_bounded: K must be at least 2"));
    }
    if clutter.edges().is_empty() {
        return Err(Error::precondition("mfmc_bounded: the edge ideal is zero"));
    }
    let ideal = clutter.edge_ideal();
    for k in 2..=max_k {
        let ordinary = ideal.power_with(k, caps)?;
        let symbolic = ideal.symbolic_power_with(k, caps)?;
        if let Some(w) = symbolic
            .gens()
            .iter()
            .find(|g| !ordinary.contains_exps(g.exps()))
        {
            return Ok(MfmcReport {
                max_k,
                holds_up_to_k: false,
                fails_at_k: Some(k),
                witness: Some(w.clone()),
            });
        }
    }
    Ok(MfmcReport {
        max_k,
        holds_up_to_k: true,
        fails_at_k: None,
        witness: None,
    })
}

/// Checks `(I^{k+1} : x_e) = I^k` for `k = 1..=max_k`.
pub fn colon_power_identity(clutter: &Clutter, edge: VarSet, max_k: u32, caps: &Caps) -> Result<bool> {
    if max_k < 1 {
        return Err(Error::precondition("colon_power_identity: K must be at least 1"));
    }
    if !clutter.edges().contains(&edge) {
        return Err(Error::precondition("colon_power_identity: e is not an edge"));
    }
    let ideal = clutter.edge_ideal();
    let xe = Monomial::from_set(ideal.ctx(), edge);
    let mut current = ideal.clone();
    for _ in 1..=max_k {
        let next = current.product_with(&ideal, caps)?;
        if next.colon(&xe)? != current {
            return Ok(false);
        }
        current = next;
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PowerMode {
    Ordinary,
    Symbolic,
}

/// Depth and regularity of `R/I^k` (or `R/I^(k)`).  A missing value means
/// a resource cap was hit; `note` says which.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceEntry {
    pub k: u32,
    pub depth: Option<usize>,
    pub reg: Option<i64>,
    /// A monomial `w ∉ I^k` with `m·w ⊆ I^k`, when one was found.
    pub witness: Option<String>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceReport {
    pub mode: PowerMode,
    pub field: Field,
    pub entries: Vec<SequenceEntry>,
    /// Judged on the computed values only.
    pub depth_non_increasing: bool,
    pub reg_non_decreasing: bool,
}

impl SequenceReport {
    pub fn depths(&self) -> Vec<Option<usize>> {
        self.entries.iter().map(|e| e.depth).collect()
    }

    pub fn regs(&self) -> Vec<Option<i64>> {
        self.entries.iter().map(|e| e.reg).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.entries.iter().all(|e| e.depth.is_some() && e.reg.is_some())
    }
}

pub fn monotone_sequences(
    ideal: &MonomialIdeal,
    max_k: u32,
    mode: PowerMode,
    field: Field,
    caps: &Caps,
) -> Result<SequenceReport> {
    if max_k < 2 {
        return Err(Error::precondition("monotone_sequences: K must be at least 2"));
    }
    ideal.require_proper_nonzero("monotone_sequences")?;
    if mode == PowerMode::Symbolic {
        ideal.minimal_primes()?;
    }
    let entries = (1..=max_k)
        .into_par_iter()
        .map(|k| sequence_entry(ideal, k, mode, field, caps))
        .collect::<Result<Vec<_>>>()?;

    let depths: Vec<usize> = entries.iter().filter_map(|e| e.depth).collect();
    let regs: Vec<i64> = entries.iter().filter_map(|e| e.reg).collect();
    Ok(SequenceReport {
        mode,
        field,
        depth_non_increasing: depths.windows(2).all(|w| w[0] >= w[1]),
        reg_non_decreasing: regs.windows(2).all(|w| w[0] <= w[1]),
        entries,
    })
}

fn sequence_entry(
    ideal: &MonomialIdeal,
    k: u32,
    mode: PowerMode,
    field: Field,
    caps: &Caps,
) -> Result<SequenceEntry> {
    let mut entry = SequenceEntry {
        k,
        depth: None,
        reg: None,
        witness: None,
        note: None,
    };
    let power = match mode {
        PowerMode::Ordinary => ideal.power_with(k, caps),
        PowerMode::Symbolic => ideal.symbolic_power_with(k, caps),
    };
    let power = match power {
        Ok(p) => p,
        Err(e) if e.is_resource() => {
            entry.note = Some(e.to_string());
            return Ok(entry);
        }
        Err(e) => return Err(e),
    };
    match depth_zero_witness(&power, caps)? {
        WitnessOutcome::Found(w) => {
            entry.depth = Some(0);
            entry.witness = Some(w.to_string());
        }
        WitnessOutcome::NoneExists | WitnessOutcome::Inconclusive { .. } => {}
    }
    match betti_table(&power, field, caps) {
        Ok(table) => {
            entry.depth = Some(table.depth());
            entry.reg = Some(table.reg());
        }
        Err(e) if e.is_resource() => entry.note = Some(e.to_string()),
        Err(e) => return Err(e),
    }
    Ok(entry)
}
