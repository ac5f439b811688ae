use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use super::complex::SimplicialComplex;
use super::Field;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::ideal::{divides, graded_cmp, lcm_exps, MonomialIdeal, VarSet, MAX_SET_VARS};

/// Multigraded Betti numbers of `R/I`.
///
/// `entries[(i, a)] = β_{i,a}(R/I)`; only nonzero values are stored and
/// `β_{0,0} = 1` is always present.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub field: Field,
    pub num_vars: usize,
    #[serde(serialize_with = "serialize_entries")]
    pub entries: BTreeMap<(usize, Vec<u32>), usize>,
}

fn serialize_entries<S: serde::Serializer>(
    entries: &BTreeMap<(usize, Vec<u32>), usize>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Entry<'a> {
        i: usize,
        degree: &'a [u32],
        value: usize,
    }
    s.collect_seq(entries.iter().map(|((i, a), v)| Entry {
        i: *i,
        degree: a,
        value: *v,
    }))
}

impl BettiTable {
    /// Projective dimension of `R/I`.
    pub fn pd(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// `n - pd` (Auslander–Buchsbaum).
    pub fn depth(&self) -> usize {
        self.num_vars - self.pd()
    }

    /// Castelnuovo–Mumford regularity, `max(|a| - i)`.
    pub fn reg(&self) -> i64 {
        self.entries
            .keys()
            .map(|(i, a)| a.iter().map(|&e| e as i64).sum::<i64>() - *i as i64)
            .max()
            .unwrap_or(0)
    }

    /// Regularity of the ideal itself, `reg(R/I) + 1`.
    pub fn ideal_reg(&self) -> i64 {
        self.reg() + 1
    }

    /// `β_i = Σ_a β_{i,a}`.
    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((j, _), _)| *j == i)
            .map(|(_, v)| v)
            .sum()
    }

    /// Total Betti numbers `β_0, .., β_pd`.
    pub fn totals(&self) -> Vec<usize> {
        (0..=self.pd()).map(|i| self.total(i)).collect()
    }

    /// Standard-graded `β_{i,j}` with `j = |a|`.
    pub fn graded(&self) -> BTreeMap<(usize, u64), usize> {
        let mut out = BTreeMap::new();
        for ((i, a), v) in &self.entries {
            let j = a.iter().map(|&e| e as u64).sum();
            *out.entry((*i, j)).or_insert(0) += v;
        }
        out
    }
}

/// All lcms of nonempty subsets of `G(I)`, in graded order.
pub fn lcm_lattice(ideal: &MonomialIdeal, caps: &Caps) -> Result<Vec<Vec<u32>>> {
    if ideal.is_zero() {
        return Err(Error::precondition("lcm lattice of the zero ideal"));
    }
    let gens: Vec<&[u32]> = ideal.gens().iter().map(|g| g.exps()).collect();
    let mut seen: HashSet<Vec<u32>> = gens.iter().map(|g| g.to_vec()).collect();
    let mut frontier: Vec<Vec<u32>> = seen.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for g in &gens {
                if divides(g, a) {
                    continue;
                }
                let l = lcm_exps(a, g);
                if !seen.contains(&l) {
                    seen.insert(l.clone());
                    next.push(l);
                    if seen.len() > caps.lattice {
                        return Err(Error::Resource {
                            what: "degrees in the lcm lattice",
                            cap: caps.lattice,
                        });
                    }
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Vec<u32>> = seen.into_iter().collect();
    out.sort_by(|a, b| graded_cmp(a, b));
    Ok(out)
}

/// Upper Koszul simplicial complex `K^a(I) = { σ ⊆ supp a : x^(a-σ) ∈ I }`.
///
/// Its facets are the maximal sets `{ j : g_j < a_j }` over generators `g`
/// dividing `x^a`.
pub fn upper_koszul(ideal: &MonomialIdeal, a: &[u32]) -> Result<SimplicialComplex> {
    let n = ideal.num_vars();
    if n > MAX_SET_VARS {
        return Err(Error::precondition(format!(
            "Betti computations support at most {MAX_SET_VARS} variables"
        )));
    }
    let facets = ideal
        .gens()
        .iter()
        .filter(|g| divides(g.exps(), a))
        .map(|g| {
            VarSet::from_indices((0..n).filter(|&j| g.deg(j) < a[j]))
        })
        .collect();
    Ok(SimplicialComplex::from_facets(n, facets))
}

/// Multigraded Betti table of `R/I` from upper Koszul complexes over the lcm
/// lattice: `β_{i,a}(R/I) = dim H̃_{i-2}(K^a(I))` for `i ≥ 1`.
pub fn betti_table(ideal: &MonomialIdeal, field: Field, caps: &Caps) -> Result<BettiTable> {
    ideal.require_proper_nonzero("betti_table")?;
    let lattice = lcm_lattice(ideal, caps)?;
    let per_degree: Vec<Vec<((usize, Vec<u32>), usize)>> = lattice
        .par_iter()
        .map(|a| -> Result<Vec<((usize, Vec<u32>), usize)>> {
            let complex = upper_koszul(ideal, a)?;
            let h = complex.reduced_homology(field, caps)?;
            Ok(h.iter()
                .enumerate()
                .filter(|(_, &dim)| dim > 0)
                // h[0] is H̃_{-1}, which feeds β_1
                .map(|(k, &dim)| ((k + 1, a.clone()), dim))
                .collect())
        })
        .collect::<Result<_>>()?;
    let mut entries = BTreeMap::new();
    entries.insert((0, vec![0; ideal.num_vars()]), 1);
    entries.extend(per_degree.into_iter().flatten());
    Ok(BettiTable {
        field,
        num_vars: ideal.num_vars(),
        entries,
    })
}
