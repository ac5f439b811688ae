use std::fmt;

use super::context::Ctx;
use super::varset::{minimal_sets, VarSet};
use super::MonomialIdeal;
use crate::caps::Caps;
use crate::error::Result;

/// A monomial prime `(x_i : i ∈ vars)`.
#[derive(Clone, PartialEq, Eq)]
pub struct PrimeSet {
    ctx: Ctx,
    vars: VarSet,
}

impl PrimeSet {
    pub(crate) fn from_parts(ctx: &Ctx, vars: VarSet) -> Self {
        PrimeSet {
            ctx: ctx.clone(),
            vars,
        }
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn ideal(&self) -> MonomialIdeal {
        MonomialIdeal::generated_by_vars(&self.ctx, self.vars)
    }

    /// `p^k`, materialized as every degree `k` monomial in the prime's variables.
    pub fn power(&self, k: u32, caps: &Caps) -> Result<MonomialIdeal> {
        let vars: Vec<usize> = self.vars.iter().collect();
        if vars.is_empty() {
            return Ok(MonomialIdeal::zero(&self.ctx));
        }
        let count = multiset_count(vars.len(), k as usize);
        Caps::check("monomials in a prime power", count, caps.monomials)?;
        let mut out = Vec::with_capacity(count);
        let mut exps = vec![0u32; self.ctx.len()];
        fill_degree(&vars, 0, k, &mut exps, &mut out);
        Ok(MonomialIdeal::from_exps(&self.ctx, out))
    }
}

fn fill_degree(vars: &[usize], at: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if at + 1 == vars.len() {
        exps[vars[at]] = left;
        out.push(exps.clone());
        exps[vars[at]] = 0;
        return;
    }
    for e in (0..=left).rev() {
        exps[vars[at]] = e;
        fill_degree(vars, at + 1, left - e, exps, out);
    }
    exps[vars[at]] = 0;
}

/// `C(s + k - 1, k)`, saturating.
fn multiset_count(s: usize, k: usize) -> usize {
    if s == 0 {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (s + i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

impl std::hash::Hash for PrimeSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.vars.hash(state);
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (n, i) in self.vars.iter().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            f.write_str(self.ctx.name(i))?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Minimal transversals (minimal vertex covers) of a hypergraph.
///
/// Berge's incremental product: edges are added one at a time and the cover
/// family is pruned back to an antichain after each step. An empty edge admits
/// no transversal; an empty edge list has the single transversal `∅`.
/// Output is sorted by size, then lexicographically.
pub fn minimal_transversals(edges: &[VarSet]) -> Vec<VarSet> {
    let mut edges = minimal_sets(edges.to_vec());
    edges.sort_by_key(|e| e.len());
    let mut covers = vec![VarSet::EMPTY];
    for &edge in &edges {
        let mut next = Vec::with_capacity(covers.len() * edge.len().max(1));
        for &c in &covers {
            if c.meets(edge) {
                next.push(c);
            } else {
                next.extend(edge.iter().map(|v| c.with(v)));
            }
        }
        covers = minimal_sets(next);
        if covers.is_empty() {
            break;
        }
    }
    covers
}
