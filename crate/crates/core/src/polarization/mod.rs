//! Full polarization, depolarization and the degree-lowering operators.

use std::collections::BTreeMap;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::WeightedDigraph;
use crate::homology::{betti_table, Field, HomologicalSummary};
use crate::ideal::{Ctx, Monomial, MonomialIdeal};

/// A squarefree ideal in an extended context together with the bookkeeping
/// needed to map it back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarizationResult {
    /// The polarized ideal, over the original variables followed by `new_vars`.
    pub ideal: MonomialIdeal,
    /// Names of the added variables, grouped by original variable, levels ascending.
    pub new_vars: Vec<String>,
    /// Extended-context index of each new variable mapped to
    /// `(original variable, level)` with level `>= 2`.
    pub origin_map: BTreeMap<usize, (usize, u32)>,
    /// The exponent bounds `γ_i` the polarization was taken against.
    pub gammas: Vec<u32>,
    base: Ctx,
    offsets: Vec<usize>,
}

/// Polarizes `J` against its own exponent bounds.
pub fn polarize_full(ideal: &MonomialIdeal) -> Result<PolarizationResult> {
    if ideal.is_zero() {
        return Err(Error::precondition("polarize: the zero ideal has no polarization"));
    }
    polarize_relative(ideal, &ideal.lcm_exponents())
}

/// Polarizes every generator of `ideal` against the bounds `gammas`, which
/// must dominate each generator's exponents.  Polarizing `I ⊆ L` against the
/// bounds of `L` puts both in the same ring.
pub fn polarize_relative(ideal: &MonomialIdeal, gammas: &[u32]) -> Result<PolarizationResult> {
    let base = ideal.ctx().clone();
    let n = base.len();
    if gammas.len() != n {
        return Err(Error::precondition(format!(
            "polarize: expected {n} exponent bounds, got {}",
            gammas.len()
        )));
    }
    if let Some(g) = ideal
        .gens()
        .iter()
        .find(|g| g.exps().iter().zip(gammas).any(|(e, b)| e > b))
    {
        return Err(Error::precondition(format!(
            "polarize: generator {g} exceeds the exponent bounds"
        )));
    }

    let mut new_vars = Vec::new();
    let mut origin_map = BTreeMap::new();
    let mut offsets = Vec::with_capacity(n);
    for (i, &gamma) in gammas.iter().enumerate() {
        offsets.push(n + new_vars.len());
        for level in 2..=gamma {
            origin_map.insert(n + new_vars.len(), (i, level));
            new_vars.push(format!("{},{}", base.name(i), level));
        }
    }
    let ctx = base.extended(new_vars.iter().cloned())?;
    let total = ctx.len();

    let gens = ideal
        .gens()
        .iter()
        .map(|g| {
            let mut out = vec![0u32; total];
            for (i, &c) in g.exps().iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let gamma = gammas[i];
                if gamma == 1 {
                    out[i] = 1;
                    continue;
                }
                let top = if c < gamma { c + 1 } else { gamma };
                for level in 2..=top {
                    out[offsets[i] + (level as usize - 2)] = 1;
                }
                if c == gamma {
                    out[i] = 1;
                }
            }
            Monomial::new(&ctx, out)
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(PolarizationResult {
        ideal: MonomialIdeal::new(&ctx, gens)?,
        new_vars,
        origin_map,
        gammas: gammas.to_vec(),
        base,
        offsets,
    })
}

impl PolarizationResult {
    /// `|X_J|`.
    pub fn num_new_vars(&self) -> usize {
        self.new_vars.len()
    }

    /// The context the polarized ideal was taken from.
    pub fn base_ctx(&self) -> &Ctx {
        &self.base
    }

    /// Substitutes every `x_{i,j}` by `x_i`, recovering the original ideal.
    pub fn depolarize(&self) -> Result<MonomialIdeal> {
        let n = self.base.len();
        let gens = self
            .ideal
            .gens()
            .iter()
            .map(|g| {
                let mut e = g.exps()[..n].to_vec();
                for (&idx, &(i, _)) in &self.origin_map {
                    e[i] += g.exps()[idx];
                }
                Monomial::new(&self.base, e)
            })
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(&self.base, gens)
    }

    /// The polarization of a single monomial of the original ring.
    pub fn polarize_monomial(&self, m: &Monomial) -> Result<Monomial> {
        let single = MonomialIdeal::new(&self.base, vec![m.clone()])?;
        let p = polarize_relative(&single, &self.gammas)?;
        Monomial::new(self.ideal.ctx(), p.ideal.gens()[0].exps().to_vec())
    }

    /// Renders a monomial of the extended ring in subscript notation, e.g.
    /// `x_{1,2}x_{1,3}x_1x_{2,2}x_2`: per original variable the new levels
    /// ascending, then the variable itself.
    pub fn paper_notation(&self, m: &Monomial) -> String {
        let exps = m.exps();
        let mut out = String::new();
        for i in 0..self.base.len() {
            let (stem, index) = split_name(self.base.name(i));
            for level in 2..=self.gammas[i] {
                let idx = self.offsets[i] + (level as usize - 2);
                if exps.get(idx).copied().unwrap_or(0) > 0 {
                    match index {
                        Some(d) => out.push_str(&format!("{stem}_{{{d},{level}}}")),
                        None => out.push_str(&format!("{stem}_{{{level}}}")),
                    }
                }
            }
            if exps[i] > 0 {
                out.push_str(&base_notation(stem, index));
                if exps[i] > 1 {
                    out.push_str(&format!("^{{{}}}", exps[i]));
                }
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }

    /// `X_J` in set notation, one block per original variable that received
    /// new variables.
    pub fn paper_new_vars(&self) -> String {
        let mut blocks = Vec::new();
        for i in 0..self.base.len() {
            if self.gammas[i] < 2 {
                continue;
            }
            let (stem, index) = split_name(self.base.name(i));
            let members: Vec<String> = (2..=self.gammas[i])
                .map(|level| match index {
                    Some(d) => format!("{stem}_{{{d},{level}}}"),
                    None => format!("{stem}_{{{level}}}"),
                })
                .collect();
            blocks.push(format!("\\{{{}\\}}", members.join(",")));
        }
        if blocks.is_empty() {
            return "\\emptyset".to_string();
        }
        blocks.join("\\cup")
    }
}

fn split_name(name: &str) -> (&str, Option<&str>) {
    let stem_len = name.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    if stem_len == 0 || stem_len == name.len() {
        (name, None)
    } else {
        (&name[..stem_len], Some(&name[stem_len..]))
    }
}

fn base_notation(stem: &str, index: Option<&str>) -> String {
    match index {
        Some(d) if d.len() == 1 => format!("{stem}_{d}"),
        Some(d) => format!("{stem}_{{{d}}}"),
        None => stem.to_string(),
    }
}

/// Summary of `R/J` computed through `J^pol`: depth and pd are corrected by
/// `|X_J|`, regularity and total Betti numbers are read off unchanged.
pub fn summary_via_polarization(
    ideal: &MonomialIdeal,
    field: Field,
    caps: &Caps,
) -> Result<HomologicalSummary> {
    ideal.require_proper_nonzero("summary_via_polarization")?;
    let pol = polarize_full(ideal)?;
    let table = betti_table(&pol.ideal, field, caps)?;
    let pd = table.pd();
    Ok(HomologicalSummary::from_parts(
        field,
        ideal.num_vars(),
        pd,
        table.reg(),
        ideal.krull_dim()?,
        table.totals(),
    ))
}

/// Which clause of the lowering identity governs a [`LoweringData`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum LoweringClause {
    /// `p >= 1` and `q - p >= 2`: depth is unchanged, reg drops by at most one.
    A,
    /// `q - p = 1`, or no generator below the top degree: depth can only grow.
    B,
    /// `p = 0` and `q >= 2`: the top power can be collapsed in one step.
    C,
}

/// The data of lowering the top `x_var`-degree of an ideal by one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoweringData {
    pub var: usize,
    /// Largest `x_var`-degree over the generators.
    pub q: u32,
    /// Largest `x_var`-degree below `q`; `None` when every generator has degree `q`.
    pub p: Option<u32>,
    /// Generators of degree `q` in `x_var`.
    pub top: Vec<Monomial>,
    /// The remaining generators.
    pub rest: Vec<Monomial>,
    /// `({g / x_var : g ∈ top} ∪ rest)`, minimalized.
    pub lowered: MonomialIdeal,
    pub clause: LoweringClause,
}

fn check_var(ideal: &MonomialIdeal, var: usize, op: &str) -> Result<()> {
    if var >= ideal.num_vars() {
        return Err(Error::precondition(format!(
            "{op}: variable index {var} out of range"
        )));
    }
    Ok(())
}

pub fn lower_top_degree(ideal: &MonomialIdeal, var: usize) -> Result<LoweringData> {
    check_var(ideal, var, "lower_top_degree")?;
    let q = ideal.gens().iter().map(|g| g.deg(var)).max().unwrap_or(0);
    if q == 0 {
        return Err(Error::precondition(format!(
            "lower_top_degree: {} does not occur in any generator",
            ideal.ctx().name(var)
        )));
    }
    let (top, rest): (Vec<Monomial>, Vec<Monomial>) =
        ideal.gens().iter().cloned().partition(|g| g.deg(var) == q);
    let p = rest.iter().map(|g| g.deg(var)).max();
    let x = Monomial::var(ideal.ctx(), var);
    let gens: Vec<Monomial> = top
        .iter()
        .map(|g| g.div(&x).expect("top generators contain the variable"))
        .chain(rest.iter().cloned())
        .collect();
    let lowered = MonomialIdeal::new(ideal.ctx(), gens)?;
    let clause = match p {
        None => LoweringClause::B,
        Some(p) if q - p == 1 => LoweringClause::B,
        Some(0) => LoweringClause::C,
        Some(_) => LoweringClause::A,
    };
    Ok(LoweringData {
        var,
        q,
        p,
        top,
        rest,
        lowered,
        clause,
    })
}

/// Replaces `x_var^q` by `x_var` in every generator; every generator must
/// have `x_var`-degree `0` or `q` with `q >= 2`.
pub fn collapse_top_power(ideal: &MonomialIdeal, var: usize) -> Result<MonomialIdeal> {
    check_var(ideal, var, "collapse_top_power")?;
    let q = ideal.gens().iter().map(|g| g.deg(var)).max().unwrap_or(0);
    if q < 2 || ideal.gens().iter().any(|g| g.deg(var) != 0 && g.deg(var) != q) {
        return Err(Error::precondition(format!(
            "collapse_top_power: {} must appear only with exponent 0 or a common q >= 2; \
             use lower_top_degree instead",
            ideal.ctx().name(var)
        )));
    }
    let gens = ideal
        .gens()
        .iter()
        .map(|g| {
            let mut e = g.exps().to_vec();
            if e[var] == q {
                e[var] = 1;
            }
            Monomial::new(ideal.ctx(), e)
        })
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(ideal.ctx(), gens)
}

/// Lowers or collapses the top degree at each variable in turn until the
/// ideal is squarefree.  The returned chain starts at `ideal` and ends at
/// its radical.
pub fn radical_chain(ideal: &MonomialIdeal) -> Result<Vec<MonomialIdeal>> {
    let mut chain = vec![ideal.clone()];
    for var in 0..ideal.num_vars() {
        loop {
            let current = chain.last().expect("chain is never empty");
            let q = current.gens().iter().map(|g| g.deg(var)).max().unwrap_or(0);
            if q < 2 {
                break;
            }
            let step = lower_top_degree(current, var)?;
            let next = if step.clause == LoweringClause::C {
                collapse_top_power(current, var)?
            } else {
                step.lowered
            };
            chain.push(next);
        }
    }
    Ok(chain)
}

/// Applies `x_var ↦ x_var^d` to every generator.
pub fn stretch_variable(ideal: &MonomialIdeal, var: usize, d: u32) -> Result<MonomialIdeal> {
    check_var(ideal, var, "stretch_variable")?;
    if d == 0 {
        return Err(Error::precondition("stretch_variable: d must be at least 1"));
    }
    let gens = ideal
        .gens()
        .iter()
        .map(|g| {
            let mut e = g.exps().to_vec();
            e[var] = e[var].checked_mul(d).ok_or(Error::Overflow)?;
            Monomial::new(ideal.ctx(), e)
        })
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(ideal.ctx(), gens)
}

/// `I(D) = (x_i x_j^{d_j} : (x_i, x_j) ∈ E(D))`.
pub fn weighted_digraph_ideal(digraph: &WeightedDigraph) -> MonomialIdeal {
    let ctx = digraph.ctx();
    let raw = digraph
        .arcs()
        .iter()
        .map(|&(i, j)| {
            let mut e = vec![0u32; ctx.len()];
            e[i] += 1;
            e[j] += digraph.weight(j);
            e
        })
        .collect();
    MonomialIdeal::from_exps(ctx, raw)
}

/// The same digraph with every weight `>= 2` replaced by `2`.
pub fn weight_reduce(digraph: &WeightedDigraph) -> WeightedDigraph {
    WeightedDigraph::new(
        digraph.ctx(),
        digraph.arcs().to_vec(),
        digraph.weights().iter().map(|&d| d.min(2)).collect(),
    )
    .expect("reducing weights keeps a valid digraph")
}
