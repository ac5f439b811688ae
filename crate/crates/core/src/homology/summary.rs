use serde::Serialize;

use super::betti::{betti_table, lcm_lattice, BettiTable};
use super::complex::SimplicialComplex;
use super::Field;
use crate::caps::Caps;
use crate::error::Result;
use crate::ideal::{Monomial, MonomialIdeal};

/// Depth, regularity and the Cohen–Macaulay/Gorenstein status of `R/I`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologicalSummary {
    pub field: Field,
    pub num_vars: usize,
    pub depth: usize,
    pub pd: usize,
    pub reg: i64,
    pub krull_dim: usize,
    pub is_cohen_macaulay: bool,
    pub is_gorenstein: bool,
    /// `reg - depth`, reported only for Cohen–Macaulay quotients.
    pub a_invariant: Option<i64>,
    pub total_betti: Vec<usize>,
}

impl HomologicalSummary {
    pub(crate) fn from_table(table: &BettiTable, krull_dim: usize) -> Self {
        Self::from_parts(
            table.field,
            table.num_vars,
            table.pd(),
            table.reg(),
            krull_dim,
            table.totals(),
        )
    }

    pub(crate) fn from_parts(
        field: Field,
        num_vars: usize,
        pd: usize,
        reg: i64,
        krull_dim: usize,
        total_betti: Vec<usize>,
    ) -> Self {
        let depth = num_vars - pd;
        let cm = depth == krull_dim;
        HomologicalSummary {
            field,
            num_vars,
            depth,
            pd,
            reg,
            krull_dim,
            is_cohen_macaulay: cm,
            is_gorenstein: cm && total_betti.last() == Some(&1),
            a_invariant: cm.then(|| reg - depth as i64),
            total_betti,
        }
    }
}

/// Summary of `R/I` read off the multigraded Betti table of `I` itself.
pub fn homological_summary(
    ideal: &MonomialIdeal,
    field: Field,
    caps: &Caps,
) -> Result<HomologicalSummary> {
    let table = betti_table(ideal, field, caps)?;
    Ok(HomologicalSummary::from_table(&table, ideal.krull_dim()?))
}

/// `depth R/I = 1 + max{ i : K[Δ^i] is Cohen–Macaulay }` for a squarefree `I`
/// with Stanley–Reisner complex `Δ`.
pub fn skeleton_depth(ideal: &MonomialIdeal, field: Field, caps: &Caps) -> Result<usize> {
    ideal.require_squarefree("skeleton_depth")?;
    ideal.require_proper_nonzero("skeleton_depth")?;
    let delta = SimplicialComplex::stanley_reisner(ideal)?;
    let dim = delta.dim().expect("a proper ideal has a nonvoid complex");
    for i in (-1..=dim).rev() {
        if delta.skeleton(i).is_cohen_macaulay(field, caps)? {
            return Ok((1 + i) as usize);
        }
    }
    unreachable!("the (-1)-skeleton {{∅}} is Cohen–Macaulay")
}

/// Both sides of `reg(R/I) + 1 = pd(R/I^∨)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TeraiCheck {
    pub reg_plus_one: i64,
    pub dual_pd: usize,
    pub holds: bool,
}

pub fn terai_check(ideal: &MonomialIdeal, field: Field, caps: &Caps) -> Result<TeraiCheck> {
    ideal.require_squarefree("terai_check")?;
    ideal.require_proper_nonzero("terai_check")?;
    let reg_plus_one = betti_table(ideal, field, caps)?.reg() + 1;
    let dual_pd = betti_table(&ideal.alexander_dual()?, field, caps)?.pd();
    Ok(TeraiCheck {
        reg_plus_one,
        dual_pd,
        holds: reg_plus_one == dual_pd as i64,
    })
}

/// Result of the search for a monomial `w ∉ I` with `m·w ⊆ I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessOutcome {
    /// `w` certifies that `m` is associated to `I`, so `depth R/I = 0`.
    Found(Monomial),
    /// `(I : m) = I`, so `depth R/I > 0`.
    NoneExists,
    /// The search hit a resource cap.
    Inconclusive { cap: usize },
}

/// Look for a socle witness `w ∉ I` with `x_j·w ∈ I` for every `j`.
///
/// The first route computes `(I : m) = ∩_j (I : x_j)` directly.  When that
/// intersection outgrows the monomial cap, the search falls back to the lcm
/// lattice: any witness satisfies `w + 1 = lcm(g_1, .., g_n)` for generators
/// `g_j` dividing `x_j·w`, so only lattice points of full support need
/// checking.
pub fn depth_zero_witness(ideal: &MonomialIdeal, caps: &Caps) -> Result<WitnessOutcome> {
    ideal.require_proper_nonzero("depth_zero_witness")?;
    match witness_by_colon(ideal, caps) {
        Err(e) if e.is_resource() => {}
        other => return other,
    }
    match lcm_lattice(ideal, caps) {
        Ok(lattice) => Ok(witness_in_lattice(ideal, &lattice)),
        Err(crate::Error::Resource { cap, .. }) => Ok(WitnessOutcome::Inconclusive { cap }),
        Err(e) => Err(e),
    }
}

fn witness_by_colon(ideal: &MonomialIdeal, caps: &Caps) -> Result<WitnessOutcome> {
    let ctx = ideal.ctx();
    let mut acc = MonomialIdeal::unit(ctx);
    for j in 0..ctx.len() {
        acc = acc.intersect_with(&ideal.colon(&Monomial::var(ctx, j))?, caps)?;
    }
    Ok(acc
        .gens()
        .iter()
        .find(|g| !ideal.contains_exps(g.exps()))
        .cloned()
        .map_or(WitnessOutcome::NoneExists, WitnessOutcome::Found))
}

fn witness_in_lattice(ideal: &MonomialIdeal, lattice: &[Vec<u32>]) -> WitnessOutcome {
    let mut candidates: Vec<Vec<u32>> = lattice
        .iter()
        .filter(|a| a.iter().all(|&e| e > 0))
        .map(|a| a.iter().map(|&e| e - 1).collect())
        .filter(|w: &Vec<u32>| is_socle(ideal, w))
        .collect();
    candidates.sort_by(|a, b| crate::ideal::graded_cmp(a, b));
    match candidates.into_iter().next() {
        Some(w) => WitnessOutcome::Found(
            Monomial::new(ideal.ctx(), w).expect("lattice points fit the context"),
        ),
        None => WitnessOutcome::NoneExists,
    }
}

fn is_socle(ideal: &MonomialIdeal, w: &[u32]) -> bool {
    if ideal.contains_exps(w) {
        return false;
    }
    let mut up = w.to_vec();
    (0..w.len()).all(|j| {
        up[j] += 1;
        let inside = ideal.contains_exps(&up);
        up[j] -= 1;
        inside
    })
}

/// `depth R/I`, using the socle witness first and the Betti table otherwise.
pub fn depth(ideal: &MonomialIdeal, field: Field, caps: &Caps) -> Result<usize> {
    if let WitnessOutcome::Found(_) = depth_zero_witness(ideal, caps)? {
        return Ok(0);
    }
    Ok(betti_table(ideal, field, caps)?.depth())
}
