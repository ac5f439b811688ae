//! Clutters, their edge and cover ideals, and the polyhedral and
//! power-sequence criteria attached to them.

mod powers;
mod scp;

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{minimal_transversals, Ctx, Monomial, MonomialIdeal, VarSet};

pub use powers::{
    colon_power_identity, mfmc_bounded, monotone_sequences, MfmcReport, PowerMode, SequenceEntry,
    SequenceReport,
};
pub use scp::{scp_vertices, ScpReport};

/// An antichain of nonempty vertex sets over a variable context.
#[derive(Debug, Clone)]
pub struct Clutter {
    ctx: Ctx,
    edges: Vec<VarSet>,
    covers: OnceLock<Vec<VarSet>>,
}

impl PartialEq for Clutter {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.names() == other.ctx.names() && self.edges == other.edges
    }
}

impl Eq for Clutter {}

impl Clutter {
    /// Rejects empty edges and edges contained in other edges.
    pub fn new(ctx: &Ctx, edges: Vec<VarSet>) -> Result<Self> {
        if ctx.len() > crate::ideal::MAX_SET_VARS {
            return Err(Error::precondition(format!(
                "clutters support at most {} vertices",
                crate::ideal::MAX_SET_VARS
            )));
        }
        let full = VarSet::full(ctx.len());
        for (k, e) in edges.iter().enumerate() {
            if e.is_empty() {
                return Err(Error::precondition("clutter edges must be nonempty"));
            }
            if !e.is_subset(full) {
                return Err(Error::precondition("clutter edge uses a vertex outside the context"));
            }
            for (l, f) in edges.iter().enumerate() {
                if k != l && e.is_subset(*f) {
                    return Err(Error::precondition(format!(
                        "clutter edge {} is contained in edge {}",
                        show_set(ctx, *e),
                        show_set(ctx, *f)
                    )));
                }
            }
        }
        Ok(Self::from_sorted(ctx, edges))
    }

    fn from_sorted(ctx: &Ctx, mut edges: Vec<VarSet>) -> Self {
        edges.sort_by(|a, b| a.lex_cmp(*b));
        edges.dedup();
        Clutter {
            ctx: ctx.clone(),
            edges,
            covers: OnceLock::new(),
        }
    }

    /// The clutter of supports of the generators of a squarefree ideal.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        ideal.require_squarefree("clutter")?;
        if ideal.is_unit() {
            return Err(Error::precondition("the unit ideal has no clutter"));
        }
        Ok(Self::from_sorted(ideal.ctx(), ideal.supports()?))
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn num_vertices(&self) -> usize {
        self.ctx.len()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[VarSet] {
        &self.edges
    }

    pub fn is_graph(&self) -> bool {
        self.edges.iter().all(|e| e.len() == 2)
    }

    /// Vertices lying on no edge.
    pub fn isolated_vertices(&self) -> VarSet {
        let used = self.edges.iter().fold(VarSet::EMPTY, |acc, e| acc.union(*e));
        VarSet::full(self.ctx.len()).difference(used)
    }

    /// Minimal vertex covers in lexicographic order, computed once.
    pub fn covers(&self) -> &[VarSet] {
        self.covers.get_or_init(|| {
            let mut c = minimal_transversals(&self.edges);
            c.sort_by(|a, b| a.lex_cmp(*b));
            c
        })
    }

    /// Size of a smallest vertex cover, i.e. the height of the edge ideal.
    pub fn height(&self) -> usize {
        self.covers().iter().map(|c| c.len()).min().unwrap_or(0)
    }

    pub fn edge_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_sets(&self.ctx, &self.edges)
    }

    /// The ideal of minimal vertex covers, `I(C)^∨`.
    pub fn cover_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_sets(&self.ctx, self.covers())
    }

    /// The clutter of minimal vertex covers.
    pub fn cover_dual(&self) -> Result<Clutter> {
        if self.edges.is_empty() {
            return Err(Error::precondition(
                "a clutter without edges has only the empty cover",
            ));
        }
        Ok(Self::from_sorted(&self.ctx, self.covers().to_vec()))
    }

    /// Drops every edge meeting `vertices`; the context is kept.
    pub fn deletion(&self, vertices: VarSet) -> Clutter {
        Self::from_sorted(
            &self.ctx,
            self.edges
                .iter()
                .copied()
                .filter(|e| !e.meets(vertices))
                .collect(),
        )
    }

    pub fn incidence_matrix(&self) -> IncidenceMatrix {
        IncidenceMatrix {
            rows: self.ctx.len(),
            cols: self.edges.len(),
            entries: (0..self.ctx.len())
                .map(|i| self.edges.iter().map(|e| e.contains(i) as u8).collect())
                .collect(),
        }
    }

    /// `{x1 x2}, {x2 x3}` style rendering.
    pub fn display_edges(&self) -> String {
        self.edges
            .iter()
            .map(|e| show_set(&self.ctx, *e))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

pub(crate) fn show_set(ctx: &Ctx, s: VarSet) -> String {
    let names: Vec<&str> = s.iter().map(|i| ctx.name(i)).collect();
    format!("{{{}}}", names.join(" "))
}

/// Vertex-by-edge 0/1 matrix; column `j` is the characteristic vector of edge `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncidenceMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<u8>>,
}

impl IncidenceMatrix {
    pub fn column(&self, j: usize) -> Vec<u8> {
        self.entries.iter().map(|row| row[j]).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub uniform: bool,
    pub unmixed: bool,
    /// Only evaluated when every edge has two vertices.
    pub very_well_covered: Option<bool>,
}

pub fn classify(clutter: &Clutter) -> Classification {
    let uniform = clutter
        .edges
        .windows(2)
        .all(|w| w[0].len() == w[1].len());
    let covers = clutter.covers();
    let unmixed = covers.windows(2).all(|w| w[0].len() == w[1].len());
    let very_well_covered = clutter.is_graph().then(|| {
        unmixed
            && clutter.isolated_vertices().is_empty()
            && clutter.num_vertices() == 2 * clutter.height()
    });
    Classification {
        uniform,
        unmixed,
        very_well_covered,
    }
}

/// Outcome of the three duality formulas for a squarefree `f`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityCheck {
    /// `(I(C)^∨ : f)^∨ = I(C ∖ supp f)`.
    pub colon_of_dual: bool,
    /// `(I(C) : f)^∨ = I(C^∨ ∖ supp f)`.
    pub dual_of_colon: bool,
    /// `(I(C), x_i)^∨ = x_i · I(C ∖ x_i)^∨` for every `x_i` dividing `f`.
    pub sum_with_variable: bool,
}

impl DualityCheck {
    pub fn all(&self) -> bool {
        self.colon_of_dual && self.dual_of_colon && self.sum_with_variable
    }
}

pub fn duality_formulas_check(clutter: &Clutter, f: &Monomial) -> Result<DualityCheck> {
    crate::ideal::ensure_same(clutter.ctx(), f.ctx())?;
    if !f.is_squarefree() {
        return Err(Error::precondition("duality formulas need a squarefree f"));
    }
    let support = f.support()?;
    let ctx = clutter.ctx();
    let i = clutter.edge_ideal();
    let dual = i.alexander_dual()?;

    let colon_of_dual =
        dual.colon(f)?.alexander_dual()? == clutter.deletion(support).edge_ideal();

    let covers = Clutter::from_sorted(ctx, clutter.covers().to_vec());
    let dual_of_colon =
        i.colon(f)?.alexander_dual()? == covers.deletion(support).edge_ideal();

    let mut sum_with_variable = true;
    for v in support.iter() {
        let x = Monomial::var(ctx, v);
        let lhs = i.add_gen(&x)?.alexander_dual()?;
        let rhs = clutter
            .deletion(VarSet::singleton(v))
            .edge_ideal()
            .alexander_dual()?
            .scale(&x)?;
        sum_with_variable &= lhs == rhs;
    }
    Ok(DualityCheck {
        colon_of_dual,
        dual_of_colon,
        sum_with_variable,
    })
}

/// An edge meeting every minimal vertex cover in exactly one vertex.
pub fn find_transversal_edge(clutter: &Clutter) -> Option<VarSet> {
    let covers = clutter.covers();
    clutter
        .edges
        .iter()
        .copied()
        .find(|e| covers.iter().all(|c| e.intersection(*c).len() == 1))
}

/// A minimal vertex cover meeting every edge in exactly one vertex.
pub fn find_transversal_cover(clutter: &Clutter) -> Option<VarSet> {
    clutter
        .covers()
        .iter()
        .copied()
        .find(|c| clutter.edges.iter().all(|e| e.intersection(*c).len() == 1))
}
