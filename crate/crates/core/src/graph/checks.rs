use serde::Serialize;

use super::{maximal_cliques, strongly_perfect_certificate, structure, Graph, WeightedDigraph};
use crate::caps::Caps;
use crate::clutter::{
    classify, monotone_sequences, Clutter, PowerMode, SequenceReport,
};
use crate::error::{Error, Result};
use crate::homology::{homological_summary, Field};
use crate::ideal::{Monomial, MonomialIdeal, VarSet};
use crate::polarization::{weight_reduce, weighted_digraph_ideal};

/// `depth R/I`, with `n` for the zero ideal; resource errors become `None`.
fn depth_of(ideal: &MonomialIdeal, field: Field, caps: &Caps) -> Result<Option<usize>> {
    if ideal.is_zero() {
        return Ok(Some(ideal.num_vars()));
    }
    match crate::homology::depth(ideal, field, caps) {
        Ok(d) => Ok(Some(d)),
        Err(e) if e.is_resource() => Ok(None),
        Err(e) => Err(e),
    }
}

/// Both sides of the local depth comparison at a vertex, plus the colon
/// identities that hold for bipartite graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColonStructure {
    pub vertex: usize,
    pub k: u32,
    /// `depth R/(I^k : x_i^k)`.
    pub colon_depth: Option<usize>,
    /// `depth R/(I(G ∖ N(x_i))^k, N(x_i))`.
    pub deletion_depth: Option<usize>,
    /// `colon_depth <= deletion_depth`; vacuous when either side is missing.
    pub depth_inequality: bool,
    /// `(I : x_i) = (I(G ∖ N(x_i)), N(x_i))`.
    pub colon_equals_deletion: bool,
    pub bipartite: Option<BipartiteColon>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BipartiteColon {
    /// `(I : x_i)^k = (I : x_i)^(k)`.
    pub colon_normally_torsion_free: bool,
    /// `(I^k : x_i^k) = (I : x_i)^k`.
    pub colon_of_power: bool,
}

pub fn colon_structure_check(
    graph: &Graph,
    vertex: usize,
    k: u32,
    field: Field,
    caps: &Caps,
) -> Result<ColonStructure> {
    if k == 0 {
        return Err(Error::precondition("colon_structure_check: k must be at least 1"));
    }
    if vertex >= graph.num_vertices() {
        return Err(Error::precondition("colon_structure_check: vertex out of range"));
    }
    let ctx = graph.ctx();
    let ideal = graph.edge_ideal();
    let nbrs = graph.neighbors(vertex);
    let rest = graph.delete_vertices(nbrs).edge_ideal();
    let nbr_ideal = MonomialIdeal::generated_by_vars(ctx, nbrs);
    let x = Monomial::var(ctx, vertex);

    let power_colon = ideal.power_with(k, caps)?.colon(&x.checked_pow(k)?)?;
    let deletion = rest.power_with(k, caps)?.sum(&nbr_ideal)?;
    let colon_depth = depth_of(&power_colon, field, caps)?;
    let deletion_depth = depth_of(&deletion, field, caps)?;
    let depth_inequality = match (colon_depth, deletion_depth) {
        (Some(a), Some(b)) => a <= b,
        _ => true,
    };
    let simple_colon = ideal.colon(&x)?;
    let colon_equals_deletion = simple_colon == rest.sum(&nbr_ideal)?;

    let bipartite = if graph.is_bipartite() && !ideal.is_zero() {
        Some(BipartiteColon {
            colon_normally_torsion_free: simple_colon.power_with(k, caps)?
                == simple_colon.symbolic_power_with(k, caps)?,
            colon_of_power: power_colon == simple_colon.power_with(k, caps)?,
        })
    } else {
        None
    };
    Ok(ColonStructure {
        vertex,
        k,
        colon_depth,
        deletion_depth,
        depth_inequality,
        colon_equals_deletion,
        bipartite,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StronglyPerfectSymbolic {
    /// Maximal independent set meeting every maximal clique once.
    pub certificate: Vec<usize>,
    /// `(J^(k+1) : f) = J^(k)` for every `k < K`, with `f` the product of the certificate.
    pub colon_identities: bool,
    pub sequence: SequenceReport,
}

/// Symbolic powers of `J = I(cl(G)^∨)` for a graph with a certificate.
pub fn strongly_perfect_symbolic_check(
    graph: &Graph,
    max_k: u32,
    field: Field,
    caps: &Caps,
) -> Result<StronglyPerfectSymbolic> {
    let certificate = strongly_perfect_certificate(graph, caps)?.ok_or_else(|| {
        Error::precondition("no maximal independent set meets every maximal clique exactly once")
    })?;
    let cliques = Clutter::new(graph.ctx(), maximal_cliques(graph, caps)?)?;
    let j = cliques.cover_ideal();
    let f = Monomial::from_set(graph.ctx(), certificate);
    let mut colon_identities = true;
    for k in 1..max_k {
        let next = j.symbolic_power_with(k + 1, caps)?;
        colon_identities &= next.colon(&f)? == j.symbolic_power_with(k, caps)?;
    }
    Ok(StronglyPerfectSymbolic {
        certificate: certificate.iter().collect(),
        colon_identities,
        sequence: monotone_sequences(&j, max_k, PowerMode::Symbolic, field, caps)?,
    })
}

/// The combinatorial and homological views of "R/I(G)^2 is Cohen–Macaulay".
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CmSquare {
    /// Triangle-free, unmixed, and unmixed after deleting any one vertex.
    pub combinatorial_cm2: bool,
    pub homological_cm2: bool,
    /// A triangle whose vertices dominate every other vertex.
    pub depth_zero_triangle: Option<[usize; 3]>,
    pub depth_of_square: usize,
    /// The two CM verdicts match, and a dominating triangle forces depth zero.
    pub agree: bool,
}

pub fn cm_square_predicates(graph: &Graph, field: Field, caps: &Caps) -> Result<CmSquare> {
    if !graph.isolated_vertices().is_empty() || graph.edges().is_empty() {
        return Err(Error::precondition(
            "cm_square_predicates needs a graph without isolated vertices",
        ));
    }
    let unmixed = |g: &Graph| classify(&g.clutter()).unmixed;
    let combinatorial_cm2 = graph.is_triangle_free()
        && unmixed(graph)
        && (0..graph.num_vertices()).all(|v| unmixed(&graph.delete_vertices(VarSet::singleton(v))));

    let summary = homological_summary(&graph.edge_ideal().power_with(2, caps)?, field, caps)?;
    let full = graph.vertex_set();
    let depth_zero_triangle = graph.triangles().into_iter().find(|t| {
        let tri = VarSet::from_indices(*t);
        full.difference(tri)
            .iter()
            .all(|v| graph.neighbors(v).meets(tri))
    });
    let agree = combinatorial_cm2 == summary.is_cohen_macaulay
        && (depth_zero_triangle.is_none() || summary.depth == 0);
    Ok(CmSquare {
        combinatorial_cm2,
        homological_cm2: summary.is_cohen_macaulay,
        depth_zero_triangle,
        depth_of_square: summary.depth,
        agree,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VeryWellCoveredCheck {
    /// An edge of a perfect matching.
    pub matching_edge: (usize, usize),
    /// `(I^(k+1) : x_e) = I^(k)` for every `k < K`.
    pub colon_identities: bool,
    pub sequence: SequenceReport,
}

pub fn very_well_covered_check(
    graph: &Graph,
    max_k: u32,
    field: Field,
    caps: &Caps,
) -> Result<VeryWellCoveredCheck> {
    if classify(&graph.clutter()).very_well_covered != Some(true) {
        return Err(Error::precondition("the graph is not very well-covered"));
    }
    let matching = structure(graph).perfect_matching.ok_or_else(|| {
        Error::precondition("invariant violated: a very well-covered graph has no perfect matching")
    })?;
    let (a, b) = matching[0];
    let ideal = graph.edge_ideal();
    let xe = Monomial::from_set(graph.ctx(), VarSet::from_indices([a, b]));
    let mut colon_identities = true;
    for k in 1..max_k {
        let next = ideal.symbolic_power_with(k + 1, caps)?;
        colon_identities &= next.colon(&xe)? == ideal.symbolic_power_with(k, caps)?;
    }
    Ok(VeryWellCoveredCheck {
        matching_edge: (a, b),
        colon_identities,
        sequence: monotone_sequences(&ideal, max_k, PowerMode::Symbolic, field, caps)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WeightedCmCheck {
    pub original_cm: bool,
    pub reduced_cm: bool,
    pub agree: bool,
}

/// Cohen–Macaulayness of `I(D)` against the digraph with weights capped at 2.
pub fn weighted_cm_reduction_check(
    digraph: &WeightedDigraph,
    field: Field,
    caps: &Caps,
) -> Result<WeightedCmCheck> {
    let original = weighted_digraph_ideal(digraph);
    let reduced = weighted_digraph_ideal(&weight_reduce(digraph));
    let original_cm = homological_summary(&original, field, caps)?.is_cohen_macaulay;
    let reduced_cm = homological_summary(&reduced, field, caps)?.is_cohen_macaulay;
    Ok(WeightedCmCheck {
        original_cm,
        reduced_cm,
        agree: original_cm == reduced_cm,
    })
}
