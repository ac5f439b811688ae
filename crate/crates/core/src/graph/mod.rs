//! Simple graphs and weighted digraphs, with the structural predicates that
//! govern depth and regularity of powers of edge ideals.

mod checks;
mod cliques;
mod digraph;
mod enumerate;

use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::ideal::{Ctx, MonomialIdeal, VarSet, MAX_SET_VARS};

pub use checks::{
    cm_square_predicates, colon_structure_check, strongly_perfect_symbolic_check,
    very_well_covered_check, weighted_cm_reduction_check, BipartiteColon, CmSquare,
    ColonStructure, StronglyPerfectSymbolic, VeryWellCoveredCheck, WeightedCmCheck,
};
pub use cliques::{
    clique_clutter, is_strongly_perfect, maximal_cliques, strongly_perfect_certificate,
    StrongPerfection,
};
pub use digraph::WeightedDigraph;
pub use enumerate::graphs_up_to_isomorphism;

/// A simple graph on the variables of a context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    ctx: Ctx,
    edges: Vec<(usize, usize)>,
    adj: Vec<VarSet>,
}

impl Graph {
    /// Edges are unordered; duplicates are merged and loops rejected.
    pub fn new(ctx: &Ctx, edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = ctx.len();
        if n > MAX_SET_VARS {
            return Err(Error::precondition(format!(
                "graphs support at most {MAX_SET_VARS} vertices"
            )));
        }
        let mut norm = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::precondition(format!("edge ({a}, {b}) out of range")));
            }
            if a == b {
                return Err(Error::precondition(format!("loop at {}", ctx.name(a))));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        norm.dedup();
        let mut adj = vec![VarSet::EMPTY; n];
        for &(a, b) in &norm {
            adj[a] = adj[a].with(b);
            adj[b] = adj[b].with(a);
        }
        Ok(Graph {
            ctx: ctx.clone(),
            edges: norm,
            adj,
        })
    }

    /// A clutter whose edges all have two vertices.
    pub fn from_clutter(clutter: &Clutter) -> Result<Self> {
        let mut edges = Vec::new();
        for e in clutter.edges() {
            let v: Vec<usize> = e.iter().collect();
            if v.len() != 2 {
                return Err(Error::precondition("every clutter edge must have two vertices"));
            }
            edges.push((v[0], v[1]));
        }
        Graph::new(clutter.ctx(), edges)
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn num_vertices(&self) -> usize {
        self.ctx.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> VarSet {
        self.adj[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    pub(crate) fn adjacency(&self) -> &[VarSet] {
        &self.adj
    }

    pub fn vertex_set(&self) -> VarSet {
        VarSet::full(self.num_vertices())
    }

    pub fn clutter(&self) -> Clutter {
        Clutter::new(
            &self.ctx,
            self.edges
                .iter()
                .map(|&(a, b)| VarSet::from_indices([a, b]))
                .collect(),
        )
        .expect("graph edges form a clutter")
    }

    pub fn edge_ideal(&self) -> MonomialIdeal {
        self.clutter().edge_ideal()
    }

    /// `G ∖ V`: drops every edge meeting `vertices`; the context is kept.
    pub fn delete_vertices(&self, vertices: VarSet) -> Graph {
        self.filtered(|a, b| !vertices.contains(a) && !vertices.contains(b))
    }

    /// The subgraph induced on `vertices`; other vertices become isolated.
    pub fn induced(&self, vertices: VarSet) -> Graph {
        self.filtered(|a, b| vertices.contains(a) && vertices.contains(b))
    }

    fn filtered(&self, keep: impl Fn(usize, usize) -> bool) -> Graph {
        Graph::new(
            &self.ctx,
            self.edges.iter().copied().filter(|&(a, b)| keep(a, b)).collect(),
        )
        .expect("a subgraph of a valid graph is valid")
    }

    pub fn isolated_vertices(&self) -> VarSet {
        VarSet::from_indices((0..self.num_vertices()).filter(|&v| self.adj[v].is_empty()))
    }

    /// Connected components, isolated vertices included, ordered by least vertex.
    pub fn components(&self) -> Vec<VarSet> {
        let mut seen = VarSet::EMPTY;
        let mut out = Vec::new();
        for start in 0..self.num_vertices() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VarSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let next = frontier
                    .iter()
                    .fold(VarSet::EMPTY, |acc, v| acc.union(self.adj[v]))
                    .difference(comp);
                comp = comp.union(next);
                frontier = next;
            }
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    /// Two-colouring of `vertices`, if one exists.
    fn two_colour(&self, vertices: VarSet) -> Option<VarSet> {
        let mut side = VarSet::EMPTY;
        let mut coloured = VarSet::EMPTY;
        for start in vertices.iter() {
            if coloured.contains(start) {
                continue;
            }
            coloured = coloured.with(start);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in self.adj[v].intersection(vertices).iter() {
                    if !coloured.contains(w) {
                        coloured = coloured.with(w);
                        if !side.contains(v) {
                            side = side.with(w);
                        }
                        stack.push(w);
                    } else if side.contains(v) == side.contains(w) {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_colour(self.vertex_set()).is_some()
    }

    /// Triangles `[a, b, c]` with `a < b < c`, in lexicographic order.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            for c in self.adj[a].intersection(self.adj[b]).iter() {
                if c > b {
                    out.push([a, b, c]);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_triangle_free(&self) -> bool {
        self.triangles().is_empty()
    }

    /// A perfect matching on all vertices of the context, found by exhaustive
    /// search matching the least unmatched vertex first.
    pub fn perfect_matching(&self) -> Option<Vec<(usize, usize)>> {
        fn search(adj: &[VarSet], free: VarSet, acc: &mut Vec<(usize, usize)>) -> bool {
            let Some(v) = free.min() else { return true };
            for w in adj[v].intersection(free).iter() {
                acc.push((v, w));
                if search(adj, free.without(v).without(w), acc) {
                    return true;
                }
                acc.pop();
            }
            false
        }
        if self.num_vertices() % 2 == 1 {
            return None;
        }
        let mut acc = Vec::new();
        search(&self.adj, self.vertex_set(), &mut acc).then_some(acc)
    }

    /// Maximal independent sets, i.e. complements of minimal vertex covers.
    pub fn maximal_independent_sets(&self) -> Vec<VarSet> {
        let full = self.vertex_set();
        let mut out: Vec<VarSet> = self
            .clutter()
            .covers()
            .iter()
            .map(|c| full.difference(*c))
            .collect();
        out.sort_by(|a, b| a.lex_cmp(*b));
        out
    }

    /// `{x1 x2}, {x2 x3}` style rendering.
    pub fn display_edges(&self) -> String {
        self.edges
            .iter()
            .map(|&(a, b)| format!("{{{} {}}}", self.ctx.name(a), self.ctx.name(b)))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Components, bipartiteness, triangles and matchings of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStructure {
    pub components: Vec<VarSet>,
    pub isolated: VarSet,
    /// Number of bipartite components with at least one edge.
    pub c0: usize,
    pub bipartite: bool,
    pub triangle_free: bool,
    pub perfect_matching: Option<Vec<(usize, usize)>>,
    /// `|isol(G)| + c0(G)`, the limit of `depth R/I(G)^k`.
    pub limit_depth: usize,
}

pub fn structure(graph: &Graph) -> GraphStructure {
    let components = graph.components();
    let isolated = graph.isolated_vertices();
    let c0 = components
        .iter()
        .filter(|c| c.len() >= 2 && graph.two_colour(**c).is_some())
        .count();
    GraphStructure {
        isolated,
        c0,
        bipartite: graph.is_bipartite(),
        triangle_free: graph.is_triangle_free(),
        perfect_matching: graph.perfect_matching(),
        limit_depth: isolated.len() + c0,
        components,
    }
}

#[cfg(test)]
mod tests;
