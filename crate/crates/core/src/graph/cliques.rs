use super::Graph;
use crate::caps::Caps;
use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::ideal::VarSet;

/// Bron–Kerbosch with Tomita pivoting over the vertices in `within`.
fn bron_kerbosch(adj: &[VarSet], within: VarSet, cap: usize) -> Result<Vec<VarSet>> {
    fn expand(
        adj: &[VarSet],
        r: VarSet,
        mut p: VarSet,
        mut x: VarSet,
        out: &mut Vec<VarSet>,
        cap: usize,
    ) -> Result<()> {
        if p.is_empty() {
            if x.is_empty() {
                Caps::check("maximal cliques", out.len() + 1, cap)?;
                out.push(r);
            }
            return Ok(());
        }
        let pivot = p
            .union(x)
            .iter()
            .max_by_key(|&u| adj[u].intersection(p).len())
            .expect("p is nonempty");
        for v in p.difference(adj[pivot]).iter() {
            expand(
                adj,
                r.with(v),
                p.intersection(adj[v]),
                x.intersection(adj[v]),
                out,
                cap,
            )?;
            p = p.without(v);
            x = x.with(v);
        }
        Ok(())
    }
    let mut out = Vec::new();
    if within.is_empty() {
        return Ok(out);
    }
    expand(adj, VarSet::EMPTY, within, VarSet::EMPTY, &mut out, cap)?;
    out.sort_by(|a, b| a.lex_cmp(*b));
    Ok(out)
}

/// Maximal cliques of the whole graph; an isolated vertex is a clique of size one.
pub fn maximal_cliques(graph: &Graph, caps: &Caps) -> Result<Vec<VarSet>> {
    bron_kerbosch(graph.adjacency(), graph.vertex_set(), caps.cliques)
}

/// The clutter `cl(G)` of maximal cliques.
pub fn clique_clutter(graph: &Graph, caps: &Caps) -> Result<Clutter> {
    Clutter::new(graph.ctx(), maximal_cliques(graph, caps)?)
}

fn complement(adj: &[VarSet]) -> Vec<VarSet> {
    let full = VarSet::full(adj.len());
    adj.iter()
        .enumerate()
        .map(|(v, a)| full.difference(*a).without(v))
        .collect()
}

/// A maximal independent set of `G[within]` meeting every maximal clique of
/// `G[within]` exactly once.
fn certificate_within(graph: &Graph, within: VarSet, caps: &Caps) -> Result<Option<VarSet>> {
    let cliques = bron_kerbosch(graph.adjacency(), within, caps.cliques)?;
    let independent = bron_kerbosch(&complement(graph.adjacency()), within, caps.cliques)?;
    Ok(independent
        .into_iter()
        .find(|c| cliques.iter().all(|e| e.intersection(*c).len() == 1)))
}

/// A maximal independent set meeting every maximal clique in one vertex.
pub fn strongly_perfect_certificate(graph: &Graph, caps: &Caps) -> Result<Option<VarSet>> {
    certificate_within(graph, graph.vertex_set(), caps)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StrongPerfection {
    Yes,
    /// An induced subgraph, given by its vertex set, without a certificate.
    No { subgraph: VarSet },
    Inconclusive { reason: String },
}

/// Checks every induced subgraph for a certificate, as long as the graph has
/// at most `caps.induced_vertices` vertices.
pub fn is_strongly_perfect(graph: &Graph, caps: &Caps) -> Result<StrongPerfection> {
    let n = graph.num_vertices();
    if n > caps.induced_vertices {
        return Ok(StrongPerfection::Inconclusive {
            reason: format!(
                "{n} vertices exceed the induced-subgraph budget of {}",
                caps.induced_vertices
            ),
        });
    }
    for bits in 1u128..(1u128 << n) {
        let within = VarSet::from_bits(bits);
        match certificate_within(graph, within, caps) {
            Ok(Some(_)) => {}
            Ok(None) => return Ok(StrongPerfection::No { subgraph: within }),
            Err(Error::Resource { what, cap }) => {
                return Ok(StrongPerfection::Inconclusive {
                    reason: format!("{what} exceeded the cap of {cap}"),
                })
            }
            Err(e) => return Err(e),
        }
    }
    Ok(StrongPerfection::Yes)
}
