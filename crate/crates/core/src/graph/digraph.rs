use crate::error::{Error, Result};
use crate::ideal::Ctx;

/// A digraph on the variables of a context with a positive weight on every
/// vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedDigraph {
    ctx: Ctx,
    arcs: Vec<(usize, usize)>,
    weights: Vec<u32>,
}

impl WeightedDigraph {
    pub fn new(ctx: &Ctx, arcs: Vec<(usize, usize)>, weights: Vec<u32>) -> Result<Self> {
        let n = ctx.len();
        if weights.len() != n {
            return Err(Error::precondition(format!(
                "expected {n} vertex weights, got {}",
                weights.len()
            )));
        }
        if let Some(v) = weights.iter().position(|&d| d == 0) {
            return Err(Error::precondition(format!(
                "vertex {} has weight 0",
                ctx.name(v)
            )));
        }
        let mut arcs = arcs;
        for &(i, j) in &arcs {
            if i >= n || j >= n {
                return Err(Error::precondition(format!("arc ({i}, {j}) out of range")));
            }
            if i == j {
                return Err(Error::precondition(format!("loop at {}", ctx.name(i))));
            }
        }
        arcs.sort_unstable();
        arcs.dedup();
        Ok(WeightedDigraph {
            ctx: ctx.clone(),
            arcs,
            weights,
        })
    }

    /// Every vertex gets weight 1.
    pub fn unweighted(ctx: &Ctx, arcs: Vec<(usize, usize)>) -> Result<Self> {
        Self::new(ctx, arcs, vec![1; ctx.len()])
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, v: usize) -> u32 {
        self.weights[v]
    }
}
