//! Monomials, monomial ideals and the squarefree operations built on
//! minimal vertex covers (minimal primes, symbolic powers, Alexander duals).

mod context;
mod monomial;
mod primes;
mod varset;

use std::fmt;

pub use context::{Ctx, VarContext};
pub use monomial::Monomial;
pub use primes::{minimal_transversals, PrimeSet};
pub use varset::{maximal_sets, minimal_sets, VarSet, MAX_SET_VARS};

pub(crate) use context::ensure_same;
pub(crate) use monomial::{divides, graded_cmp, lcm_exps, mul_exps, strip_exps, support_of};

use crate::caps::Caps;
use crate::error::{Error, Result};

/// A monomial ideal stored by its minimal generating set `G(I)`.
///
/// Generators are sorted with the graded order of [`Monomial`], so two ideals
/// are equal exactly when their generator lists are. The zero ideal has no
/// generators and the unit ideal has the single generator `1`.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ctx: Ctx,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Canonicalize an arbitrary generating list into `G(I)`.
    pub fn new(ctx: &Ctx, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            ensure_same(ctx, g.ctx())?;
        }
        let raw = gens.into_iter().map(Monomial::into_exps).collect();
        Ok(MonomialIdeal::from_exps(ctx, raw))
    }

    /// Same as [`MonomialIdeal::new`] with the context taken from the first
    /// generator.
    pub fn minimalize(gens: Vec<Monomial>) -> Result<Self> {
        let ctx = gens
            .first()
            .map(|g| g.ctx().clone())
            .ok_or_else(|| Error::precondition("cannot infer a context from no generators"))?;
        MonomialIdeal::new(&ctx, gens)
    }

    pub(crate) fn from_exps(ctx: &Ctx, raw: Vec<Vec<u32>>) -> Self {
        let gens = minimalize_exps(raw)
            .into_iter()
            .map(|e| Monomial::from_parts(ctx, e))
            .collect();
        MonomialIdeal {
            ctx: ctx.clone(),
            gens,
        }
    }

    /// Parse a comma separated generator list such as `x1^2*x2, x3`.
    pub fn parse(ctx: &Ctx, text: &str) -> Result<Self> {
        let gens = text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| Monomial::parse(ctx, s))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(ctx, gens)
    }

    pub fn zero(ctx: &Ctx) -> Self {
        MonomialIdeal {
            ctx: ctx.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(ctx: &Ctx) -> Self {
        MonomialIdeal {
            ctx: ctx.clone(),
            gens: vec![Monomial::one(ctx)],
        }
    }

    /// The ideal generated by the variables in `vars`.
    pub fn generated_by_vars(ctx: &Ctx, vars: VarSet) -> Self {
        MonomialIdeal::from_exps(
            ctx,
            vars.iter()
                .map(|i| Monomial::var(ctx, i).into_exps())
                .collect(),
        )
    }

    /// The squarefree ideal whose generators are the products over `sets`.
    pub fn from_sets(ctx: &Ctx, sets: &[VarSet]) -> Self {
        MonomialIdeal::from_exps(
            ctx,
            sets.iter()
                .map(|&s| Monomial::from_set(ctx, s).into_exps())
                .collect(),
        )
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn num_vars(&self) -> usize {
        self.ctx.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Fail unless the ideal is neither zero nor the whole ring.
    pub fn require_proper_nonzero(&self, op: &str) -> Result<()> {
        if self.is_zero() {
            return Err(Error::precondition(format!("{op} requires a nonzero ideal")));
        }
        if self.is_unit() {
            return Err(Error::precondition(format!("{op} requires a proper ideal")));
        }
        Ok(())
    }

    pub(crate) fn require_squarefree(&self, op: &str) -> Result<()> {
        if !self.is_squarefree() {
            return Err(Error::precondition(format!(
                "{op} requires a squarefree ideal (take the radical first)"
            )));
        }
        if self.ctx.len() > MAX_SET_VARS {
            return Err(Error::precondition(format!(
                "{op} supports at most {MAX_SET_VARS} variables"
            )));
        }
        Ok(())
    }

    /// Generator supports as bitmasks.
    pub fn supports(&self) -> Result<Vec<VarSet>> {
        self.gens.iter().map(Monomial::support).collect()
    }

    /// Variables occurring in some generator.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.ctx.len())
            .filter(|&i| self.gens.iter().any(|g| g.deg(i) > 0))
            .collect()
    }

    /// Componentwise maximum of the generator exponents.
    pub fn lcm_exponents(&self) -> Vec<u32> {
        let mut out = vec![0; self.ctx.len()];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(g.exps()) {
                *o = (*o).max(e);
            }
        }
        out
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        ensure_same(&self.ctx, m.ctx())?;
        Ok(self.contains_exps(m.exps()))
    }

    pub(crate) fn contains_exps(&self, exps: &[u32]) -> bool {
        self.gens.iter().any(|g| divides(g.exps(), exps))
    }

    /// `I ⊆ J`.
    pub fn is_subset(&self, other: &MonomialIdeal) -> Result<bool> {
        ensure_same(&self.ctx, &other.ctx)?;
        Ok(self.gens.iter().all(|g| other.contains_exps(g.exps())))
    }

    /// `(I : f) = { g : g f ∈ I }`.
    pub fn colon(&self, f: &Monomial) -> Result<MonomialIdeal> {
        ensure_same(&self.ctx, f.ctx())?;
        let raw = self
            .gens
            .iter()
            .map(|g| strip_exps(g.exps(), f.exps()))
            .collect();
        Ok(MonomialIdeal::from_exps(&self.ctx, raw))
    }

    /// `(I : J)` for a monomial ideal `J`, the intersection of `(I : g)` over `G(J)`.
    pub fn colon_ideal(&self, other: &MonomialIdeal, caps: &Caps) -> Result<MonomialIdeal> {
        ensure_same(&self.ctx, &other.ctx)?;
        let mut acc = MonomialIdeal::unit(&self.ctx);
        for g in &other.gens {
            acc = acc.intersect_with(&self.colon(g)?, caps)?;
        }
        Ok(acc)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        ensure_same(&self.ctx, &other.ctx)?;
        let raw = self
            .gens
            .iter()
            .chain(&other.gens)
            .map(|g| g.exps().to_vec())
            .collect();
        Ok(MonomialIdeal::from_exps(&self.ctx, raw))
    }

    /// `I + (m)`.
    pub fn add_gen(&self, m: &Monomial) -> Result<MonomialIdeal> {
        ensure_same(&self.ctx, m.ctx())?;
        let mut raw: Vec<Vec<u32>> = self.gens.iter().map(|g| g.exps().to_vec()).collect();
        raw.push(m.exps().to_vec());
        Ok(MonomialIdeal::from_exps(&self.ctx, raw))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.product_with(other, &Caps::default())
    }

    pub fn product_with(&self, other: &MonomialIdeal, caps: &Caps) -> Result<MonomialIdeal> {
        ensure_same(&self.ctx, &other.ctx)?;
        Caps::check(
            "monomials in a product",
            self.gens.len().saturating_mul(other.gens.len()),
            caps.monomials,
        )?;
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                raw.push(mul_exps(a.exps(), b.exps())?);
            }
        }
        Ok(MonomialIdeal::from_exps(&self.ctx, raw))
    }

    /// `m · I`.
    pub fn scale(&self, m: &Monomial) -> Result<MonomialIdeal> {
        ensure_same(&self.ctx, m.ctx())?;
        let raw = self
            .gens
            .iter()
            .map(|g| mul_exps(g.exps(), m.exps()))
            .collect::<Result<Vec<_>>>()?;
        Ok(MonomialIdeal::from_exps(&self.ctx, raw))
    }

    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        self.power_with(k, &Caps::default())
    }

    /// `I^k` by repeated multiplication; `k = 0` is rejected.
    pub fn power_with(&self, k: u32, caps: &Caps) -> Result<MonomialIdeal> {
        if k == 0 {
            return Err(Error::precondition("power exponent must be at least 1"));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product_with(self, caps)?;
        }
        Ok(acc)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.intersect_with(other, &Caps::default())
    }

    /// `I ∩ J`, generated by the pairwise lcms.
    pub fn intersect_with(&self, other: &MonomialIdeal, caps: &Caps) -> Result<MonomialIdeal> {
        ensure_same(&self.ctx, &other.ctx)?;
        Caps::check(
            "monomials in an intersection",
            self.gens.len().saturating_mul(other.gens.len()),
            caps.monomials,
        )?;
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                raw.push(lcm_exps(a.exps(), b.exps()));
            }
        }
        Ok(MonomialIdeal::from_exps(&self.ctx, raw))
    }

    pub fn radical(&self) -> MonomialIdeal {
        let raw = self.gens.iter().map(|g| g.radical().into_exps()).collect();
        MonomialIdeal::from_exps(&self.ctx, raw)
    }

    /// Minimal primes of a squarefree ideal, as minimal transversals of the
    /// generator supports.
    pub fn minimal_primes(&self) -> Result<Vec<PrimeSet>> {
        self.require_squarefree("minimal_primes")?;
        self.require_proper_nonzero("minimal_primes")?;
        Ok(minimal_transversals(&self.supports()?)
            .into_iter()
            .map(|vars| PrimeSet::from_parts(&self.ctx, vars))
            .collect())
    }

    /// Minimum size of a minimal prime.
    pub fn height(&self) -> Result<usize> {
        let primes = self.minimal_primes()?;
        Ok(primes.iter().map(PrimeSet::len).min().unwrap_or(0))
    }

    /// Krull dimension of `R/I`, computed from the radical.
    pub fn krull_dim(&self) -> Result<usize> {
        self.require_proper_nonzero("krull_dim")?;
        Ok(self.ctx.len() - self.radical().height()?)
    }

    /// All minimal primes have the same size.
    pub fn is_unmixed(&self) -> Result<bool> {
        let primes = self.minimal_primes()?;
        Ok(primes.windows(2).all(|w| w[0].len() == w[1].len()))
    }

    pub fn symbolic_power(&self, k: u32) -> Result<MonomialIdeal> {
        self.symbolic_power_with(k, &Caps::default())
    }

    /// `I^(k)`: the intersection of `p^k` over the minimal primes.
    pub fn symbolic_power_with(&self, k: u32, caps: &Caps) -> Result<MonomialIdeal> {
        if k == 0 {
            return Err(Error::precondition("symbolic power exponent must be at least 1"));
        }
        let primes = self.minimal_primes()?;
        let mut acc = MonomialIdeal::unit(&self.ctx);
        for p in &primes {
            acc = acc.intersect_with(&p.power(k, caps)?, caps)?;
        }
        Ok(acc)
    }

    /// Alexander dual of a squarefree ideal: the ideal generated by its minimal
    /// vertex covers. The dual of the zero ideal is the unit ideal and
    /// conversely.
    pub fn alexander_dual(&self) -> Result<MonomialIdeal> {
        self.require_squarefree("alexander_dual")?;
        Ok(MonomialIdeal::from_sets(
            &self.ctx,
            &minimal_transversals(&self.supports()?),
        ))
    }
}

impl std::hash::Hash for MonomialIdeal {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.gens.hash(state);
    }
}

/// Minimal elements under divisibility, deduplicated and in canonical order.
pub(crate) fn minimalize_exps(mut raw: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    raw.sort_by(|a, b| graded_cmp(a, b));
    raw.dedup();
    let mut kept: Vec<Vec<u32>> = Vec::with_capacity(raw.len());
    let mut masks: Vec<u128> = Vec::with_capacity(raw.len());
    for g in raw {
        let mask = support_of(&g).bits();
        let divisible = kept
            .iter()
            .zip(&masks)
            .any(|(h, &hm)| hm & !mask == 0 && divides(h, &g));
        if !divisible {
            masks.push(mask);
            kept.push(g);
        }
    }
    kept
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
