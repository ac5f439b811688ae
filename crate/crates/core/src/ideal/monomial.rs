use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use super::context::{ensure_same, Ctx};
use super::varset::{VarSet, MAX_SET_VARS};
use crate::error::{Error, Result};

/// A monomial `x^a` over a fixed variable context.
#[derive(Clone)]
pub struct Monomial {
    ctx: Ctx,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(ctx: &Ctx, exps: Vec<u32>) -> Result<Self> {
        if exps.len() != ctx.len() {
            return Err(Error::precondition(format!(
                "exponent vector of length {} in a ring with {} variables",
                exps.len(),
                ctx.len()
            )));
        }
        Ok(Monomial {
            ctx: ctx.clone(),
            exps,
        })
    }

    pub(crate) fn from_parts(ctx: &Ctx, exps: Vec<u32>) -> Self {
        debug_assert_eq!(exps.len(), ctx.len());
        Monomial {
            ctx: ctx.clone(),
            exps,
        }
    }

    pub fn one(ctx: &Ctx) -> Self {
        Monomial::from_parts(ctx, vec![0; ctx.len()])
    }

    pub fn var(ctx: &Ctx, i: usize) -> Self {
        let mut exps = vec![0; ctx.len()];
        exps[i] = 1;
        Monomial::from_parts(ctx, exps)
    }

    /// Squarefree product of the variables in `set`.
    pub fn from_set(ctx: &Ctx, set: VarSet) -> Self {
        let mut exps = vec![0; ctx.len()];
        for i in set.iter() {
            exps[i] = 1;
        }
        Monomial::from_parts(ctx, exps)
    }

    /// Parse `x1^2*x3`, or `1`.
    pub fn parse(ctx: &Ctx, text: &str) -> Result<Self> {
        let text = text.trim();
        let mut exps = vec![0u32; ctx.len()];
        if text == "1" {
            return Ok(Monomial::from_parts(ctx, exps));
        }
        for factor in text.split('*') {
            let factor = factor.trim();
            let (name, power) = match factor.split_once('^') {
                Some((n, p)) => {
                    let p: u32 = p.trim().parse().map_err(|_| {
                        Error::precondition(format!("bad exponent in `{factor}`"))
                    })?;
                    (n.trim(), p)
                }
                None => (factor, 1),
            };
            let i = ctx
                .index_of(name)
                .ok_or_else(|| Error::precondition(format!("unknown variable `{name}`")))?;
            exps[i] = exps[i].checked_add(power).ok_or(Error::Overflow)?;
        }
        Ok(Monomial::from_parts(ctx, exps))
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn into_exps(self) -> Vec<u32> {
        self.exps
    }

    pub fn deg(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn support_indices(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&i| self.exps[i] > 0).collect()
    }

    /// Support as a bitmask; requires at most 128 variables.
    pub fn support(&self) -> Result<VarSet> {
        if self.ctx.len() > MAX_SET_VARS {
            return Err(Error::precondition(format!(
                "set-based operations support at most {MAX_SET_VARS} variables"
            )));
        }
        Ok(support_of(&self.exps))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        divides(&self.exps, &other.exps)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        ensure_same(&self.ctx, &other.ctx)?;
        Ok(Monomial::from_parts(&self.ctx, mul_exps(&self.exps, &other.exps)?))
    }

    pub fn checked_pow(&self, k: u32) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|&e| e.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial::from_parts(&self.ctx, exps))
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        ensure_same(&self.ctx, &other.ctx)?;
        Ok(Monomial::from_parts(&self.ctx, lcm_exps(&self.exps, &other.exps)))
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        ensure_same(&self.ctx, &other.ctx)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Ok(Monomial::from_parts(&self.ctx, exps))
    }

    /// `self / gcd(self, other)`.
    pub fn strip(&self, other: &Monomial) -> Result<Monomial> {
        ensure_same(&self.ctx, &other.ctx)?;
        Ok(Monomial::from_parts(&self.ctx, strip_exps(&self.exps, &other.exps)))
    }

    /// Exact quotient, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial::from_parts(&self.ctx, strip_exps(&self.exps, &other.exps)))
    }

    /// Product of the support variables.
    pub fn radical(&self) -> Monomial {
        Monomial::from_parts(&self.ctx, self.exps.iter().map(|&e| e.min(1)).collect())
    }
}

pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub(crate) fn lcm_exps(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

pub(crate) fn strip_exps(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| x.saturating_sub(y)).collect()
}

pub(crate) fn mul_exps(a: &[u32], b: &[u32]) -> Result<Vec<u32>> {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| x.checked_add(y).ok_or(Error::Overflow))
        .collect()
}

pub(crate) fn support_of(exps: &[u32]) -> VarSet {
    let mut s = VarSet::EMPTY;
    for (i, &e) in exps.iter().enumerate().take(MAX_SET_VARS) {
        if e > 0 {
            s = s.with(i);
        }
    }
    s
}

pub(crate) fn total(exps: &[u32]) -> u64 {
    exps.iter().map(|&e| e as u64).sum()
}

/// Graded order: lower degree first, and within one degree the
/// lexicographically larger vector first (`x1^2, x1*x2, x2^2`).
pub(crate) fn graded_cmp(a: &[u32], b: &[u32]) -> Ordering {
    total(a).cmp(&total(b)).then_with(|| b.cmp(a))
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.exps == other.exps && super::context::same_ctx(&self.ctx, &other.ctx)
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        graded_cmp(&self.exps, &other.exps)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.ctx.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
