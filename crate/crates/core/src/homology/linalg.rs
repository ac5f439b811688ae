//! Ranks of sparse integer matrices over `Z/p` and over the rationals.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedMul, CheckedSub, One, Zero};

use super::Field;

/// A sparse column: `(row, value)` pairs sorted by row, no zero values.
pub(crate) type SparseCol = Vec<(u32, i64)>;

/// Prime used to pre-screen rational ranks. Over the integers the rank mod a
/// prime never exceeds the rational rank.
const SCREEN_PRIME: u64 = 2_147_483_647;

trait RankArith {
    type E: Clone;
    fn from_i64(&self, v: i64) -> Self::E;
    fn is_zero(&self, e: &Self::E) -> bool;
    /// `a - f * b`, or `None` on overflow.
    fn axpy(&self, a: &Self::E, f: &Self::E, b: &Self::E) -> Option<Self::E>;
    fn quot(&self, a: &Self::E, b: &Self::E) -> Option<Self::E>;
}

struct ModP(u64);

impl ModP {
    fn inv(&self, a: u64) -> u64 {
        let (mut base, mut exp, mut acc) = (a % self.0, self.0 - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.0;
            }
            base = base * base % self.0;
            exp >>= 1;
        }
        acc
    }
}

impl RankArith for ModP {
    type E = u64;
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.0 as i64) as u64
    }
    fn is_zero(&self, e: &u64) -> bool {
        *e == 0
    }
    fn axpy(&self, a: &u64, f: &u64, b: &u64) -> Option<u64> {
        Some((a + self.0 - f * b % self.0) % self.0)
    }
    fn quot(&self, a: &u64, b: &u64) -> Option<u64> {
        Some(a * self.inv(*b) % self.0)
    }
}

struct SmallQ;

impl RankArith for SmallQ {
    type E = Ratio<i64>;
    fn from_i64(&self, v: i64) -> Ratio<i64> {
        Ratio::from_integer(v)
    }
    fn is_zero(&self, e: &Ratio<i64>) -> bool {
        e.is_zero()
    }
    fn axpy(&self, a: &Ratio<i64>, f: &Ratio<i64>, b: &Ratio<i64>) -> Option<Ratio<i64>> {
        a.checked_sub(&f.checked_mul(b)?)
    }
    fn quot(&self, a: &Ratio<i64>, b: &Ratio<i64>) -> Option<Ratio<i64>> {
        num_traits::CheckedDiv::checked_div(a, b)
    }
}

struct BigQ;

impl RankArith for BigQ {
    type E = BigRational;
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self, e: &BigRational) -> bool {
        e.is_zero()
    }
    fn axpy(&self, a: &BigRational, f: &BigRational, b: &BigRational) -> Option<BigRational> {
        Some(a - f * b)
    }
    fn quot(&self, a: &BigRational, b: &BigRational) -> Option<BigRational> {
        Some(a / b)
    }
}

/// Column reduction keyed on the lowest (largest-row) entry.
fn column_rank<A: RankArith>(arith: &A, cols: &[SparseCol]) -> Option<usize> {
    let mut pivots: HashMap<u32, Vec<(u32, A::E)>> = HashMap::new();
    let mut rank = 0;
    for col in cols {
        let mut c: Vec<(u32, A::E)> = col
            .iter()
            .map(|&(r, v)| (r, arith.from_i64(v)))
            .filter(|(_, v)| !arith.is_zero(v))
            .collect();
        loop {
            let Some((low, low_val)) = c.last().cloned() else {
                break;
            };
            match pivots.get(&low) {
                Some(p) => {
                    let f = arith.quot(&low_val, &p.last().expect("nonempty pivot").1)?;
                    c = combine(arith, &c, &f, p)?;
                }
                None => {
                    pivots.insert(low, c);
                    rank += 1;
                    break;
                }
            }
        }
    }
    Some(rank)
}

/// `a - f * b` on sorted sparse vectors.
fn combine<A: RankArith>(
    arith: &A,
    a: &[(u32, A::E)],
    f: &A::E,
    b: &[(u32, A::E)],
) -> Option<Vec<(u32, A::E)>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let zero = arith.from_i64(0);
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            let v = arith.axpy(&zero, f, &b[j].1)?;
            out.push((b[j].0, v));
            j += 1;
        } else {
            let v = arith.axpy(&a[i].1, f, &b[j].1)?;
            if !arith.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

/// Rank of an integer matrix given by sparse columns.
pub(crate) fn rank(cols: &[SparseCol], field: Field) -> usize {
    match field {
        Field::Prime(p) => column_rank(&ModP(p as u64), cols).expect("modular arithmetic never overflows"),
        Field::Rational => rational_rank(cols),
    }
}

pub(crate) fn rank_mod_screen(cols: &[SparseCol]) -> usize {
    column_rank(&ModP(SCREEN_PRIME), cols).expect("modular arithmetic never overflows")
}

fn rational_rank(cols: &[SparseCol]) -> usize {
    column_rank(&SmallQ, cols).unwrap_or_else(|| column_rank(&BigQ, cols).expect("exact"))
}

/// Solve a square system exactly over the rationals; `None` if singular.
pub(crate) fn solve_exact(matrix: &[Vec<i64>], rhs: &[i64]) -> Option<Vec<BigRational>> {
    let n = rhs.len();
    let mut m: Vec<Vec<BigRational>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, &b)| {
            row.iter()
                .chain(std::iter::once(&b))
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = BigRational::one() / &m[col][col];
        for v in m[col].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    let sub = &f * &m[col][c];
                    m[r][c] = &m[r][c] - sub;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}
