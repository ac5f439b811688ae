use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::IncidenceMatrix;
use crate::caps::Caps;
use crate::error::Result;
use crate::homology::linalg::solve_exact;

/// The vertices of `Q(A) = {x ≥ 0 : xA ≥ 1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScpReport {
    #[serde(serialize_with = "serialize_points")]
    pub vertices: Vec<Vec<BigRational>>,
    pub integral: bool,
    #[serde(serialize_with = "serialize_point")]
    pub fractional_witness: Option<Vec<BigRational>>,
}

fn render(point: &[BigRational]) -> Vec<String> {
    point.iter().map(|q| q.to_string()).collect()
}

fn serialize_points<S: serde::Serializer>(
    points: &[Vec<BigRational>],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(points.iter().map(|p| render(p)))
}

fn serialize_point<S: serde::Serializer>(
    point: &Option<Vec<BigRational>>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match point {
        Some(p) => s.collect_seq(render(p)),
        None => s.serialize_none(),
    }
}

/// Enumerates every choice of `n` tight constraints among the `n + r`
/// inequalities, solves the nonsingular ones exactly and keeps the feasible
/// solutions.
pub fn scp_vertices(a: &IncidenceMatrix, caps: &Caps) -> Result<ScpReport> {
    let n = a.rows;
    let r = a.cols;
    Caps::check("candidate bases", binomial(n + r, n), caps.bases)?;

    // Constraint rows: x_i >= 0 for every vertex, then one row per edge.
    let mut rows: Vec<(Vec<i64>, i64)> = (0..n)
        .map(|i| {
            let mut row = vec![0; n];
            row[i] = 1;
            (row, 0)
        })
        .collect();
    rows.extend((0..r).map(|j| (a.column(j).into_iter().map(i64::from).collect(), 1)));

    let mut vertices: Vec<Vec<BigRational>> = Combinations::new(n + r, n)
        .par_bridge()
        .filter_map(|choice| {
            let matrix: Vec<Vec<i64>> = choice.iter().map(|&k| rows[k].0.clone()).collect();
            let rhs: Vec<i64> = choice.iter().map(|&k| rows[k].1).collect();
            let x = solve_exact(&matrix, &rhs)?;
            feasible(&x, &rows).then_some(x)
        })
        .collect();
    vertices.sort();
    vertices.dedup();

    let fractional_witness = vertices
        .iter()
        .find(|v| v.iter().any(|q| !q.is_integer()))
        .cloned();
    Ok(ScpReport {
        integral: fractional_witness.is_none(),
        vertices,
        fractional_witness,
    })
}

fn feasible(x: &[BigRational], rows: &[(Vec<i64>, i64)]) -> bool {
    rows.iter().all(|(row, b)| {
        let lhs = row
            .iter()
            .zip(x)
            .filter(|(c, _)| **c != 0)
            .fold(BigRational::zero(), |acc, (c, v)| {
                acc + v * BigRational::from_integer((*c).into())
            });
        lhs >= BigRational::from_integer((*b).into())
    })
}

/// `C(m, k)`, saturating at `usize::MAX`.
fn binomial(m: usize, k: usize) -> usize {
    let k = k.min(m - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (m - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

/// `k`-subsets of `0..m` in lexicographic order.
struct Combinations {
    m: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    fn new(m: usize, k: usize) -> Self {
        Combinations {
            m,
            current: (k <= m).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut next = out.clone();
        let advanced = (0..k).rev().find(|&i| next[i] < self.m - k + i);
        self.current = advanced.map(|i| {
            next[i] += 1;
            for j in i + 1..k {
                next[j] = next[j - 1] + 1;
            }
            next
        });
        Some(out)
    }
}
