use std::collections::{HashMap, HashSet};

use super::linalg::{self, SparseCol};
use super::Field;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::ideal::{maximal_sets, minimal_transversals, MonomialIdeal, VarSet, MAX_SET_VARS};

/// A simplicial complex on vertices `0..n`, stored by its facets.
///
/// The void complex has no faces at all; the irrelevant complex `{∅}` has the
/// single facet `∅`. The two are distinct: `H̃_{-1}({∅}) = K` while the void
/// complex has no homology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VarSet>,
}

impl SimplicialComplex {
    pub fn new(n: usize, facets: Vec<VarSet>) -> Result<Self> {
        if n > MAX_SET_VARS {
            return Err(Error::precondition(format!(
                "complexes support at most {MAX_SET_VARS} vertices"
            )));
        }
        if let Some(f) = facets.iter().find(|f| !f.is_subset(VarSet::full(n))) {
            return Err(Error::precondition(format!("face {f:?} uses vertices beyond {n}")));
        }
        Ok(SimplicialComplex::from_facets(n, facets))
    }

    pub(crate) fn from_facets(n: usize, facets: Vec<VarSet>) -> Self {
        let mut facets = maximal_sets(facets);
        facets.sort_by(|a, b| a.lex_cmp(*b));
        SimplicialComplex { n, facets }
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![] }
    }

    pub fn irrelevant(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: vec![VarSet::EMPTY],
        }
    }

    /// Stanley–Reisner complex: faces are the variable sets containing no
    /// generator support. Facets are complements of the minimal vertex covers.
    pub fn stanley_reisner(ideal: &MonomialIdeal) -> Result<Self> {
        ideal.require_squarefree("stanley_reisner")?;
        if ideal.is_unit() {
            return Err(Error::precondition("stanley_reisner requires a proper ideal"));
        }
        let n = ideal.num_vars();
        let full = VarSet::full(n);
        let facets = minimal_transversals(&ideal.supports()?)
            .into_iter()
            .map(|c| full.difference(c))
            .collect();
        Ok(SimplicialComplex::from_facets(n, facets))
    }

    /// Stanley–Reisner ideal in the given context: generated by the minimal
    /// non-faces.
    pub fn nonface_ideal(&self, ctx: &crate::ideal::Ctx) -> Result<MonomialIdeal> {
        if ctx.len() != self.n {
            return Err(Error::precondition("context size differs from the vertex count"));
        }
        let full = VarSet::full(self.n);
        let complements: Vec<VarSet> = self.facets.iter().map(|f| full.difference(*f)).collect();
        Ok(MonomialIdeal::from_sets(ctx, &minimal_transversals(&complements)))
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VarSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `None` for the void complex, `-1` for `{∅}`.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn is_face(&self, s: VarSet) -> bool {
        self.facets.iter().any(|f| s.is_subset(*f))
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// `lk(σ) = { τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ }`; void when `σ ∉ Δ`.
    pub fn link(&self, s: VarSet) -> SimplicialComplex {
        let facets = self
            .facets
            .iter()
            .filter(|f| s.is_subset(**f))
            .map(|f| f.difference(s))
            .collect();
        SimplicialComplex::from_facets(self.n, facets)
    }

    /// Faces of dimension at most `i`.
    pub fn skeleton(&self, i: isize) -> SimplicialComplex {
        if i < -1 {
            return SimplicialComplex::void(self.n);
        }
        let size = (i + 1) as usize;
        let mut facets = Vec::new();
        for &f in &self.facets {
            if f.len() <= size {
                facets.push(f);
            } else {
                subsets_of_size(f, size, &mut facets);
            }
        }
        SimplicialComplex::from_facets(self.n, facets)
    }

    /// Faces grouped by dimension: entry `d + 1` holds the faces of dimension
    /// `d`, each list sorted.
    pub fn faces_by_dim(&self, caps: &Caps) -> Result<Vec<Vec<VarSet>>> {
        let Some(dim) = self.dim() else {
            return Ok(vec![]);
        };
        let mut seen: HashSet<u128> = HashSet::new();
        for &f in &self.facets {
            let bits = f.bits();
            // enumerate all submasks of the facet
            let mut sub = bits;
            loop {
                seen.insert(sub);
                if seen.len() > caps.faces {
                    return Err(Error::Resource {
                        what: "faces in a simplicial complex",
                        cap: caps.faces,
                    });
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & bits;
            }
        }
        let mut by_dim: Vec<Vec<VarSet>> = vec![Vec::new(); (dim + 2) as usize];
        for bits in seen {
            by_dim[bits.count_ones() as usize].push(VarSet::from_bits(bits));
        }
        for layer in &mut by_dim {
            layer.sort_by_key(|s| s.bits());
        }
        Ok(by_dim)
    }

    /// Some vertex lies in every facet, so the complex is contractible.
    fn is_cone(&self) -> bool {
        let common = self
            .facets
            .iter()
            .fold(VarSet::full(self.n), |acc, f| acc.intersection(*f));
        !self.facets.is_empty() && !common.is_empty()
    }

    /// Dimensions of `H̃_d(Δ; K)` for `d = -1 ..= dim Δ`; empty for the void
    /// complex.
    pub fn reduced_homology(&self, field: Field, caps: &Caps) -> Result<Vec<usize>> {
        let Some(dim) = self.dim() else {
            return Ok(vec![]);
        };
        let len = (dim + 2) as usize;
        if self.is_cone() {
            return Ok(vec![0; len]);
        }
        let faces = self.faces_by_dim(caps)?;
        let boundaries = boundary_matrices(&faces);
        let homology_from = |ranks: &[usize]| -> Vec<usize> {
            (0..len)
                .map(|k| faces[k].len() - ranks[k] - ranks[k + 1])
                .collect()
        };
        // ranks[k] is the rank of the map out of the faces in layer k
        let ranks_with = |rank_fn: &dyn Fn(&[SparseCol]) -> usize| -> Vec<usize> {
            let mut ranks = vec![0; len + 1];
            for (k, cols) in boundaries.iter().enumerate() {
                ranks[k + 1] = rank_fn(cols);
            }
            ranks
        };
        match field {
            Field::Prime(_) => Ok(homology_from(&ranks_with(&|c| linalg::rank(c, field)))),
            Field::Rational => {
                let screen = homology_from(&ranks_with(&|c| linalg::rank_mod_screen(c)));
                if screen.iter().all(|&h| h == 0) {
                    return Ok(screen);
                }
                Ok(homology_from(&ranks_with(&|c| linalg::rank(c, field))))
            }
        }
    }

    /// Reisner's criterion: every link `lk σ`, including `lk ∅ = Δ`, has
    /// vanishing reduced homology below its top dimension.
    pub fn is_cohen_macaulay(&self, field: Field, caps: &Caps) -> Result<bool> {
        if self.is_void() {
            return Ok(false);
        }
        if !self.is_pure() {
            return Ok(false);
        }
        for layer in self.faces_by_dim(caps)? {
            for s in layer {
                let link = self.link(s);
                let h = link.reduced_homology(field, caps)?;
                let top = h.len().saturating_sub(1);
                if h[..top].iter().any(|&x| x != 0) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn subsets_of_size(set: VarSet, size: usize, out: &mut Vec<VarSet>) {
    fn go(items: &[usize], size: usize, start: usize, acc: VarSet, out: &mut Vec<VarSet>) {
        if acc.len() == size {
            out.push(acc);
            return;
        }
        for i in start..items.len() {
            if items.len() - i < size - acc.len() {
                break;
            }
            go(items, size, i + 1, acc.with(items[i]), out);
        }
    }
    let items: Vec<usize> = set.iter().collect();
    go(&items, size, 0, VarSet::EMPTY, out);
}

/// Boundary maps `C_d -> C_{d-1}` for `d = 0 ..= dim`, as sparse columns.
/// Entry `k` maps layer `k + 1` into layer `k` (layer 0 is `{∅}`).
fn boundary_matrices(faces: &[Vec<VarSet>]) -> Vec<Vec<SparseCol>> {
    let mut out = Vec::with_capacity(faces.len().saturating_sub(1));
    for k in 1..faces.len() {
        let rows: HashMap<u128, u32> = faces[k - 1]
            .iter()
            .enumerate()
            .map(|(i, s)| (s.bits(), i as u32))
            .collect();
        let cols = faces[k]
            .iter()
            .map(|s| {
                let mut col: SparseCol = s
                    .iter()
                    .enumerate()
                    .map(|(pos, v)| {
                        let sign = if pos % 2 == 0 { 1 } else { -1 };
                        (rows[&s.without(v).bits()], sign)
                    })
                    .collect();
                col.sort_by_key(|&(r, _)| r);
                col
            })
            .collect();
        out.push(cols);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::VarContext;

    fn sets(list: &[&[usize]]) -> Vec<VarSet> {
        list.iter().map(|s| VarSet::from_indices(s.iter().copied())).collect()
    }

    /// Six-vertex, ten-triangle triangulation of the real projective plane.
    pub(crate) fn projective_plane() -> SimplicialComplex {
        SimplicialComplex::new(
            6,
            sets(&[
                &[0, 1, 2],
                &[0, 2, 3],
                &[0, 3, 4],
                &[0, 4, 5],
                &[0, 1, 5],
                &[1, 2, 4],
                &[2, 3, 5],
                &[1, 3, 4],
                &[2, 4, 5],
                &[1, 3, 5],
            ]),
        )
        .unwrap()
    }

    #[test]
    fn homology_conventions() {
        let caps = Caps::default();
        assert!(SimplicialComplex::void(3).reduced_homology(Field::Rational, &caps).unwrap().is_empty());
        assert_eq!(
            SimplicialComplex::irrelevant(3).reduced_homology(Field::Rational, &caps).unwrap(),
            vec![1]
        );
    }

    #[test]
    fn small_homology_examples() {
        let caps = Caps::default();
        let two_points = SimplicialComplex::new(2, sets(&[&[0], &[1]])).unwrap();
        assert_eq!(two_points.reduced_homology(Field::Rational, &caps).unwrap(), vec![0, 1]);
        let circle = SimplicialComplex::new(3, sets(&[&[0, 1], &[1, 2], &[0, 2]])).unwrap();
        assert_eq!(circle.reduced_homology(Field::Rational, &caps).unwrap(), vec![0, 0, 1]);
        let simplex = SimplicialComplex::new(3, sets(&[&[0, 1, 2]])).unwrap();
        assert_eq!(simplex.reduced_homology(Field::Rational, &caps).unwrap(), vec![0, 0, 0, 0]);
    }

    #[test]
    fn projective_plane_depends_on_field() {
        let caps = Caps::default();
        let rp2 = projective_plane();
        assert_eq!(rp2.facets().len(), 10);
        assert_eq!(rp2.reduced_homology(Field::Rational, &caps).unwrap(), vec![0, 0, 0, 0]);
        assert_eq!(rp2.reduced_homology(Field::Prime(2), &caps).unwrap(), vec![0, 0, 1, 1]);
        assert_eq!(rp2.reduced_homology(Field::Prime(3), &caps).unwrap(), vec![0, 0, 0, 0]);
    }

    #[test]
    fn stanley_reisner_examples() {
        let c2 = VarContext::numbered("x", 2);
        let c3 = VarContext::numbered("x", 3);
        let d = SimplicialComplex::stanley_reisner(&MonomialIdeal::parse(&c2, "x1*x2").unwrap()).unwrap();
        assert_eq!(d.facets(), sets(&[&[0], &[1]]).as_slice());
        let d = SimplicialComplex::stanley_reisner(&MonomialIdeal::parse(&c3, "x1*x2*x3").unwrap()).unwrap();
        assert_eq!(d.facets(), sets(&[&[0, 1], &[0, 2], &[1, 2]]).as_slice());
        let tri = MonomialIdeal::parse(&c3, "x1*x2, x2*x3, x1*x3").unwrap();
        let d = SimplicialComplex::stanley_reisner(&tri).unwrap();
        assert_eq!(d.facets(), sets(&[&[0], &[1], &[2]]).as_slice());
        assert_eq!(d.nonface_ideal(&c3).unwrap(), tri);
        assert!(SimplicialComplex::stanley_reisner(&MonomialIdeal::parse(&c3, "x1^2").unwrap()).is_err());
    }

    #[test]
    fn links_and_skeletons() {
        let tri = SimplicialComplex::new(3, sets(&[&[0, 1, 2]])).unwrap();
        assert_eq!(tri.skeleton(1).facets(), sets(&[&[0, 1], &[0, 2], &[1, 2]]).as_slice());
        assert_eq!(tri.skeleton(-1), SimplicialComplex::irrelevant(3));
        assert_eq!(tri.link(VarSet::from_indices([0])).facets(), sets(&[&[1, 2]]).as_slice());
        let pts = SimplicialComplex::new(3, sets(&[&[0], &[1]])).unwrap();
        assert!(pts.link(VarSet::from_indices([2])).is_void());
    }

    #[test]
    fn reisner_examples() {
        let caps = Caps::default();
        let circle = SimplicialComplex::new(3, sets(&[&[0, 1], &[1, 2], &[0, 2]])).unwrap();
        assert!(circle.is_cohen_macaulay(Field::Rational, &caps).unwrap());
        let two_edges = SimplicialComplex::new(4, sets(&[&[0, 1], &[2, 3]])).unwrap();
        assert!(!two_edges.is_cohen_macaulay(Field::Rational, &caps).unwrap());
        let rp2 = projective_plane();
        assert!(!rp2.is_cohen_macaulay(Field::Prime(2), &caps).unwrap());
        assert!(rp2.is_cohen_macaulay(Field::Rational, &caps).unwrap());
    }
}
