use std::fmt;

/// Maximum number of variables a [`VarSet`] can address.
pub const MAX_SET_VARS: usize = 128;

/// A subset of variable (or vertex) indices, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VarSet(u128);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn from_bits(bits: u128) -> Self {
        VarSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        VarSet(1u128 << i)
    }

    /// The set {0, .., n-1}.
    pub fn full(n: usize) -> Self {
        if n >= MAX_SET_VARS {
            VarSet(u128::MAX)
        } else {
            VarSet((1u128 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(VarSet::EMPTY, |s, i| s.with(i))
    }

    pub fn with(self, i: usize) -> Self {
        VarSet(self.0 | (1u128 << i))
    }

    pub fn without(self, i: usize) -> Self {
        VarSet(self.0 & !(1u128 << i))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VarSet) -> Self {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VarSet) -> Self {
        VarSet(self.0 & other.0)
    }

    pub fn difference(self, other: VarSet) -> Self {
        VarSet(self.0 & !other.0)
    }

    pub fn meets(self, other: VarSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Lexicographic comparison of the sorted index lists.
    pub fn lex_cmp(self, other: VarSet) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Keep only the inclusion-minimal sets, sorted by size then lexicographically.
pub fn minimal_sets(mut sets: Vec<VarSet>) -> Vec<VarSet> {
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then(a.lex_cmp(*b)));
    sets.dedup();
    let mut kept: Vec<VarSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept
}

/// Keep only the inclusion-maximal sets.
pub fn maximal_sets(mut sets: Vec<VarSet>) -> Vec<VarSet> {
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then(a.lex_cmp(*b)));
    sets.dedup();
    let mut kept: Vec<VarSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept
}
