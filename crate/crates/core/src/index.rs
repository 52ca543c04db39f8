//! Index spaces for wedge and tensor bases.

use alloc::vec;
use alloc::vec::Vec;

use crate::scalar::Scalar;

/// Number of basis bivectors `e_i ∧ e_j` (i < j) of a `d`-dimensional space.
pub const fn pair_count(d: usize) -> usize {
    d * d.saturating_sub(1) / 2
}

/// Canonical basis label of `∧²` of a `d`-dimensional space: `(i, j)` with
/// `i < j`, numbered lexicographically from zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairIndex {
    pub i: usize,
    pub j: usize,
}

impl PairIndex {
    /// Lexicographic position of `(i, j)` among the pairs of a `d`-dim space.
    pub fn position(self, d: usize) -> usize {
        debug_assert!(self.i < self.j && self.j < d);
        self.i * d - self.i * (self.i + 1) / 2 + (self.j - self.i - 1)
    }

    pub fn from_position(pos: usize, d: usize) -> PairIndex {
        let mut rest = pos;
        for i in 0..d {
            let row = d - i - 1;
            if rest < row {
                return PairIndex { i, j: i + 1 + rest };
            }
            rest -= row;
        }
        panic!("pair position {pos} out of range for dimension {d}");
    }

    /// Resolves `e_a ∧ e_b` to a canonical position and sign; `None` if `a == b`.
    pub fn resolve(a: usize, b: usize, d: usize) -> Option<(usize, bool)> {
        match a.cmp(&b) {
            core::cmp::Ordering::Less => Some((PairIndex { i: a, j: b }.position(d), false)),
            core::cmp::Ordering::Greater => Some((PairIndex { i: b, j: a }.position(d), true)),
            core::cmp::Ordering::Equal => None,
        }
    }

    pub fn all(d: usize) -> impl Iterator<Item = PairIndex> {
        (0..d).flat_map(move |i| (i + 1..d).map(move |j| PairIndex { i, j }))
    }
}

/// Shape of a cochain table: `degree` wedge-pair slots over a source of
/// dimension `source`, one vector slot, values in a space of dimension
/// `target`. Flat layout is lexicographic in (pairs..., vector, target).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CochainShape {
    pub degree: usize,
    pub source: usize,
    pub target: usize,
}

impl CochainShape {
    pub fn pairs(&self) -> usize {
        pair_count(self.source)
    }

    /// Number of argument tuples `(pair_1, ..., pair_p, x)`.
    pub fn arguments(&self) -> usize {
        self.pairs().pow(self.degree as u32) * self.source
    }

    pub fn len(&self) -> usize {
        self.arguments() * self.target
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Row offset of an argument tuple given as pair positions and a vector index.
    pub fn argument_index(&self, pairs: &[usize], x: usize) -> usize {
        debug_assert_eq!(pairs.len(), self.degree);
        let p = self.pairs();
        let mut idx = 0;
        for &q in pairs {
            idx = idx * p + q;
        }
        idx * self.source + x
    }

    /// Inverse of [`argument_index`](Self::argument_index).
    pub fn decode_argument(&self, mut idx: usize) -> (Vec<usize>, usize) {
        let x = idx % self.source;
        idx /= self.source;
        let p = self.pairs();
        let mut pairs = vec![0; self.degree];
        for slot in (0..self.degree).rev() {
            pairs[slot] = idx % p;
            idx /= p;
        }
        (pairs, x)
    }
}

/// A `(a, b)`-shuffle: the first `a` entries and the last `b` entries of
/// `order` are each increasing. `negative` is the signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shuffle {
    pub order: Vec<usize>,
    pub negative: bool,
}

/// All `(a, b)`-shuffles of `0..a+b`, in lexicographic order of the first block.
pub fn shuffles(a: usize, b: usize) -> Vec<Shuffle> {
    let n = a + b;
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(a);
    fn rec(start: usize, n: usize, a: usize, chosen: &mut Vec<usize>, out: &mut Vec<Shuffle>) {
        if chosen.len() == a {
            let mut order = chosen.clone();
            order.extend((0..n).filter(|i| !chosen.contains(i)));
            let mut inversions = 0;
            for x in 0..n {
                for y in x + 1..n {
                    if order[x] > order[y] {
                        inversions += 1;
                    }
                }
            }
            out.push(Shuffle { order, negative: inversions % 2 == 1 });
            return;
        }
        for i in start..n {
            chosen.push(i);
            rec(i + 1, n, a, chosen, out);
            chosen.pop();
        }
    }
    rec(0, n, a, &mut chosen, &mut out);
    out
}

/// An element of `∧²V` in the canonical pair basis, stored sparsely.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Bivector {
    dim: usize,
    /// Sorted by position, no zeros.
    terms: Vec<(usize, Scalar)>,
}

impl Bivector {
    pub fn zero(dim: usize) -> Bivector {
        Bivector { dim, terms: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &[(usize, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `e_a ∧ e_b`.
    pub fn basis(a: usize, b: usize, dim: usize) -> Bivector {
        match PairIndex::resolve(a, b, dim) {
            None => Bivector::zero(dim),
            Some((pos, neg)) => {
                Bivector { dim, terms: vec![(pos, Scalar::sign(neg))] }
            }
        }
    }

    /// Builds from coordinates in the pair basis.
    pub fn from_coordinates(dim: usize, coords: &[Scalar]) -> Bivector {
        assert_eq!(coords.len(), pair_count(dim));
        let terms = coords
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect();
        Bivector { dim, terms }
    }

    pub fn coordinates(&self) -> Vec<Scalar> {
        let mut v = vec![Scalar::ZERO; pair_count(self.dim)];
        for (i, s) in &self.terms {
            v[*i] = s.clone();
        }
        v
    }

    /// `x ∧ y` for dense vectors.
    pub fn wedge(x: &[Scalar], y: &[Scalar]) -> Bivector {
        let d = x.len();
        assert_eq!(d, y.len());
        let mut terms = Vec::new();
        for p in PairIndex::all(d) {
            let v = &x[p.i] * &y[p.j] - &x[p.j] * &y[p.i];
            if !v.is_zero() {
                terms.push((p.position(d), v));
            }
        }
        Bivector { dim: d, terms }
    }

    /// `v ∧ e_b + e_a ∧ w`, the derivation-style update of the wedge slot.
    pub(crate) fn insertion(v: &[Scalar], b: usize, a: usize, w: &[Scalar]) -> Bivector {
        let d = v.len();
        let mut coords = vec![Scalar::ZERO; pair_count(d)];
        for (k, s) in v.iter().enumerate() {
            if let Some((pos, neg)) = PairIndex::resolve(k, b, d) {
                if neg {
                    coords[pos] -= s;
                } else {
                    coords[pos] += s;
                }
            }
        }
        for (k, s) in w.iter().enumerate() {
            if let Some((pos, neg)) = PairIndex::resolve(a, k, d) {
                if neg {
                    coords[pos] -= s;
                } else {
                    coords[pos] += s;
                }
            }
        }
        Bivector::from_coordinates(d, &coords)
    }

    pub fn add(&self, other: &Bivector) -> Bivector {
        assert_eq!(self.dim, other.dim);
        let a = self.coordinates();
        let b = other.coordinates();
        let c: Vec<Scalar> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        Bivector::from_coordinates(self.dim, &c)
    }

    pub fn scale(&self, s: &Scalar) -> Bivector {
        let terms = if s.is_zero() {
            Vec::new()
        } else {
            self.terms.iter().map(|(i, v)| (*i, v * s)).collect()
        };
        Bivector { dim: self.dim, terms }
    }

    /// Expands into `(a, b, coefficient)` with `a < b`.
    pub fn wedge_terms(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.terms.iter().map(move |(pos, v)| {
            let p = PairIndex::from_position(*pos, self.dim);
            (p.i, p.j, v)
        })
    }
}
