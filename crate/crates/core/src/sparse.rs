//! Sparse matrices in triplet form and fraction-free exact rank.
//!
//! Assembled coboundary matrices are mostly zeros, so they are stored as
//! sorted `(row, col, value)` triplets. Rank is computed by incremental
//! echelon reduction over integer vectors: each vector is cleared of
//! denominators, reduced against the existing pivots with the cross-multiplied
//! update `a*v - b*p`, and then divided by the gcd of its entries. No
//! fractions are created, and the content division keeps entries from
//! growing.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

type SparseVec = Vec<(usize, Scalar)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    /// Sorted by (row, col), no zeros, no duplicates.
    entries: Vec<(usize, usize, Scalar)>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> SparseMatrix {
        SparseMatrix { rows, cols, entries: Vec::new() }
    }

    /// Builds from unsorted triplets; duplicates are summed, zeros dropped.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> SparseMatrix {
        let mut map: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "triplet ({r}, {c}) outside {rows}x{cols}");
            if v.is_zero() {
                continue;
            }
            *map.entry((r, c)).or_insert(Scalar::ZERO) += v;
        }
        let entries =
            map.into_iter().filter(|(_, v)| !v.is_zero()).map(|((r, c), v)| (r, c, v)).collect();
        SparseMatrix { rows, cols, entries }
    }

    /// Builds from dense columns, in column order.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> SparseMatrix {
        let triplets = columns.iter().enumerate().flat_map(|(c, col)| {
            col.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(move |(r, v)| (r, c, v.clone()))
        });
        SparseMatrix::from_triplets(rows, columns.len(), triplets)
    }

    pub fn from_dense(m: &Matrix) -> SparseMatrix {
        SparseMatrix::from_columns(m.rows(), &m.columns())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn triplets(&self) -> &[(usize, usize, Scalar)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        match self.entries.binary_search_by(|(er, ec, _)| (*er, *ec).cmp(&(r, c))) {
            Ok(i) => self.entries[i].2.clone(),
            Err(_) => Scalar::ZERO,
        }
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.rows, self.cols);
        for (r, c, v) in &self.entries {
            m[(*r, *c)] = v.clone();
        }
        m
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix::from_triplets(
            self.cols,
            self.rows,
            self.entries.iter().map(|(r, c, v)| (*c, *r, v.clone())),
        )
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        let mut v = alloc::vec![Scalar::ZERO; self.rows];
        for (r, cc, x) in &self.entries {
            if *cc == c {
                v[*r] = x.clone();
            }
        }
        v
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        let mut out = alloc::vec![Scalar::ZERO; self.rows];
        for (r, c, x) in &self.entries {
            crate::scalar::fma(&mut out[*r], x, &v[*c]);
        }
        out
    }

    /// `self * other`.
    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        // row-major iteration of self against row-grouped other
        let mut other_rows: Vec<Vec<(usize, &Scalar)>> = alloc::vec![Vec::new(); other.rows];
        for (r, c, v) in &other.entries {
            other_rows[*r].push((*c, v));
        }
        let mut acc: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for (r, k, a) in &self.entries {
            for (c, b) in &other_rows[*k] {
                *acc.entry((*r, *c)).or_insert(Scalar::ZERO) += a * *b;
            }
        }
        Ok(SparseMatrix::from_triplets(self.rows, other.cols, acc.into_iter().map(|((r, c), v)| (r, c, v))))
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.shape(), other.shape());
        let neg = other.entries.iter().map(|(r, c, v)| (*r, *c, -v));
        SparseMatrix::from_triplets(
            self.rows,
            self.cols,
            self.entries.iter().cloned().chain(neg),
        )
    }

    /// Exact rank by fraction-free elimination over whichever of rows or
    /// columns is the smaller family of vectors.
    pub fn rank(&self) -> usize {
        let by_columns = self.cols <= self.rows;
        let count = if by_columns { self.cols } else { self.rows };
        let mut vectors: Vec<SparseVec> = alloc::vec![Vec::new(); count];
        for (r, c, v) in &self.entries {
            let (which, pos) = if by_columns { (*c, *r) } else { (*r, *c) };
            vectors[which].push((pos, v.clone()));
        }
        let mut echelon = IntegerEchelon::default();
        for mut v in vectors {
            v.sort_by_key(|(i, _)| *i);
            echelon.insert(v);
        }
        echelon.rank()
    }
}

/// Integer row echelon form keyed by leading position.
#[derive(Default)]
pub(crate) struct IntegerEchelon {
    pivots: BTreeMap<usize, SparseVec>,
}

impl IntegerEchelon {
    pub(crate) fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` against the pivots; stores it as a new pivot row if it is
    /// independent. Returns whether the rank grew.
    pub(crate) fn insert(&mut self, v: SparseVec) -> bool {
        let mut v = primitive_part(v);
        while let Some((lead, lead_val)) = v.first().cloned() {
            match self.pivots.get(&lead) {
                None => {
                    self.pivots.insert(lead, v);
                    return true;
                }
                Some(p) => {
                    let p_lead = &p[0].1;
                    let g = lead_val.int_gcd(p_lead);
                    let a = p_lead / &g;
                    let b = &lead_val / &g;
                    v = primitive_part(combine(&a, &v, &b, p));
                }
            }
        }
        false
    }
}

/// `a*x - b*y` for sorted sparse vectors.
fn combine(a: &Scalar, x: &SparseVec, b: &Scalar, y: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let xi = x.get(i).map(|e| e.0);
        let yj = y.get(j).map(|e| e.0);
        let (pos, val) = match (xi, yj) {
            (Some(p), Some(q)) if p == q => {
                let v = a * &x[i].1 - b * &y[j].1;
                i += 1;
                j += 1;
                (p, v)
            }
            (Some(p), Some(q)) if p < q => {
                i += 1;
                (p, a * &x[i - 1].1)
            }
            (Some(p), None) => {
                i += 1;
                (p, a * &x[i - 1].1)
            }
            (_, Some(q)) => {
                j += 1;
                (q, -(b * &y[j - 1].1))
            }
            (None, None) => unreachable!(),
        };
        if !val.is_zero() {
            out.push((pos, val));
        }
    }
    out
}

/// Clears denominators and divides by the content, leaving a primitive
/// integer vector with the same span.
fn primitive_part(v: SparseVec) -> SparseVec {
    if v.is_empty() {
        return v;
    }
    let mut lcm = Scalar::ONE;
    for (_, x) in &v {
        if !x.is_integer() {
            lcm = lcm.int_lcm(&x.denom_scalar());
        }
    }
    let mut v: SparseVec = if lcm.is_one() {
        v
    } else {
        v.into_iter().map(|(i, x)| (i, x * &lcm)).collect()
    };
    let mut g = Scalar::ZERO;
    for (_, x) in &v {
        g = x.int_gcd(&g);
        if g.is_one() {
            return v;
        }
    }
    if !g.is_one() && !g.is_zero() {
        for (_, x) in v.iter_mut() {
            *x = &*x / &g;
        }
    }
    v
}
