//! 3-Lie algebras, linear maps and morphisms between them, subspaces, and
//! quotient splittings.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{expect_dim, Error, Result};
use crate::index::{pair_count, PairIndex};
use crate::matrix::{basis_vector, vec_add_scaled, vec_is_zero, vec_sub, Matrix};
use crate::scalar::Scalar;

/// A totally antisymmetric trilinear bracket on `K^d`, not yet checked
/// against the fundamental identity.
///
/// Stored as `table[(pair(i, j) * d + k) * d + l]` = coefficient of `e_l` in
/// `π(e_i, e_j, e_k)` for `i < j` and every `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketTensor {
    dim: usize,
    table: Vec<Scalar>,
}

impl BracketTensor {
    pub fn zero(dim: usize) -> BracketTensor {
        BracketTensor { dim, table: vec![Scalar::ZERO; pair_count(dim) * dim * dim] }
    }

    /// Builds from `(i, j, k, l, value)` meaning `π(e_i, e_j, e_k)` has
    /// `value` at `e_l`, with `i < j < k` (0-based). Repeated entries add up.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, usize, Scalar)]) -> Result<BracketTensor> {
        let mut t = BracketTensor::zero(dim);
        for (i, j, k, l, v) in entries {
            for &index in &[*i, *j, *k, *l] {
                if index >= dim {
                    return Err(Error::IndexOutOfRange { index, bound: dim });
                }
            }
            if !(i < j && j < k) {
                return Err(Error::NonCanonicalTriple { i: *i, j: *j, k: *k });
            }
            t.add_canonical(*i, *j, *k, *l, v);
        }
        Ok(t)
    }

    /// Builds from `([i, j, k], π(e_i, e_j, e_k))` with `i < j < k`.
    pub fn from_triples(dim: usize, triples: &[([usize; 3], Vec<Scalar>)]) -> Result<BracketTensor> {
        let mut entries = Vec::new();
        for ([i, j, k], value) in triples {
            expect_dim(dim, value.len())?;
            if !(i < j && j < k) {
                return Err(Error::NonCanonicalTriple { i: *i, j: *j, k: *k });
            }
            for (l, v) in value.iter().enumerate() {
                if !v.is_zero() {
                    entries.push((*i, *j, *k, l, v.clone()));
                }
            }
        }
        BracketTensor::from_entries(dim, &entries)
    }

    fn add_canonical(&mut self, i: usize, j: usize, k: usize, l: usize, v: &Scalar) {
        let d = self.dim;
        // π(i,j,k) = -π(i,k,j) = π(j,k,i)
        let slots = [(i, j, k, false), (i, k, j, true), (j, k, i, false)];
        for (a, b, c, neg) in slots {
            let pos = PairIndex { i: a, j: b }.position(d);
            let cell = &mut self.table[(pos * d + c) * d + l];
            if neg {
                *cell -= v;
            } else {
                *cell += v;
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Flat table in the layout of a degree-1 cochain.
    pub fn table(&self) -> &[Scalar] {
        &self.table
    }

    pub(crate) fn cell(&self, pair: usize, k: usize) -> &[Scalar] {
        let d = self.dim;
        &self.table[(pair * d + k) * d..(pair * d + k + 1) * d]
    }

    /// `π(e_i, e_j, e_k)`.
    pub fn structure(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        match PairIndex::resolve(i, j, self.dim) {
            None => vec![Scalar::ZERO; self.dim],
            Some((pos, neg)) => {
                let c = self.cell(pos, k);
                if neg {
                    c.iter().map(|v| -v).collect()
                } else {
                    c.to_vec()
                }
            }
        }
    }

    /// Nonzero brackets `π(e_i, e_j, e_k)` with `i < j < k`, lexicographic.
    pub fn entries(&self) -> Vec<([usize; 3], Vec<Scalar>)> {
        let d = self.dim;
        let mut out = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    let v = self.structure(i, j, k);
                    if !vec_is_zero(&v) {
                        out.push(([i, j, k], v));
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        vec_is_zero(&self.table)
    }

    /// Componentwise bracket on `K^{d_a} ⊕ K^{d_b}`.
    pub fn direct_sum(&self, other: &BracketTensor) -> BracketTensor {
        let da = self.dim;
        let mut entries = Vec::new();
        for ([i, j, k], v) in self.entries() {
            for (l, x) in v.into_iter().enumerate() {
                entries.push((i, j, k, l, x));
            }
        }
        for ([i, j, k], v) in other.entries() {
            for (l, x) in v.into_iter().enumerate() {
                entries.push((da + i, da + j, da + k, da + l, x));
            }
        }
        BracketTensor::from_entries(da + other.dim, &entries).expect("indices in range")
    }

    /// `π(e_a, e_b, z)`.
    pub fn bracket_basis(&self, a: usize, b: usize, z: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim;
        let mut out = vec![Scalar::ZERO; d];
        if let Some((pos, neg)) = PairIndex::resolve(a, b, d) {
            for (c, zc) in z.iter().enumerate() {
                if zc.is_zero() {
                    continue;
                }
                let coeff = if neg { -zc } else { zc.clone() };
                vec_add_scaled(&mut out, &coeff, self.cell(pos, c));
            }
        }
        out
    }

    /// `π(x, y, z)` for arbitrary vectors.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Result<Vec<Scalar>> {
        let d = self.dim;
        expect_dim(d, x.len())?;
        expect_dim(d, y.len())?;
        expect_dim(d, z.len())?;
        let mut out = vec![Scalar::ZERO; d];
        for p in PairIndex::all(d) {
            let w = &x[p.i] * &y[p.j] - &x[p.j] * &y[p.i];
            if w.is_zero() {
                continue;
            }
            let pos = p.position(d);
            for (c, zc) in z.iter().enumerate() {
                if !zc.is_zero() {
                    vec_add_scaled(&mut out, &(&w * zc), self.cell(pos, c));
                }
            }
        }
        Ok(out)
    }

    /// Left side minus right side of the fundamental identity on basis vectors
    /// `(x1, x2, x3, x4, x5)`.
    pub fn fundamental_identity_residual(&self, t: [usize; 5]) -> Vec<Scalar> {
        let [a, b, c, e, g] = t;
        let lhs = self.bracket_basis(a, b, &self.structure(c, e, g));
        // π(π(x1,x2,x3),x4,x5) = π(x4,x5,π(x1,x2,x3)), and cyclically
        let r1 = self.bracket_basis(e, g, &self.structure(a, b, c));
        let r2 = self.bracket_basis(g, c, &self.structure(a, b, e));
        let r3 = self.bracket_basis(c, e, &self.structure(a, b, g));
        let mut out = lhs;
        for r in [r1, r2, r3] {
            out = vec_sub(&out, &r);
        }
        out
    }

    /// Checks the fundamental identity on all `d^5` basis tuples in
    /// lexicographic order. Returns the number of tuples checked.
    pub fn check_fundamental_identity(&self) -> Result<usize> {
        let d = self.dim;
        let mut count = 0;
        for n in 0..d.pow(5) {
            let mut t = [0; 5];
            let mut rest = n;
            for slot in (0..5).rev() {
                t[slot] = rest % d;
                rest /= d;
            }
            let r = self.fundamental_identity_residual(t);
            if !vec_is_zero(&r) {
                return Err(Error::FundamentalIdentityViolation { tuple: t, residual: r });
            }
            count += 1;
        }
        Ok(count)
    }
}

/// A bracket tensor that satisfies the fundamental identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeLieAlgebra {
    tensor: BracketTensor,
}

impl ThreeLieAlgebra {
    pub fn new(tensor: BracketTensor) -> Result<ThreeLieAlgebra> {
        tensor.check_fundamental_identity()?;
        Ok(ThreeLieAlgebra { tensor })
    }

    /// Antisymmetrizes the `i < j < k` entries and validates.
    pub fn make(dim: usize, entries: &[(usize, usize, usize, usize, Scalar)]) -> Result<ThreeLieAlgebra> {
        ThreeLieAlgebra::new(BracketTensor::from_entries(dim, entries)?)
    }

    pub fn abelian(dim: usize) -> ThreeLieAlgebra {
        ThreeLieAlgebra { tensor: BracketTensor::zero(dim) }
    }

    pub fn dim(&self) -> usize {
        self.tensor.dim
    }

    pub fn tensor(&self) -> &BracketTensor {
        &self.tensor
    }

    pub fn is_abelian(&self) -> bool {
        self.tensor.is_zero()
    }

    pub fn structure(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        self.tensor.structure(i, j, k)
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Result<Vec<Scalar>> {
        self.tensor.bracket(x, y, z)
    }

    pub fn bracket_basis(&self, a: usize, b: usize, z: &[Scalar]) -> Vec<Scalar> {
        self.tensor.bracket_basis(a, b, z)
    }

    /// The bracket restricted to a subalgebra, in the coordinates of its basis.
    pub fn restrict(&self, split: &QuotientSplit) -> Result<ThreeLieAlgebra> {
        let h = split.subspace();
        let closure = subspace_closure_check(self, h)?;
        if let Some((triple, residual)) = closure.witness {
            return Err(Error::NotASubalgebra { triple, residual });
        }
        let k = h.dim();
        let mut triples = Vec::new();
        for a in 0..k {
            for b in a + 1..k {
                for c in b + 1..k {
                    let v = self.bracket(&h.vector(a), &h.vector(b), &h.vector(c))?;
                    triples.push(([a, b, c], split.h_coordinates(&v)));
                }
            }
        }
        Ok(ThreeLieAlgebra { tensor: BracketTensor::from_triples(k, &triples)? })
    }
}

/// The direct sum `A ⊕ B`: componentwise bracket, mixed brackets zero.
/// Basis of `A` first, then `B`.
pub fn direct_sum(a: &ThreeLieAlgebra, b: &ThreeLieAlgebra) -> ThreeLieAlgebra {
    ThreeLieAlgebra { tensor: a.tensor.direct_sum(&b.tensor) }
}

/// A linear map `K^cols -> K^rows`; column `j` is the image of `e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> LinearMap {
        LinearMap { matrix }
    }

    pub fn zero(target: usize, source: usize) -> LinearMap {
        LinearMap { matrix: Matrix::zeros(target, source) }
    }

    pub fn identity(n: usize) -> LinearMap {
        LinearMap { matrix: Matrix::identity(n) }
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn image(&self, j: usize) -> Vec<Scalar> {
        self.matrix.column(j)
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        expect_dim(self.source_dim(), v.len())?;
        Ok(self.matrix.apply(v))
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        LinearMap { matrix: self.matrix.add(&other.matrix) }
    }

    pub fn scale(&self, s: &Scalar) -> LinearMap {
        LinearMap { matrix: self.matrix.scale(s) }
    }
}

/// Defect `μ(f e_i, f e_j, f e_k) − f(π(e_i, e_j, e_k))` for every `i < j < k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismDefect {
    pub defects: Vec<([usize; 3], Vec<Scalar>)>,
}

impl MorphismDefect {
    pub fn is_morphism(&self) -> bool {
        self.defects.iter().all(|(_, v)| vec_is_zero(v))
    }

    pub fn first_failure(&self) -> Option<&([usize; 3], Vec<Scalar>)> {
        self.defects.iter().find(|(_, v)| !vec_is_zero(v))
    }

    pub fn at(&self, triple: [usize; 3]) -> Option<&[Scalar]> {
        self.defects.iter().find(|(t, _)| *t == triple).map(|(_, v)| v.as_slice())
    }
}

pub fn check_morphism(f: &LinearMap, a: &ThreeLieAlgebra, b: &ThreeLieAlgebra) -> Result<MorphismDefect> {
    expect_dim(a.dim(), f.source_dim())?;
    expect_dim(b.dim(), f.target_dim())?;
    let d = a.dim();
    let images: Vec<Vec<Scalar>> = (0..d).map(|j| f.image(j)).collect();
    let mut defects = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            for k in j + 1..d {
                let lhs = b.bracket(&images[i], &images[j], &images[k])?;
                let rhs = f.apply(&a.structure(i, j, k))?;
                defects.push(([i, j, k], vec_sub(&lhs, &rhs)));
            }
        }
    }
    Ok(MorphismDefect { defects })
}

/// A linear map that preserves the brackets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    source: ThreeLieAlgebra,
    target: ThreeLieAlgebra,
    map: LinearMap,
}

impl Morphism {
    pub fn new(map: LinearMap, source: ThreeLieAlgebra, target: ThreeLieAlgebra) -> Result<Morphism> {
        let defect = check_morphism(&map, &source, &target)?;
        if let Some((triple, d)) = defect.first_failure() {
            return Err(Error::NotAMorphism { triple: *triple, defect: d.clone() });
        }
        Ok(Morphism { source, target, map })
    }

    pub fn identity(a: &ThreeLieAlgebra) -> Morphism {
        Morphism { source: a.clone(), target: a.clone(), map: LinearMap::identity(a.dim()) }
    }

    pub fn zero(source: &ThreeLieAlgebra, target: &ThreeLieAlgebra) -> Morphism {
        Morphism {
            source: source.clone(),
            target: target.clone(),
            map: LinearMap::zero(target.dim(), source.dim()),
        }
    }

    pub fn source(&self) -> &ThreeLieAlgebra {
        &self.source
    }

    pub fn target(&self) -> &ThreeLieAlgebra {
        &self.target
    }

    pub fn map(&self) -> &LinearMap {
        &self.map
    }
}

/// A subspace of `K^d` given by linearly independent spanning columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    basis: Matrix,
}

impl Subspace {
    pub fn new(ambient: usize, vectors: &[Vec<Scalar>]) -> Result<Subspace> {
        let basis = Matrix::from_columns(ambient, vectors)?;
        let rank = basis.rank();
        if rank < vectors.len() {
            return Err(Error::LinearlyDependent { rank, count: vectors.len() });
        }
        Ok(Subspace { basis })
    }

    /// Span of the given standard basis vectors.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Result<Subspace> {
        let mut vectors = Vec::new();
        for &i in indices {
            if i >= ambient {
                return Err(Error::IndexOutOfRange { index: i, bound: ambient });
            }
            vectors.push(basis_vector(ambient, i));
        }
        Subspace::new(ambient, &vectors)
    }

    pub fn whole(ambient: usize) -> Subspace {
        Subspace { basis: Matrix::identity(ambient) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn vector(&self, i: usize) -> Vec<Scalar> {
        self.basis.column(i)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.basis.spans(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceClosure {
    /// First basis triple of `H` whose bracket leaves `H`, with the bracket's
    /// component along the canonical complement.
    pub witness: Option<([usize; 3], Vec<Scalar>)>,
}

impl SubspaceClosure {
    pub fn is_closed(&self) -> bool {
        self.witness.is_none()
    }
}

pub fn subspace_closure_check(a: &ThreeLieAlgebra, h: &Subspace) -> Result<SubspaceClosure> {
    expect_dim(a.dim(), h.ambient_dim())?;
    let split = QuotientSplit::canonical(h);
    let k = h.dim();
    let vectors: Vec<Vec<Scalar>> = (0..k).map(|i| h.vector(i)).collect();
    for i in 0..k {
        for j in i + 1..k {
            for l in j + 1..k {
                let v = a.bracket(&vectors[i], &vectors[j], &vectors[l])?;
                let q = split.project(&v);
                if !vec_is_zero(&q) {
                    let residual = split.section(&q);
                    return Ok(SubspaceClosure { witness: Some(([i, j, l], residual)) });
                }
            }
        }
    }
    Ok(SubspaceClosure { witness: None })
}

/// A splitting `K^d = H ⊕ C` with projection `p: K^d → K^d/H` and section
/// `s` (`p s = id`).
///
/// The quotient basis is always the one induced by the canonical complement
/// (standard basis vectors off the echelon pivots of `H`); an alternate
/// complement changes only the section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSplit {
    subspace: Subspace,
    complement: Matrix,
    p: Matrix,
    s: Matrix,
    h_coords: Matrix,
}

impl QuotientSplit {
    pub fn canonical(h: &Subspace) -> QuotientSplit {
        let d = h.ambient_dim();
        let k = h.dim();
        let (_, pivots) = h.basis().transpose().rref();
        let free: Vec<usize> = (0..d).filter(|c| !pivots.contains(c)).collect();
        let complement_vectors: Vec<Vec<Scalar>> = free.iter().map(|&c| basis_vector(d, c)).collect();
        let complement = Matrix::from_columns(d, &complement_vectors).expect("columns of length d");
        let mut columns = h.basis().columns();
        columns.extend(complement_vectors);
        let m = Matrix::from_columns(d, &columns).expect("columns of length d");
        let inv = m.inverse().expect("subspace plus pivot complement spans");
        let h_coords = Matrix::from_fn(k, d, |i, j| inv[(i, j)].clone());
        let p = Matrix::from_fn(d - k, d, |i, j| inv[(k + i, j)].clone());
        QuotientSplit { subspace: h.clone(), s: complement.clone(), complement, p, h_coords }
    }

    /// Same projection, section through the span of `complement`.
    pub fn with_complement(h: &Subspace, complement: &[Vec<Scalar>]) -> Result<QuotientSplit> {
        let base = QuotientSplit::canonical(h);
        let m = base.quotient_dim();
        expect_dim(m, complement.len())?;
        let c = Matrix::from_columns(h.ambient_dim(), complement)?;
        let pc = base.p.mul(&c)?;
        let Some(inv) = pc.inverse() else {
            return Err(Error::NotAComplement { rank: pc.rank(), needed: m });
        };
        let s = c.mul(&inv)?;
        Ok(QuotientSplit { complement: c, s, ..base })
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    pub fn quotient_dim(&self) -> usize {
        self.p.rows()
    }

    pub fn complement(&self) -> &Matrix {
        &self.complement
    }

    pub fn projection(&self) -> &Matrix {
        &self.p
    }

    pub fn section_matrix(&self) -> &Matrix {
        &self.s
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.p.apply(v)
    }

    pub fn section(&self, q: &[Scalar]) -> Vec<Scalar> {
        self.s.apply(q)
    }

    /// Coordinates in the basis of `H` of the `H`-component of `v` along the
    /// canonical complement.
    pub fn h_coordinates(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.h_coords.apply(v)
    }

    /// `v − s(p(v))`, which lies in `H`.
    pub fn remove_section(&self, v: &[Scalar]) -> Vec<Scalar> {
        vec_sub(v, &self.section(&self.project(v)))
    }
}
