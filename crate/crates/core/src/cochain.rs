//! Cochains `Hom((∧²V)^{⊗p} ⊗ V, W)` stored as dense tables.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{BracketTensor, LinearMap};
use crate::error::{expect_dim, Error, Result};
use crate::index::{Bivector, CochainShape};
use crate::matrix::{vec_add_scaled, vec_is_zero, Matrix};
use crate::scalar::Scalar;

/// Whether a cochain takes values in its own source space (the graded Lie
/// algebra of the NR bracket) or in a second space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CochainKind {
    Endomorphism,
    Homomorphism,
}

/// Anything that can be evaluated on canonical basis arguments.
pub trait Multilinear {
    fn degree(&self) -> usize;
    fn source_dim(&self) -> usize;
    fn target_dim(&self) -> usize;
    /// `out += coeff * self(pairs..., e_x)`; `pairs` are canonical pair positions.
    fn accumulate(&self, pairs: &[usize], x: usize, coeff: &Scalar, out: &mut [Scalar]);
}

/// One pair slot of a mixed evaluation.
#[derive(Clone, Copy, Debug)]
pub(crate) enum Arg<'a> {
    Pair(usize),
    Wedge(&'a Bivector),
}

/// The final vector slot of a mixed evaluation.
#[derive(Clone, Copy, Debug)]
pub(crate) enum Last<'a> {
    Basis(usize),
    Vector(&'a [Scalar]),
}

/// `out += coeff * t(args..., last)`, expanding wedge and vector slots
/// multilinearly.
pub(crate) fn accumulate_mixed<T: Multilinear + ?Sized>(
    t: &T,
    args: &[Arg<'_>],
    last: Last<'_>,
    coeff: &Scalar,
    out: &mut [Scalar],
) {
    let mut pairs = Vec::with_capacity(args.len());
    expand(t, args, last, coeff, &mut pairs, out);
}

fn expand<T: Multilinear + ?Sized>(
    t: &T,
    args: &[Arg<'_>],
    last: Last<'_>,
    coeff: &Scalar,
    pairs: &mut Vec<usize>,
    out: &mut [Scalar],
) {
    if coeff.is_zero() {
        return;
    }
    match args.split_first() {
        Some((Arg::Pair(p), rest)) => {
            pairs.push(*p);
            expand(t, rest, last, coeff, pairs, out);
            pairs.pop();
        }
        Some((Arg::Wedge(w), rest)) => {
            for (p, c) in w.terms() {
                pairs.push(*p);
                expand(t, rest, last, &(coeff * c), pairs, out);
                pairs.pop();
            }
        }
        None => match last {
            Last::Basis(x) => t.accumulate(pairs, x, coeff, out),
            Last::Vector(v) => {
                for (x, c) in v.iter().enumerate() {
                    if !c.is_zero() {
                        t.accumulate(pairs, x, &(coeff * c), out);
                    }
                }
            }
        },
    }
}

/// A degree-`p` cochain: its value on `(e_{i1} ∧ e_{j1}, ..., e_x)` is stored
/// for canonical pairs in the lexicographic layout of [`CochainShape`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GCochain {
    kind: CochainKind,
    shape: CochainShape,
    data: Vec<Scalar>,
}

impl GCochain {
    pub fn zero(kind: CochainKind, degree: usize, source: usize, target: usize) -> GCochain {
        let shape = CochainShape { degree, source, target };
        if kind == CochainKind::Endomorphism {
            assert_eq!(source, target, "endomorphism cochain needs equal source and target");
        }
        GCochain { kind, shape, data: vec![Scalar::ZERO; shape.len()] }
    }

    pub fn endomorphism(degree: usize, dim: usize) -> GCochain {
        GCochain::zero(CochainKind::Endomorphism, degree, dim, dim)
    }

    pub fn homomorphism(degree: usize, source: usize, target: usize) -> GCochain {
        GCochain::zero(CochainKind::Homomorphism, degree, source, target)
    }

    pub fn from_data(kind: CochainKind, shape: CochainShape, data: Vec<Scalar>) -> Result<GCochain> {
        expect_dim(shape.len(), data.len())?;
        if kind == CochainKind::Endomorphism && shape.source != shape.target {
            return Err(Error::KindMismatch("endomorphism cochain needs equal source and target"));
        }
        Ok(GCochain { kind, shape, data })
    }

    /// The `index`-th canonical basis cochain of the given shape.
    pub fn basis_element(kind: CochainKind, shape: CochainShape, index: usize) -> GCochain {
        let mut c = GCochain::zero(kind, shape.degree, shape.source, shape.target);
        c.data[index] = Scalar::ONE;
        c
    }

    /// A linear map as a degree-0 cochain.
    pub fn from_linear_map(kind: CochainKind, f: &LinearMap) -> Result<GCochain> {
        let (src, tgt) = (f.source_dim(), f.target_dim());
        let shape = CochainShape { degree: 0, source: src, target: tgt };
        let m = f.matrix();
        let data = (0..src).flat_map(|x| (0..tgt).map(move |t| m[(t, x)].clone())).collect();
        GCochain::from_data(kind, shape, data)
    }

    /// A bracket tensor as a degree-1 endomorphism cochain.
    pub fn from_bracket(t: &BracketTensor) -> GCochain {
        let d = t.dim();
        GCochain {
            kind: CochainKind::Endomorphism,
            shape: CochainShape { degree: 1, source: d, target: d },
            data: t.table().to_vec(),
        }
    }

    /// A degree-0 cochain as a linear map.
    pub fn to_linear_map(&self) -> Result<LinearMap> {
        if self.shape.degree != 0 {
            return Err(Error::KindMismatch("only degree-0 cochains are linear maps"));
        }
        let (src, tgt) = (self.shape.source, self.shape.target);
        Ok(LinearMap::new(Matrix::from_fn(tgt, src, |t, x| self.data[x * tgt + t].clone())))
    }

    /// Same table, other kind tag.
    pub fn with_kind(mut self, kind: CochainKind) -> Result<GCochain> {
        if kind == CochainKind::Endomorphism && self.shape.source != self.shape.target {
            return Err(Error::KindMismatch("endomorphism cochain needs equal source and target"));
        }
        self.kind = kind;
        Ok(self)
    }

    pub fn kind(&self) -> CochainKind {
        self.kind
    }

    pub fn shape(&self) -> CochainShape {
        self.shape
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Scalar> {
        self.data
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        vec_is_zero(&self.data)
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|v| !v.is_zero()).count()
    }

    /// Value on canonical pair positions and basis vector `e_x`.
    pub fn value(&self, pairs: &[usize], x: usize) -> &[Scalar] {
        let row = self.shape.argument_index(pairs, x);
        let m = self.shape.target;
        &self.data[row * m..(row + 1) * m]
    }

    pub(crate) fn value_row(&self, row: usize) -> &[Scalar] {
        let m = self.shape.target;
        &self.data[row * m..(row + 1) * m]
    }

    pub fn degree(&self) -> usize {
        self.shape.degree
    }

    pub(crate) fn value_mut(&mut self, row: usize) -> &mut [Scalar] {
        let m = self.shape.target;
        &mut self.data[row * m..(row + 1) * m]
    }

    /// Evaluation on arbitrary bivectors and a vector.
    pub fn eval(&self, slots: &[Bivector], x: &[Scalar]) -> Result<Vec<Scalar>> {
        expect_dim(self.shape.degree, slots.len())?;
        expect_dim(self.shape.source, x.len())?;
        for s in slots {
            expect_dim(self.shape.source, s.dim())?;
        }
        let args: Vec<Arg<'_>> = slots.iter().map(Arg::Wedge).collect();
        let mut out = vec![Scalar::ZERO; self.shape.target];
        accumulate_mixed(self, &args, Last::Vector(x), &Scalar::ONE, &mut out);
        Ok(out)
    }

    fn check_same(&self, other: &GCochain) -> Result<()> {
        if self.shape != other.shape {
            expect_dim(self.shape.degree, other.shape.degree)?;
            expect_dim(self.shape.source, other.shape.source)?;
            expect_dim(self.shape.target, other.shape.target)?;
        }
        Ok(())
    }

    pub fn add(&self, other: &GCochain) -> Result<GCochain> {
        self.check_same(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(GCochain { kind: self.kind, shape: self.shape, data })
    }

    pub fn sub(&self, other: &GCochain) -> Result<GCochain> {
        self.check_same(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(GCochain { kind: self.kind, shape: self.shape, data })
    }

    pub fn scale(&self, s: &Scalar) -> GCochain {
        let data = self.data.iter().map(|a| a * s).collect();
        GCochain { kind: self.kind, shape: self.shape, data }
    }

    pub fn neg(&self) -> GCochain {
        self.scale(&Scalar::from_integer(-1))
    }
}

impl Multilinear for GCochain {
    fn degree(&self) -> usize {
        self.shape.degree
    }

    fn source_dim(&self) -> usize {
        self.shape.source
    }

    fn target_dim(&self) -> usize {
        self.shape.target
    }

    fn accumulate(&self, pairs: &[usize], x: usize, coeff: &Scalar, out: &mut [Scalar]) {
        vec_add_scaled(out, coeff, self.value(pairs, x));
    }
}
