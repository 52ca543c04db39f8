//! Cochain complexes of morphisms and of representations, assembled as
//! sparse exact matrices, and the dimensions of their cohomology.
//!
//! Both differentials share one shape: for `θ` with `n − 1` pair slots,
//!
//! ```text
//! ∂θ(X_1..X_n, x) = Σ_{i<j} (-1)^i θ(..X̂_i.., π(X_i, x_j) ∧ y_j + x_j ∧ π(X_i, y_j), .., x)
//!                 + Σ_i (-1)^i θ(..X̂_i.., π(X_i, x))
//!                 + Σ_i (-1)^{i+1} ρ(X_i) θ(..X̂_i.., x)
//!                 + (-1)^{n+1} (ρ(y_n, x) θ(X_1..X_{n-1}, x_n) + ρ(x, x_n) θ(X_1..X_{n-1}, y_n))
//! ```
//!
//! The morphism complex of `f: g → h` uses `ρ(x, y) = μ(f x, f y, ·)` on `h`.
//! Each output entry is expanded once into a list of weighted input entries
//! (a stencil); the same stencil drives both matrix assembly and direct
//! application to a cochain.

use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;

use crate::algebra::{direct_sum, Morphism, QuotientSplit, Subspace, ThreeLieAlgebra};
use crate::cochain::{accumulate_mixed, Arg, CochainKind, GCochain, Last, Multilinear};
use crate::error::{expect_dim, Error, Result};
use crate::index::{pair_count, Bivector, CochainShape, PairIndex};
use crate::matrix::{basis_vector, vec_add_scaled, Matrix};
use crate::nr::DEFAULT_MAX_DEGREE;
use crate::representation::Representation;
use crate::scalar::Scalar;
use crate::sparse::SparseMatrix;

/// One weighted input entry of a stencil: `coeff * op(θ[input_row])`.
#[derive(Clone, Debug)]
struct Term {
    coeff: Scalar,
    /// Canonical pair whose action matrix is applied; `None` for identity.
    action: Option<usize>,
    input_row: usize,
}

/// The operator in front of a `θ` evaluation: none, or the action of a pair
/// (`None` when the pair is degenerate and the term vanishes).
#[derive(Clone, Copy)]
enum Acting {
    Identity,
    Pair(Option<(usize, bool)>),
}

/// Records which input rows an evaluation touches instead of summing values.
struct RowCollector {
    shape: CochainShape,
    hits: RefCell<Vec<(usize, Scalar)>>,
}

impl Multilinear for RowCollector {
    fn degree(&self) -> usize {
        self.shape.degree
    }

    fn source_dim(&self) -> usize {
        self.shape.source
    }

    fn target_dim(&self) -> usize {
        self.shape.target
    }

    fn accumulate(&self, pairs: &[usize], x: usize, coeff: &Scalar, _out: &mut [Scalar]) {
        let row = self.shape.argument_index(pairs, x);
        self.hits.borrow_mut().push((row, coeff.clone()));
    }
}

/// The data a differential needs: the bracket of the source algebra and the
/// action of its pairs on the value space.
struct Coboundary<'a> {
    algebra: &'a ThreeLieAlgebra,
    module_dim: usize,
    actions: &'a [Matrix],
}

impl Coboundary<'_> {
    /// Stencil of `∂` at one output argument; the input has `n − 1` slots.
    fn stencil(&self, pairs: &[PairIndex], positions: &[usize], x: usize) -> Vec<Term> {
        let d = self.algebra.dim();
        let n = pairs.len();
        let collector = RowCollector {
            shape: CochainShape { degree: n - 1, source: d, target: self.module_dim },
            hits: RefCell::new(Vec::new()),
        };
        let mut terms = Vec::new();
        let mut scratch: [Scalar; 0] = [];
        let mut push = |args: &[Arg<'_>], last: Last<'_>, coeff: Scalar, action: Acting| {
            let (action, coeff) = match action {
                Acting::Identity => (None, coeff),
                Acting::Pair(None) => return,
                Acting::Pair(Some((pos, neg))) => (Some(pos), if neg { -coeff } else { coeff }),
            };
            collector.hits.borrow_mut().clear();
            accumulate_mixed(&collector, args, last, &Scalar::ONE, &mut scratch);
            for (row, c) in collector.hits.borrow().iter() {
                terms.push(Term { coeff: &coeff * c, action, input_row: *row });
            }
        };
        let sign = |k: usize| Scalar::sign(k % 2 == 1);
        let without = |i: usize| -> Vec<Arg<'static>> {
            positions.iter().enumerate().filter(|(s, _)| *s != i).map(|(_, &p)| Arg::Pair(p)).collect()
        };

        for i in 0..n {
            let (xi, yi) = (pairs[i].i, pairs[i].j);
            for j in i + 1..n {
                let (xj, yj) = (pairs[j].i, pairs[j].j);
                let v = self.algebra.bracket_basis(xi, yi, &basis_vector(d, xj));
                let w = self.algebra.bracket_basis(xi, yi, &basis_vector(d, yj));
                let wedge = Bivector::insertion(&v, yj, xj, &w);
                if wedge.is_zero() {
                    continue;
                }
                let mut args = without(i);
                args[j - 1] = Arg::Wedge(&wedge);
                push(&args, Last::Basis(x), sign(i + 1), Acting::Identity);
            }
            let v = self.algebra.bracket_basis(xi, yi, &basis_vector(d, x));
            push(&without(i), Last::Vector(&v), sign(i + 1), Acting::Identity);
            push(&without(i), Last::Basis(x), sign(i), Acting::Pair(PairIndex::resolve(xi, yi, d)));
        }
        let (xn, yn) = (pairs[n - 1].i, pairs[n - 1].j);
        let head = without(n - 1);
        push(&head, Last::Basis(xn), sign(n + 1), Acting::Pair(PairIndex::resolve(yn, x, d)));
        push(&head, Last::Basis(yn), sign(n + 1), Acting::Pair(PairIndex::resolve(x, xn, d)));
        terms
    }

    fn input_shape(&self, n: usize) -> CochainShape {
        CochainShape { degree: n - 1, source: self.algebra.dim(), target: self.module_dim }
    }

    fn output_shape(&self, n: usize) -> CochainShape {
        CochainShape { degree: n, source: self.algebra.dim(), target: self.module_dim }
    }

    fn for_each_output(&self, n: usize, mut visit: impl FnMut(usize, Vec<Term>)) {
        let out = self.output_shape(n);
        let d = self.algebra.dim();
        for row in 0..out.arguments() {
            let (positions, x) = out.decode_argument(row);
            let pairs: Vec<PairIndex> = positions.iter().map(|&p| PairIndex::from_position(p, d)).collect();
            visit(row, self.stencil(&pairs, &positions, x));
        }
    }

    /// Matrix of `∂: C^n → C^{n+1}`, `n ≥ 1`.
    fn matrix(&self, n: usize) -> SparseMatrix {
        let m = self.module_dim;
        let mut triplets = Vec::new();
        self.for_each_output(n, |row, terms| {
            for t in terms {
                match t.action {
                    None => {
                        for r in 0..m {
                            triplets.push((row * m + r, t.input_row * m + r, t.coeff.clone()));
                        }
                    }
                    Some(pos) => {
                        let a = &self.actions[pos];
                        for r in 0..m {
                            for c in 0..m {
                                let v = &a[(r, c)];
                                if !v.is_zero() {
                                    triplets.push((row * m + r, t.input_row * m + c, &t.coeff * v));
                                }
                            }
                        }
                    }
                }
            }
        });
        SparseMatrix::from_triplets(self.output_shape(n).len(), self.input_shape(n).len(), triplets)
    }

    /// `∂θ` evaluated directly from the stencils.
    fn apply(&self, theta: &GCochain) -> Result<GCochain> {
        let n = theta.degree() + 1;
        expect_dim(self.algebra.dim(), theta.shape().source)?;
        expect_dim(self.module_dim, theta.shape().target)?;
        let mut out = GCochain::zero(CochainKind::Homomorphism, n, self.algebra.dim(), self.module_dim);
        let mut values = Vec::new();
        self.for_each_output(n, |row, terms| {
            let mut acc = vec![Scalar::ZERO; self.module_dim];
            for t in terms {
                let input = theta.value_row(t.input_row);
                match t.action {
                    None => vec_add_scaled(&mut acc, &t.coeff, input),
                    Some(pos) => vec_add_scaled(&mut acc, &t.coeff, &self.actions[pos].apply(input)),
                }
            }
            values.push((row, acc));
        });
        for (row, acc) in values {
            out.value_mut(row).clone_from_slice(&acc);
        }
        Ok(out.with_kind(theta.kind()).unwrap_or_else(|_| unreachable!("kind preserved")))
    }
}

/// `ρ_f(e_i, e_j) = μ(f e_i, f e_j, ·)`, the action of `g` on `h` through `f`.
fn morphism_actions(f: &Morphism) -> Vec<Matrix> {
    let d = f.source().dim();
    let e = f.target().dim();
    let images: Vec<Vec<Scalar>> = (0..d).map(|i| f.map().image(i)).collect();
    let mu = f.target();
    PairIndex::all(d)
        .map(|p| {
            let columns: Vec<Vec<Scalar>> = (0..e)
                .map(|k| mu.bracket(&images[p.i], &images[p.j], &basis_vector(e, k)).expect("dimensions agree"))
                .collect();
            Matrix::from_columns(e, &columns).expect("columns of length e")
        })
        .collect()
}

/// `δ(X, U) z = μ(U, f z) − f(π(X, z))` for `X ∈ ∧²g`, `U ∈ ∧²h`.
pub fn delta0(x: &Bivector, u: &Bivector, f: &Morphism) -> Result<GCochain> {
    let d = f.source().dim();
    let e = f.target().dim();
    expect_dim(d, x.dim())?;
    expect_dim(e, u.dim())?;
    let mut out = GCochain::homomorphism(0, d, e);
    for z in 0..d {
        let fz = f.map().image(z);
        let mut acc = vec![Scalar::ZERO; e];
        for (a, b, c) in u.wedge_terms() {
            vec_add_scaled(&mut acc, c, &f.target().bracket_basis(a, b, &fz));
        }
        for (a, b, c) in x.wedge_terms() {
            let v = f.map().apply(&f.source().bracket_basis(a, b, &basis_vector(d, z)))?;
            vec_add_scaled(&mut acc, &-c, &v);
        }
        out.value_mut(z).clone_from_slice(&acc);
    }
    Ok(out)
}

/// `δθ` for `θ ∈ C^n(f)`, `n ≥ 1` (a cochain with `n − 1` pair slots).
pub fn delta_n(theta: &GCochain, f: &Morphism) -> Result<GCochain> {
    let actions = morphism_actions(f);
    let cob = Coboundary { algebra: f.source(), module_dim: f.target().dim(), actions: &actions };
    cob.apply(theta)
}

/// `∂θ` for `θ ∈ C^n(g, V)`, `n ≥ 1`.
pub fn partial_rep_n(theta: &GCochain, rep: &Representation) -> Result<GCochain> {
    let cob = Coboundary { algebra: rep.algebra(), module_dim: rep.dim(), actions: rep.actions() };
    cob.apply(theta)
}

/// A cochain complex whose differentials can be assembled.
#[derive(Clone, Debug)]
pub enum Complex {
    /// `C•(f)`, starting at `C⁰ = ∧²g ⊕ ∧²h`.
    Morphism(Morphism),
    /// `C•(g, V)`, starting at `C¹ = Hom(g, V)`.
    Representation(Representation),
}

impl Complex {
    fn base(&self) -> (&ThreeLieAlgebra, usize) {
        match self {
            Complex::Morphism(f) => (f.source(), f.target().dim()),
            Complex::Representation(r) => (r.algebra(), r.dim()),
        }
    }

    pub fn is_morphism(&self) -> bool {
        matches!(self, Complex::Morphism(_))
    }

    /// Dimension of `C^n`.
    pub fn cochain_dim(&self, n: usize) -> usize {
        let (g, m) = self.base();
        let d = g.dim();
        match (self, n) {
            (Complex::Morphism(f), 0) => pair_count(d) + pair_count(f.target().dim()),
            (Complex::Representation(_), 0) => 0,
            _ => pair_count(d).pow(n as u32 - 1) * d * m,
        }
    }

    /// Shape of the cochains in `C^n`, `n ≥ 1`.
    pub fn cochain_shape(&self, n: usize) -> Result<CochainShape> {
        if n == 0 {
            return Err(Error::NoSuchDegree(0));
        }
        let (g, m) = self.base();
        Ok(CochainShape { degree: n - 1, source: g.dim(), target: m })
    }

    /// Matrix of the differential `C^n → C^{n+1}` with the default cap.
    pub fn differential(&self, n: usize) -> Result<SparseMatrix> {
        self.differential_capped(n, DEFAULT_MAX_DEGREE)
    }

    pub fn differential_capped(&self, n: usize, max_degree: usize) -> Result<SparseMatrix> {
        if n > max_degree {
            return Err(Error::DegreeOverflow { degree: n, max: max_degree });
        }
        match (self, n) {
            (Complex::Morphism(f), 0) => Ok(delta0_matrix(f)),
            (Complex::Representation(_), 0) => Ok(SparseMatrix::zeros(self.cochain_dim(1), 0)),
            (Complex::Morphism(f), _) => {
                let actions = morphism_actions(f);
                let cob = Coboundary { algebra: f.source(), module_dim: f.target().dim(), actions: &actions };
                Ok(cob.matrix(n))
            }
            (Complex::Representation(r), _) => {
                let cob = Coboundary { algebra: r.algebra(), module_dim: r.dim(), actions: r.actions() };
                Ok(cob.matrix(n))
            }
        }
    }

    /// The differential applied to a cochain of `C^n`, `n ≥ 1`.
    pub fn apply(&self, theta: &GCochain) -> Result<GCochain> {
        match self {
            Complex::Morphism(f) => delta_n(theta, f),
            Complex::Representation(r) => partial_rep_n(theta, r),
        }
    }
}

fn delta0_matrix(f: &Morphism) -> SparseMatrix {
    let d = f.source().dim();
    let e = f.target().dim();
    let mut columns = Vec::new();
    for p in PairIndex::all(d) {
        let c = delta0(&Bivector::basis(p.i, p.j, d), &Bivector::zero(e), f).expect("dimensions agree");
        columns.push(c.into_data());
    }
    for p in PairIndex::all(e) {
        let c = delta0(&Bivector::zero(d), &Bivector::basis(p.i, p.j, e), f).expect("dimensions agree");
        columns.push(c.into_data());
    }
    SparseMatrix::from_columns(d * e, &columns)
}

/// Dimensions of `C^n`, `Z^n`, `B^n`, and `H^n = Z^n / B^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CohomologyReport {
    pub degree: usize,
    pub dim_c: usize,
    pub dim_z: usize,
    pub dim_b: usize,
    pub dim_h: usize,
}

pub fn cohomology_report(complex: &Complex, n: usize) -> Result<CohomologyReport> {
    cohomology_report_capped(complex, n, DEFAULT_MAX_DEGREE)
}

pub fn cohomology_report_capped(complex: &Complex, n: usize, max_degree: usize) -> Result<CohomologyReport> {
    if n > max_degree {
        return Err(Error::DegreeOverflow { degree: n, max: max_degree });
    }
    let dim_c = complex.cochain_dim(n);
    let dim_z = dim_c - complex.differential_capped(n, max_degree)?.rank();
    let dim_b = match n {
        0 => 0,
        _ => complex.differential_capped(n - 1, max_degree)?.rank(),
    };
    Ok(CohomologyReport { degree: n, dim_c, dim_z, dim_b, dim_h: dim_z - dim_b })
}

/// `f^*θ(X_1..X_{n-1}, x) = θ(f x_1 ∧ f y_1, .., f x)` for `θ ∈ C^n(h, h)`.
pub fn pullback(theta: &GCochain, f: &Morphism) -> Result<GCochain> {
    let d = f.source().dim();
    let e = f.target().dim();
    expect_dim(e, theta.shape().source)?;
    expect_dim(e, theta.shape().target)?;
    let degree = theta.degree();
    let mut out = GCochain::homomorphism(degree, d, e);
    let images: Vec<Vec<Scalar>> = (0..d).map(|i| f.map().image(i)).collect();
    let shape = out.shape();
    for row in 0..shape.arguments() {
        let (positions, x) = shape.decode_argument(row);
        let wedges: Vec<Bivector> = positions
            .iter()
            .map(|&p| {
                let pi = PairIndex::from_position(p, d);
                Bivector::wedge(&images[pi.i], &images[pi.j])
            })
            .collect();
        let v = theta.eval(&wedges, &images[x])?;
        out.value_mut(row).clone_from_slice(&v);
    }
    Ok(out)
}

/// Matrix of `f^*: C^n(h, h) → C^n(f)`, `n ≥ 1`.
pub fn pullback_matrix(f: &Morphism, n: usize) -> Result<SparseMatrix> {
    if n == 0 {
        return Err(Error::NoSuchDegree(0));
    }
    let e = f.target().dim();
    let shape = CochainShape { degree: n - 1, source: e, target: e };
    let mut columns = Vec::with_capacity(shape.len());
    for b in 0..shape.len() {
        let theta = GCochain::basis_element(CochainKind::Endomorphism, shape, b);
        columns.push(pullback(&theta, f)?.into_data());
    }
    let rows = pair_count(f.source().dim()).pow(n as u32 - 1) * f.source().dim() * e;
    Ok(SparseMatrix::from_columns(rows, &columns))
}

/// The coboundary of a 2-cochain of a subspace `H` with values in `g/H`,
/// written with the section explicitly: every bracket that is fed back into
/// `α` first has its `s p` part removed, and every value of `α` is lifted
/// by `s` before bracketing and projected by `p` afterwards.
///
/// `α` is given in the coordinates of the basis of `H` (source) and of the
/// quotient (target); the result uses the same coordinates.
pub fn tilde_partial(alpha: &GCochain, algebra: &ThreeLieAlgebra, split: &QuotientSplit) -> Result<GCochain> {
    let h = split.subspace();
    let k = h.dim();
    let m = split.quotient_dim();
    expect_dim(algebra.dim(), h.ambient_dim())?;
    expect_dim(1, alpha.degree())?;
    expect_dim(k, alpha.shape().source)?;
    expect_dim(m, alpha.shape().target)?;
    let closure = crate::algebra::subspace_closure_check(algebra, h)?;
    if let Some((triple, residual)) = closure.witness {
        return Err(Error::NotASubalgebra { triple, residual });
    }
    let u: Vec<Vec<Scalar>> = (0..k).map(|i| h.vector(i)).collect();
    let coords = |v: &[Scalar]| split.h_coordinates(v);
    // α(a ∧ b, c) for ambient vectors of H
    let alpha_at = |a: &[Scalar], b: &[Scalar], c: &[Scalar]| -> Vec<Scalar> {
        alpha.eval(&[Bivector::wedge(&coords(a), &coords(b))], &coords(c)).expect("shapes agree")
    };
    let pi = |a: &[Scalar], b: &[Scalar], c: &[Scalar]| algebra.bracket(a, b, c).expect("dimensions agree");
    let corrected = |v: Vec<Scalar>| split.remove_section(&v);

    let mut out = GCochain::homomorphism(2, k, m);
    let shape = out.shape();
    for row in 0..shape.arguments() {
        let (positions, w) = shape.decode_argument(row);
        let p1 = PairIndex::from_position(positions[0], k);
        let p2 = PairIndex::from_position(positions[1], k);
        let (u1, v1, u2, v2, w) = (&u[p1.i], &u[p1.j], &u[p2.i], &u[p2.j], &u[w]);
        let mut acc = vec![Scalar::ZERO; m];
        let minus = Scalar::from_integer(-1);

        let a = corrected(pi(u1, v1, u2));
        let b = corrected(pi(u1, v1, v2));
        vec_add_scaled(&mut acc, &minus, &alpha_at(&a, v2, w));
        vec_add_scaled(&mut acc, &minus, &alpha_at(u2, &b, w));
        vec_add_scaled(&mut acc, &minus, &alpha_at(u2, v2, &corrected(pi(u1, v1, w))));
        vec_add_scaled(&mut acc, &Scalar::ONE, &alpha_at(u1, v1, &corrected(pi(u2, v2, w))));

        let lift = |q: Vec<Scalar>| split.section(&q);
        let mut bracket_sum = pi(u1, v1, &lift(alpha_at(u2, v2, w)));
        let t2 = pi(u2, v2, &lift(alpha_at(u1, v1, w)));
        let t3 = pi(v2, w, &lift(alpha_at(u1, v1, u2)));
        let t4 = pi(w, u2, &lift(alpha_at(u1, v1, v2)));
        for t in [t2, t3, t4] {
            vec_add_scaled(&mut bracket_sum, &minus, &t);
        }
        vec_add_scaled(&mut acc, &Scalar::ONE, &split.project(&bracket_sum));
        out.value_mut(row).clone_from_slice(&acc);
    }
    Ok(out)
}

/// Cohomology of `f` next to that of its graph `G_f ⊂ g ⊕ h` with values in
/// `(g ⊕ h)/G_f`, and the checks on the comparison map `Ξ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphCorrespondence {
    pub degree: usize,
    pub morphism: CohomologyReport,
    pub graph: CohomologyReport,
    /// `Ξ_n` is square and invertible for every degree involved.
    pub xi_bijective: bool,
    /// `Ξ_{n+1} δ_n = ∂_n Ξ_n` for every differential involved.
    pub intertwines: bool,
}

impl GraphCorrespondence {
    pub fn dimensions_agree(&self) -> bool {
        self.morphism.dim_h == self.graph.dim_h
    }
}

/// The graph `{(x, f x)}` as a subspace of `g ⊕ h`.
pub fn graph_subspace(f: &Morphism) -> Subspace {
    let d = f.source().dim();
    let e = f.target().dim();
    let vectors: Vec<Vec<Scalar>> = (0..d)
        .map(|i| {
            let mut v = basis_vector(d + e, i);
            for (t, c) in f.map().image(i).into_iter().enumerate() {
                v[d + t] = c;
            }
            v
        })
        .collect();
    Subspace::new(d + e, &vectors).expect("graph vectors are independent")
}

/// `Ξ_n(α)((x_1, f x_1) ∧ .., (x, f x)) = p((0, α(x_1 ∧ .., x)))`, as a matrix.
fn xi_matrix(f: &Morphism, split: &QuotientSplit, n: usize) -> SparseMatrix {
    let d = f.source().dim();
    let e = f.target().dim();
    let m = split.quotient_dim();
    let p = split.projection();
    let args = pair_count(d).pow(n as u32 - 1) * d;
    let mut triplets = Vec::new();
    for row in 0..args {
        for t in 0..e {
            for r in 0..m {
                let v = &p[(r, d + t)];
                if !v.is_zero() {
                    triplets.push((row * m + r, row * e + t, v.clone()));
                }
            }
        }
    }
    SparseMatrix::from_triplets(args * m, args * e, triplets)
}

pub fn graph_correspondence(f: &Morphism, k: usize) -> Result<GraphCorrespondence> {
    if k == 0 {
        return Err(Error::NoSuchDegree(0));
    }
    let sum = direct_sum(f.source(), f.target());
    let graph = graph_subspace(f);
    let split = QuotientSplit::canonical(&graph);
    let rep = Representation::induced_quotient(&sum, &split)?;
    let morphism_complex = Complex::Morphism(f.clone());
    let graph_complex = Complex::Representation(rep);

    let mut xi_bijective = true;
    let lo = if k >= 2 { k - 1 } else { k };
    for n in lo..=k + 1 {
        let xi = xi_matrix(f, &split, n);
        xi_bijective &= xi.rows() == xi.cols() && xi.rank() == xi.cols();
    }
    let mut intertwines = true;
    for n in lo..=k {
        let lhs = xi_matrix(f, &split, n + 1).mul(&morphism_complex.differential(n)?)?;
        let rhs = graph_complex.differential(n)?.mul(&xi_matrix(f, &split, n))?;
        intertwines &= lhs == rhs;
    }
    Ok(GraphCorrespondence {
        degree: k,
        morphism: cohomology_report(&morphism_complex, k)?,
        graph: cohomology_report(&graph_complex, k)?,
        xi_bijective,
        intertwines,
    })
}

/// Outcome of the `H¹(f) = 0` rigidity criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RigidityVerdict {
    pub dim_h1: usize,
}

impl RigidityVerdict {
    pub fn rigid(&self) -> bool {
        self.dim_h1 == 0
    }

    pub fn label(&self) -> &'static str {
        if self.rigid() {
            "rigid"
        } else {
            "criterion inconclusive"
        }
    }
}

/// Outcome of an `H² = 0` stability criterion, with `dim Z¹`, the dimension
/// of the local space of nearby objects when the criterion holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StabilityVerdict {
    pub dim_h2: usize,
    pub dim_z1: usize,
}

impl StabilityVerdict {
    pub fn stable(&self) -> bool {
        self.dim_h2 == 0
    }

    pub fn label(&self) -> &'static str {
        if self.stable() {
            "stable"
        } else {
            "criterion inconclusive"
        }
    }
}

pub fn rigidity(f: &Morphism) -> Result<RigidityVerdict> {
    let r = cohomology_report(&Complex::Morphism(f.clone()), 1)?;
    Ok(RigidityVerdict { dim_h1: r.dim_h })
}

pub fn stability(f: &Morphism) -> Result<StabilityVerdict> {
    let c = Complex::Morphism(f.clone());
    Ok(StabilityVerdict {
        dim_h2: cohomology_report(&c, 2)?.dim_h,
        dim_z1: cohomology_report(&c, 1)?.dim_z,
    })
}

/// The complex of a subalgebra `H ⊂ g` with values in `g/H`.
pub fn subalgebra_complex(algebra: &ThreeLieAlgebra, h: &Subspace) -> Result<Complex> {
    let split = QuotientSplit::canonical(h);
    Ok(Complex::Representation(Representation::induced_quotient(algebra, &split)?))
}

pub fn subalgebra_stability(algebra: &ThreeLieAlgebra, h: &Subspace) -> Result<StabilityVerdict> {
    let c = subalgebra_complex(algebra, h)?;
    Ok(StabilityVerdict {
        dim_h2: cohomology_report(&c, 2)?.dim_h,
        dim_z1: cohomology_report(&c, 1)?.dim_z,
    })
}
