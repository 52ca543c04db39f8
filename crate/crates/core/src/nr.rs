//! The graded Lie algebra of cochains under the Nijenhuis–Richardson
//! bracket, its Maurer–Cartan residuals, and the derived brackets that
//! control morphisms `g → h`.
//!
//! Product convention, for `P` of degree `p` and `Q` of degree `q`, with
//! `X_i = x_i ∧ y_i`:
//!
//! ```text
//! (P∘Q)(X_1..X_{p+q}, x)
//!   = Σ_{k=1..p} (-1)^{(k-1)q} Σ_{σ ∈ S(k-1,q)} sgn(σ)
//!       P(X_σ(1..k-1), Q(X_σ(k..k+q-1), x_{k+q}) ∧ y_{k+q} + x_{k+q} ∧ Q(.., y_{k+q}),
//!         X_{k+q+1}..X_{p+q}, x)
//!   + Σ_{σ ∈ S(p,q)} (-1)^{pq} sgn(σ) P(X_σ(1..p), Q(X_σ(p+1..p+q), x))
//! ```
//!
//! where the shuffles in the first sum permute only the first `k-1+q` slots.
//!
//! Brackets between cochains of `g` with values in `h` go through the
//! direct sum `g ⊕ h`: an `h`-valued cochain is lifted to an endomorphism
//! cochain of `g ⊕ h` that vanishes off `g`, the bracket is taken there, and
//! the result is restricted back to `g`-arguments and `h`-values.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{BracketTensor, LinearMap};
use crate::cochain::{accumulate_mixed, Arg, CochainKind, GCochain, Last, Multilinear};
use crate::error::{expect_dim, Error, Result};
use crate::index::{shuffles, Bivector, PairIndex, Shuffle};
use crate::scalar::Scalar;

pub const DEFAULT_MAX_DEGREE: usize = 4;

struct ShuffleCache {
    table: BTreeMap<(usize, usize), Vec<Shuffle>>,
}

impl ShuffleCache {
    fn new(p: usize, q: usize) -> ShuffleCache {
        let mut table = BTreeMap::new();
        for k in 1..=p {
            table.insert((k - 1, q), shuffles(k - 1, q));
        }
        table.insert((p, q), shuffles(p, q));
        ShuffleCache { table }
    }

    fn get(&self, a: usize, b: usize) -> &[Shuffle] {
        &self.table[&(a, b)]
    }
}

fn parity(n: usize) -> bool {
    n % 2 == 1
}

/// `out += (P∘Q)(pairs..., e_x)` for canonical output arguments.
fn product_at<P, Q>(
    p_op: &P,
    q_op: &Q,
    cache: &ShuffleCache,
    pairs: &[PairIndex],
    positions: &[usize],
    x: usize,
    out: &mut [Scalar],
) where
    P: Multilinear + ?Sized,
    Q: Multilinear + ?Sized,
{
    let p = p_op.degree();
    let q = q_op.degree();
    let dim = q_op.target_dim();
    let n = p + q;
    let mut q_args: Vec<usize> = Vec::with_capacity(q);
    let mut v1 = vec![Scalar::ZERO; dim];
    let mut v2 = vec![Scalar::ZERO; dim];

    for k in 1..=p {
        let outer_negative = parity((k - 1) * q);
        let slot = k + q - 1;
        let (a, b) = (pairs[slot].i, pairs[slot].j);
        for sh in cache.get(k - 1, q) {
            q_args.clear();
            q_args.extend(sh.order[k - 1..k - 1 + q].iter().map(|&s| positions[s]));
            v1.iter_mut().for_each(|v| *v = Scalar::ZERO);
            v2.iter_mut().for_each(|v| *v = Scalar::ZERO);
            q_op.accumulate(&q_args, a, &Scalar::ONE, &mut v1);
            q_op.accumulate(&q_args, b, &Scalar::ONE, &mut v2);
            let wedge = Bivector::insertion(&v1, b, a, &v2);
            if wedge.is_zero() {
                continue;
            }
            let mut args: Vec<Arg<'_>> = Vec::with_capacity(p);
            args.extend(sh.order[..k - 1].iter().map(|&s| Arg::Pair(positions[s])));
            args.push(Arg::Wedge(&wedge));
            args.extend(positions[slot + 1..n].iter().map(|&s| Arg::Pair(s)));
            let coeff = Scalar::sign(outer_negative != sh.negative);
            accumulate_mixed(p_op, &args, Last::Basis(x), &coeff, out);
        }
    }

    let tail_negative = parity(p * q);
    for sh in cache.get(p, q) {
        q_args.clear();
        q_args.extend(sh.order[p..].iter().map(|&s| positions[s]));
        v1.iter_mut().for_each(|v| *v = Scalar::ZERO);
        q_op.accumulate(&q_args, x, &Scalar::ONE, &mut v1);
        let args: Vec<Arg<'_>> = sh.order[..p].iter().map(|&s| Arg::Pair(positions[s])).collect();
        let coeff = Scalar::sign(tail_negative != sh.negative);
        accumulate_mixed(p_op, &args, Last::Vector(&v1), &coeff, out);
    }
}

fn check_endomorphisms(p: &GCochain, q: &GCochain) -> Result<()> {
    if p.kind() != CochainKind::Endomorphism || q.kind() != CochainKind::Endomorphism {
        return Err(Error::KindMismatch("the NR product needs endomorphism cochains"));
    }
    expect_dim(p.shape().source, q.shape().source)
}

fn check_cap(degree: usize, max: usize) -> Result<()> {
    if degree > max {
        Err(Error::DegreeOverflow { degree, max })
    } else {
        Ok(())
    }
}

/// Fills every argument row of `out` with `Σ (sign, P, Q)` products.
fn fill_products<P, Q>(terms: &[(bool, &P, &Q)], out: &mut GCochain)
where
    P: Multilinear + ?Sized,
    Q: Multilinear + ?Sized,
{
    let shape = out.shape();
    let pairs_dim = shape.source;
    let caches: Vec<ShuffleCache> =
        terms.iter().map(|(_, a, b)| ShuffleCache::new(a.degree(), b.degree())).collect();
    let mut buf = vec![Scalar::ZERO; shape.target];
    for row in 0..shape.arguments() {
        let (positions, x) = shape.decode_argument(row);
        let pairs: Vec<PairIndex> =
            positions.iter().map(|&pos| PairIndex::from_position(pos, pairs_dim)).collect();
        let target = out.value_mut(row);
        for ((negative, a, b), cache) in terms.iter().zip(&caches) {
            buf.iter_mut().for_each(|v| *v = Scalar::ZERO);
            product_at(*a, *b, cache, &pairs, &positions, x, &mut buf);
            for (t, v) in target.iter_mut().zip(&buf) {
                if *negative {
                    *t -= v;
                } else {
                    *t += v;
                }
            }
        }
    }
}

/// `P∘Q` with the default degree cap.
pub fn nr_product(p: &GCochain, q: &GCochain) -> Result<GCochain> {
    nr_product_capped(p, q, DEFAULT_MAX_DEGREE)
}

pub fn nr_product_capped(p: &GCochain, q: &GCochain, max_degree: usize) -> Result<GCochain> {
    check_endomorphisms(p, q)?;
    let degree = p.degree() + q.degree();
    check_cap(degree, max_degree)?;
    let mut out = GCochain::endomorphism(degree, p.shape().source);
    fill_products(&[(false, p, q)], &mut out);
    Ok(out)
}

/// `[P, Q] = P∘Q − (−1)^{pq} Q∘P` with the default degree cap.
pub fn nr_bracket(p: &GCochain, q: &GCochain) -> Result<GCochain> {
    nr_bracket_capped(p, q, DEFAULT_MAX_DEGREE)
}

pub fn nr_bracket_capped(p: &GCochain, q: &GCochain, max_degree: usize) -> Result<GCochain> {
    check_endomorphisms(p, q)?;
    let degree = p.degree() + q.degree();
    check_cap(degree, max_degree)?;
    let mut out = GCochain::endomorphism(degree, p.shape().source);
    let sign_flip = !parity(p.degree() * q.degree());
    fill_products(&[(false, p, q), (sign_flip, q, p)], &mut out);
    Ok(out)
}

/// `½[π, π]`, zero exactly when `π` satisfies the fundamental identity.
pub fn structure_mc_residual(t: &BracketTensor) -> GCochain {
    let pi = GCochain::from_bracket(t);
    let sq = nr_bracket(&pi, &pi).expect("degree 2 is under the cap");
    sq.scale(&Scalar::new(1, 2).expect("nonzero denominator"))
}

/// An `h`-valued cochain on `g` seen as an endomorphism cochain of `g ⊕ h`
/// that vanishes unless every argument lies in `g`.
struct Lifted<'a> {
    inner: &'a GCochain,
    g: usize,
    /// Pair position in `g ⊕ h` to pair position in `g`.
    positions: &'a [Option<usize>],
}

impl Multilinear for Lifted<'_> {
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    fn source_dim(&self) -> usize {
        self.positions_dim()
    }

    fn target_dim(&self) -> usize {
        self.positions_dim()
    }

    fn accumulate(&self, pairs: &[usize], x: usize, coeff: &Scalar, out: &mut [Scalar]) {
        if x >= self.g {
            return;
        }
        let mut local = Vec::with_capacity(pairs.len());
        for &p in pairs {
            match self.positions[p] {
                Some(q) => local.push(q),
                None => return,
            }
        }
        let value = self.inner.value(&local, x);
        crate::matrix::vec_add_scaled(&mut out[self.g..], coeff, value);
    }
}

impl Lifted<'_> {
    fn positions_dim(&self) -> usize {
        self.g + self.inner.shape().target
    }
}

/// The carrier `g ⊕ h` for the brackets of cochains `g → h`.
struct SumCarrier {
    g: usize,
    h: usize,
    delta: GCochain,
    positions: Vec<Option<usize>>,
}

impl SumCarrier {
    fn new(pi: &BracketTensor, mu: &BracketTensor) -> SumCarrier {
        let (g, h) = (pi.dim(), mu.dim());
        let total = g + h;
        let positions = PairIndex::all(total)
            .map(|p| (p.j < g).then(|| PairIndex { i: p.i, j: p.j }.position(g)))
            .collect();
        SumCarrier { g, h, delta: GCochain::from_bracket(&pi.direct_sum(mu)), positions }
    }

    fn check(&self, theta: &GCochain) -> Result<()> {
        if theta.kind() != CochainKind::Homomorphism {
            return Err(Error::KindMismatch("derived brackets take h-valued cochains"));
        }
        expect_dim(self.g, theta.shape().source)?;
        expect_dim(self.h, theta.shape().target)
    }

    fn lift<'a>(&'a self, theta: &'a GCochain) -> Lifted<'a> {
        Lifted { inner: theta, g: self.g, positions: &self.positions }
    }

    /// `[A, B]` evaluated on `g`-arguments only, keeping the `h`-components.
    fn projected_bracket<A, B>(&self, a: &A, b: &B) -> GCochain
    where
        A: Multilinear + ?Sized,
        B: Multilinear + ?Sized,
    {
        let degree = a.degree() + b.degree();
        let total = self.g + self.h;
        let mut out = GCochain::homomorphism(degree, self.g, self.h);
        let shape = out.shape();
        let ca = ShuffleCache::new(a.degree(), b.degree());
        let cb = ShuffleCache::new(b.degree(), a.degree());
        let flip = !parity(a.degree() * b.degree());
        let mut buf = vec![Scalar::ZERO; total];
        let mut back = vec![Scalar::ZERO; total];
        for row in 0..shape.arguments() {
            let (local, x) = shape.decode_argument(row);
            let pairs: Vec<PairIndex> =
                local.iter().map(|&pos| PairIndex::from_position(pos, self.g)).collect();
            let positions: Vec<usize> = pairs.iter().map(|p| p.position(total)).collect();
            buf.iter_mut().for_each(|v| *v = Scalar::ZERO);
            back.iter_mut().for_each(|v| *v = Scalar::ZERO);
            product_at(a, b, &ca, &pairs, &positions, x, &mut buf);
            product_at(b, a, &cb, &pairs, &positions, x, &mut back);
            let target = out.value_mut(row);
            for (t, (u, v)) in target.iter_mut().zip(buf[self.g..].iter().zip(&back[self.g..])) {
                *t = if flip { u - v } else { u + v };
            }
        }
        out
    }

    fn full_bracket<A, B>(&self, a: &A, b: &B) -> Result<GCochain>
    where
        A: Multilinear + ?Sized,
        B: Multilinear + ?Sized,
    {
        let degree = a.degree() + b.degree();
        check_cap(degree, DEFAULT_MAX_DEGREE)?;
        let mut out = GCochain::endomorphism(degree, self.g + self.h);
        let flip = !parity(a.degree() * b.degree());
        let shape = out.shape();
        let ca = ShuffleCache::new(a.degree(), b.degree());
        let cb = ShuffleCache::new(b.degree(), a.degree());
        let total = self.g + self.h;
        let mut buf = vec![Scalar::ZERO; total];
        let mut back = vec![Scalar::ZERO; total];
        for row in 0..shape.arguments() {
            let (positions, x) = shape.decode_argument(row);
            let pairs: Vec<PairIndex> =
                positions.iter().map(|&pos| PairIndex::from_position(pos, total)).collect();
            buf.iter_mut().for_each(|v| *v = Scalar::ZERO);
            back.iter_mut().for_each(|v| *v = Scalar::ZERO);
            product_at(a, b, &ca, &pairs, &positions, x, &mut buf);
            product_at(b, a, &cb, &pairs, &positions, x, &mut back);
            let target = out.value_mut(row);
            for (t, (u, v)) in target.iter_mut().zip(buf.iter().zip(&back)) {
                *t = if flip { u - v } else { u + v };
            }
        }
        Ok(out)
    }

    fn l1(&self, theta: &GCochain) -> Result<GCochain> {
        self.check(theta)?;
        check_cap(theta.degree() + 1, DEFAULT_MAX_DEGREE)?;
        Ok(self.projected_bracket(&self.delta, &self.lift(theta)))
    }

    fn l3(&self, a1: &GCochain, a2: &GCochain, a3: &GCochain) -> Result<GCochain> {
        for a in [a1, a2, a3] {
            self.check(a)?;
        }
        check_cap(a1.degree() + a2.degree() + a3.degree() + 1, DEFAULT_MAX_DEGREE)?;
        let first = self.full_bracket(&self.delta, &self.lift(a1))?;
        let second = self.full_bracket(&first, &self.lift(a2))?;
        Ok(self.projected_bracket(&second, &self.lift(a3)))
    }
}

/// `l₁(θ) = P[π ⊕ μ, θ]` for an `h`-valued cochain `θ` on `g`.
pub fn derived_l1(theta: &GCochain, pi: &BracketTensor, mu: &BracketTensor) -> Result<GCochain> {
    SumCarrier::new(pi, mu).l1(theta)
}

/// `l₃(a₁, a₂, a₃) = P[[[π ⊕ μ, a₁], a₂], a₃]`.
pub fn derived_l3(
    a1: &GCochain,
    a2: &GCochain,
    a3: &GCochain,
    pi: &BracketTensor,
    mu: &BracketTensor,
) -> Result<GCochain> {
    SumCarrier::new(pi, mu).l3(a1, a2, a3)
}

fn map_cochain(f: &LinearMap) -> Result<GCochain> {
    GCochain::from_linear_map(CochainKind::Homomorphism, f)
}

/// `l₁(f) + (1/6) l₃(f, f, f)`, which on `(x ∧ y, z)` equals
/// `μ(f x, f y, f z) − f(π(x, y, z))`.
pub fn morphism_mc_residual(f: &LinearMap, pi: &BracketTensor, mu: &BracketTensor) -> Result<GCochain> {
    expect_dim(pi.dim(), f.source_dim())?;
    expect_dim(mu.dim(), f.target_dim())?;
    let carrier = SumCarrier::new(pi, mu);
    let fc = map_cochain(f)?;
    let l1 = carrier.l1(&fc)?;
    let l3 = carrier.l3(&fc, &fc, &fc)?;
    l1.add(&l3.scale(&Scalar::new(1, 6).expect("nonzero denominator")))
}

/// The bracket `l_k^f` of the theory twisted by `f`. Only `l₁` and `l₃` are
/// nonzero before twisting, so
/// `l₁^f = l₁ + ½ l₃(f, f, ·)`, `l₂^f = l₃(f, ·, ·)`, `l₃^f = l₃`, and
/// `l_k^f = 0` for `k ≥ 4`.
pub fn twisted_bracket(
    f: &LinearMap,
    args: &[GCochain],
    pi: &BracketTensor,
    mu: &BracketTensor,
) -> Result<GCochain> {
    expect_dim(pi.dim(), f.source_dim())?;
    expect_dim(mu.dim(), f.target_dim())?;
    let carrier = SumCarrier::new(pi, mu);
    for a in args {
        carrier.check(a)?;
    }
    let fc = map_cochain(f)?;
    match args {
        [] => Err(Error::InvalidArity(0)),
        [theta] => {
            let l1 = carrier.l1(theta)?;
            let l3 = carrier.l3(&fc, &fc, theta)?;
            l1.add(&l3.scale(&Scalar::new(1, 2).expect("nonzero denominator")))
        }
        [a, b] => carrier.l3(&fc, a, b),
        [a, b, c] => carrier.l3(a, b, c),
        _ => {
            let degree = args.iter().map(GCochain::degree).sum::<usize>() + 1;
            Ok(GCochain::homomorphism(degree, pi.dim(), mu.dim()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ThreeLieAlgebra;
    use crate::matrix::Matrix;

    fn s(n: i64) -> Scalar {
        Scalar::from_integer(n)
    }

    fn a4() -> BracketTensor {
        ThreeLieAlgebra::make(
            4,
            &[(0, 1, 2, 3, s(1)), (0, 1, 3, 2, s(-1)), (0, 2, 3, 1, s(1)), (1, 2, 3, 0, s(-1))],
        )
        .unwrap()
        .tensor()
        .clone()
    }

    fn endo_map(m: Matrix) -> GCochain {
        GCochain::from_linear_map(CochainKind::Endomorphism, &LinearMap::new(m)).unwrap()
    }

    #[test]
    fn degree_zero_product_is_composition() {
        let a = Matrix::from_rows(vec![vec![s(1), s(2)], vec![s(0), s(1)]]).unwrap();
        let b = Matrix::from_rows(vec![vec![s(0), s(1)], vec![s(1), s(3)]]).unwrap();
        let prod = nr_product(&endo_map(a.clone()), &endo_map(b.clone())).unwrap();
        assert_eq!(prod.to_linear_map().unwrap().matrix(), &a.mul(&b).unwrap());
        let br = nr_bracket(&endo_map(a.clone()), &endo_map(b.clone())).unwrap();
        let comm = a.mul(&b).unwrap().sub(&b.mul(&a).unwrap());
        assert_eq!(br.to_linear_map().unwrap().matrix(), &comm);
    }

    #[test]
    fn bracket_composed_with_identity_triples() {
        let pi = GCochain::from_bracket(&a4());
        let id = endo_map(Matrix::identity(4));
        let prod = nr_product(&pi, &id).unwrap();
        assert_eq!(prod, pi.scale(&s(3)));
    }

    #[test]
    fn mc_residual_detects_fundamental_identity() {
        assert!(structure_mc_residual(&a4()).is_zero());
        let bad = BracketTensor::from_entries(4, &[(0, 1, 2, 3, s(1)), (0, 1, 3, 0, s(1))]).unwrap();
        assert!(!structure_mc_residual(&bad).is_zero());
    }

    #[test]
    fn degree_cap() {
        let pi = GCochain::from_bracket(&a4());
        let sq = nr_bracket(&pi, &pi).unwrap();
        let four = nr_product_capped(&sq, &sq, 4).unwrap();
        assert_eq!(four.degree(), 4);
        assert!(matches!(nr_product_capped(&sq, &pi, 2), Err(Error::DegreeOverflow { degree: 3, max: 2 })));
    }

    #[test]
    fn morphism_residual_matches_defect() {
        let t = a4();
        assert!(morphism_mc_residual(&LinearMap::identity(4), &t, &t).unwrap().is_zero());
        assert!(morphism_mc_residual(&LinearMap::zero(4, 4), &t, &t).unwrap().is_zero());
        let mut m = Matrix::identity(4);
        m[(0, 0)] = s(2);
        let r = morphism_mc_residual(&LinearMap::new(m), &t, &t).unwrap();
        let p = PairIndex { i: 0, j: 1 }.position(4);
        assert_eq!(r.value(&[p], 2), &[s(0), s(0), s(0), s(1)]);
    }

    #[test]
    fn l3_of_map_is_six_brackets() {
        let t = a4();
        let f = LinearMap::identity(4);
        let fc = map_cochain(&f).unwrap();
        let l3 = derived_l3(&fc, &fc, &fc, &t, &t).unwrap();
        let expected = GCochain::from_bracket(&t).scale(&s(6)).with_kind(CochainKind::Homomorphism).unwrap();
        assert_eq!(l3, expected);
    }

    #[test]
    fn twisted_arity_four_vanishes() {
        let t = a4();
        let f = LinearMap::identity(4);
        let theta = GCochain::homomorphism(0, 4, 4);
        let out = twisted_bracket(&f, &[theta.clone(), theta.clone(), theta.clone(), theta], &t, &t).unwrap();
        assert!(out.is_zero());
        assert_eq!(out.degree(), 1);
        assert!(matches!(twisted_bracket(&f, &[], &t, &t), Err(Error::InvalidArity(0))));
    }
}
