//! First-order deformations of morphisms and of subalgebras, evaluated with
//! dual numbers (`t² = 0`) directly from the brackets.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{check_morphism, subspace_closure_check, LinearMap, Morphism, QuotientSplit, Subspace, ThreeLieAlgebra};
use crate::cochain::{CochainKind, GCochain};
use crate::cohomology::{delta0, delta_n};
use crate::error::{expect_dim, Error, Result};
use crate::index::{Bivector, CochainShape, PairIndex};
use crate::matrix::{basis_vector, vec_add_scaled, vec_sub};
use crate::scalar::Scalar;

/// `re + t·eps` with `t² = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualVector {
    pub re: Vec<Scalar>,
    pub eps: Vec<Scalar>,
}

impl DualVector {
    pub fn new(re: Vec<Scalar>, eps: Vec<Scalar>) -> DualVector {
        assert_eq!(re.len(), eps.len(), "dual parts of different length");
        DualVector { re, eps }
    }

    pub fn constant(re: Vec<Scalar>) -> DualVector {
        let eps = vec![Scalar::ZERO; re.len()];
        DualVector { re, eps }
    }

    pub fn sub(&self, other: &DualVector) -> DualVector {
        DualVector { re: vec_sub(&self.re, &other.re), eps: vec_sub(&self.eps, &other.eps) }
    }
}

/// A trilinear bracket applied to dual vectors, truncated at `t²`.
pub fn dual_bracket(a: &ThreeLieAlgebra, x: &DualVector, y: &DualVector, z: &DualVector) -> Result<DualVector> {
    let re = a.bracket(&x.re, &y.re, &z.re)?;
    let mut eps = a.bracket(&x.eps, &y.re, &z.re)?;
    vec_add_scaled(&mut eps, &Scalar::ONE, &a.bracket(&x.re, &y.eps, &z.re)?);
    vec_add_scaled(&mut eps, &Scalar::ONE, &a.bracket(&x.re, &y.re, &z.eps)?);
    Ok(DualVector { re, eps })
}

/// `f_t = f + t·α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jet1Map {
    base: LinearMap,
    velocity: LinearMap,
}

impl Jet1Map {
    pub fn new(base: LinearMap, velocity: LinearMap) -> Result<Jet1Map> {
        expect_dim(base.source_dim(), velocity.source_dim())?;
        expect_dim(base.target_dim(), velocity.target_dim())?;
        Ok(Jet1Map { base, velocity })
    }

    pub fn base(&self) -> &LinearMap {
        &self.base
    }

    pub fn velocity(&self) -> &LinearMap {
        &self.velocity
    }

    pub fn apply(&self, v: &DualVector) -> Result<DualVector> {
        let re = self.base.apply(&v.re)?;
        let mut eps = self.base.apply(&v.eps)?;
        vec_add_scaled(&mut eps, &Scalar::ONE, &self.velocity.apply(&v.re)?);
        Ok(DualVector { re, eps })
    }
}

/// The `t`-coefficient of `μ(f_t x, f_t y, f_t z) − f_t(π(x, y, z))` on basis
/// vectors, as a cochain with one pair slot (`(x ∧ y, z)`).
pub fn jet_morphism_residual(j: &Jet1Map, pi: &ThreeLieAlgebra, mu: &ThreeLieAlgebra) -> Result<GCochain> {
    let d = pi.dim();
    let e = mu.dim();
    expect_dim(d, j.base.source_dim())?;
    expect_dim(e, j.base.target_dim())?;
    if let Some((triple, defect)) = check_morphism(&j.base, pi, mu)?.first_failure() {
        return Err(Error::BaseNotMorphism { triple: *triple, defect: defect.clone() });
    }
    let images: Vec<DualVector> =
        (0..d).map(|i| j.apply(&DualVector::constant(basis_vector(d, i)))).collect::<Result<_>>()?;
    let mut out = GCochain::homomorphism(1, d, e);
    let shape = out.shape();
    for row in 0..shape.arguments() {
        let (positions, z) = shape.decode_argument(row);
        let p = PairIndex::from_position(positions[0], d);
        let lhs = dual_bracket(mu, &images[p.i], &images[p.j], &images[z])?;
        let inner = DualVector::constant(pi.bracket_basis(p.i, p.j, &basis_vector(d, z)));
        let rhs = j.apply(&inner)?;
        out.value_mut(row).clone_from_slice(&lhs.sub(&rhs).eps);
    }
    Ok(out)
}

/// The first nonzero entry of a one-pair-slot cochain, as a canonical triple.
fn first_triple_failure(c: &GCochain) -> Option<([usize; 3], Vec<Scalar>)> {
    let shape = c.shape();
    (0..shape.arguments()).find_map(|row| {
        let (positions, z) = shape.decode_argument(row);
        let p = PairIndex::from_position(positions[0], shape.source);
        let v = c.value(&positions, z);
        (p.j < z && v.iter().any(|x| !x.is_zero())).then(|| ([p.i, p.j, z], v.to_vec()))
    })
}

/// The velocity of a first-order deformation of a morphism as an element of
/// `C¹(f)`, which is then a cocycle.
pub fn tangent_cocycle(j: &Jet1Map, pi: &ThreeLieAlgebra, mu: &ThreeLieAlgebra) -> Result<GCochain> {
    let residual = jet_morphism_residual(j, pi, mu)?;
    if let Some((triple, residual)) = first_triple_failure(&residual) {
        return Err(Error::NotFirstOrderDeformation { triple, residual });
    }
    let alpha = GCochain::from_linear_map(CochainKind::Homomorphism, &j.velocity)?;
    let f = Morphism::new(j.base.clone(), pi.clone(), mu.clone())?;
    debug_assert!(delta_n(&alpha, &f)?.is_zero());
    Ok(alpha)
}

/// The change in the velocity produced by the infinitesimal inner
/// automorphisms `X ∈ ∧²g`, `U ∈ ∧²h`.
pub fn gauge_difference(x: &Bivector, u: &Bivector, f: &Morphism) -> Result<GCochain> {
    delta0(x, u, f)
}

/// `H_t = span{u_i + t·s(α(u_i))}` for a subalgebra `H` with basis `u_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jet1Subspace {
    split: QuotientSplit,
    velocity: LinearMap,
}

impl Jet1Subspace {
    /// `velocity` maps `H`-coordinates to quotient coordinates.
    pub fn new(split: QuotientSplit, velocity: LinearMap) -> Result<Jet1Subspace> {
        expect_dim(split.subspace().dim(), velocity.source_dim())?;
        expect_dim(split.quotient_dim(), velocity.target_dim())?;
        Ok(Jet1Subspace { split, velocity })
    }

    pub fn canonical(h: &Subspace, velocity: LinearMap) -> Result<Jet1Subspace> {
        Jet1Subspace::new(QuotientSplit::canonical(h), velocity)
    }

    pub fn split(&self) -> &QuotientSplit {
        &self.split
    }

    pub fn velocity(&self) -> &LinearMap {
        &self.velocity
    }

    /// `u_i + t·s(α(e_i))`.
    pub fn deformed_basis(&self) -> Vec<DualVector> {
        let h = self.split.subspace();
        (0..h.dim())
            .map(|i| {
                let lifted = self.split.section(&self.velocity.image(i));
                DualVector::new(h.vector(i), lifted)
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubalgebraJetCheck {
    /// `t`-coefficients, in quotient coordinates, of the brackets of the
    /// deformed basis left over after reduction modulo the deformed span.
    pub residual: GCochain,
}

impl SubalgebraJetCheck {
    pub fn passes(&self) -> bool {
        self.residual.is_zero()
    }

    pub fn first_failure(&self) -> Option<([usize; 3], Vec<Scalar>)> {
        first_triple_failure(&self.residual)
    }
}

/// Whether `H_t` stays closed under the bracket to first order.
///
/// With `π(U_a, U_b, U_c) = P₀ + t P₁` and `P₀ = Σ c_i u_i`, the bracket lies
/// in `H_t` to first order iff `P₁ − Σ c_i s(α(e_i)) ∈ H`, so the residual
/// is the projection of that difference.
pub fn jet_subalgebra_check(j: &Jet1Subspace, a: &ThreeLieAlgebra) -> Result<SubalgebraJetCheck> {
    let h = j.split.subspace();
    expect_dim(a.dim(), h.ambient_dim())?;
    if let Some((triple, residual)) = subspace_closure_check(a, h)?.witness {
        return Err(Error::NotASubalgebra { triple, residual });
    }
    let k = h.dim();
    let m = j.split.quotient_dim();
    let basis = j.deformed_basis();
    let shape = CochainShape { degree: 1, source: k, target: m };
    let mut residual = GCochain::homomorphism(1, k, m);
    for row in 0..shape.arguments() {
        let (positions, c) = shape.decode_argument(row);
        let p = PairIndex::from_position(positions[0], k);
        let bracket = dual_bracket(a, &basis[p.i], &basis[p.j], &basis[c])?;
        let coords = j.split.h_coordinates(&bracket.re);
        let mut rest = bracket.eps;
        for (i, ci) in coords.iter().enumerate() {
            vec_add_scaled(&mut rest, &-ci, &basis[i].eps);
        }
        residual.value_mut(row).clone_from_slice(&j.split.project(&rest));
    }
    Ok(SubalgebraJetCheck { residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{partial_rep_n, Complex};
    use crate::matrix::Matrix;
    use crate::representation::Representation;

    fn s(n: i64) -> Scalar {
        Scalar::from_integer(n)
    }

    fn a4() -> ThreeLieAlgebra {
        ThreeLieAlgebra::make(
            4,
            &[(0, 1, 2, 3, s(1)), (0, 1, 3, 2, s(-1)), (0, 2, 3, 1, s(1)), (1, 2, 3, 0, s(-1))],
        )
        .unwrap()
    }

    fn velocity_map(rows: usize, cols: usize, seed: i64) -> LinearMap {
        LinearMap::new(Matrix::from_fn(rows, cols, |r, c| s(((r as i64 * 7 + c as i64 * 3 + seed) % 5) - 2)))
    }

    #[test]
    fn morphism_residual_is_the_coboundary() {
        let a = a4();
        let f = Morphism::identity(&a);
        for seed in 0..5 {
            let alpha = velocity_map(4, 4, seed);
            let j = Jet1Map::new(f.map().clone(), alpha.clone()).unwrap();
            let r = jet_morphism_residual(&j, &a, &a).unwrap();
            let c = GCochain::from_linear_map(CochainKind::Homomorphism, &alpha).unwrap();
            assert_eq!(r.data(), delta_n(&c, &f).unwrap().data());
        }
    }

    #[test]
    fn zero_velocity_and_trivial_velocities() {
        let a = a4();
        let f = Morphism::identity(&a);
        let j = Jet1Map::new(f.map().clone(), LinearMap::zero(4, 4)).unwrap();
        assert!(tangent_cocycle(&j, &a, &a).unwrap().is_zero());

        let g = gauge_difference(&Bivector::basis(0, 1, 4), &Bivector::basis(2, 3, 4), &f).unwrap();
        let j = Jet1Map::new(f.map().clone(), g.to_linear_map().unwrap()).unwrap();
        assert!(tangent_cocycle(&j, &a, &a).is_ok());
        let cancel = gauge_difference(&Bivector::basis(0, 1, 4), &Bivector::basis(0, 1, 4), &f).unwrap();
        assert!(cancel.is_zero());
    }

    #[test]
    fn non_cocycle_is_rejected() {
        let a = a4();
        let j = Jet1Map::new(LinearMap::identity(4), LinearMap::identity(4)).unwrap();
        assert!(matches!(tangent_cocycle(&j, &a, &a), Err(Error::NotFirstOrderDeformation { .. })));
        let j = Jet1Map::new(LinearMap::zero(4, 4).add(&velocity_map(4, 4, 1)), LinearMap::zero(4, 4)).unwrap();
        assert!(matches!(jet_morphism_residual(&j, &a, &a), Err(Error::BaseNotMorphism { .. })));
    }

    #[test]
    fn subalgebra_residual_is_the_coboundary() {
        let a = a4();
        let h = Subspace::coordinate(4, &[0, 1]).unwrap();
        let split = QuotientSplit::canonical(&h);
        let rep = Representation::induced_quotient(&a, &split).unwrap();
        for seed in 0..5 {
            let alpha = velocity_map(2, 2, seed);
            let j = Jet1Subspace::new(split.clone(), alpha.clone()).unwrap();
            let check = jet_subalgebra_check(&j, &a).unwrap();
            let c = GCochain::from_linear_map(CochainKind::Homomorphism, &alpha).unwrap();
            assert_eq!(check.residual.data(), partial_rep_n(&c, &rep).unwrap().data());
        }
        let zero = Jet1Subspace::new(split, LinearMap::zero(2, 2)).unwrap();
        assert!(jet_subalgebra_check(&zero, &a).unwrap().passes());
    }

    #[test]
    fn abelian_subalgebra_jets_pass() {
        let a = ThreeLieAlgebra::abelian(4);
        let h = Subspace::coordinate(4, &[1]).unwrap();
        let j = Jet1Subspace::canonical(&h, velocity_map(3, 1, 2)).unwrap();
        assert!(jet_subalgebra_check(&j, &a).unwrap().passes());
        let c = Complex::Morphism(Morphism::zero(&a, &a));
        assert!(c.differential(1).unwrap().is_zero());
    }
}
