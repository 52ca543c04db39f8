//! Representations `ρ: ∧²g → End(V)` of a 3-Lie algebra.

use alloc::vec::Vec;

use crate::algebra::{QuotientSplit, ThreeLieAlgebra};
use crate::error::{expect_dim, Error, Result};
use crate::index::{pair_count, PairIndex};
use crate::matrix::{basis_vector, Matrix};
use crate::scalar::Scalar;

/// Action matrices indexed by canonical pair: `actions[pos(i, j)]` is
/// `ρ(e_i, e_j)` as an `m × m` matrix acting on columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    algebra: ThreeLieAlgebra,
    dim: usize,
    actions: Vec<Matrix>,
}

impl Representation {
    /// Validates both representation axioms on every basis 4-tuple.
    pub fn new(algebra: ThreeLieAlgebra, dim: usize, actions: Vec<Matrix>) -> Result<Representation> {
        let rep = Representation::unchecked(algebra, dim, actions)?;
        rep.check_axioms()?;
        Ok(rep)
    }

    pub(crate) fn unchecked(algebra: ThreeLieAlgebra, dim: usize, actions: Vec<Matrix>) -> Result<Representation> {
        expect_dim(pair_count(algebra.dim()), actions.len())?;
        for a in &actions {
            expect_dim(dim, a.rows())?;
            expect_dim(dim, a.cols())?;
        }
        Ok(Representation { algebra, dim, actions })
    }

    /// Builds from `(i, j, matrix)` with `i < j`; unlisted pairs act by zero.
    pub fn from_pairs(algebra: ThreeLieAlgebra, dim: usize, pairs: &[(usize, usize, Matrix)]) -> Result<Representation> {
        let d = algebra.dim();
        let mut actions = alloc::vec![Matrix::zeros(dim, dim); pair_count(d)];
        for (i, j, m) in pairs {
            for &index in &[*i, *j] {
                if index >= d {
                    return Err(Error::IndexOutOfRange { index, bound: d });
                }
            }
            if i >= j {
                return Err(Error::NonCanonicalTriple { i: *i, j: *j, k: *j });
            }
            actions[PairIndex { i: *i, j: *j }.position(d)] = m.clone();
        }
        Representation::new(algebra, dim, actions)
    }

    pub fn zero(algebra: &ThreeLieAlgebra, dim: usize) -> Representation {
        let actions = alloc::vec![Matrix::zeros(dim, dim); pair_count(algebra.dim())];
        Representation { algebra: algebra.clone(), dim, actions }
    }

    /// `ad_{x∧y} z = π(x, y, z)`.
    pub fn adjoint(algebra: &ThreeLieAlgebra) -> Representation {
        let d = algebra.dim();
        let actions = PairIndex::all(d)
            .map(|p| Matrix::from_fn(d, d, |l, k| algebra.structure(p.i, p.j, k)[l].clone()))
            .collect();
        Representation { algebra: algebra.clone(), dim: d, actions }
    }

    /// The action of the subalgebra `H` (in the coordinates of its basis) on
    /// `g/H`: `ad̄_{u∧v} x̄ = p(π(u, v, s x̄))`.
    pub fn induced_quotient(algebra: &ThreeLieAlgebra, split: &QuotientSplit) -> Result<Representation> {
        let restricted = algebra.restrict(split)?;
        let h = split.subspace();
        let k = h.dim();
        let m = split.quotient_dim();
        let mut actions = Vec::with_capacity(pair_count(k));
        for p in PairIndex::all(k) {
            let (u, v) = (h.vector(p.i), h.vector(p.j));
            let columns: Vec<Vec<Scalar>> = (0..m)
                .map(|c| {
                    let lifted = split.section(&basis_vector(m, c));
                    let w = algebra.bracket(&u, &v, &lifted).expect("dimensions agree");
                    split.project(&w)
                })
                .collect();
            actions.push(Matrix::from_columns(m, &columns)?);
        }
        Representation::new(restricted, m, actions)
    }

    pub fn algebra(&self) -> &ThreeLieAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.actions
    }

    /// `ρ(e_a, e_b)`, zero for `a == b`.
    pub fn action(&self, a: usize, b: usize) -> Matrix {
        match PairIndex::resolve(a, b, self.algebra.dim()) {
            None => Matrix::zeros(self.dim, self.dim),
            Some((pos, false)) => self.actions[pos].clone(),
            Some((pos, true)) => self.actions[pos].scale(&Scalar::from_integer(-1)),
        }
    }

    /// `ρ(e_a, v)` for an arbitrary vector `v`.
    fn action_vec(&self, a: usize, v: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (b, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.action(a, b).scale(c));
            }
        }
        out
    }

    fn mul(a: &Matrix, b: &Matrix) -> Matrix {
        a.mul(b).expect("square matrices of equal size")
    }

    /// `ρ(x1,x2)ρ(x3,x4) − ρ(π(x1,x2,x3),x4) − ρ(x3,π(x1,x2,x4)) − ρ(x3,x4)ρ(x1,x2)`.
    pub fn first_axiom_residual(&self, t: [usize; 4]) -> Matrix {
        let [a, b, c, e] = t;
        let alg = &self.algebra;
        let lhs = Self::mul(&self.action(a, b), &self.action(c, e));
        let r1 = self.action_vec(e, &alg.structure(a, b, c)).scale(&Scalar::from_integer(-1));
        let r2 = self.action_vec(c, &alg.structure(a, b, e));
        let r3 = Self::mul(&self.action(c, e), &self.action(a, b));
        lhs.sub(&r1).sub(&r2).sub(&r3)
    }

    /// `ρ(x1,π(x2,x3,x4)) − ρ(x3,x4)ρ(x1,x2) + ρ(x2,x4)ρ(x1,x3) − ρ(x2,x3)ρ(x1,x4)`.
    pub fn second_axiom_residual(&self, t: [usize; 4]) -> Matrix {
        let [a, b, c, e] = t;
        let lhs = self.action_vec(a, &self.algebra.structure(b, c, e));
        let r1 = Self::mul(&self.action(c, e), &self.action(a, b));
        let r2 = Self::mul(&self.action(b, e), &self.action(a, c));
        let r3 = Self::mul(&self.action(b, c), &self.action(a, e));
        lhs.sub(&r1).add(&r2).sub(&r3)
    }

    /// Checks the first axiom on all basis 4-tuples, then the second.
    pub fn check_axioms(&self) -> Result<usize> {
        let d = self.algebra.dim();
        let tuples = d.pow(4);
        let decode = |n: usize| {
            let mut t = [0; 4];
            let mut rest = n;
            for slot in (0..4).rev() {
                t[slot] = rest % d;
                rest /= d;
            }
            t
        };
        for (axiom, residual) in [
            (1u8, Self::first_axiom_residual as fn(&Self, [usize; 4]) -> Matrix),
            (2u8, Self::second_axiom_residual),
        ] {
            for n in 0..tuples {
                let t = decode(n);
                let r = residual(self, t);
                if !r.is_zero() {
                    return Err(Error::RepresentationAxiomViolation { axiom, tuple: t, residual: r });
                }
            }
        }
        Ok(2 * tuples)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Subspace;

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

    #[test]
    fn zero_and_adjoint_are_valid() {
        let a = a4();
        assert!(Representation::zero(&a, 3).check_axioms().is_ok());
        let ad = Representation::adjoint(&a);
        assert_eq!(ad.check_axioms().unwrap(), 512);
        assert_eq!(ad.action(0, 1).column(2), basis_vector(4, 3));
        assert!(ad.action(0, 1).column(0).iter().all(Scalar::is_zero));
        assert!(Representation::adjoint(&ThreeLieAlgebra::abelian(3)).actions().iter().all(Matrix::is_zero));
    }

    #[test]
    fn identity_action_fails_first_axiom() {
        let a = a4();
        let err = Representation::new(a, 4, alloc::vec![Matrix::identity(4); 6]).unwrap_err();
        assert!(matches!(err, Error::RepresentationAxiomViolation { axiom: 1, .. }));
    }

    #[test]
    fn induced_quotient_action() {
        let a = a4();
        let h = Subspace::coordinate(4, &[0, 1]).unwrap();
        let rep = Representation::induced_quotient(&a, &QuotientSplit::canonical(&h)).unwrap();
        assert_eq!(rep.dim(), 2);
        let m = rep.action(0, 1);
        assert_eq!(m.column(0), alloc::vec![s(0), s(1)]);
        assert_eq!(m.column(1), alloc::vec![s(-1), s(0)]);

        let whole = Subspace::whole(4);
        let rep = Representation::induced_quotient(&a, &QuotientSplit::canonical(&whole)).unwrap();
        assert_eq!(rep.dim(), 0);
    }

    #[test]
    fn induced_quotient_needs_subalgebra() {
        let a = a4();
        let h = Subspace::coordinate(4, &[0, 1, 2]).unwrap();
        assert!(matches!(
            Representation::induced_quotient(&a, &QuotientSplit::canonical(&h)),
            Err(Error::NotASubalgebra { .. })
        ));
    }
}
