use alloc::vec::Vec;

use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Errors raised by the algebra, cochain, and cohomology operations.
///
/// Every validation failure carries a witness: the basis tuple where the
/// identity broke and the nonzero residual observed there. Tuples are 0-based.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("structure constants must be given for i < j < k, got ({i}, {j}, {k})")]
    NonCanonicalTriple { i: usize, j: usize, k: usize },

    #[error("fundamental identity fails at basis tuple {tuple:?}: residual {residual:?}")]
    FundamentalIdentityViolation { tuple: [usize; 5], residual: Vec<Scalar> },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("representation axiom {axiom} fails at basis tuple {tuple:?}: residual {residual:?}")]
    RepresentationAxiomViolation { axiom: u8, tuple: [usize; 4], residual: Matrix },

    #[error("subspace is not closed under the bracket at {triple:?}: residual mod subspace {residual:?}")]
    NotASubalgebra { triple: [usize; 3], residual: Vec<Scalar> },

    #[error("map is not a morphism at {triple:?}: defect {defect:?}")]
    NotAMorphism { triple: [usize; 3], defect: Vec<Scalar> },

    #[error("jet base is not a morphism at {triple:?}: defect {defect:?}")]
    BaseNotMorphism { triple: [usize; 3], defect: Vec<Scalar> },

    #[error("velocity is not a first-order deformation at {triple:?}: residual {residual:?}")]
    NotFirstOrderDeformation { triple: [usize; 3], residual: Vec<Scalar> },

    #[error("cochain degree {degree} exceeds the configured maximum {max}")]
    DegreeOverflow { degree: usize, max: usize },

    #[error("vectors are linearly dependent: rank {rank} < {count}")]
    LinearlyDependent { rank: usize, count: usize },

    #[error("complement does not split the subspace: rank {rank} < {needed}")]
    NotAComplement { rank: usize, needed: usize },

    #[error("cochain kind mismatch: {0}")]
    KindMismatch(&'static str),

    #[error("unsupported bracket arity {0}")]
    InvalidArity(usize),

    #[error("degree {0} has no differential in this complex")]
    NoSuchDegree(usize),
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn expect_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
