//! Exact-arithmetic cohomology of 3-Lie algebras, their morphisms, and
//! their subalgebras.
//!
//! The crate is `no_std` and only needs an allocator. File formats and the
//! command-line front end live in the companion `trilie-cli` crate.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod cochain;
pub mod cohomology;
pub mod deformation;
pub mod error;
pub mod index;
pub mod matrix;
pub mod nr;
pub mod representation;
pub mod scalar;
pub mod sparse;

pub use algebra::{
    direct_sum, BracketTensor, LinearMap, Morphism, MorphismDefect, QuotientSplit, Subspace,
    SubspaceClosure, ThreeLieAlgebra,
};
pub use cochain::{CochainKind, GCochain};
pub use cohomology::{CohomologyReport, Complex, GraphCorrespondence};
pub use representation::Representation;

pub use error::{Error, Result};
pub use index::{pair_count, Bivector, CochainShape, PairIndex};
pub use matrix::Matrix;

pub use scalar::{ParseScalarError, Scalar};
pub use sparse::SparseMatrix;
