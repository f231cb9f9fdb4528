//! Lattice-structural analysis of positive operators on sequence spaces
//! ordered by an unconditional basis.
//!
//! Operators are finitely presented infinite nonnegative matrices
//! ([`OperatorSpec`]): banded matrices with eventually periodic diagonals,
//! weighted permutations over [`ModularPermutation`]s, and finite sums of
//! those. On top of the model the crate decides
//!
//! * lattice-homomorphism / injectivity / weighted-permutation / interval
//!   preserving form ([`classify`]),
//! * non-trivial closed invariant coordinate ideals ([`ideals`]),
//! * ideal-irreducibility, with a brute-force oracle for finite matrices
//!   ([`irreducibility`]),
//! * local spectral radius sequences of weighted shifts ([`spectral`]).
//!
//! Everything is generic over the entry type; [`ExactSpec`] (exact
//! rationals) is what the structural verdicts are meant to run on.

pub mod classify;
mod error;
pub mod finite;
pub mod ideals;
mod index_set;
pub mod irreducibility;
mod operator;
mod permutation;
mod scalar;
mod sequence;
pub mod spectral;
mod vector;

pub use error::{Error, Result};
pub use finite::FiniteMatrix;
pub use index_set::{CoordinateIdeal, ExactSet, IndexSet, Membership, Progression};
pub use operator::{Banded, Entries, OperatorSpec, TailStructure, WeightedPermutation};
pub use permutation::{ModularMap, ModularPermutation};
pub use scalar::Scalar;
pub use sequence::{NamedSequence, PeriodicSequence, WeightSequence};
pub use vector::FiniteVector;

/// Arbitrary-precision rational.
pub type Rational = num_rational::BigRational;
/// Operator with exact rational entries.
pub type ExactSpec = OperatorSpec<Rational>;
/// Operator with `f64` entries.
pub type FloatSpec = OperatorSpec<f64>;
pub type ExactVector = FiniteVector<Rational>;
pub type FloatVector = FiniteVector<f64>;
pub type ExactMatrix = FiniteMatrix<Rational>;
