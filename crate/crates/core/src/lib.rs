//! Character lattices of norm-condition tori from finite-group data:
//! Tate cohomology of integral G-lattices, local-global obstruction groups,
//! and Tamagawa numbers as exact ratios of cohomological invariants.
//!
//! Given a finite group `G`, a subgroup `H`, and a central element `iota` of
//! prime order `p` (modeling a field extension `K/k` with intermediate field
//! fixed by `iota`), the crate builds the character lattice of the torus of
//! elements whose relative norm lands in the base field, computes its Tate
//! cohomology in degrees -2..=3, the kernel of restriction to a family of
//! local subgroups, and assembles the Tamagawa number as an exact fraction.
//!
//! The exact linear algebra is generic over the integer scalar (see
//! [`scalar::Scalar`]); the concrete instantiations used throughout are the
//! aliases below: machine words with checked arithmetic on the fast path,
//! arbitrary precision as the general case.

pub mod cohomology;
pub mod error;
pub mod group;
pub mod lattice;
pub mod localglobal;
pub mod matrix;
pub mod scalar;
pub mod torus;

/// Arbitrary-precision integer scalar.
pub type Int = num_bigint::BigInt;

/// Machine-word scalar used on checked fast paths.
pub type Word = i64;

/// Exact rational number; Tamagawa ratios are always reported in this form.
pub type Rational = num_rational::Ratio<Int>;

pub use error::{Error, Result};
pub use matrix::{IntMatrix, WordMatrix};
