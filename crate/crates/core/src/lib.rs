//! Exact-arithmetic workbench for Thom polynomials of contact singularities.
//!
//! The crate covers the finite algebra behind the theory: partitions and
//! Schur polynomials, truncated Chern series and relative classes, jet
//! spaces with their local algebras, Schubert calculus on finite
//! Grassmannians, and a verification harness that checks stabilization,
//! single-variable-set expressibility and Schur positivity of catalogued
//! polynomials.
//!
//! Every structure is generic over a [`Scalar`] coefficient type. The
//! aliases below fix the exact rational instantiation used throughout.

pub mod chern;
pub mod error;
pub mod grassmann;
pub mod jets;
pub mod linalg;
pub mod partitions;
pub mod scalar;
pub mod symfunc;
pub mod verify;

pub use chern::ChernSeries;
pub use error::{Error, Result};
pub use grassmann::GrassmannianRing;
pub use jets::{JetMap, LocalAlgebraReport};
pub use linalg::Matrix;
pub use partitions::Partition;
pub use scalar::{Gf2, Scalar};
pub use symfunc::{Family, GradedPolynomial, SchurExpansion, Var};
pub use verify::{CatalogueEntry, VerificationReport};

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;
/// Graded polynomial over the rationals.
pub type Polynomial = GradedPolynomial<Rational>;
/// Schur-basis expansion with rational coefficients.
pub type Expansion = SchurExpansion<Rational>;
/// Graded polynomial over the two-element field.
pub type Mod2Polynomial = GradedPolynomial<Gf2>;
