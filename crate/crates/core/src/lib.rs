//! Exact computational Lie theory for adjoint embeddings `H → SO(2N)` and
//! their odd twists.
//!
//! The crate builds root systems and Chevalley bases for every simple type,
//! computes characters, branching and fixed-space dimensions exactly, and
//! assembles explicit certificates that the adjoint embedding and its twist by
//! an odd orthogonal element are conjugate element by element yet have
//! non-conjugate images.
//!
//! Module map:
//!
//! - [`rootsys`]: Cartan matrices, roots, Weyl orbits, diagram automorphisms,
//!   and the classification of types admitting the construction.
//! - [`liealg`]: structure constants, adjoint matrices, Killing form, lifts of
//!   diagram automorphisms, exponentials of nilpotents.
//! - [`repchar`]: Freudenthal multiplicities, Weyl dimension, tensor products,
//!   decomposition, form type and dimension-bounded enumeration.
//! - [`embed`]: the adjoint embedding at the weight-lattice level and its
//!   dimension data.
//! - [`conjugacy`]: eigenvalue multisets, the SO-conjugacy decision procedure,
//!   commutants, and the obstruction report.
//!
//! Linear algebra ([`linalg`], [`poly`]) is generic over [`scalar::Scalar`];
//! the aliases below fix the exact instantiations used everywhere else.

pub mod cache;
pub mod conjugacy;
pub mod embed;
pub mod error;
pub mod liealg;
pub mod linalg;
pub mod poly;
pub mod repchar;
pub mod rootsys;
pub mod scalar;

pub use error::{Error, Result};

/// Exact rationals.
pub type Rational = num_rational::BigRational;

/// The rationals extended by a square root of −1.
pub type GaussianRational = num_complex::Complex<Rational>;

/// Integral weights in fundamental-weight coordinates.
pub type Weight = rootsys::WeightVector<i64>;

/// Possibly non-integral weights in fundamental-weight coordinates.
pub type RationalWeight = rootsys::WeightVector<Rational>;

pub type QMatrix = linalg::Matrix<Rational>;
pub type GaussianMatrix = linalg::Matrix<GaussianRational>;

/// Library version embedded in every report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
