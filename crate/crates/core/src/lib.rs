//! Clique graphs of clique-regular graphs.
//!
//! The ω-clique graph `C_ω(Γ)` has the ω-cliques of `Γ` as vertices, two of
//! them adjacent when they intersect. For ω = 2 it is the line graph. This
//! crate builds clique graphs on dense bitset graphs, decides ω-clique
//! regularity, computes exact characteristic polynomials and numeric
//! spectra, predicts clique-graph spectra from the host spectrum, and
//! classifies strongly regular clique graphs.
//!
//! Numeric code is generic over its scalar: polynomials over any [`Ring`],
//! the symmetric eigensolver over any [`num_traits::Float`], eigenvalue
//! bounds over any [`Scalar`]. The aliases below fix the concrete choices
//! the rest of the crate uses.

pub mod clique;
pub mod corpus;
pub mod error;
pub mod generators;
pub mod graph;
pub mod report;
pub mod scalar;
pub mod spectral;
pub mod srg;
pub mod verify;

pub use clique::{Clique, CliqueGraphResult};
pub use error::{Error, Result};
pub use graph::{Graph, VertexId};
pub use scalar::{Ring, Scalar};
pub use spectral::{EigenBounds, Eigenvalue, Polynomial, Spectrum};
pub use srg::{QuadSurd, SrgParams, SrgSpectrum};

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};

/// Exact integer polynomial, used for characteristic polynomials.
pub type IntPolynomial = Polynomial<BigInt>;

/// Eigenvalue bounds evaluated in floating point.
pub type FloatBounds = EigenBounds<f64>;

/// Eigenvalue bounds with small exact rational endpoints.
pub type RatBounds = EigenBounds<Rational64>;

/// Eigenvalue bounds with arbitrary-precision rational endpoints.
pub type BigRatBounds = EigenBounds<BigRational>;
