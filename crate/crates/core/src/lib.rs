//! Threshold sharing of sets of secrets over prime fields.
//!
//! Three schemes are provided in [`schemes`]: Shamir's single-secret scheme,
//! the points scheme (secrets as values at `x = 0..k-1`), and coefficient
//! packing (secrets as polynomial coefficients). [`analysis`] counts the
//! secret tuples on which the points scheme silently loses threshold and
//! computes blow-up factors; [`attacks`] demonstrates what a single share
//! reveals when no random coefficients are used.

pub mod analysis;
pub mod attacks;
pub mod error;
pub mod field;
pub mod poly;
pub mod schemes;

pub use error::{Error, Result};
pub use num_rational;
pub use field::{FieldElement, PrimeModulus};
pub use poly::{interpolate, true_degree, Degree, PointSet, Polynomial};
pub use schemes::{RandomSource, Scheme, SecretSet, Share};
