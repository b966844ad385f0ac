//! Torus-equivariant classes of invariant subvarieties of affine space,
//! computed through jet schemes and contact loci.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`]: exact rational polynomials, term orders, multigradings and
//!   truncated power series, plus the canonical text format.
//! * [`groebner`]: Buchberger's algorithm, normal forms, initial ideals,
//!   Krull dimension, saturation.
//! * [`multidegree`]: multidegrees of multigraded ideals (equivariant
//!   classes), with a brute-force oracle for monomial ideals.
//! * [`jets`]: the derivation `D`, jet ideals, multi-contact ideals and
//!   log canonical threshold estimates.
//! * [`toric`]: fans, Stanley-Reisner ideals and the deformed group ring.
//! * [`gln`]: determinantal chains, contact profiles of matrix jets, the
//!   orbit normal form and partial-flag partition combinatorics.

pub mod algebra;
pub mod error;
pub mod gln;
pub mod groebner;
pub mod jets;
pub mod multidegree;
pub mod toric;

pub use error::{Error, Result};
