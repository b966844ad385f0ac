//! Smooth fans, their Stanley-Reisner ideals and the deformed group ring.

mod deformed;
mod fan;
mod refine;

pub use deformed::{DeformedRingElement, PointPair};
pub use fan::{standard, ConeLocation, Fan, FanSpec};
pub use refine::{refinement_compare, Refinement, RefinementComparison};
