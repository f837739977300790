//! Exact-arithmetic tools for untangling straight-line drawings of planar
//! graphs: point-set geometry, permutation statistics, adversarial
//! placements, upper-bound computations and untangling searches.
//!
//! Geometry is generic over a [`Scalar`] field; the aliases below fix it to
//! arbitrary-precision rationals, which is what the rest of the crate uses.

pub mod adversary;
pub mod bounds;
pub mod clustering;
pub mod error;
pub mod geometry;
pub mod graphs;
pub mod scalar;
pub mod sequences;
pub mod untangler;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub type Rational = num_rational::BigRational;
pub type Point = geometry::Point<Rational>;
pub type PointSet = geometry::PointSet<Rational>;
pub type Segment = geometry::Segment<Rational>;
pub type Boundary = geometry::Boundary<Rational>;
pub type Arrangement = geometry::Arrangement<Rational>;
pub type Drawing = graphs::Drawing<Rational>;
