#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]
// `!(x >= lo)` is used on purpose throughout: unlike `x < lo` it is
// also true for NaN, so one comparison rejects both sides at once.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

//! Chord-length and two-point-distance laws of regular polygons.
//!
//! For the regular polygon with `n` vertices on a circle of radius `r`,
//! this crate evaluates in closed form:
//!
//! - the chord length distribution `F(s)`: the probability, under the
//!   rigid-motion-invariant line measure conditioned on hitting the
//!   polygon, that a random chord is no longer than `s`
//!   ([`chord_law::ChordLaw`]),
//! - the density `g(t)` and distribution `G(t)` of the distance between
//!   two independent uniformly random interior points
//!   ([`distance_law::DistanceLaw`]),
//! - the mean chord and the mean point distance.
//!
//! Every closed form is backed by an independent oracle: a formula-free
//! half-plane clipping engine ([`geometry`]), adaptive quadrature of the
//! underlying strip measure ([`profile`] + [`numerics`]), finite
//! differences down the antiderivative towers, and seeded Monte Carlo
//! sampling with Kolmogorov-Smirnov comparison ([`montecarlo`]). The
//! [`verify`] module packages all of those into a structured pass/fail
//! report; the `polygauge` CLI is a thin front end over it.
//!
//! The crate is `no_std`-compatible (it requires `alloc`): disable default
//! features and enable `libm` for the float intrinsics.
//!
//! ```
//! use polygauge::{ChordLaw, DistanceLaw, RegularPolygon};
//!
//! let poly = RegularPolygon::new(7, 1.0)?;
//! let chord = ChordLaw::new(poly.clone());
//! assert!((chord.cdf(1.2) - 0.2644641).abs() < 1e-6);
//!
//! let dist = DistanceLaw::new(poly);
//! assert!(dist.cdf(dist.mean()) > 0.5); // right-skewed law
//! # Ok::<(), polygauge::Error>(())
//! ```

extern crate alloc;

mod float;

pub mod chord_law;
pub mod distance_law;
pub mod geometry;
pub mod montecarlo;
pub mod numerics;
pub mod profile;
pub mod verify;

pub use chord_law::ChordLaw;
pub use distance_law::DistanceLaw;
pub use geometry::{Line, Point, RegularPolygon};

/// Errors reported by fallible operations.
///
/// Evaluations that are total functions of their arguments (the CDFs and
/// densities) return plain `f64`; `Error` is reserved for construction,
/// out-of-domain branch arguments, and quadrature failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[non_exhaustive]
pub enum Error {
    /// A polygon needs at least 3 sides.
    SideCount,
    /// The circumradius must be positive and finite.
    Radius,
    /// Branch index outside the range valid for the operation.
    Branch,
    /// Scalar argument outside the operation's domain.
    Domain,
    /// Adaptive quadrature hit its depth cap before reaching tolerance.
    NoConvergence,
}

impl core::fmt::Display for Error {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let msg = match self {
            Error::SideCount => "polygon needs at least 3 sides",
            Error::Radius => "circumradius must be positive and finite",
            Error::Branch => "branch index out of range",
            Error::Domain => "argument outside the operation's domain",
            Error::NoConvergence => "quadrature failed to converge",
        };
        f.write_str(msg)
    }
}

impl core::error::Error for Error {}
