//! Geometric probability on the circle.
//!
//! The headline result is [`closed_forms::p_contain`]: the probability that a
//! triangle with three independent uniform vertices on the unit circle
//! contains a fixed point at distance `r` from the center,
//!
//! ```text
//! P(r) = 1/4 − 3/(2π²) · Li₂(r²)
//! ```
//!
//! Around it sit the pieces needed to check that formula, and its companions
//! (the radial law of two intersecting random chords and a three-circle
//! line-hitting constant), by independent routes:
//!
//! - [`predicates`]: ±1 side-of-line and orientation indicators;
//! - [`dilog`]: the real dilogarithm, plus a quadrature oracle for it;
//! - [`quadrature`]: the integral representation of `P(r)` and its
//!   derivative, evaluated numerically;
//! - [`montecarlo`]: seeded, partition-independent simulations;
//! - [`verify`]: the invariant suites behind `inscribed verify`.

pub mod closed_forms;
pub mod dilog;
pub mod error;
pub mod fmt;
pub mod montecarlo;
pub mod predicates;
pub mod quadrature;
pub mod verify;

pub use error::{Error, Result};
