//! Closed-form probabilities.

use std::f64::consts::{LN_2, PI, SQRT_2};

use crate::dilog::li2;
use crate::error::{Error, Result};

/// Distance ratio `OX/R` of the query point from the center; by rotational
/// symmetry the point itself is taken to be `(r, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct InteriorPoint(f64);

impl InteriorPoint {
    pub fn new(r: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&r) {
            Ok(Self(r))
        } else {
            Err(Error::OutOfRange {
                name: "r",
                value: r,
                range: "[0, 1]",
            })
        }
    }

    pub fn r(self) -> f64 {
        self.0
    }
}

/// Probability that a triangle with three uniform vertices on the unit circle
/// contains the point at distance `r` from the center:
/// `1/4 − 3/(2π²)·Li₂(r²)`.
pub fn p_contain(r: f64) -> Result<f64> {
    let r = InteriorPoint::new(r)?.r();
    if r == 1.0 {
        return Ok(0.0);
    }
    Ok(0.25 - 3.0 / (2.0 * PI * PI) * li2(r * r)?)
}

/// Radial CDF of the intersection point of two random chords, given that
/// they intersect: `(6/π²)·Li₂(r²)`.
pub fn chord_cdf(r: f64) -> Result<f64> {
    let r = InteriorPoint::new(r)?.r();
    if r == 1.0 {
        return Ok(1.0);
    }
    Ok(6.0 / (PI * PI) * li2(r * r)?)
}

/// Probability that the line through a uniform point of the left circle and a
/// uniform point of the middle circle, in a row of three tangent unit circles,
/// meets the right circle.
pub fn three_circle_probability() -> f64 {
    let li2 = |x| li2(x).expect("argument on the real branch");
    let bracket = 0.375 * LN_2 * LN_2 + li2(-SQRT_2) + 3.0 * li2(1.0 / SQRT_2);
    0.75 - 2.0 / (PI * PI) * bracket
}
