//! Sign predicates on the closed unit disk.
//!
//! `side_of` is the ±1 indicator of which side of a directed line a point lies
//! on (points on the line count as the right side), and `orientation` is the
//! ±1 clockwise indicator of an inscribed triangle. Everything else in the
//! crate that needs "inside/outside" or "left/right" goes through these two.
//!
//! Plain `f64` cross products decide the signs. Callers that need reliable
//! signs sample away from degenerate configurations (see [`cross`]).

use std::f64::consts::TAU;
use std::ops::{Mul, Neg};

use crate::error::{Error, Result};

/// A point on the unit circle, stored as its angle in `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct UnitCirclePoint {
    theta: f64,
}

impl UnitCirclePoint {
    /// Wraps any finite angle into `[0, 2π)`.
    pub fn new(theta: f64) -> Self {
        let mut t = theta.rem_euclid(TAU);
        // rem_euclid of a tiny negative angle rounds up to exactly 2π
        if t >= TAU {
            t = 0.0;
        }
        Self { theta: t }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn to_plane(&self) -> PlanePoint {
        let (s, c) = self.theta.sin_cos();
        PlanePoint::new(c, s)
    }
}

/// A point of the plane in unit-disk scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanePoint {
    pub x: f64,
    pub y: f64,
}

impl PlanePoint {
    pub const ORIGIN: PlanePoint = PlanePoint { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }
}

impl From<UnitCirclePoint> for PlanePoint {
    fn from(p: UnitCirclePoint) -> Self {
        p.to_plane()
    }
}

/// Value of a ±1 indicator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

/// Cross product `(to − from) × (query − from)`.
///
/// Positive means `query` is left of the directed line `from → to`, negative
/// means right. Property tests use its magnitude to reject near-degenerate
/// samples.
pub fn cross(query: PlanePoint, from: PlanePoint, to: PlanePoint) -> f64 {
    (to.x - from.x) * (query.y - from.y) - (to.y - from.y) * (query.x - from.x)
}

/// Relative cross-product size below which a point is treated as on a line.
pub const ON_LINE_REL_TOL: f64 = 8.0 * f64::EPSILON;

/// `side_of` for a directed line through two arbitrary plane points.
pub fn side_of_line(query: PlanePoint, from: PlanePoint, to: PlanePoint) -> Result<Sign> {
    if from == to {
        return Err(Error::DegenerateLine);
    }
    // A cross product at rounding level counts as on the line: circle points
    // like (cos π, sin π) miss an exact diameter by ~1e−16.
    let scale = (to.x - from.x).hypot(to.y - from.y) * (query.x - from.x).hypot(query.y - from.y);
    Ok(if cross(query, from, to) > ON_LINE_REL_TOL * scale {
        Sign::Negative
    } else {
        Sign::Positive
    })
}

/// +1 if `query` is right of or on the directed chord `from → to`, −1 if it is
/// strictly left.
pub fn side_of(query: PlanePoint, from: UnitCirclePoint, to: UnitCirclePoint) -> Result<Sign> {
    if from.theta == to.theta {
        return Err(Error::DegenerateLine);
    }
    side_of_line(query, from.to_plane(), to.to_plane())
}

/// +1 if the inscribed triangle `abc` is clockwise, −1 if counterclockwise.
pub fn orientation(a: UnitCirclePoint, b: UnitCirclePoint, c: UnitCirclePoint) -> Result<Sign> {
    if a.theta == b.theta || b.theta == c.theta || c.theta == a.theta {
        return Err(Error::DegenerateTriangle);
    }
    let area2 = cross(c.to_plane(), a.to_plane(), b.to_plane());
    Ok(if area2 < 0.0 {
        Sign::Positive
    } else {
        Sign::Negative
    })
}

/// Whether `x` lies inside the inscribed triangle `abc`.
///
/// True iff all three edge indicators agree with the triangle's orientation.
pub fn contains(
    a: UnitCirclePoint,
    b: UnitCirclePoint,
    c: UnitCirclePoint,
    x: PlanePoint,
) -> Result<bool> {
    let o = orientation(a, b, c)?;
    Ok(side_of(x, a, b)? == o && side_of(x, b, c)? == o && side_of(x, c, a)? == o)
}

/// Checks `(2·[x ∈ abc] + 1)·orient(abc) = R(x,ab) + R(x,bc) + R(x,ca)`.
pub fn check_relation1(
    a: UnitCirclePoint,
    b: UnitCirclePoint,
    c: UnitCirclePoint,
    x: PlanePoint,
) -> Result<bool> {
    let inside = i32::from(contains(a, b, c, x)?);
    let lhs = (2 * inside + 1) * orientation(a, b, c)?.value();
    let rhs = side_of(x, a, b)?.value() + side_of(x, b, c)?.value() + side_of(x, c, a)?.value();
    Ok(lhs == rhs)
}

/// Checks `orient(abc) = R(c, ab)`.
pub fn check_relation2(a: UnitCirclePoint, b: UnitCirclePoint, c: UnitCirclePoint) -> Result<bool> {
    Ok(orientation(a, b, c)? == side_of(c.to_plane(), a, b)?)
}

/// Checks `2·[x ∈ abc] = R(x,ab)·R(c,ab) − R(a,xc)·R(b,xc)`.
pub fn check_relation3(
    a: UnitCirclePoint,
    b: UnitCirclePoint,
    c: UnitCirclePoint,
    x: PlanePoint,
) -> Result<bool> {
    let cp = c.to_plane();
    let lhs = 2 * i32::from(contains(a, b, c, x)?);
    let across_ab = side_of(x, a, b)? * side_of(cp, a, b)?;
    let across_xc = side_of_line(a.to_plane(), x, cp)? * side_of_line(b.to_plane(), x, cp)?;
    Ok(lhs == across_ab.value() - across_xc.value())
}
