//! Numerical integration of the containment probability's integral form.
//!
//! The integrator is composite Gauss–Legendre with fixed 16-node panels; the
//! panel count doubles until two successive estimates agree to within the
//! requested tolerance, and the last difference is reported as the error
//! estimate. All integrands here are smooth and 2π-periodic for `r < 1`, so
//! convergence is geometric once the panels resolve the `θ ≈ 0` layer of
//! width `~ 1 − r`.

use std::f64::consts::{PI, TAU};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::predicates::{side_of_line, PlanePoint, Sign, UnitCirclePoint};

const NODES: usize = 16;

/// Default cap on the panel count: `2^16` panels, about a million evaluations.
pub const DEFAULT_MAX_PANELS: usize = 1 << 16;

/// Value of an integral together with its estimated absolute error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
}

impl QuadResult {
    fn scaled(self, factor: f64) -> Self {
        Self {
            value: self.value * factor,
            abs_error_estimate: self.abs_error_estimate * factor.abs(),
            evaluations: self.evaluations,
        }
    }
}

struct Rule {
    nodes: [f64; NODES],
    weights: [f64; NODES],
}

/// Nodes and weights of the 16-point Gauss–Legendre rule on `[−1, 1]`, found
/// by Newton iteration on the Legendre recurrence.
fn rule() -> &'static Rule {
    static RULE: OnceLock<Rule> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = NODES;
        let mut nodes = [0.0; NODES];
        let mut weights = [0.0; NODES];
        for i in 0..n {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let k = k as f64;
                    let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        Rule { nodes, weights }
    })
}

/// Composite 16-node Gauss–Legendre with panel doubling.
#[derive(Debug, Clone, Copy)]
pub struct PanelGaussLegendre {
    pub max_panels: usize,
}

impl Default for PanelGaussLegendre {
    fn default() -> Self {
        Self {
            max_panels: DEFAULT_MAX_PANELS,
        }
    }
}

impl PanelGaussLegendre {
    pub fn with_max_panels(max_panels: usize) -> Self {
        Self { max_panels }
    }

    fn composite<F: Fn(f64) -> f64>(&self, f: &F, a: f64, b: f64, panels: usize) -> f64 {
        let rule = rule();
        let h = (b - a) / panels as f64;
        let half = 0.5 * h;
        (0..panels)
            .map(|k| {
                let mid = a + (k as f64 + 0.5) * h;
                let s: f64 = rule
                    .nodes
                    .iter()
                    .zip(&rule.weights)
                    .map(|(x, w)| w * f(mid + half * x))
                    .sum();
                s * half
            })
            .sum()
    }

    /// Integrates `f` over `[a, b]` until successive panel doublings differ by
    /// less than `tol`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64, tol: f64) -> Result<QuadResult> {
        if tol.is_nan() || tol <= 0.0 {
            return Err(Error::InvalidParameter(format!("tolerance must be positive, got {tol}")));
        }
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::InvalidParameter("integration bounds must be finite".into()));
        }
        let mut panels = 1;
        let mut evaluations = NODES;
        let mut prev = self.composite(&f, a, b, panels);
        let mut last_diff = f64::INFINITY;
        while panels * 2 <= self.max_panels {
            panels *= 2;
            evaluations += panels * NODES;
            let next = self.composite(&f, a, b, panels);
            last_diff = (next - prev).abs();
            prev = next;
            if last_diff < tol {
                return Ok(QuadResult {
                    value: next,
                    abs_error_estimate: last_diff,
                    evaluations,
                });
            }
        }
        Err(Error::BudgetExhausted {
            tol,
            best_value: prev,
            abs_error_estimate: last_diff,
            evaluations,
        })
    }
}

/// [`PanelGaussLegendre::integrate`] with the default panel cap.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadResult> {
    PanelGaussLegendre::default().integrate(f, a, b, tol)
}

fn check_interior(r: f64) -> Result<()> {
    if (0.0..1.0).contains(&r) {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            name: "r",
            value: r,
            range: "[0, 1)",
        })
    }
}

/// `arg(1 − r·e^{iθ})`, which lies in `(−π/2, π/2)` for `r < 1`.
pub fn arg_one_minus(r: f64, theta: f64) -> f64 {
    let (s, c) = theta.sin_cos();
    (-r * s).atan2(1.0 - r * c)
}

fn arc_difference_unchecked(r: f64, theta: f64) -> f64 {
    let c = UnitCirclePoint::new(theta).to_plane();
    let x = PlanePoint::new(r, 0.0);
    // The antipode of C lies on the same side of line XC as the center, i.e.
    // on the longer arc.
    let probe = PlanePoint::new(-c.x, -c.y);
    let magnitude = 2.0 / PI * arg_one_minus(r, theta).abs();
    match side_of_line(probe, x, c) {
        Ok(Sign::Positive) | Err(_) => magnitude,
        Ok(Sign::Negative) => -magnitude,
    }
}

/// Normalized measure of the arc right of the directed line `X → C` minus the
/// measure of the arc left of it, with `X = (r, 0)`.
///
/// Magnitude `(2/π)·|arg(1 − r·e^{iθ_C})|`; the sign comes from probing the
/// line with the antipode of `C`. The result equals `(2/π)·arg(1 − r·e^{iθ_C})`.
pub fn arc_difference(r: f64, c: UnitCirclePoint) -> Result<f64> {
    check_interior(r)?;
    Ok(arc_difference_unchecked(r, c.theta()))
}

/// [`arc_difference`] by explicit construction: intersect line `XC` with the
/// circle a second time at `N`, measure the counterclockwise arc from `C` to
/// `N`, and orient by probing that arc's midpoint.
pub fn arc_difference_geometric(r: f64, c: UnitCirclePoint) -> Result<f64> {
    check_interior(r)?;
    let x = PlanePoint::new(r, 0.0);
    let cp = c.to_plane();
    let (dx, dy) = (x.x - cp.x, x.y - cp.y);
    // |C + t·d| = 1 has roots t = 0 and t = −2 C·d / |d|²
    let t = -2.0 * (cp.x * dx + cp.y * dy) / (dx * dx + dy * dy);
    let n = PlanePoint::new(cp.x + t * dx, cp.y + t * dy);
    let arc = (n.y.atan2(n.x) - c.theta()).rem_euclid(TAU);
    let (ms, mc) = (c.theta() + 0.5 * arc).sin_cos();
    let sign = side_of_line(PlanePoint::new(mc, ms), x, cp)?;
    Ok(f64::from(sign.value()) * (2.0 * arc - TAU) / TAU)
}

/// `I(r) = ∫₀^{2π} arg(1 − r·e^{iθ})² dθ`, which equals `π·Li₂(r²)`.
pub fn i_of_r(r: f64, tol: f64) -> Result<QuadResult> {
    check_interior(r)?;
    integrate(|t| arg_one_minus(r, t).powi(2), 0.0, TAU, tol)
}

/// `I'(r) = −2 ∫₀^{2π} sinθ / (1 + r² − 2r·cosθ) · arg(1 − r·e^{iθ}) dθ`,
/// which equals `−2π·ln(1 − r²)/r`.
pub fn di_dr_quadrature(r: f64, tol: f64) -> Result<QuadResult> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::OutOfRange {
            name: "r",
            value: r,
            range: "(0, 1)",
        });
    }
    let q = integrate(
        |t| {
            let (s, c) = t.sin_cos();
            s / (1.0 + r * r - 2.0 * r * c) * arg_one_minus(r, t)
        },
        0.0,
        TAU,
        tol / 2.0,
    )?;
    Ok(q.scaled(-2.0))
}

/// Containment probability through the integral form
/// `P(r) = 1/4 − 3/(2π³)·I(r)`.
pub fn p_from_integral(r: f64, tol: f64) -> Result<f64> {
    let i = i_of_r(r, tol)?;
    Ok(0.25 - 3.0 / (2.0 * PI.powi(3)) * i.value)
}

/// Mean of the squared arc difference over `C` uniform on the circle, which
/// equals `(1 − 4·P(r))/3`.
pub fn dif_square_integral(r: f64, tol: f64) -> Result<QuadResult> {
    check_interior(r)?;
    let q = integrate(|t| arc_difference_unchecked(r, t).powi(2), 0.0, TAU, tol * TAU)?;
    Ok(q.scaled(1.0 / TAU))
}
