//! The real dilogarithm `Li₂(x) = Σ xⁿ/n²` for `x ≤ 1`.
//!
//! Only the power series is summed directly, and only for `|x| ≤ 1/2`. Every
//! other argument is mapped into that disk by a functional equation:
//!
//! | range            | route                                                  |
//! |------------------|--------------------------------------------------------|
//! | `x < −1`         | inversion: `−π²/6 − ½ln²(−x) − Li₂(1/x)`               |
//! | `−1 ≤ x < −1/2`  | Landen: `−Li₂(x/(x−1)) − ½ln²(1−x)`                    |
//! | `\|x\| ≤ 1/2`    | series                                                 |
//! | `1/2 < x < 1`    | reflection: `π²/6 − ln(x)ln(1−x) − Li₂(1−x)`           |
//! | `x = 1`          | `π²/6`                                                 |
//!
//! [`li2_integral_oracle`] evaluates the integral representation
//! `−∫₀^x ln(1−u)/u du` by quadrature and shares no code with the above.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::quadrature::{integrate, QuadResult};

/// `ζ(2) = π²/6 = Li₂(1)`.
pub fn zeta2() -> f64 {
    PI * PI / 6.0
}

/// Relative size of the series tail at which summation stops.
const SERIES_REL_TOL: f64 = 1e-17;

/// Upper bound on the series tail after `n` terms at `|x| < 1`.
pub fn series_tail_bound(x: f64, n: usize) -> f64 {
    let a = x.abs();
    let m = (n + 1) as f64;
    a.powi(n as i32 + 1) / (m * m * (1.0 - a))
}

/// Sums the series until the tail bound falls below the target accuracy.
/// Returns the partial sum and the number of terms used.
pub fn series(x: f64) -> (f64, usize) {
    debug_assert!(x.abs() <= 0.5);
    let mut sum = 0.0;
    let mut power = 1.0;
    let mut n = 0usize;
    loop {
        n += 1;
        power *= x;
        let k = n as f64;
        sum += power / (k * k);
        if series_tail_bound(x, n) <= SERIES_REL_TOL * sum.abs() || power == 0.0 {
            return (sum, n);
        }
    }
}

/// Real dilogarithm on `x ≤ 1`.
pub fn li2(x: f64) -> Result<f64> {
    if x.is_nan() || x > 1.0 {
        return Err(Error::OutsideRealBranch(x));
    }
    Ok(li2_unchecked(x))
}

fn li2_unchecked(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else if x == 1.0 {
        zeta2()
    } else if x < -1.0 {
        let l = (-x).ln();
        -zeta2() - 0.5 * l * l - li2_unchecked(1.0 / x)
    } else if x < -0.5 {
        let l = (-x).ln_1p();
        -series(x / (x - 1.0)).0 - 0.5 * l * l
    } else if x <= 0.5 {
        series(x).0
    } else {
        let y = 1.0 - x;
        zeta2() - x.ln() * y.ln() - series(y).0
    }
}

/// Second route on `[−1, 0)` through `Li₂(x) = −Li₂(−x) + ½·Li₂(x²)`, kept as
/// an independent cross-check of the Landen branch.
pub fn li2_by_duplication(x: f64) -> Result<f64> {
    if !(-1.0..0.0).contains(&x) {
        return Err(Error::OutOfRange {
            name: "x",
            value: x,
            range: "[-1, 0)",
        });
    }
    Ok(-li2_unchecked(-x) + 0.5 * li2_unchecked(x * x))
}

/// The substitution `u = 1 − e^{−t}` runs to `t = ∞` at `x = 1`; the tail
/// beyond this point is below `1e−26`.
const MAX_EXPONENT: f64 = 64.0;

/// `Li₂(x)` by quadrature of `−∫₀^x ln(1−u)/u du`.
///
/// Negative arguments integrate the smooth integrand over `[x, 0]` directly.
/// Positive arguments substitute `u = 1 − e^{−t}`, which turns the integral
/// into `∫₀^T t/(eᵗ − 1) dt` with `T = −ln(1 − x)` and removes the logarithmic
/// singularity at `u = 1`.
pub fn li2_integral_oracle(x: f64, tol: f64) -> Result<QuadResult> {
    if x.is_nan() || x > 1.0 {
        return Err(Error::OutsideRealBranch(x));
    }
    if x <= 0.0 {
        let g = |u: f64| if u == 0.0 { 1.0 } else { -(-u).ln_1p() / u };
        let q = integrate(g, x, 0.0, tol)?;
        return Ok(QuadResult {
            value: -q.value,
            ..q
        });
    }
    let upper = if x == 1.0 {
        MAX_EXPONENT
    } else {
        (-(-x).ln_1p()).min(MAX_EXPONENT)
    };
    let g = |t: f64| if t == 0.0 { 1.0 } else { t / t.exp_m1() };
    integrate(g, 0.0, upper, tol)
}
