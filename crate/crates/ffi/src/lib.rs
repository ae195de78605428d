//! C API for `inscribed`.
//!
//! Every function returns an [`InscStatus`] and writes its result through an
//! out-pointer, except the infallible [`insc_three_circle_probability`].
//! Simulations run on an opaque [`InscSimulator`] that owns its worker pool;
//! create one with [`insc_simulator_new`] and release it with
//! [`insc_simulator_free`].
//!
//! The header `include/inscribed.h` is regenerated by `build.rs`.

use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};

use inscribed::montecarlo::{McEstimate, Simulator};
use inscribed::predicates::{self, PlanePoint, Sign, UnitCirclePoint};
use inscribed::quadrature::QuadResult;
use inscribed::{closed_forms, dilog, quadrature, Error};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InscStatus {
    Ok = 0,
    NullPointer = 1,
    OutOfRange = 2,
    OutsideRealBranch = 3,
    Degenerate = 4,
    BudgetExhausted = 5,
    InvalidParameter = 6,
    Panic = 7,
}

impl From<&Error> for InscStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::DegenerateLine | Error::DegenerateTriangle => InscStatus::Degenerate,
            Error::OutsideRealBranch(_) => InscStatus::OutsideRealBranch,
            Error::OutOfRange { .. } => InscStatus::OutOfRange,
            Error::BudgetExhausted { .. } => InscStatus::BudgetExhausted,
            Error::InvalidParameter(_) => InscStatus::InvalidParameter,
        }
    }
}

/// A Monte Carlo estimate.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct InscEstimate {
    pub p_hat: f64,
    pub std_err: f64,
    pub trials: u64,
    pub seed: u64,
}

impl From<&McEstimate> for InscEstimate {
    fn from(e: &McEstimate) -> Self {
        Self {
            p_hat: e.p_hat,
            std_err: e.std_err,
            trials: e.trials,
            seed: e.seed,
        }
    }
}

/// A quadrature value with its error estimate.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct InscQuadResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub evaluations: u64,
}

impl From<QuadResult> for InscQuadResult {
    fn from(q: QuadResult) -> Self {
        Self {
            value: q.value,
            abs_error_estimate: q.abs_error_estimate,
            evaluations: q.evaluations as u64,
        }
    }
}

/// Opaque simulation engine.
pub struct InscSimulator {
    inner: Simulator,
}

/// Runs `f` and writes its value to `out`, mapping errors and panics to
/// status codes.
fn write_out<T, F>(out: *mut T, f: F) -> InscStatus
where
    F: FnOnce() -> Result<T, Error>,
{
    if out.is_null() {
        return InscStatus::NullPointer;
    }
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(v)) => {
            unsafe { out.write(v) };
            InscStatus::Ok
        }
        Ok(Err(e)) => InscStatus::from(&e),
        Err(_) => InscStatus::Panic,
    }
}

fn sign_value(s: Sign) -> i32 {
    s.value()
}

/// Static description of a status code. Never null; do not free.
#[no_mangle]
pub extern "C" fn insc_status_message(status: InscStatus) -> *const c_char {
    let msg: &'static CStr = match status {
        InscStatus::Ok => c"ok",
        InscStatus::NullPointer => c"null pointer argument",
        InscStatus::OutOfRange => c"argument outside the admissible range",
        InscStatus::OutsideRealBranch => c"dilogarithm argument above 1",
        InscStatus::Degenerate => c"degenerate line or triangle",
        InscStatus::BudgetExhausted => c"quadrature evaluation budget exhausted",
        InscStatus::InvalidParameter => c"invalid parameter",
        InscStatus::Panic => c"internal panic",
    };
    msg.as_ptr()
}

/// Real dilogarithm, `x <= 1`.
#[no_mangle]
pub extern "C" fn insc_li2(x: f64, out: *mut f64) -> InscStatus {
    write_out(out, || dilog::li2(x))
}

/// Dilogarithm by quadrature of its integral representation.
#[no_mangle]
pub extern "C" fn insc_li2_integral_oracle(x: f64, tol: f64, out: *mut InscQuadResult) -> InscStatus {
    write_out(out, || dilog::li2_integral_oracle(x, tol).map(Into::into))
}

/// Probability that a random inscribed triangle contains a point at distance `r`.
#[no_mangle]
pub extern "C" fn insc_p_contain(r: f64, out: *mut f64) -> InscStatus {
    write_out(out, || closed_forms::p_contain(r))
}

/// Radial CDF of the crossing point of two intersecting random chords.
#[no_mangle]
pub extern "C" fn insc_chord_cdf(r: f64, out: *mut f64) -> InscStatus {
    write_out(out, || closed_forms::chord_cdf(r))
}

#[no_mangle]
pub extern "C" fn insc_three_circle_probability() -> f64 {
    closed_forms::three_circle_probability()
}

#[no_mangle]
pub extern "C" fn insc_arc_difference(r: f64, theta_c: f64, out: *mut f64) -> InscStatus {
    write_out(out, || quadrature::arc_difference(r, UnitCirclePoint::new(theta_c)))
}

#[no_mangle]
pub extern "C" fn insc_arc_difference_geometric(r: f64, theta_c: f64, out: *mut f64) -> InscStatus {
    write_out(out, || quadrature::arc_difference_geometric(r, UnitCirclePoint::new(theta_c)))
}

#[no_mangle]
pub extern "C" fn insc_i_of_r(r: f64, tol: f64, out: *mut InscQuadResult) -> InscStatus {
    write_out(out, || quadrature::i_of_r(r, tol).map(Into::into))
}

#[no_mangle]
pub extern "C" fn insc_di_dr(r: f64, tol: f64, out: *mut InscQuadResult) -> InscStatus {
    write_out(out, || quadrature::di_dr_quadrature(r, tol).map(Into::into))
}

#[no_mangle]
pub extern "C" fn insc_p_from_integral(r: f64, tol: f64, out: *mut f64) -> InscStatus {
    write_out(out, || quadrature::p_from_integral(r, tol))
}

#[no_mangle]
pub extern "C" fn insc_dif_square_integral(r: f64, tol: f64, out: *mut InscQuadResult) -> InscStatus {
    write_out(out, || quadrature::dif_square_integral(r, tol).map(Into::into))
}

/// Writes +1 if `(qx, qy)` is right of or on the chord `from → to`, −1 if left.
#[no_mangle]
pub extern "C" fn insc_side_of(qx: f64, qy: f64, from_theta: f64, to_theta: f64, out: *mut i32) -> InscStatus {
    write_out(out, || {
        predicates::side_of(
            PlanePoint::new(qx, qy),
            UnitCirclePoint::new(from_theta),
            UnitCirclePoint::new(to_theta),
        )
        .map(sign_value)
    })
}

/// Writes +1 for a clockwise triangle, −1 for counterclockwise.
#[no_mangle]
pub extern "C" fn insc_orientation(a: f64, b: f64, c: f64, out: *mut i32) -> InscStatus {
    write_out(out, || {
        predicates::orientation(UnitCirclePoint::new(a), UnitCirclePoint::new(b), UnitCirclePoint::new(c))
            .map(sign_value)
    })
}

#[no_mangle]
pub extern "C" fn insc_contains(a: f64, b: f64, c: f64, x: f64, y: f64, out: *mut bool) -> InscStatus {
    write_out(out, || {
        predicates::contains(
            UnitCirclePoint::new(a),
            UnitCirclePoint::new(b),
            UnitCirclePoint::new(c),
            PlanePoint::new(x, y),
        )
    })
}

/// Creates a simulator with `workers` threads (0: one per core).
#[no_mangle]
pub extern "C" fn insc_simulator_new(workers: usize, out: *mut *mut InscSimulator) -> InscStatus {
    write_out(out, || {
        let inner = Simulator::new(workers)?;
        Ok(Box::into_raw(Box::new(InscSimulator { inner })))
    })
}

/// Releases a simulator. Null is ignored.
///
/// # Safety
///
/// `sim` must come from [`insc_simulator_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn insc_simulator_free(sim: *mut InscSimulator) {
    if !sim.is_null() {
        drop(unsafe { Box::from_raw(sim) });
    }
}

/// # Safety
///
/// `sim` must be a live simulator handle.
#[no_mangle]
pub unsafe extern "C" fn insc_simulator_triangle(
    sim: *const InscSimulator,
    r: f64,
    trials: u64,
    seed: u64,
    out: *mut InscEstimate,
) -> InscStatus {
    let Some(sim) = (unsafe { sim.as_ref() }) else {
        return InscStatus::NullPointer;
    };
    write_out(out, || sim.inner.triangle(r, trials, seed).map(|e| (&e).into()))
}

/// Fills `out[0..n]` with one estimate per radius and `*attempts` with the
/// number of chord pairs drawn.
///
/// # Safety
///
/// `sim` must be a live simulator handle; `radii` and `out` must each point to
/// `n` elements.
#[no_mangle]
pub unsafe extern "C" fn insc_simulator_chords(
    sim: *const InscSimulator,
    radii: *const f64,
    n: usize,
    trials: u64,
    seed: u64,
    out: *mut InscEstimate,
    attempts: *mut u64,
) -> InscStatus {
    let Some(sim) = (unsafe { sim.as_ref() }) else {
        return InscStatus::NullPointer;
    };
    if radii.is_null() || out.is_null() {
        return InscStatus::NullPointer;
    }
    let radii = unsafe { std::slice::from_raw_parts(radii, n) };
    let out = unsafe { std::slice::from_raw_parts_mut(out, n) };
    write_out(attempts, || {
        let run = sim.inner.chords(radii, trials, seed)?;
        for (slot, e) in out.iter_mut().zip(&run.estimates) {
            *slot = e.into();
        }
        Ok(run.attempts)
    })
}

/// # Safety
///
/// `sim` must be a live simulator handle.
#[no_mangle]
pub unsafe extern "C" fn insc_simulator_three_circles(
    sim: *const InscSimulator,
    trials: u64,
    seed: u64,
    out_ab: *mut InscEstimate,
    out_bc: *mut InscEstimate,
) -> InscStatus {
    let Some(sim) = (unsafe { sim.as_ref() }) else {
        return InscStatus::NullPointer;
    };
    if out_bc.is_null() {
        return InscStatus::NullPointer;
    }
    write_out(out_ab, || {
        let (ab, bc) = sim.inner.three_circles(trials, seed)?;
        unsafe { out_bc.write((&bc).into()) };
        Ok((&ab).into())
    })
}
