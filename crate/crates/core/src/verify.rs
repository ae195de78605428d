//! Cross-verification suites.
//!
//! Every identity the library relies on is checked here by a second route:
//! predicate relations on random configurations, the dilogarithm against its
//! integral representation and functional equations, the integral form of
//! the containment probability against the closed form, and each Monte Carlo
//! estimate against its closed form at 5 standard errors.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::closed_forms::{chord_cdf, p_contain, three_circle_probability};
use crate::dilog::{li2, li2_by_duplication, li2_integral_oracle, series, series_tail_bound, zeta2};
use crate::error::{Error, Result};
use crate::montecarlo::rng::TrialRng;
use crate::montecarlo::{Simulator, CHORD_ACCEPTANCE};
use crate::predicates::{
    check_relation1, check_relation2, check_relation3, cross, side_of, PlanePoint, UnitCirclePoint,
};
use crate::quadrature::{
    arc_difference, arc_difference_geometric, di_dr_quadrature, dif_square_integral, i_of_r,
    p_from_integral,
};

/// A named group of checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Predicates,
    Dilog,
    ClosedForms,
    Quadrature,
    Montecarlo,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Predicates,
        Suite::Dilog,
        Suite::ClosedForms,
        Suite::Quadrature,
        Suite::Montecarlo,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Predicates => "predicates",
            Suite::Dilog => "dilog",
            Suite::ClosedForms => "closed-forms",
            Suite::Quadrature => "quadrature",
            Suite::Montecarlo => "montecarlo",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite `{s}`")))
    }
}

/// One comparison: passes when `|actual − expected| ≤ tolerance`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub expected: f64,
    pub actual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub overall_pass: bool,
}

impl VerificationReport {
    fn new(checks: Vec<Check>) -> Self {
        let overall_pass = checks.iter().all(|c| c.pass);
        Self {
            checks,
            overall_pass,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(4).max(4);
        writeln!(
            f,
            "{:<12} {:<width$} {:>24} {:>24} {:>10}  result",
            "suite", "check", "expected", "actual", "tolerance"
        )?;
        for c in &self.checks {
            writeln!(
                f,
                "{:<12} {:<width$} {:>24} {:>24} {:>10.1e}  {}",
                c.suite.name(),
                c.name,
                crate::fmt::real(c.expected),
                crate::fmt::real(c.actual),
                c.tolerance,
                if c.pass { "PASS" } else { "FAIL" }
            )?;
        }
        let failed = self.failures().count();
        write!(
            f,
            "{} of {} checks passed: {}",
            self.checks.len() - failed,
            self.checks.len(),
            if self.overall_pass { "PASS" } else { "FAIL" }
        )
    }
}

/// Knobs for [`run`].
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Trials per Monte Carlo estimate.
    pub trials: u64,
    pub seed: u64,
    /// Monte Carlo worker threads, 0 for one per core.
    pub workers: usize,
    /// Random configurations for the predicate relations.
    pub configurations: u64,
    /// Replaces the tolerance of every check in a suite.
    pub tolerance_overrides: BTreeMap<Suite, f64>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            trials: 1_000_000,
            seed: 0,
            workers: 0,
            configurations: 1_000_000,
            tolerance_overrides: BTreeMap::new(),
        }
    }
}

struct Recorder<'a> {
    suite: Suite,
    options: &'a VerifyOptions,
    checks: Vec<Check>,
}

impl Recorder<'_> {
    fn check(&mut self, name: impl Into<String>, expected: f64, actual: f64, tolerance: f64) {
        let tolerance = self
            .options
            .tolerance_overrides
            .get(&self.suite)
            .copied()
            .unwrap_or(tolerance);
        let pass = (actual - expected).abs() <= tolerance;
        self.checks.push(Check {
            suite: self.suite,
            name: name.into(),
            expected,
            actual,
            tolerance,
            pass,
        });
    }

    /// Records a failed computation as a failing check.
    fn check_result(&mut self, name: impl Into<String>, expected: f64, actual: Result<f64>, tolerance: f64) {
        self.check(name, expected, actual.unwrap_or(f64::NAN), tolerance);
    }

    fn count(&mut self, name: impl Into<String>, failures: u64) {
        self.check(name, 0.0, failures as f64, 0.0);
    }
}

/// Runs the given suites in order.
pub fn run(suites: &[Suite], options: &VerifyOptions) -> Result<VerificationReport> {
    let mut checks = Vec::new();
    for &suite in suites {
        let mut rec = Recorder {
            suite,
            options,
            checks: Vec::new(),
        };
        match suite {
            Suite::Predicates => predicates_suite(&mut rec),
            Suite::Dilog => dilog_suite(&mut rec),
            Suite::ClosedForms => closed_forms_suite(&mut rec),
            Suite::Quadrature => quadrature_suite(&mut rec),
            Suite::Montecarlo => montecarlo_suite(&mut rec)?,
        }
        checks.extend(rec.checks);
    }
    Ok(VerificationReport::new(checks))
}

/// A random configuration of three circle points and a point of the disk of
/// radius 0.999.
#[derive(Debug, Clone, Copy)]
pub struct Configuration {
    pub a: UnitCirclePoint,
    pub b: UnitCirclePoint,
    pub c: UnitCirclePoint,
    pub x: PlanePoint,
}

impl Configuration {
    /// Configuration number `index` of the stream `seed`.
    pub fn sample(seed: u64, index: u64) -> Self {
        let mut rng = TrialRng::new(seed, index);
        let a = UnitCirclePoint::new(rng.next_angle());
        let b = UnitCirclePoint::new(rng.next_angle());
        let c = UnitCirclePoint::new(rng.next_angle());
        let rho = 0.999 * rng.next_f64().sqrt();
        let (s, co) = rng.next_angle().sin_cos();
        Self {
            a,
            b,
            c,
            x: PlanePoint::new(rho * co, rho * s),
        }
    }

    /// No point sits within `1e−9` (in cross-product magnitude) of a line the
    /// relations evaluate it against.
    pub fn is_well_separated(&self) -> bool {
        let (pa, pb, pc, x) = (self.a.to_plane(), self.b.to_plane(), self.c.to_plane(), self.x);
        [
            cross(x, pa, pb),
            cross(x, pb, pc),
            cross(x, pc, pa),
            cross(pc, pa, pb),
            cross(pa, x, pc),
            cross(pb, x, pc),
        ]
        .iter()
        .all(|v| v.abs() > 1e-9)
    }
}

/// Failure counts of the four predicate identities over `n` well-separated
/// configurations.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RelationFailures {
    pub antisymmetry: u64,
    pub relation1: u64,
    pub relation2: u64,
    pub relation3: u64,
    pub tested: u64,
}

pub fn predicate_relation_failures(n: u64, seed: u64) -> RelationFailures {
    let mut f = RelationFailures::default();
    let mut index = 0;
    while f.tested < n {
        let cfg = Configuration::sample(seed, index);
        index += 1;
        if !cfg.is_well_separated() {
            continue;
        }
        f.tested += 1;
        let Configuration { a, b, c, x } = cfg;
        let ok = |r: Result<bool>| r.unwrap_or(false);
        f.antisymmetry += u64::from(!ok(side_of(x, a, b).and_then(|s| Ok(s == -side_of(x, b, a)?))));
        f.relation1 += u64::from(!ok(check_relation1(a, b, c, x)));
        f.relation2 += u64::from(!ok(check_relation2(a, b, c)));
        f.relation3 += u64::from(!ok(check_relation3(a, b, c, x)));
    }
    f
}

fn predicates_suite(rec: &mut Recorder) {
    let f = predicate_relation_failures(rec.options.configurations, rec.options.seed);
    rec.count("antisymmetry_failures", f.antisymmetry);
    rec.count("relation_sum_of_sides_failures", f.relation1);
    rec.count("relation_orientation_is_side_failures", f.relation2);
    rec.count("relation_product_form_failures", f.relation3);

    // E[R(X, AB)] over uniform A, B vanishes for any fixed X
    let x = PlanePoint::new(0.7, 0.0);
    let n = rec.options.configurations;
    let mut sum = 0i64;
    for i in 0..n {
        let mut rng = TrialRng::new(rec.options.seed ^ 0x5eed, i);
        let a = UnitCirclePoint::new(rng.next_angle());
        let b = UnitCirclePoint::new(rng.next_angle());
        sum += side_of(x, a, b).map_or(0, |s| i64::from(s.value()));
    }
    let mean = sum as f64 / n as f64;
    let std_err = ((1.0 - mean * mean) / n as f64).sqrt();
    rec.check("chord_side_zero_mean", 0.0, mean, 5.0 * std_err);
}

fn dilog_suite(rec: &mut Recorder) {
    rec.check_result("li2_at_0", 0.0, li2(0.0), 0.0);
    rec.check_result("li2_at_1", zeta2(), li2(1.0), 1e-13);

    let grid: Vec<f64> = (0..50).map(|k| -2.0 + 3.0 * k as f64 / 49.0).collect();
    let worst = max_abs(grid.iter().map(|&x| {
        Ok(li2(x)? - li2_integral_oracle(x, 1e-11)?.value)
    }));
    rec.check_result("li2_matches_integral_oracle", 0.0, worst, 1e-10);

    let mut rng = TrialRng::new(rec.options.seed, 0xd110);
    let reflection = max_abs((0..100).map(|_| {
        let x = 0.01 + 0.98 * rng.next_f64();
        Ok(li2(x)? + li2(1.0 - x)? - (zeta2() - x.ln() * (1.0 - x).ln()))
    }));
    rec.check_result("reflection_identity", 0.0, reflection, 1e-12);

    let inversion = max_abs((0..100).map(|_| {
        let x = -100.0 + (100.0 - 1.01) * rng.next_f64();
        let l = (-x).ln();
        Ok(li2(x)? + li2(1.0 / x)? + zeta2() + 0.5 * l * l)
    }));
    rec.check_result("inversion_identity", 0.0, inversion, 1e-12);

    let duplication = max_abs((0..=100).map(|k| {
        let x = -1.0 + 0.005 * k as f64;
        Ok(li2(x)? - li2_by_duplication(x)?)
    }));
    rec.check_result("duplication_matches_landen", 0.0, duplication, 1e-13);

    let values: Vec<f64> = (0..=1100)
        .map(|k| li2(-10.0 + 0.01 * k as f64).unwrap_or(f64::NAN))
        .collect();
    let violations = values.windows(2).filter(|w| w[1].partial_cmp(&w[0]) != Some(Ordering::Greater)).count();
    rec.count("monotonicity_violations", violations as u64);

    let tail_violations = (0..=100)
        .map(|k| -0.5 + 0.01 * k as f64)
        .filter(|&x| {
            let (sum, n) = series(x);
            let rest: f64 = (n + 1..n + 200).map(|k| x.powi(k as i32) / (k * k) as f64).sum();
            rest.abs() > series_tail_bound(x, n) || series_tail_bound(x, n) > 1e-16 * sum.abs().max(1e-300)
        })
        .count();
    rec.count("series_tail_bound_violations", tail_violations as u64);
}

fn closed_forms_suite(rec: &mut Recorder) {
    rec.check_result("p_contain_at_0", 0.25, p_contain(0.0), 1e-12);
    rec.check_result("p_contain_at_1", 0.0, p_contain(1.0), 1e-12);
    rec.check("three_circle_constant", 0.387_128_710_6, three_circle_probability(), 1e-9);

    let grid: Vec<f64> = (0..=100).map(|k| k as f64 / 100.0).collect();
    let p: Vec<f64> = grid.iter().map(|&r| p_contain(r).unwrap_or(f64::NAN)).collect();
    rec.count(
        "p_contain_decreasing_violations",
        p.windows(2).filter(|w| w[1].partial_cmp(&w[0]) != Some(Ordering::Less)).count() as u64,
    );
    let restated = max_abs(grid.iter().map(|&r| {
        Ok(p_contain(r)? + 3.0 / (2.0 * PI * PI) * li2(r * r)? - 0.25)
    }));
    rec.check_result("p_contain_restatement", 0.0, restated, 4.0 * f64::EPSILON);

    let c: Vec<f64> = grid.iter().map(|&r| chord_cdf(r).unwrap_or(f64::NAN)).collect();
    rec.check("chord_cdf_at_0", 0.0, c[0], 0.0);
    rec.check("chord_cdf_at_1", 1.0, c[100], 0.0);
    rec.count(
        "chord_cdf_nondecreasing_violations",
        c.windows(2).filter(|w| !matches!(w[1].partial_cmp(&w[0]), Some(Ordering::Greater | Ordering::Equal))).count() as u64,
    );
}

/// The radii 0.05, 0.10, ..., 0.95.
pub fn radius_grid() -> Vec<f64> {
    (1..=19).map(|k| k as f64 * 0.05).collect()
}

fn quadrature_suite(rec: &mut Recorder) {
    let mut rng = TrialRng::new(rec.options.seed, 0xa7c);
    let dual = max_abs((0..10_000).map(|_| {
        let r = 0.999 * rng.next_f64();
        let c = UnitCirclePoint::new(rng.next_angle());
        Ok(arc_difference(r, c)? - arc_difference_geometric(r, c)?)
    }));
    rec.check_result("arc_difference_dual_route", 0.0, dual, 1e-10);

    let grid = radius_grid();
    let mut honest = 0usize;
    let i_err = max_abs(grid.iter().map(|&r| {
        let q = i_of_r(r, 1e-10)?;
        let err = q.value - PI * li2(r * r)?;
        honest += usize::from(q.abs_error_estimate >= err.abs());
        Ok(err)
    }));
    rec.check_result("I_equals_pi_li2", 0.0, i_err, 1e-8);
    rec.check(
        "error_estimate_honesty_fraction",
        1.0,
        honest as f64 / grid.len() as f64,
        0.05,
    );

    let d_err = max_abs((1..=9).map(|k| {
        let r = k as f64 / 10.0;
        Ok(di_dr_quadrature(r, 1e-9)?.value + 2.0 * PI * (1.0 - r * r).ln() / r)
    }));
    rec.check_result("dI_dr_equals_closed_form", 0.0, d_err, 1e-7);

    let fd = (|| {
        let h = 1e-4;
        let slope = (i_of_r(0.5 + h, 1e-13)?.value - i_of_r(0.5 - h, 1e-13)?.value) / (2.0 * h);
        Ok(slope - di_dr_quadrature(0.5, 1e-10)?.value)
    })();
    rec.check_result("dI_dr_central_difference", 0.0, fd, 1e-5);

    let p_err = max_abs(grid.iter().map(|&r| Ok(p_from_integral(r, 1e-10)? - p_contain(r)?)));
    rec.check_result("p_from_integral_matches_p_contain", 0.0, p_err, 1e-8);

    let dif_err = max_abs(grid.iter().map(|&r| {
        Ok(dif_square_integral(r, 1e-10)?.value - (1.0 - 4.0 * p_contain(r)?) / 3.0)
    }));
    rec.check_result("dif_square_linear_equation", 0.0, dif_err, 1e-8);
}

fn montecarlo_suite(rec: &mut Recorder) -> Result<()> {
    let VerifyOptions {
        trials,
        seed,
        workers,
        ..
    } = *rec.options;
    let sim = Simulator::new(workers)?;

    for r in [0.0, 0.3, 0.5, 0.8, 1.0] {
        let e = sim.triangle(r, trials, seed)?;
        rec.check(format!("triangle_r{r}"), p_contain(r)?, e.p_hat, 5.0 * e.std_err);
    }
    let e = sim.triangle_rotated(0.5, trials, seed, 1.0)?;
    rec.check("triangle_rotated_r0.5", p_contain(0.5)?, e.p_hat, 5.0 * e.std_err);

    let radii = [0.3, 0.6, 0.9, 1.0];
    let run = sim.chords(&radii, trials, seed)?;
    for (&r, e) in radii.iter().zip(&run.estimates) {
        rec.check(format!("chords_r{r}"), chord_cdf(r)?, e.p_hat, 5.0 * e.std_err);
    }
    let acc_err = (CHORD_ACCEPTANCE * (1.0 - CHORD_ACCEPTANCE) / run.attempts as f64).sqrt();
    rec.check("chord_acceptance_rate", CHORD_ACCEPTANCE, run.acceptance_rate(), 5.0 * acc_err);

    let (ab, bc) = sim.three_circles(trials, seed)?;
    let p = three_circle_probability();
    rec.check("three_circles_AB", p, ab.p_hat, 5.0 * ab.std_err);
    rec.check("three_circles_BC", p, bc.p_hat, 5.0 * bc.std_err);
    rec.check("three_circles_AB_vs_BC", 0.0, ab.p_hat - bc.p_hat, 5.0 * ab.std_err.hypot(bc.std_err));

    let small = trials.min(100_000);
    let single = Simulator::new(1)?.triangle(0.5, small, seed)?;
    let many = Simulator::new(3)?.triangle(0.5, small, seed)?;
    rec.check("determinism_across_workers", single.p_hat, many.p_hat, 0.0);
    Ok(())
}

fn max_abs(values: impl Iterator<Item = Result<f64>>) -> Result<f64> {
    let mut worst = 0.0f64;
    for v in values {
        let v = v?.abs();
        // NaN must surface as a failure
        if v.is_nan() {
            return Ok(f64::NAN);
        }
        worst = worst.max(v);
    }
    Ok(worst)
}
