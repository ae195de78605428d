//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any fails.
//!
//! Run with `cargo test -p inscribed --test acceptance`.

use std::f64::consts::{PI, SQRT_2};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use inscribed::closed_forms::{chord_cdf, p_contain, three_circle_probability};
use inscribed::dilog::{li2, li2_integral_oracle};
use inscribed::montecarlo::Simulator;
use inscribed::montecarlo::rng::TrialRng;
use inscribed::predicates::UnitCirclePoint;
use inscribed::quadrature::{
    arc_difference, arc_difference_geometric, di_dr_quadrature, dif_square_integral, i_of_r,
    p_from_integral,
};
use inscribed::verify::{predicate_relation_failures, radius_grid};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

/// Largest absolute value, with NaN treated as a failure.
fn worst(values: impl IntoIterator<Item = f64>) -> f64 {
    values
        .into_iter()
        .map(f64::abs)
        .fold(0.0, |acc, v| if v.is_nan() || acc.is_nan() { f64::NAN } else { acc.max(v) })
}

fn endpoints() -> Outcome {
    let p0 = p_contain(0.0).unwrap();
    let p1 = p_contain(1.0).unwrap();
    let pass = (p0 - 0.25).abs() < 1e-12 && p1.abs() < 1e-12;
    outcome(pass, format!("P(0)={p0}, P(1)={p1}"))
}

fn dilog_golden() -> Outcome {
    let at0 = li2(0.0).unwrap();
    let at1 = (li2(1.0).unwrap() - PI * PI / 6.0).abs();
    let grid = worst((0..50).map(|k| {
        let x = -2.0 + 3.0 * k as f64 / 49.0;
        li2(x).unwrap() - li2_integral_oracle(x, 1e-11).unwrap().value
    }));
    let pass = at0 == 0.0 && at1 < 1e-13 && grid < 1e-10;
    outcome(pass, format!("li2(0)={at0}, |li2(1)-pi^2/6|={at1:.1e}, max oracle gap={grid:.1e}"))
}

fn three_circle() -> Outcome {
    let p = three_circle_probability();
    // both functional-equation branches are exercised
    let _ = (li2(-SQRT_2).unwrap(), li2(1.0 / SQRT_2).unwrap());
    outcome((p - 0.387_128_710_6).abs() < 1e-9, format!("value={p}"))
}

fn integral_vs_closed_form() -> Outcome {
    let gap = worst(
        radius_grid()
            .into_iter()
            .map(|r| p_from_integral(r, 1e-10).unwrap() - p_contain(r).unwrap()),
    );
    outcome(gap < 1e-8, format!("max gap={gap:.1e} over 19 radii"))
}

fn derivative_identity() -> Outcome {
    let gap = worst((1..=9).map(|k| {
        let r = k as f64 / 10.0;
        di_dr_quadrature(r, 1e-9).unwrap().value + 2.0 * PI * (1.0 - r * r).ln() / r
    }));
    let h = 1e-4;
    let fd = (i_of_r(0.5 + h, 1e-13).unwrap().value - i_of_r(0.5 - h, 1e-13).unwrap().value) / (2.0 * h);
    let fd_gap = (fd - di_dr_quadrature(0.5, 1e-10).unwrap().value).abs();
    outcome(
        gap < 1e-7 && fd_gap < 1e-5,
        format!("max closed-form gap={gap:.1e}, central-difference gap={fd_gap:.1e}"),
    )
}

fn predicate_identities() -> Outcome {
    let f = predicate_relation_failures(1_000_000, 0);
    let failures = f.antisymmetry + f.relation1 + f.relation2 + f.relation3;
    outcome(
        failures == 0 && f.tested == 1_000_000,
        format!(
            "{} configurations; failures: antisymmetry={}, sum-of-sides={}, orientation={}, product-form={}",
            f.tested, f.antisymmetry, f.relation1, f.relation2, f.relation3
        ),
    )
}

fn linear_equation() -> Outcome {
    let gap = worst(radius_grid().into_iter().map(|r| {
        dif_square_integral(r, 1e-10).unwrap().value - (1.0 - 4.0 * p_contain(r).unwrap()) / 3.0
    }));
    outcome(gap < 1e-8, format!("max gap={gap:.1e} over 19 radii"))
}

fn monte_carlo_gates() -> Outcome {
    const TRIALS: u64 = 10_000_000;
    let sim = Simulator::new(0).unwrap();
    let mut lines = Vec::new();
    let mut pass = true;
    let mut gate = |label: String, p_hat: f64, expected: f64, band: f64| {
        let ok = (p_hat - expected).abs() < band;
        pass &= ok;
        lines.push(format!("{label}: |dev|/band={:.2}{}", (p_hat - expected).abs() / band, if ok { "" } else { " FAIL" }));
    };
    for r in [0.0, 0.3, 0.5, 0.8] {
        let e = sim.triangle(r, TRIALS, 0).unwrap();
        gate(format!("triangle r={r}"), e.p_hat, p_contain(r).unwrap(), 5.0 * e.std_err);
    }
    let radii = [0.3, 0.6, 0.9];
    let run = sim.chords(&radii, TRIALS, 0).unwrap();
    for (r, e) in radii.iter().zip(&run.estimates) {
        gate(format!("chords r={r}"), e.p_hat, chord_cdf(*r).unwrap(), 5.0 * e.std_err);
    }
    let (ab, bc) = sim.three_circles(TRIALS, 0).unwrap();
    gate("three-circles AB".into(), ab.p_hat, 0.387_128_710_6, 5.0 * ab.std_err);
    gate("three-circles BC".into(), bc.p_hat, 0.387_128_710_6, 5.0 * bc.std_err);
    gate("AB vs BC".into(), ab.p_hat - bc.p_hat, 0.0, 5.0 * ab.std_err.hypot(bc.std_err));
    outcome(pass, lines.join("; "))
}

fn determinism() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_inscribed");
    let invocations: [&[&str]; 3] = [
        &["simulate", "triangle", "--r", "0.5", "--trials", "200000", "--seed", "42"],
        &["simulate", "chords", "--r", "0.3,0.6,0.9", "--trials", "100000", "--seed", "42"],
        &["simulate", "three-circles", "--trials", "200000", "--seed", "42"],
    ];
    let mut mismatches = Vec::new();
    for args in invocations {
        let outputs: Vec<Vec<u8>> = ["1", "2", "4"]
            .iter()
            .map(|w| {
                let out = Command::new(exe).args(args).args(["--workers", w]).output().unwrap();
                assert!(out.status.success(), "{args:?} failed");
                out.stdout
            })
            .collect();
        if outputs.windows(2).any(|w| w[0] != w[1]) {
            mismatches.push(args[1]);
        }
    }
    outcome(
        mismatches.is_empty(),
        format!("workers 1/2/4, mismatching experiments: {mismatches:?}"),
    )
}

fn dual_route_arc() -> Outcome {
    let mut rng = TrialRng::new(0, 10);
    let gap = worst((0..10_000).map(|_| {
        let r = 0.999 * rng.next_f64();
        let c = UnitCirclePoint::new(rng.next_angle());
        arc_difference(r, c).unwrap() - arc_difference_geometric(r, c).unwrap()
    }));
    outcome(gap < 1e-10, format!("max gap={gap:.1e} over 10^4 samples"))
}

fn main() -> ExitCode {
    type Criterion = (u32, &'static str, Duration, fn() -> Outcome);
    let secs = Duration::from_secs;
    let criteria: [Criterion; 10] = [
        (1, "endpoint exactness", secs(1), endpoints),
        (2, "dilogarithm golden values", secs(5), dilog_golden),
        (3, "three-circle constant", secs(1), three_circle),
        (4, "integral form vs closed form", secs(10), integral_vs_closed_form),
        (5, "derivative identity", secs(20), derivative_identity),
        (6, "predicate identities", secs(10), predicate_identities),
        (7, "linear-equation identity", secs(10), linear_equation),
        (8, "Monte Carlo 5-sigma gates", secs(120), monte_carlo_gates),
        (9, "determinism across worker counts", secs(60), determinism),
        (10, "dual-route arc difference", secs(2), dual_route_arc),
    ];

    let mut failed = 0;
    for (id, name, budget, run) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let pass = result.pass && elapsed <= budget;
        failed += usize::from(!pass);
        println!(
            "[{}] criterion {id:>2}: {name} ({:.2}s, budget {}s) -- {}",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            budget.as_secs(),
            result.detail
        );
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
