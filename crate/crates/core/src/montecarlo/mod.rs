//! Seeded Monte Carlo experiments.
//!
//! Each trial draws from its own counter-based stream (see [`rng`]) and the
//! engine only accumulates integer hit counts, so a result depends on
//! `(experiment, parameters, seed, trials)` and nothing else: the worker
//! count and the chunking of `[0, trials)` cannot change it.

pub mod rng;

use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuilder};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::predicates::{contains, cross, PlanePoint, UnitCirclePoint};
use rng::TrialRng;

/// Trials handed to a worker at a time.
const CHUNK: u64 = 1 << 14;

/// A Bernoulli Monte Carlo estimate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct McEstimate {
    pub experiment: &'static str,
    pub p_hat: f64,
    pub trials: u64,
    pub std_err: f64,
    pub seed: u64,
}

impl McEstimate {
    fn from_count(experiment: &'static str, hits: u64, trials: u64, seed: u64) -> Self {
        let p_hat = hits as f64 / trials as f64;
        Self {
            experiment,
            p_hat,
            trials,
            std_err: (p_hat * (1.0 - p_hat) / trials as f64).sqrt(),
            seed,
        }
    }

    /// `(p_hat − expected) / std_err`; zero when both the estimate and its
    /// standard error are degenerate at the expected value.
    pub fn z_score(&self, expected: f64) -> f64 {
        let diff = self.p_hat - expected;
        if self.std_err > 0.0 {
            diff / self.std_err
        } else if diff == 0.0 {
            0.0
        } else {
            diff.signum() * f64::INFINITY
        }
    }

    /// Whether the estimate lies strictly within `k` standard errors of
    /// `expected`. A zero standard error requires an exact match.
    pub fn within_sigmas(&self, expected: f64, k: f64) -> bool {
        let diff = (self.p_hat - expected).abs();
        diff < k * self.std_err || diff == 0.0
    }
}

/// Result of the chord experiment: one estimate per requested radius.
#[derive(Debug, Clone, PartialEq)]
pub struct ChordRun {
    pub radii: Vec<f64>,
    pub estimates: Vec<McEstimate>,
    /// Chord pairs drawn, including the rejected non-intersecting ones.
    pub attempts: u64,
}

impl ChordRun {
    /// Fraction of drawn chord pairs that intersected.
    pub fn acceptance_rate(&self) -> f64 {
        self.estimates.first().map_or(0.0, |e| e.trials as f64) / self.attempts as f64
    }
}

/// Three unit circles centered at `(−2, 0)`, `(0, 0)` and `(2, 0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThreeCircleConfig {
    pub radius: f64,
    pub centers: [PlanePoint; 3],
}

impl Default for ThreeCircleConfig {
    fn default() -> Self {
        Self {
            radius: 1.0,
            centers: [
                PlanePoint::new(-2.0, 0.0),
                PlanePoint::new(0.0, 0.0),
                PlanePoint::new(2.0, 0.0),
            ],
        }
    }
}

impl ThreeCircleConfig {
    fn point_on(&self, circle: usize, angle: f64) -> PlanePoint {
        let (s, c) = angle.sin_cos();
        let o = self.centers[circle];
        PlanePoint::new(o.x + self.radius * c, o.y + self.radius * s)
    }

    /// Whether the line through `p` and `q` meets circle `circle`; tangency
    /// counts as meeting.
    pub fn line_meets(&self, p: PlanePoint, q: PlanePoint, circle: usize) -> bool {
        let len = (q.x - p.x).hypot(q.y - p.y);
        cross(self.centers[circle], p, q).abs() <= self.radius * len
    }
}

/// Runs experiments on a dedicated thread pool.
pub struct Simulator {
    pool: ThreadPool,
}

impl Simulator {
    /// `workers == 0` uses one thread per available core.
    pub fn new(workers: usize) -> Result<Self> {
        let pool = ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("cannot start worker pool: {e}")))?;
        Ok(Self { pool })
    }

    pub fn workers(&self) -> usize {
        self.pool.current_num_threads()
    }

    /// Sums per-trial hit vectors over `[0, trials)`.
    fn count<const K: usize, F>(&self, trials: u64, trial: F) -> [u64; K]
    where
        F: Fn(u64) -> [bool; K] + Sync,
    {
        let chunks = trials.div_ceil(CHUNK);
        self.pool.install(|| {
            (0..chunks)
                .into_par_iter()
                .map(|c| {
                    let mut hits = [0u64; K];
                    for i in c * CHUNK..((c + 1) * CHUNK).min(trials) {
                        for (h, hit) in hits.iter_mut().zip(trial(i)) {
                            *h += u64::from(hit);
                        }
                    }
                    hits
                })
                .reduce(|| [0u64; K], |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                })
        })
    }

    /// Fraction of random inscribed triangles containing `(r, 0)`.
    pub fn triangle(&self, r: f64, trials: u64, seed: u64) -> Result<McEstimate> {
        self.triangle_rotated(r, trials, seed, 0.0)
    }

    /// [`Simulator::triangle`] with every vertex angle shifted by `offset`.
    pub fn triangle_rotated(&self, r: f64, trials: u64, seed: u64, offset: f64) -> Result<McEstimate> {
        check_unit(r)?;
        check_trials(trials)?;
        let x = PlanePoint::new(r, 0.0);
        let [hits] = self.count(trials, |i| {
            let mut rng = TrialRng::new(seed, i);
            loop {
                let mut vertex = || UnitCirclePoint::new(rng.next_angle() + offset);
                let (a, b, c) = (vertex(), vertex(), vertex());
                // only a repeated vertex fails; redraw from the same stream
                if let Ok(inside) = contains(a, b, c, x) {
                    return [inside];
                }
            }
        });
        Ok(McEstimate::from_count("triangle", hits, trials, seed))
    }

    /// Empirical radial CDF of the intersection point of two random chords,
    /// conditioned on the chords intersecting. `trials` counts intersecting
    /// pairs; non-intersecting pairs are redrawn.
    pub fn chords(&self, radii: &[f64], trials: u64, seed: u64) -> Result<ChordRun> {
        check_trials(trials)?;
        if radii.is_empty() {
            return Err(Error::InvalidParameter("at least one radius is required".into()));
        }
        for &r in radii {
            check_unit(r)?;
        }
        let chunks = trials.div_ceil(CHUNK);
        let (hits, attempts) = self.pool.install(|| {
            (0..chunks)
                .into_par_iter()
                .map(|c| {
                    let mut hits = vec![0u64; radii.len()];
                    let mut attempts = 0u64;
                    for i in c * CHUNK..((c + 1) * CHUNK).min(trials) {
                        let (dist, tries) = chord_trial(seed, i);
                        attempts += tries;
                        for (h, &r) in hits.iter_mut().zip(radii) {
                            *h += u64::from(dist <= r);
                        }
                    }
                    (hits, attempts)
                })
                .reduce(
                    || (vec![0u64; radii.len()], 0),
                    |(mut h1, a1), (h2, a2)| {
                        h1.iter_mut().zip(h2).for_each(|(x, y)| *x += y);
                        (h1, a1 + a2)
                    },
                )
        });
        Ok(ChordRun {
            radii: radii.to_vec(),
            estimates: hits
                .into_iter()
                .map(|h| McEstimate::from_count("chords", h, trials, seed))
                .collect(),
            attempts,
        })
    }

    /// Estimates that line AB and line BC meet the right circle, with A on the
    /// left circle and B, C on the middle one.
    pub fn three_circles(&self, trials: u64, seed: u64) -> Result<(McEstimate, McEstimate)> {
        check_trials(trials)?;
        let cfg = ThreeCircleConfig::default();
        let [ab, bc] = self.count(trials, |i| {
            let mut rng = TrialRng::new(seed, i);
            loop {
                let a = cfg.point_on(0, rng.next_angle());
                let b = cfg.point_on(1, rng.next_angle());
                let c = cfg.point_on(1, rng.next_angle());
                if a != b && b != c {
                    return [cfg.line_meets(a, b, 2), cfg.line_meets(b, c, 2)];
                }
            }
        });
        Ok((
            McEstimate::from_count("three-circles/AB", ab, trials, seed),
            McEstimate::from_count("three-circles/BC", bc, trials, seed),
        ))
    }
}

/// Draws chord pairs from trial `i`'s stream until the two open segments
/// cross. Returns the distance of the crossing from the center and the
/// number of pairs drawn.
fn chord_trial(seed: u64, i: u64) -> (f64, u64) {
    let mut rng = TrialRng::new(seed, i);
    let mut tries = 0;
    loop {
        tries += 1;
        let mut point = || UnitCirclePoint::new(rng.next_angle()).to_plane();
        let (p1, p2, p3, p4) = (point(), point(), point(), point());
        let (s3, s4) = (cross(p3, p1, p2), cross(p4, p1, p2));
        let (s1, s2) = (cross(p1, p3, p4), cross(p2, p3, p4));
        if s3 * s4 < 0.0 && s1 * s2 < 0.0 {
            // p1 + t (p2 − p1) with t = s1 / (s1 − s2)
            let t = s1 / (s1 - s2);
            let x = PlanePoint::new(p1.x + t * (p2.x - p1.x), p1.y + t * (p2.y - p1.y));
            // the crossing of two chords lies in the disk; clamp rounding
            return (x.norm().min(1.0), tries);
        }
    }
}

fn check_unit(r: f64) -> Result<()> {
    if (0.0..=1.0).contains(&r) {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            name: "r",
            value: r,
            range: "[0, 1]",
        })
    }
}

fn check_trials(trials: u64) -> Result<()> {
    if trials == 0 {
        Err(Error::InvalidParameter("trials must be at least 1".into()))
    } else {
        Ok(())
    }
}

fn default_simulator() -> &'static Simulator {
    static SIM: std::sync::OnceLock<Simulator> = std::sync::OnceLock::new();
    SIM.get_or_init(|| Simulator::new(0).expect("default worker pool"))
}

/// [`Simulator::triangle`] on a pool with one worker per core.
pub fn simulate_triangle(r: f64, trials: u64, seed: u64) -> Result<McEstimate> {
    default_simulator().triangle(r, trials, seed)
}

/// [`Simulator::chords`] on a pool with one worker per core.
pub fn simulate_chords(radii: &[f64], trials: u64, seed: u64) -> Result<ChordRun> {
    default_simulator().chords(radii, trials, seed)
}

/// [`Simulator::three_circles`] on a pool with one worker per core.
pub fn simulate_three_circles(trials: u64, seed: u64) -> Result<(McEstimate, McEstimate)> {
    default_simulator().three_circles(trials, seed)
}

/// Exact probability that two chords through four uniform points intersect:
/// of the three ways to pair four circularly ordered points, one crosses.
pub const CHORD_ACCEPTANCE: f64 = 1.0 / 3.0;
