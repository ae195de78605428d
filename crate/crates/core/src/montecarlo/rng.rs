//! Counter-based per-trial random streams.
//!
//! Trial `i` of a run with seed `s` draws from its own stream, so a run's
//! result does not depend on how trials are split across workers. The
//! construction is fixed and part of the public contract:
//!
//! ```text
//! GAMMA  = 0x9E37_79B9_7F4A_7C15
//! mix64(z):
//!     z = (z ^ (z >> 30)) * 0xBF58_476D_1CE4_E5B9     (wrapping)
//!     z = (z ^ (z >> 27)) * 0x94D0_49BB_1331_11EB     (wrapping)
//!     return z ^ (z >> 31)
//!
//! key(s, i)  = mix64(s ^ mix64(i + 1))                 (wrapping add)
//! word_k     = mix64(key(s, i) + (k + 1) * GAMMA)      (k = 0, 1, 2, ...)
//! uniform_k  = (word_k >> 11) * 2^-53                  in [0, 1)
//! ```
//!
//! `mix64` is the SplitMix64 output finalizer; the words of one trial form a
//! SplitMix64 sequence started at `key(s, i)`.

/// Weyl increment of the SplitMix64 sequence.
pub const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 finalizer.
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Stream key of trial `trial` under `seed`.
#[inline]
pub fn trial_key(seed: u64, trial: u64) -> u64 {
    mix64(seed ^ mix64(trial.wrapping_add(1)))
}

/// The random stream of a single trial.
#[derive(Debug, Clone)]
pub struct TrialRng {
    state: u64,
}

impl TrialRng {
    pub fn new(seed: u64, trial: u64) -> Self {
        Self {
            state: trial_key(seed, trial),
        }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GAMMA);
        mix64(self.state)
    }

    /// Uniform double in `[0, 1)` with 53 random bits.
    #[inline]
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform angle in `[0, 2π)`.
    #[inline]
    pub fn next_angle(&mut self) -> f64 {
        std::f64::consts::TAU * self.next_f64()
    }
}
