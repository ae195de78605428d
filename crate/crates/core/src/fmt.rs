//! Text form of emitted reals.
//!
//! Values are written with the shortest digit string that parses back to the
//! same `f64` (never more than 17 significant digits), so `0.25` stays
//! `0.25` and every emitted number round-trips exactly.

/// Formats `x` for CSV and plain-text output.
pub fn real(x: f64) -> String {
    let a = x.abs();
    if x == 0.0 || !x.is_finite() || (1e-5..1e16).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn plain_values() {
        assert_eq!(real(0.25), "0.25");
        assert_eq!(real(0.0), "0");
        assert_eq!(real(1.0), "1");
        assert_eq!(real(std::f64::consts::PI), "3.141592653589793");
        assert_eq!(real(1e-20), "1e-20");
    }

    #[test]
    fn at_most_17_significant_digits() {
        let s = real(0.1 + 0.2);
        let digits = s.chars().filter(char::is_ascii_digit).collect::<String>();
        assert!(digits.trim_start_matches('0').len() <= 17, "{s}");
    }

    proptest! {
        #[test]
        fn round_trips(x in proptest::num::f64::NORMAL | proptest::num::f64::SUBNORMAL | proptest::num::f64::ZERO) {
            prop_assert_eq!(real(x).parse::<f64>().unwrap(), x);
        }
    }
}
