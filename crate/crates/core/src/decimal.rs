//! Fixed-point decimal rendering of exact rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// `value` rounded half-to-even to `digits` places after the point.
pub fn render_rational(value: &BigRational, digits: usize) -> String {
    format_scaled(&round_scaled(value, digits), digits)
}

/// `round(value · 10^digits)`, ties to even.
pub fn round_scaled(value: &BigRational, digits: usize) -> BigInt {
    let scaled = value * BigRational::from_integer(BigInt::from(10u32).pow(digits as u32));
    let (q, r) = scaled.numer().div_mod_floor(scaled.denom());
    // r / denom in [0, 1)
    let twice = &r * 2u32;
    match twice.cmp(scaled.denom()) {
        std::cmp::Ordering::Less => q,
        std::cmp::Ordering::Greater => q + 1,
        std::cmp::Ordering::Equal if q.is_even() => q,
        std::cmp::Ordering::Equal => q + 1,
    }
}

/// Shortest exact decimal expansion, if it has at most `max_digits`
/// fractional digits.
pub fn render_terminating(value: &BigRational, max_digits: usize) -> Option<String> {
    (0..=max_digits).find_map(|d| {
        let scaled = value * BigRational::from_integer(BigInt::from(10u32).pow(d as u32));
        scaled
            .is_integer()
            .then(|| format_scaled(&scaled.to_integer(), d))
    })
}

/// Exact decimal when it fits in `max_digits`, otherwise rounded to `max_digits`.
pub fn render_auto(value: &BigRational, max_digits: usize) -> String {
    render_terminating(value, max_digits).unwrap_or_else(|| render_rational(value, max_digits))
}

/// `scaled / 10^digits` written out with exactly `digits` fractional digits.
pub fn format_scaled(scaled: &BigInt, digits: usize) -> String {
    let negative = scaled.is_negative();
    let mut body = scaled.abs().to_string();
    if body.len() <= digits {
        body = format!("{}{body}", "0".repeat(digits + 1 - body.len()));
    }
    let split = body.len() - digits;
    let (int, frac) = body.split_at(split);
    let sign = if negative && !scaled.is_zero() {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

/// Drops trailing zeros (and a bare trailing point) from a fixed-point string.
pub fn trim_zeros(s: &str) -> &str {
    if !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.')
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn fixed_point() {
        assert_eq!(render_rational(&q(19, 80), 4), "0.2375");
        assert_eq!(render_rational(&q(1, 4), 2), "0.25");
        assert_eq!(render_rational(&q(2, 3), 5), "0.66667");
        assert_eq!(render_rational(&q(5, 1), 0), "5");
        assert_eq!(render_rational(&q(-1, 3), 3), "-0.333");
        assert_eq!(render_rational(&q(1, 2000), 3), "0.000");
        assert_eq!(render_rational(&q(3, 2000), 3), "0.002");
    }

    #[test]
    fn terminating() {
        assert_eq!(
            render_terminating(&q(1, 1024), 30).as_deref(),
            Some("0.0009765625")
        );
        assert_eq!(render_terminating(&q(1, 3), 30), None);
        assert_eq!(render_terminating(&q(2, 1), 30).as_deref(), Some("2"));
        assert_eq!(render_auto(&q(1, 3), 4), "0.3333");
    }

    #[test]
    fn trimming() {
        assert_eq!(trim_zeros("0.500000"), "0.5");
        assert_eq!(trim_zeros("1.000"), "1");
        assert_eq!(trim_zeros("100"), "100");
    }
}
