//! Diagnostic real-valued quantities: logarithms of exact counts evaluated in
//! fixed-point big-integer arithmetic. Nothing here feeds back into exact
//! computations.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::Rational;

/// Digits carried by [`log_ratio_decimal`].
pub const REPORT_DIGITS: usize = 50;

const GUARD_DIGITS: usize = 12;

fn pow10(digits: usize) -> BigInt {
    BigInt::from(10u32).pow(digits as u32)
}

/// `atanh(num/den) · scale` for `0 ≤ num/den < 1`, truncated.
fn atanh_fixed(num: &BigInt, den: &BigInt, scale: &BigInt) -> BigInt {
    let z = num * scale / den;
    let z2 = &z * &z / scale;
    let mut power = z.clone();
    let mut sum = BigInt::zero();
    let mut k = 1u32;
    while !power.is_zero() {
        sum += &power / BigInt::from(k);
        power = &power * &z2 / scale;
        k += 2;
    }
    sum
}

/// `ln(n) · 10^digits` for an integer `n ≥ 1`, accurate to a few units in the
/// last place.
pub fn ln_fixed(n: &BigInt, digits: usize) -> BigInt {
    assert!(n.is_positive(), "ln of a non-positive integer");
    let scale = pow10(digits + GUARD_DIGITS);
    let e = n.bits() - 1;
    let base = BigInt::one() << e as usize;
    // n = 2^e · m with m ∈ [1, 2); ln m = 2 atanh((m-1)/(m+1))
    let ln_m = atanh_fixed(&(n - &base), &(n + &base), &scale) * 2;
    let ln2 = atanh_fixed(&BigInt::one(), &BigInt::from(3), &scale) * 2;
    (ln2 * BigInt::from(e) + ln_m) / pow10(GUARD_DIGITS)
}

/// Natural log of a positive integer as `f64`.
pub fn ln_u64(n: u64) -> f64 {
    let fixed = ln_fixed(&BigInt::from(n), 30);
    Rational::new(fixed, pow10(30)).to_f64().unwrap_or(f64::NAN)
}

/// `ln(num) / ln(den)` rendered with [`REPORT_DIGITS`] decimals. `None` when
/// the ratio is undefined (`num == 0` or `den ≤ 1`).
pub fn log_ratio_decimal(num: u64, den: u64) -> Option<String> {
    if num == 0 || den <= 1 {
        return None;
    }
    let digits = REPORT_DIGITS + 10;
    let top = ln_fixed(&BigInt::from(num), digits);
    let bottom = ln_fixed(&BigInt::from(den), digits);
    let extra = pow10(5);
    let quotient = (top * pow10(REPORT_DIGITS) * &extra / bottom + extra.clone() / 2) / extra;
    Some(fixed_to_decimal(&quotient, REPORT_DIGITS))
}

/// `ln(num) / ln(den)` as `f64`.
pub fn log_ratio(num: u64, den: u64) -> Option<f64> {
    if num == 0 || den <= 1 {
        return None;
    }
    Some(ln_u64(num) / ln_u64(den))
}

fn fixed_to_decimal(value: &BigInt, digits: usize) -> String {
    let (int_part, frac_part) = value.abs().div_rem(&pow10(digits));
    let sign = if value.is_negative() { "-" } else { "" };
    format!("{sign}{int_part}.{frac_part:0>digits$}")
}

/// Exact rational rendered as a decimal with `digits` places (truncated).
pub fn rational_to_decimal(value: &Rational, digits: usize) -> String {
    let scaled = value.numer() * pow10(digits) / value.denom();
    fixed_to_decimal(&scaled, digits)
}

/// Least-squares slope of `ln y` against `ln x`. `None` for fewer than three
/// samples or when every `x` is equal.
pub fn log_log_slope(samples: &[(u64, u64)]) -> Option<f64> {
    if samples.len() < 3 {
        return None;
    }
    let pts: Vec<(f64, f64)> = samples.iter().map(|&(x, y)| (ln_u64(x), ln_u64(y))).collect();
    let count = pts.len() as f64;
    let mean_x = pts.iter().map(|p| p.0).sum::<f64>() / count;
    let mean_y = pts.iter().map(|p| p.1).sum::<f64>() / count;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mean_x) * (p.0 - mean_x)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    if sxx == 0.0 {
        return None;
    }
    Some(sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ln2_digits() {
        // ln 2 = 0.69314718055994530941723212145817656807550013436025...
        let v = ln_fixed(&BigInt::from(2), 50);
        let s = fixed_to_decimal(&v, 50);
        assert!(s.starts_with("0.6931471805599453094172321214581765680755001343"), "{s}");
    }

    #[test]
    fn ln10_digits() {
        // ln 10 = 2.30258509299404568401799145468436420760110148862877...
        let s = fixed_to_decimal(&ln_fixed(&BigInt::from(10), 50), 50);
        assert!(s.starts_with("2.302585092994045684017991454684364207601101488"), "{s}");
    }

    #[test]
    fn ratios() {
        assert_eq!(log_ratio_decimal(8, 64).unwrap(), format!("0.5{}", "0".repeat(49)));
        let third = log_ratio_decimal(2, 8).unwrap();
        assert!(third.starts_with("0.33333333333333333333333333333333333333333333"), "{third}");
        assert_eq!(log_ratio_decimal(10, 10).unwrap(), format!("1.{}", "0".repeat(50)));
        assert!(log_ratio_decimal(0, 10).is_none());
        assert!(log_ratio_decimal(3, 1).is_none());
        assert_eq!(log_ratio_decimal(1, 10).unwrap(), format!("0.{}", "0".repeat(50)));
    }

    #[test]
    fn slopes() {
        let pts = [(2, 8), (4, 64), (8, 512)];
        assert!((log_log_slope(&pts).unwrap() - 3.0).abs() < 1e-12);
        assert!(log_log_slope(&pts[..2]).is_none());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(rational_to_decimal(&crate::rational::frac(3515, 3200), 7), "1.0984375");
        assert_eq!(rational_to_decimal(&crate::rational::frac(-1, 4), 3), "-0.250");
    }
}
