//! Rational scalars. `BigRational` keeps values in lowest terms with a positive
//! denominator, so derived `Eq`, `Ord` and `Hash` are value comparisons.

use alloc::format;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q`, reduced. Panics when `q == 0`.
pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p`, `-p`, `+p` or `p/q`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let t = t.strip_prefix('+').unwrap_or(t);
    let bad = || Error::Parse(format!("invalid rational `{text}`"));
    if t.is_empty() {
        return Err(bad());
    }
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{text}`")));
            }
            Ok(Rational::new(p, q))
        }
        None => {
            let p: BigInt = t.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(p))
        }
    }
}

/// `⌈log₂ n⌉` for `n ≥ 1`; `0` for `n ≤ 1`.
pub fn ceil_log2(n: u64) -> u32 {
    if n <= 1 {
        0
    } else {
        64 - (n - 1).leading_zeros()
    }
}

/// `⌊log₂ n⌋` for `n ≥ 1`. Panics on `0`.
pub fn floor_log2(n: u64) -> u32 {
    assert!(n > 0, "floor_log2(0)");
    63 - n.leading_zeros()
}

/// Nearest integer to `n^(p/q)` for `0 ≤ p/q ≤ 1`, ties rounding up, computed
/// without floating point.
pub fn round_rational_power(n: u64, exponent: &Rational) -> u64 {
    assert!(!exponent.is_negative() && *exponent <= Rational::one());
    let p: u32 = u32::try_from(exponent.numer()).expect("exponent numerator too large");
    let q: u32 = u32::try_from(exponent.denom()).expect("exponent denominator too large");
    if p == 0 {
        return 1;
    }
    let target = BigInt::from(n).pow(p);
    let floor = target.nth_root(q);
    // x >= floor + 1/2  <=>  2^q * n^p >= (2 floor + 1)^q
    let lhs = (BigInt::one() << q as usize) * &target;
    let rhs: BigInt = (BigInt::from(2) * &floor + BigInt::one()).pow(q);
    let rounded = if lhs >= rhs { floor + 1 } else { floor };
    u64::try_from(&rounded).expect("rounded power fits in u64")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-6/4").unwrap(), frac(-3, 2));
        assert_eq!(parse_rational("+1/2").unwrap(), frac(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn canonical_form() {
        let r = frac(4, -6);
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
    }

    #[test]
    fn logs() {
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(2), 1);
        assert_eq!(ceil_log2(5), 3);
        assert_eq!(ceil_log2(32), 5);
        assert_eq!(floor_log2(1), 0);
        assert_eq!(floor_log2(31), 4);
        assert_eq!(floor_log2(32), 5);
    }

    #[test]
    fn rational_powers() {
        assert_eq!(round_rational_power(64, &frac(1, 2)), 8);
        assert_eq!(round_rational_power(256, &frac(3, 4)), 64);
        assert_eq!(round_rational_power(1024, &frac(1, 4)), 6); // 5.657
        assert_eq!(round_rational_power(1024, &frac(3, 4)), 181); // 181.02
        assert_eq!(round_rational_power(4096, &frac(1, 4)), 8);
        assert_eq!(round_rational_power(100, &int(0)), 1);
        assert_eq!(round_rational_power(100, &int(1)), 100);
        // 2^(1/2) = 1.414 -> 1, 3^(1/2) = 1.732 -> 2
        assert_eq!(round_rational_power(2, &frac(1, 2)), 1);
        assert_eq!(round_rational_power(3, &frac(1, 2)), 2);
    }
}
