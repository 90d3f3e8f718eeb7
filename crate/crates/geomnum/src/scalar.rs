//! Exact rational scalars and conversions.
//!
//! Every geometric quantity in this crate is a [`Scalar`]: an
//! arbitrary-precision rational. Floating point appears only at the edges
//! (numeric searches, SVG output), always derived from an exact value.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Exact rational scalar.
pub type Scalar = num_rational::BigRational;

/// The scalar `n`.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// The scalar `num / den`. Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Nearest `f64` below/around the exact value (for reporting only).
pub fn to_f64(x: &Scalar) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Floor of an exact scalar as `i64`, failing if it overflows.
pub fn floor_i64(x: &Scalar) -> Result<i64> {
    x.floor().to_integer().to_i64().ok_or(Error::EnumerationFailed)
}

/// Ceiling of an exact scalar as `i64`, failing if it overflows.
pub fn ceil_i64(x: &Scalar) -> Result<i64> {
    x.ceil().to_integer().to_i64().ok_or(Error::EnumerationFailed)
}

/// Whether the scalar is an integer.
pub fn is_integer(x: &Scalar) -> bool {
    x.denom().is_one()
}

/// The integer value of `x` if it is one and fits in `i64`.
pub fn as_i64(x: &Scalar) -> Option<i64> {
    if is_integer(x) {
        x.numer().to_i64()
    } else {
        None
    }
}

/// Canonical string form: `"p"` for integers, `"p/q"` otherwise.
pub fn to_string(x: &Scalar) -> String {
    if is_integer(x) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse `"p"`, `"p/q"`, or a plain decimal such as `"0.25"` or `"-1.5e-3"`.
pub fn parse(text: &str) -> Result<Scalar> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty scalar".into()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(Scalar::new(n, d));
    }
    if let Ok(n) = s.parse::<BigInt>() {
        return Ok(Scalar::from_integer(n));
    }
    parse_decimal(s).ok_or_else(|| Error::Parse(format!("bad scalar {s:?}")))
}

fn parse_decimal(s: &str) -> Option<Scalar> {
    // Split an optional exponent, then a decimal point.
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    if frac_part.is_empty() && int_part.is_empty() {
        return None;
    }
    let negative = int_part.starts_with('-');
    let digits = format!(
        "{}{}",
        int_part.trim_start_matches(['+', '-']),
        frac_part
    );
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let mut value = Scalar::new(digits.parse().ok()?, pow10(frac_part.len() as i32));
    let scale = Scalar::new(pow10(exp), pow10(-exp));
    value *= scale;
    if negative {
        value = -value;
    }
    Some(value)
}

fn pow10(e: i32) -> BigInt {
    if e <= 0 {
        BigInt::one()
    } else {
        BigInt::from(10).pow(e as u32)
    }
}

/// Best rational approximation to `x` with denominator at most `max_den`,
/// by continued fractions.
pub fn approximate(x: f64, max_den: u64) -> Scalar {
    assert!(x.is_finite() && max_den > 0);
    let negative = x < 0.0;
    let mut x = x.abs();
    // Convergents p/q of the continued fraction of x.
    let (mut p0, mut q0, mut p1, mut q1) = (0u128, 1u128, 1u128, 0u128);
    for _ in 0..64 {
        let a = x.floor();
        if a > 1e18 {
            break;
        }
        let ai = a as u128;
        let p2 = ai.saturating_mul(p1).saturating_add(p0);
        let q2 = ai.saturating_mul(q1).saturating_add(q0);
        if q2 > max_den as u128 {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        let rem = x - a;
        if rem < 1e-15 {
            break;
        }
        x = rem.recip();
    }
    let mut r = Scalar::new(BigInt::from(p1), BigInt::from(q1.max(1)));
    if negative {
        r = -r;
    }
    r
}

/// Signum as an `i32` (−1, 0, +1).
pub fn sign(x: &Scalar) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}
