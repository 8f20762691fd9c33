//! Canonical text form for big rationals: always `"p/q"` with `q > 0`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats as `"p/q"`, including integers (`"3/1"`).
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `"p/q"`, `"p"`, optional sign and surrounding whitespace.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("malformed rational {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Least common multiple of the denominators.
pub fn denominator_lcm<'a>(it: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    it.into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// `floor(sqrt(v))` for a non-negative integer.
pub fn isqrt(v: &BigInt) -> BigInt {
    assert!(!v.is_negative(), "isqrt of negative");
    v.sqrt()
}

/// Rational lower and upper bounds on `sqrt(r)` with absolute error below
/// `2^-bits`, for `r >= 0`.
pub fn sqrt_bounds(r: &Rational, bits: u32) -> (Rational, Rational) {
    assert!(!r.is_negative(), "sqrt of negative");
    if r.is_zero() {
        return (Rational::zero(), Rational::zero());
    }
    // sqrt(n/d) = sqrt(n*d*4^k)/(d*2^k)
    let scale = BigInt::one() << bits;
    let n = r.numer() * r.denom() * &scale * &scale;
    let lo = isqrt(&n);
    let exact = &lo * &lo == n;
    let hi = if exact { lo.clone() } else { &lo + 1 };
    let den = r.denom() * &scale;
    (Rational::new(lo, den.clone()), Rational::new(hi, den))
}
