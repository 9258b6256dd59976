//! Exact rational scalars and small helpers used throughout the crate.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// The scalar type: arbitrary-precision rationals, always stored reduced.
pub type Q = num_rational::BigRational;

/// Rational from an integer.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Rational `n/d`.
pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parse "p", "p/q" or "-p/q" into a rational.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Q::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(Q::from_integer(n))
        }
    }
}

/// Render a rational as "p" or "p/q".
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Exact integer extraction; `None` when the rational is not an integer.
pub fn as_integer(x: &Q) -> Option<BigInt> {
    x.is_integer().then(|| x.numer().clone())
}

/// Floor of the square root of a nonnegative integer.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of negative integer");
    if n.is_zero() {
        return BigInt::zero();
    }
    let mut x: BigInt = BigInt::one() << ((n.bits() + 1) / 2);
    loop {
        let y = (&x + n / &x) >> 1;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// Largest integer `m` with `m ≤ sqrt(x)` for a nonnegative rational `x`.
pub fn floor_sqrt_q(x: &Q) -> BigInt {
    assert!(!x.is_negative());
    // floor(sqrt(p/q)) = floor(sqrt(p*q)/q) computed from the integer square root.
    let pq = x.numer() * x.denom();
    let s = isqrt(&pq);
    s / x.denom()
}
