//! Rational-number helpers: strict text parsing, p-adic valuation, and
//! primality checking for the valuation base.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RationalError {
    #[error("malformed rational {0:?}: expected [-]digits[/digits] with a positive denominator")]
    Malformed(String),
    #[error("valuation base {0} is not an odd prime")]
    NotOddPrime(u64),
}

/// p-adic valuation, with a distinguished +∞ value for zero.
///
/// Ordered so that `Infinite` is greater than every finite valuation,
/// which makes `min` over summands behave as the ultrametric predicts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinite)
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    /// Valuation of a product: finite values add, zero absorbs.
    pub fn add(self, other: Valuation) -> Valuation {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// Parse the strict rational text format: optional leading '-', a decimal
/// integer, then optionally '/' and a positive decimal integer.
pub fn parse_rational(s: &str) -> Result<Rational, RationalError> {
    let bad = || RationalError::Malformed(s.to_string());
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let num_body = num_str.strip_prefix('-').unwrap_or(num_str);
    if !digits(num_body) {
        return Err(bad());
    }
    let numerator = BigInt::from_str(num_str).map_err(|_| bad())?;
    let denominator = match den_str {
        None => BigInt::one(),
        Some(d) => {
            if !digits(d) {
                return Err(bad());
            }
            let den = BigInt::from_str(d).map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            den
        }
    };
    Ok(Rational::new(numerator, denominator))
}

/// Deterministic trial-division primality test, restricted to odd p ≥ 3.
pub fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Exponent of p in a nonzero integer.
fn int_valuation(n: &BigInt, p: u64) -> i64 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut v = 0i64;
    let mut m = n.abs();
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        v += 1;
        m = q;
    }
}

/// p-adic valuation of a rational: the v with r = p^v·u for a p-adic
/// unit u, or `Infinite` for r = 0. The base must be an odd prime.
pub fn p_valuation(r: &Rational, p: u64) -> Result<Valuation, RationalError> {
    if !is_odd_prime(p) {
        return Err(RationalError::NotOddPrime(p));
    }
    if r.is_zero() {
        return Ok(Valuation::Infinite);
    }
    Ok(Valuation::Finite(
        int_valuation(r.numer(), p) - int_valuation(r.denom(), p),
    ))
}

/// |r|_p as an exact rational, normalized so |p|_p = 1/p.
pub fn p_norm(r: &Rational, p: u64) -> Result<Rational, RationalError> {
    match p_valuation(r, p)? {
        Valuation::Infinite => Ok(Rational::zero()),
        Valuation::Finite(v) => Ok(power_of_prime(p, -v)),
    }
}

/// p^e as an exact rational, for any sign of e.
pub fn power_of_prime(p: u64, e: i64) -> Rational {
    let pw = BigInt::from(BigUint::from(p).pow(e.unsigned_abs() as u32));
    if e >= 0 {
        Rational::from_integer(pw)
    } else {
        Rational::new(BigInt::one(), pw)
    }
}

/// n! as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}
