//! Exact rational scalars: thin helpers over `num::BigRational`.
//!
//! Everything downstream (polynomials, series, weights) is exact; no floats
//! appear anywhere in a verification path.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::str::FromStr;

/// Scalar type used throughout the crate.
pub type Q = BigRational;

/// Integer as a rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// `n/d` as a rational. Panics on `d == 0`; intended for literals in code.
pub fn q_frac(n: i64, d: i64) -> Q {
    assert!(d != 0, "zero denominator");
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"3"`, `"-3"`, or `"3/4"` into a rational. Rejects empty parts,
/// a zero denominator, and anything `BigInt` itself will not parse.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let (ns, ds) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let numer =
        BigInt::from_str(ns).map_err(|e| Error::Parse(format!("bad numerator {ns:?}: {e}")))?;
    let denom =
        BigInt::from_str(ds).map_err(|e| Error::Parse(format!("bad denominator {ds:?}: {e}")))?;
    if denom.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Q::new(numer, denom))
}

/// Canonical display form: `"3"` or `"3/4"` (what `parse_q` accepts).
pub fn format_q(x: &Q) -> String {
    x.to_string()
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `base^exp` with negative exponents allowed; `0^neg` is an error.
pub fn q_pow(base: &Q, exp: i32) -> Result<Q> {
    if base.is_zero() && exp < 0 {
        return Err(Error::ZeroToNegativePower);
    }
    if exp >= 0 {
        Ok(num::pow::pow(base.clone(), exp as usize))
    } else {
        Ok(num::pow::pow(base.clone(), (-(exp as i64)) as usize).recip())
    }
}

/// True if `x >= 0`.
pub fn is_nonneg(x: &Q) -> bool {
    !x.is_negative()
}

/// serde adapter: rationals as canonical strings. Use as
/// `#[serde(with = "crate::rat::qstr")]`.
pub mod qstr {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_q(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        parse_q(&s).map_err(serde::de::Error::custom)
    }
}
