//! Arbitrary-precision rationals.
//!
//! [`Scalar`] is `num_rational::BigRational`, which keeps every value in
//! lowest terms with a positive denominator after each operation.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serializer};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// `p/q`, normalized. Panics on `q == 0`.
pub fn frac(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// `(-1)^k` for any integer k.
pub fn sign(k: i64) -> Scalar {
    if k.rem_euclid(2) == 0 {
        one()
    } else {
        -one()
    }
}

/// Renders as `"p/q"`, or `"p"` when the denominator is 1.
pub fn to_string(s: &Scalar) -> String {
    s.to_string()
}

pub fn parse(text: &str) -> Result<Scalar> {
    let t = text.trim();
    let parsed = BigRational::from_str(t).map_err(|e| Error::Parse(format!("bad rational {t:?}: {e}")))?;
    Ok(parsed)
}

pub fn is_integer(s: &Scalar) -> bool {
    s.denom().is_one()
}

pub fn abs(s: &Scalar) -> Scalar {
    s.abs()
}

/// Serde adapter storing a scalar as its `"p/q"` string. Plain JSON integers
/// are accepted on input.
pub mod serde_scalar {
    use super::*;

    pub fn serialize<S: Serializer>(s: &Scalar, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&s.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> std::result::Result<Scalar, D::Error> {
        let raw = ScalarRepr::deserialize(de)?;
        raw.into_scalar().map_err(serde::de::Error::custom)
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
pub(crate) enum ScalarRepr {
    Int(i64),
    Text(String),
}

impl ScalarRepr {
    pub(crate) fn into_scalar(self) -> Result<Scalar> {
        match self {
            ScalarRepr::Int(n) => Ok(int(n)),
            ScalarRepr::Text(t) => parse(&t),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_after_construction() {
        let s = frac(6, -4);
        assert_eq!(s.numer(), &BigInt::from(-3));
        assert_eq!(s.denom(), &BigInt::from(2));
        assert_eq!(to_string(&s), "-3/2");
    }

    #[test]
    fn integer_renders_without_denominator() {
        assert_eq!(to_string(&frac(10, 5)), "2");
        assert_eq!(parse("4/2").unwrap(), int(2));
        assert_eq!(parse(" -7 ").unwrap(), int(-7));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse("1.5").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn sign_of_negative_exponent() {
        assert_eq!(sign(-3), int(-1));
        assert_eq!(sign(-2), int(1));
    }
}
