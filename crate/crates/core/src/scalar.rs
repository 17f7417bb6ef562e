//! Exact rational scalars.
//!
//! `Scalar` is `num_rational::BigRational`: always reduced, positive
//! denominator, arbitrary precision. Its `Display`/`FromStr` already use the
//! wire form `"p/q"` (or `"p"` when `q = 1`), so this module only adds small
//! helpers and serde adapters.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Scalar = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse `{0}` as an exact rational")]
pub struct ParseScalarError(pub String);

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`. A zero denominator is rejected.
pub fn parse(s: &str) -> Result<Scalar, ParseScalarError> {
    let t = s.trim();
    let bad = || ParseScalarError(s.to_string());
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Scalar::new(p, q))
        }
        None => t.parse::<BigInt>().map(Scalar::from_integer).map_err(|_| bad()),
    }
}

pub fn to_wire(x: &Scalar) -> String {
    x.to_string()
}

pub fn to_wire_vec(v: &[Scalar]) -> Vec<String> {
    v.iter().map(to_wire).collect()
}

/// serde adapter for a single scalar stored as a string.
pub mod wire {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Scalar, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_wire(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Scalar, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).map_err(serde::de::Error::custom)
    }
}

/// serde adapter for `Vec<Scalar>`.
pub mod wire_vec {
    use super::*;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Scalar], s: S) -> Result<S::Ok, S::Error> {
        to_wire_vec(v).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Scalar>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter().map(|s| parse(s).map_err(serde::de::Error::custom)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wire_form_round_trips() {
        for s in ["0", "1", "-3", "1/2", "-7/3", "12345678901234567890/7"] {
            assert_eq!(to_wire(&parse(s).unwrap()), s);
        }
    }

    #[test]
    fn parse_reduces() {
        assert_eq!(parse("4/6").unwrap(), frac(2, 3));
        assert_eq!(parse("3/-6").unwrap(), frac(-1, 2));
        assert_eq!(to_wire(&parse("4/2").unwrap()), "2");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
        assert!(parse("1.5").is_err());
    }
}
