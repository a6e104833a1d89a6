use num::bigint::BigInt;
use num::{BigRational, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// `num / den` as an exact rational. Panics when `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `"a/b"` or `"a"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not a rational: `{text}`"));
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational::new(n, d))
        }
        None => {
            let n: BigInt = text.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
    }
}

/// Exact `a/b` text form (`"195/4096"`, or `"3"` for integers).
pub fn fmt_rational(value: &Rational) -> String {
    value.to_string()
}

pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

/// `x ∸ y = max(0, x - y)`.
pub fn monus(x: &Rational, y: &Rational) -> Rational {
    let d = x - y;
    if d.is_negative() {
        Rational::zero()
    } else {
        d
    }
}

pub fn factorial(r: u32) -> Rational {
    (1..=r as i64).fold(Rational::one(), |acc, k| acc * int(k))
}

pub fn square(x: &Rational) -> Rational {
    x * x
}

/// Serde adapter writing rationals as exact `"a/b"` strings.
pub mod as_string {
    use super::{fmt_rational, parse_rational, Rational};
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rational(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(D::Error::custom)
    }
}

/// Like [`as_string`] for vectors.
pub mod vec_as_string {
    use super::{fmt_rational, parse_rational, Rational};
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(values: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(values.iter().map(fmt_rational))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Rational>, D::Error> {
        let texts = Vec::<String>::deserialize(d)?;
        texts
            .iter()
            .map(|t| parse_rational(t).map_err(D::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_and_format_round_trip() {
        assert_eq!(parse_rational("195/4096").unwrap(), rat(195, 4096));
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert_eq!(fmt_rational(&rat(6, -4)), "-3/2");
        assert_eq!(fmt_rational(&int(0)), "0");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn canonical_zero() {
        let z = rat(0, -5);
        assert_eq!(z.numer(), &BigInt::from(0));
        assert_eq!(z.denom(), &BigInt::from(1));
    }

    #[test]
    fn monus_truncates() {
        assert_eq!(monus(&int(3), &int(5)), int(0));
        assert_eq!(monus(&int(5), &rat(1, 2)), rat(9, 2));
    }

    fn small() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..500).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn field_axioms(a in small(), b in small(), c in small()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!(a.denom() > &BigInt::from(0));
            prop_assert_eq!(parse_rational(&fmt_rational(&a)).unwrap(), a);
        }
    }
}
