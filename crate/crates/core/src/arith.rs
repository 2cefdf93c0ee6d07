//! Exact scalars: arbitrary-precision rationals and naturals, binomial
//! coefficients, and the textual rational form shared by the CLI and JSON.

use num::bigint::Sign;
use num::{BigInt, BigRational, BigUint, One, Signed, Zero};

use crate::error::{Error, Result};

/// Always stored reduced with a positive denominator.
pub type Rational = BigRational;
pub type Natural = BigUint;

pub fn rat_normalize(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Rational> {
    let q = q.into();
    if q.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(p.into(), q))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `p/q` for small literals. Panics on `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    rat_normalize(p, q).expect("zero denominator")
}

/// C(n, k), zero outside `0..=n`.
pub fn binom(n: u64, k: i64) -> Natural {
    if k < 0 || k as u64 > n {
        return Natural::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Natural::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn binom_rat(n: usize, k: i64) -> Rational {
    Rational::from_integer(BigInt::from(binom(n as u64, k)))
}

pub fn pow(base: &Rational, exp: usize) -> Rational {
    num::pow(base.clone(), exp)
}

/// Parses `-?[0-9]+(/[0-9]+)?` with a nonzero denominator. Nothing else is
/// accepted: no `+`, no whitespace, no decimal point.
pub fn parse_rational(token: &str) -> Result<Rational> {
    let bad = || Error::MalformedRational(token.to_string());
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    let (num_part, den_part) = match token.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (token, None),
    };
    let unsigned = num_part.strip_prefix('-').unwrap_or(num_part);
    if !digits(unsigned) {
        return Err(bad());
    }
    let numer: BigInt = num_part.parse().map_err(|_| bad())?;
    let denom: BigInt = match den_part {
        Some(d) if digits(d) => d.parse().map_err(|_| bad())?,
        Some(_) => return Err(bad()),
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn sign(r: &Rational) -> i8 {
    match r.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Nearest `f64`, for numeric cross-checks only.
pub fn to_f64(r: &Rational) -> f64 {
    use num::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // Very large numerators or denominators: scale down first.
        let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000);
        let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

/// Serde adapters that write rationals as strings in the textual form.
pub mod serde_rational {
    use super::{format_rational, parse_rational, Rational};
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = RationalText::deserialize(d)?;
        text.into_rational().map_err(D::Error::custom)
    }

    /// Accepts `"3/4"` as well as bare JSON integers such as `3`.
    #[derive(Deserialize)]
    #[serde(untagged)]
    pub(crate) enum RationalText {
        Text(String),
        Int(i64),
    }

    impl RationalText {
        pub(crate) fn into_rational(self) -> Result<Rational, crate::error::Error> {
            match self {
                RationalText::Text(t) => parse_rational(&t),
                RationalText::Int(i) => Ok(super::int(i)),
            }
        }
    }

    pub mod vec {
        use super::{format_rational, Rational, RationalText};
        use serde::{de::Error as _, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for r in v {
                seq.serialize_element(&format_rational(r))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            Vec::<RationalText>::deserialize(d)?
                .into_iter()
                .map(|t| t.into_rational().map_err(D::Error::custom))
                .collect()
        }
    }

    pub mod option {
        use super::{format_rational, Rational, RationalText};
        use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(v: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            match v {
                Some(r) => s.serialize_some(&format_rational(r)),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
            Option::<RationalText>::deserialize(d)?
                .map(|t| t.into_rational().map_err(D::Error::custom))
                .transpose()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_examples() {
        let r = rat_normalize(2, 4).unwrap();
        assert_eq!(format_rational(&r), "1/2");
        let r = rat_normalize(3, -9).unwrap();
        assert_eq!(format_rational(&r), "-1/3");
        assert_eq!(r.denom(), &BigInt::from(3));
        let r = rat_normalize(0, 7).unwrap();
        assert!(r.numer().is_zero());
        assert!(r.denom().is_one());
        assert_eq!(rat_normalize(1, 0), Err(Error::DivisionByZero));
    }

    #[test]
    fn binom_examples() {
        assert_eq!(binom(4, 2), Natural::from(6u32));
        assert_eq!(binom(5, 7), Natural::zero());
        assert_eq!(binom(5, -1), Natural::zero());
        assert_eq!(binom(0, 0), Natural::one());
    }

    #[test]
    fn binom_matches_pascal_triangle() {
        let mut row = vec![Natural::one()];
        for n in 1..=40u64 {
            let mut next = vec![Natural::one(); n as usize + 1];
            for k in 1..n as usize {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
            for (k, v) in row.iter().enumerate() {
                assert_eq!(&binom(n, k as i64), v, "C({n},{k})");
            }
        }
        assert_eq!(binom(6, 3), Natural::from(20u32));
    }

    #[test]
    fn parse_accepts_grammar() {
        assert_eq!(parse_rational("-10/9").unwrap(), ratio(-10, 9));
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse_rational("-0").unwrap(), int(0));
    }

    #[test]
    fn parse_rejects_everything_else() {
        for bad in ["", "-", "+3", " 3", "3 ", "1/0", "1/-2", "1.5", "1//2", "a", "1/", "/2", "--1"] {
            assert!(
                matches!(parse_rational(bad), Err(Error::MalformedRational(_))),
                "{bad:?} should be rejected"
            );
        }
    }

    #[test]
    fn f64_conversion_survives_huge_values() {
        let big = Rational::new(BigInt::from(10).pow(400) * 3, BigInt::from(10).pow(400));
        assert!((to_f64(&big) - 3.0).abs() < 1e-12);
    }
}
