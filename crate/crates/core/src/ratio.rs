//! Exact rational numbers and their `p/q` text form.

use crate::error::{Error, Result};
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

pub type Rational = Ratio<i64>;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(v)
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

pub fn ceil_i64(r: &Rational) -> i64 {
    r.ceil().to_integer()
}

pub fn floor_i64(r: &Rational) -> i64 {
    r.floor().to_integer()
}

/// Parses `p/q`, `p`, or a negative form of either.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => s.parse::<i64>().map(int).map_err(|_| bad()),
    }
}

/// Formats in lowest terms; integers print without a denominator.
pub fn format(r: &Rational) -> String {
    let (p, q) = (r.numer(), r.denom());
    if *q == 1 {
        p.to_string()
    } else {
        format!("{p}/{q}")
    }
}

/// Serde adapter: rationals travel as `"p/q"` strings.
pub mod serde_str {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::format(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for vectors of rationals.
pub mod serde_vec {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(super::format)
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| super::parse(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// `|x|` for rationals, used in tolerance-free comparisons of differences.
pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

/// Least common multiple of denominators, handy when clearing fractions.
pub fn common_denominator(values: &[Rational]) -> i64 {
    values.iter().fold(1i64, |acc, r| acc.lcm(r.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["5/2", "-3/7", "4", "0"] {
            assert_eq!(format(&parse(s).unwrap()), s);
        }
        assert_eq!(format(&parse("6/4").unwrap()), "3/2");
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn ceilings_and_floors() {
        assert_eq!(ceil_i64(&frac(5, 2)), 3);
        assert_eq!(floor_i64(&frac(5, 2)), 2);
        assert_eq!(ceil_i64(&frac(-5, 2)), -2);
        assert_eq!(ceil_i64(&int(4)), 4);
        assert_eq!(common_denominator(&[frac(1, 2), frac(1, 3)]), 6);
    }
}
