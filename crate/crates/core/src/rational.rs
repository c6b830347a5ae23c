//! Rational scalars and their text form.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Q {
    Q::zero()
}

pub fn one() -> Q {
    Q::one()
}

/// Accepts `p`, `p/q` and finite decimals such as `1.5`.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Q::new(n, d));
    }
    if let Some((i, f)) = s.split_once('.') {
        if f.is_empty() || !f.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = i.trim_start().starts_with('-');
        let i: BigInt = if i.is_empty() || i == "-" { BigInt::zero() } else { i.parse().map_err(|_| bad())? };
        let f_int: BigInt = f.parse().map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10), f.len());
        let frac = Q::new(f_int, scale);
        let base = Q::from_integer(i);
        return Ok(if neg { base - frac } else { base + frac });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Q::from_integer(n))
}

pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn is_nonzero(x: &Q) -> bool {
    !x.is_zero()
}

pub fn abs_q(x: &Q) -> Q {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_forms() {
        assert_eq!(parse_q("3/2").unwrap(), qf(3, 2));
        assert_eq!(parse_q("-4").unwrap(), q(-4));
        assert_eq!(parse_q("1.5").unwrap(), qf(3, 2));
        assert_eq!(parse_q("-0.25").unwrap(), qf(-1, 4));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }

    #[test]
    fn formats_round_trip() {
        for x in [qf(-7, 3), q(0), q(12), qf(1, 9)] {
            assert_eq!(parse_q(&fmt_q(&x)).unwrap(), x);
        }
    }
}
