//! Exact rational coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// `±2^k` as a rational, with `k` possibly negative.
pub fn signed_pow2(negative: bool, k: i64) -> Rational {
    let mag = BigInt::one() << k.unsigned_abs();
    let r = if k >= 0 {
        Rational::from_integer(mag)
    } else {
        Rational::new(BigInt::one(), mag)
    };
    if negative {
        -r
    } else {
        r
    }
}

/// `"p/q"`, with `/q` omitted when `q = 1` and the sign on the numerator.
pub fn format(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Format(format!("invalid rational {:?}", s));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(Error::Format(format!("zero denominator in {:?}", s)));
    }
    Ok(Rational::new(p, q))
}

/// True when the reduced denominator is a power of two.
pub fn is_dyadic(r: &Rational) -> bool {
    let d = r.denom().abs();
    (d.clone() & (d - BigInt::one())).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting() {
        assert_eq!(format(&ratio(-3, 6)), "-1/2");
        assert_eq!(format(&int(4)), "4");
        assert_eq!(parse(" -1/2 ").unwrap(), ratio(-1, 2));
        assert_eq!(parse("7").unwrap(), int(7));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn powers_of_two() {
        assert_eq!(signed_pow2(true, -2), ratio(-1, 4));
        assert_eq!(signed_pow2(false, 3), int(8));
        assert!(is_dyadic(&ratio(3, 16)));
        assert!(!is_dyadic(&ratio(1, 6)));
    }
}
