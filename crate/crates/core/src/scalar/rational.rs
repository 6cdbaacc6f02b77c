use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Largest positive `r` with `a, b ∈ rℤ`: gcd of numerators over lcm of denominators.
pub fn rat_gcd(a: &Rational, b: &Rational) -> Result<Rational> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::UndefinedGcd);
    }
    let num = a.numer().gcd(b.numer());
    let den = a.denom().lcm(b.denom());
    Ok(Rational::new(num, den).abs())
}

/// Parses `p/q` or `n`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parsed = match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad(s))?;
            let q: BigInt = q.trim().parse().map_err(|_| bad(s))?;
            if q.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Rational::new(p, q)
        }
        None => Rational::from_integer(s.parse().map_err(|_| bad(s))?),
    };
    Ok(parsed)
}

fn bad(s: &str) -> Error {
    Error::Parse(format!("`{s}` is not a rational literal"))
}
