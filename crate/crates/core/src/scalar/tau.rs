//! The field ℚ(τ) of rational functions in a transcendental τ that stands for 2π.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::bounds::{pi_enclosure, rational_to_decimal};
use super::poly::Poly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Reduced fraction `num/den` with `den` monic and coprime to `num`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TauScalar {
    num: Poly,
    den: Poly,
}

impl TauScalar {
    pub fn zero() -> Self {
        Self {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn tau() -> Self {
        Self {
            num: Poly::x(),
            den: Poly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(r: Rational) -> Self {
        Self {
            num: Poly::constant(r),
            den: Poly::one(),
        }
    }

    pub fn from_polys(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return Self { num, den };
        }
        let g = Poly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.divrem(&g).0, den.divrem(&g).0)
        };
        let lead = den.lead().recip();
        Self {
            num: num.scale(&lead),
            den: den.scale(&lead),
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// The value as a rational when it does not depend on τ.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::normalized(self.den.clone(), self.num.clone()))
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Double precision value at τ = 2π by Horner evaluation.
    pub fn to_f64(&self) -> f64 {
        if let Some(r) = self.as_rational() {
            return r.to_f64().unwrap_or(f64::NAN);
        }
        let tau = std::f64::consts::TAU;
        self.num.eval_f64(tau) / self.den.eval_f64(tau)
    }

    /// Rigorous rational enclosure of the value at τ = 2π, using π to roughly `digits` digits.
    pub fn enclose(&self, digits: u32) -> Option<(Rational, Rational)> {
        if let Some(r) = self.as_rational() {
            return Some((r.clone(), r));
        }
        let (pi_lo, pi_hi) = pi_enclosure(digits);
        let two = Rational::from_integer(BigInt::from(2));
        let (lo, hi) = (pi_lo * &two, pi_hi * &two);
        let (n_lo, n_hi) = self.num.eval_positive_interval(&lo, &hi);
        let (d_lo, d_hi) = self.den.eval_positive_interval(&lo, &hi);
        if !(d_lo.is_positive() || d_hi.is_negative()) {
            return None;
        }
        let quotients = [&n_lo / &d_lo, &n_lo / &d_hi, &n_hi / &d_lo, &n_hi / &d_hi];
        let min = quotients.iter().min().unwrap().clone();
        let max = quotients.iter().max().unwrap().clone();
        Some((min, max))
    }

    fn refine<T>(&self, mut accept: impl FnMut(&Rational, &Rational) -> Option<T>) -> T {
        let mut digits = 24;
        loop {
            if let Some((lo, hi)) = self.enclose(digits) {
                if let Some(out) = accept(&lo, &hi) {
                    return out;
                }
            }
            digits *= 2;
        }
    }

    /// Exact sign of the value at τ = 2π.
    pub fn signum(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        self.refine(|lo, hi| {
            if lo.is_positive() {
                Some(1)
            } else if hi.is_negative() {
                Some(-1)
            } else {
                None
            }
        })
    }

    /// Exact floor of the value at τ = 2π.
    pub fn floor(&self) -> BigInt {
        if let Some(r) = self.as_rational() {
            return r.floor().to_integer();
        }
        self.refine(|lo, hi| {
            let (a, b) = (lo.floor(), hi.floor());
            (a == b).then(|| a.to_integer())
        })
    }

    /// Rational within `10^-digits / 2` of the value at τ = 2π.
    pub fn approximate(&self, digits: u32) -> Rational {
        if let Some(r) = self.as_rational() {
            return r;
        }
        let tol = Rational::new(BigInt::one(), BigInt::from(10).pow(digits) * 2);
        let mut precision = digits + 20;
        loop {
            if let Some((lo, hi)) = self.enclose(precision) {
                if &hi - &lo < tol {
                    return (lo + hi) / Rational::from_integer(BigInt::from(2));
                }
            }
            precision *= 2;
        }
    }
}

/// Floating approximation of `x(2π)`; the enclosure is accurate to `10^-digits`
/// before the final rounding to `f64`.
pub fn tau_eval(x: &TauScalar, digits: u32) -> f64 {
    x.approximate(digits).to_f64().unwrap_or(f64::NAN)
}

/// Decimal expansion of `x(2π)` with `digits` places, accurate to `10^-digits`.
pub fn tau_eval_decimal(x: &TauScalar, digits: u32) -> String {
    rational_to_decimal(&x.approximate(digits + 2), digits)
}

impl Default for TauScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for TauScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for TauScalar {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl<'a> Add<&'a TauScalar> for &'a TauScalar {
    type Output = TauScalar;
    fn add(self, rhs: &TauScalar) -> TauScalar {
        if self.den.is_one() && rhs.den.is_one() {
            return TauScalar {
                num: self.num.add(&rhs.num),
                den: Poly::one(),
            };
        }
        if self.den == rhs.den {
            return TauScalar::normalized(self.num.add(&rhs.num), self.den.clone());
        }
        TauScalar::normalized(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl<'a> Sub<&'a TauScalar> for &'a TauScalar {
    type Output = TauScalar;
    fn sub(self, rhs: &TauScalar) -> TauScalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a TauScalar> for &'a TauScalar {
    type Output = TauScalar;
    fn mul(self, rhs: &TauScalar) -> TauScalar {
        if self.is_zero() || rhs.is_zero() {
            return TauScalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return TauScalar {
                num: self.num.mul(&rhs.num),
                den: Poly::one(),
            };
        }
        TauScalar::normalized(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl<'a> Div<&'a TauScalar> for &'a TauScalar {
    type Output = TauScalar;
    /// Panics on a zero divisor, like integer division.
    fn div(self, rhs: &TauScalar) -> TauScalar {
        let inv = rhs.inv().expect("TauScalar division by zero");
        self * &inv
    }
}

impl Neg for &TauScalar {
    type Output = TauScalar;
    fn neg(self) -> TauScalar {
        TauScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for TauScalar {
    type Output = TauScalar;
    fn neg(self) -> TauScalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<TauScalar> for TauScalar {
            type Output = TauScalar;
            fn $m(self, rhs: TauScalar) -> TauScalar { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a TauScalar> for TauScalar {
            type Output = TauScalar;
            fn $m(self, rhs: &TauScalar) -> TauScalar { (&self).$m(rhs) }
        }
        impl<'a> $tr<TauScalar> for &'a TauScalar {
            type Output = TauScalar;
            fn $m(self, rhs: TauScalar) -> TauScalar { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl std::iter::Sum for TauScalar {
    fn sum<I: Iterator<Item = TauScalar>>(iter: I) -> Self {
        iter.fold(TauScalar::zero(), |a, b| a + b)
    }
}

fn fmt_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = match k {
            0 => c.to_string(),
            _ => {
                let power = if k == 1 {
                    "tau".to_string()
                } else {
                    format!("tau^{k}")
                };
                if c.is_one() {
                    power
                } else if (-c).is_one() {
                    format!("-{power}")
                } else {
                    format!("{c}*{power}")
                }
            }
        };
        if !out.is_empty() && !term.starts_with('-') {
            out.push('+');
        }
        out.push_str(&term);
    }
    out
}

impl fmt::Display for TauScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", fmt_poly(&self.num))
        } else {
            write!(f, "({})/({})", fmt_poly(&self.num), fmt_poly(&self.den))
        }
    }
}

impl FromStr for TauScalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        super::parse::parse_tau(s)
    }
}
