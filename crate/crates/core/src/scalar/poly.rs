//! Dense univariate polynomials over ℚ, coefficients stored from the constant term up.

use num_traits::{One, Signed, Zero};

use super::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate itself.
    pub fn x() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Constant polynomials (including zero) give their value.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn lead(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Rational::zero();
        let coeffs = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lead_inv = divisor.lead().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let q = rem.last().unwrap() * &lead_inv;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &q * c;
            }
            quot[shift] = q;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.lead().recip())
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Enclosure of the values on `[lo, hi]` for `0 < lo <= hi`.
    pub fn eval_positive_interval(&self, lo: &Rational, hi: &Rational) -> (Rational, Rational) {
        let mut sum_lo = Rational::zero();
        let mut sum_hi = Rational::zero();
        let mut pow_lo = Rational::one();
        let mut pow_hi = Rational::one();
        for c in &self.coeffs {
            if c.is_positive() {
                sum_lo += c * &pow_lo;
                sum_hi += c * &pow_hi;
            } else {
                sum_lo += c * &pow_hi;
                sum_hi += c * &pow_lo;
            }
            pow_lo *= lo;
            pow_hi *= hi;
        }
        (sum_lo, sum_hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::{int, rat};

    fn p(cs: &[i64]) -> Poly {
        Poly::from_coeffs(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn division_reconstructs_dividend() {
        let a = p(&[1, -3, 0, 2, 5]);
        let b = p(&[2, 0, 3]);
        let (q, r) = a.divrem(&b);
        assert!(r.degree().unwrap_or(0) < 2);
        assert_eq!(q.mul(&b).add(&r), a);
    }

    #[test]
    fn gcd_is_monic_common_factor() {
        let f = p(&[-1, 1]);
        let a = f.mul(&p(&[2, 1]));
        let b = f.mul(&p(&[3, 0, 1])).scale(&rat(7, 2));
        assert_eq!(Poly::gcd(&a, &b), f);
        assert_eq!(Poly::gcd(&p(&[2]), &p(&[0, 1])), Poly::one());
    }

    #[test]
    fn interval_evaluation_encloses_point_values() {
        let a = p(&[1, -4, 1]);
        let (lo, hi) = a.eval_positive_interval(&rat(3, 1), &rat(4, 1));
        for x in [rat(3, 1), rat(7, 2), rat(4, 1)] {
            let v = a.eval_rational(&x);
            assert!(lo <= v && v <= hi);
        }
    }
}
