//! Rigorous rational enclosures of π (Machin's formula in fixed point).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::rational::Rational;

/// `scale·arctan(1/x)` truncated, with the number of series terms used.
fn arctan_inv(x: u32, scale: &BigInt) -> (BigInt, u64) {
    let x2 = BigInt::from(x) * BigInt::from(x);
    let mut power = scale / BigInt::from(x);
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    (sum, k)
}

/// An interval `[lo, hi]` containing π of width about `10^-digits`.
pub fn pi_enclosure(digits: u32) -> (Rational, Rational) {
    let scale = BigInt::from(10).pow(digits + 8);
    let (a5, n5) = arctan_inv(5, &scale);
    let (a239, n239) = arctan_inv(239, &scale);
    let centre = a5 * 16 - a239 * 4;
    let slack = BigInt::from(16 * (3 * n5 + 2) + 4 * (3 * n239 + 2));
    (
        Rational::new(&centre - &slack, scale.clone()),
        Rational::new(centre + slack, scale),
    )
}

/// Rounds to `digits` decimal places, half away from zero.
pub fn rational_to_decimal(r: &Rational, digits: u32) -> String {
    let scale = BigInt::from(10).pow(digits);
    let scaled = r * Rational::from_integer(scale.clone());
    let rounded = scaled.round().to_integer();
    let negative = rounded.is_negative();
    let (whole, frac) = rounded.abs().div_rem(&scale);
    let sign = if negative { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{whole}");
    }
    format!(
        "{sign}{whole}.{:0>width$}",
        frac.to_string(),
        width = digits as usize
    )
}
