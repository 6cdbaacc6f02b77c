//! Shared proptest strategies.

use proptest::prelude::*;

use crate::jordan::{AlgebraElement, GroupElement};
use crate::linalg::Vector;
use crate::scalar::{rat, TauScalar};

pub fn small_rational() -> impl Strategy<Value = TauScalar> {
    (-12i64..=12, 1i64..=4).prop_map(|(n, d)| TauScalar::from(rat(n, d)))
}

pub fn vector(d: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(small_rational(), d)
}

/// `k·(p/q)·τ` for small integers `k`.
pub fn tau_multiple(p: i64, q: i64) -> impl Strategy<Value = TauScalar> {
    (-8i64..=8).prop_map(move |k| TauScalar::tau().scale(&rat(k * p, q)))
}

pub fn group_element(
    d: usize,
    t: impl Strategy<Value = TauScalar>,
) -> impl Strategy<Value = GroupElement> {
    (vector(d), t).prop_map(|(v, t)| GroupElement::new(v, t))
}

pub fn algebra_element(
    d: usize,
    t: impl Strategy<Value = TauScalar>,
) -> impl Strategy<Value = AlgebraElement> {
    (vector(d), t).prop_map(|(v, t)| AlgebraElement::new(v, t))
}

pub fn v(xs: &[&str]) -> Vector {
    xs.iter().map(|s| s.parse().unwrap()).collect()
}

pub fn s(x: &str) -> TauScalar {
    x.parse().unwrap()
}
