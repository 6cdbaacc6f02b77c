//! Exact scalars: rationals, Gaussian rationals and the rational function field ℚ(τ).

mod bounds;
mod gauss;
mod parse;
mod poly;
mod rational;
mod tau;

pub use bounds::{pi_enclosure, rational_to_decimal};
pub use gauss::GaussRational;
pub use poly::Poly;
pub use rational::{int, parse_rational, rat, rat_gcd, Rational};
pub use tau::{tau_eval, tau_eval_decimal, TauScalar};

#[cfg(test)]
mod tests;
