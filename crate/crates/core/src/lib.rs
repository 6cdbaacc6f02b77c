//! Exact computations for real almost Abelian Lie groups `ℝ^d ⋊ ℝ`.

pub mod aut;
pub mod error;
pub mod exp;
pub mod fixtures;
pub mod jordan;
pub mod lattice;
pub mod linalg;
pub mod oracle;
pub mod reps;
pub mod scalar;
pub mod subgroups;

pub use error::{Error, Result};
pub use jordan::{AlgebraElement, AlmostAbelian, GroupElement, MultiplicityFunction, NumElement};

#[cfg(test)]
pub(crate) mod testutil;
