//! Exact linear algebra over ℚ(τ) and over ℤ.

mod int;
mod mat;
mod subspace;

pub use int::{column_hnf, ext_gcd, integer_kernel, integer_relations, IntMatrix};
pub use mat::{vadd, vscale, vsub, vzero, Mat, Vector};
pub use subspace::Subspace;
