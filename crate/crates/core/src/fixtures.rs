//! Named Jordan data used throughout the documentation and tests.

use crate::jordan::{AlmostAbelian, MultiplicityFunction};
use crate::scalar::{rat, GaussRational};

fn build(entries: &[(GaussRational, usize, usize)]) -> AlmostAbelian {
    AlmostAbelian::new(MultiplicityFunction::new(entries.iter().cloned()).expect("valid fixture"))
}

fn real(n: i64) -> GaussRational {
    GaussRational::real(rat(n, 1))
}

fn imag(p: i64, q: i64) -> GaussRational {
    GaussRational::imaginary(rat(p, q))
}

/// `{(1,1)↦1}`, the affine group of the line.
pub fn aff() -> AlmostAbelian {
    build(&[(real(1), 1, 1)])
}

/// `{(0,2)↦1}`, the Heisenberg group.
pub fn heis() -> AlmostAbelian {
    build(&[(real(0), 2, 1)])
}

/// `{(0,2)↦1, (0,1)↦1}`.
pub fn heis_r() -> AlmostAbelian {
    build(&[(real(0), 2, 1), (real(0), 1, 1)])
}

/// `{(0,2)↦1, (0,1)↦n}`.
pub fn heis_rn(n: usize) -> AlmostAbelian {
    if n == 0 {
        return heis();
    }
    build(&[(real(0), 2, 1), (real(0), 1, n)])
}

/// `{(i,1)↦1}`, the universal cover of the Euclidean motion group of the plane.
pub fn e2() -> AlmostAbelian {
    build(&[(imag(1, 1), 1, 1)])
}

/// `{(i,1)↦1, (0,1)↦2}`; coordinates 1,2 rotate and 3,4 span ker J.
pub fn e2_r2() -> AlmostAbelian {
    build(&[(imag(1, 1), 1, 1), (real(0), 1, 2)])
}

/// `{(2/3 i,1)↦1, (i,1)↦1}`.
pub fn mix() -> AlmostAbelian {
    build(&[(imag(2, 3), 1, 1), (imag(1, 1), 1, 1)])
}

/// All named fixtures with their names.
pub fn all() -> Vec<(&'static str, AlmostAbelian)> {
    vec![
        ("AFF", aff()),
        ("HEIS", heis()),
        ("HEIS+R", heis_r()),
        ("E2", e2()),
        ("E2+R2", e2_r2()),
        ("MIX", mix()),
    ]
}
