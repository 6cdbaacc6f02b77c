//! Closed-form exponentials and the spectral decisions: exponentiality, torsion times,
//! dilations and the center.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::jordan::{
    is_zero_vec, unit, AlgebraElement, AlmostAbelian, GroupElement, JordanBlock,
    MultiplicityFunction, NumElement,
};
use crate::linalg::{vzero, Mat, Vector};
use crate::scalar::{rat_gcd, GaussRational, Rational, TauScalar};

/// `T_ℵ = t₀ℤ` with `t₀ = τ/ω₀`, or `{0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionDescription {
    pub omega0: Option<Rational>,
    pub t0: Option<TauScalar>,
}

impl TorsionDescription {
    pub fn is_trivial(&self) -> bool {
        self.t0.is_none()
    }

    /// The integer `n` with `t = n·t₀`, if `t ∈ T_ℵ`.
    pub fn multiple(&self, t: &TauScalar) -> Option<BigInt> {
        if t.is_zero() {
            return Some(BigInt::zero());
        }
        (t / self.t0.as_ref()?).as_integer()
    }

    pub fn contains(&self, t: &TauScalar) -> bool {
        self.multiple(t).is_some()
    }
}

/// Nontrivial exactly when every block has size 1 and every eigenvalue lies on iℝ.
pub fn torsion(aleph: &MultiplicityFunction) -> TorsionDescription {
    let entries = aleph.entries();
    let periodic = entries.iter().all(|(e, s, _)| *s == 1 && e.re.is_zero());
    let omega0 = if periodic {
        entries
            .iter()
            .map(|(e, _, _)| e.im.abs())
            .filter(|b| !b.is_zero())
            .reduce(|a, b| rat_gcd(&a, &b).expect("nonzero arguments"))
    } else {
        None
    };
    let t0 = omega0.as_ref().map(|w| TauScalar::tau().scale(&w.recip()));
    TorsionDescription { omega0, t0 }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentialityVerdict {
    pub exponential: bool,
    pub witness: Option<GaussRational>,
}

/// Not exponential exactly when the spectrum meets iℝ∖{0}; the witness is the first such
/// eigenvalue in block order.
pub fn is_exponential(aleph: &MultiplicityFunction) -> ExponentialityVerdict {
    let witness = aleph
        .entries()
        .into_iter()
        .map(|(e, _, _)| e)
        .find(GaussRational::is_purely_imaginary);
    ExponentialityVerdict {
        exponential: witness.is_none(),
        witness,
    }
}

/// The group `Dil(ℵ) = {α ≠ 0 : αJ(ℵ) ~ J(ℵ)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dilations {
    Trivial,
    Sign,
    AllNonzero,
}

impl Dilations {
    pub fn contains(&self, alpha: &TauScalar) -> bool {
        match self {
            Self::AllNonzero => !alpha.is_zero(),
            Self::Sign => alpha.is_one() || (-alpha).is_one(),
            Self::Trivial => alpha.is_one(),
        }
    }
}

pub fn dilation_group(aleph: &MultiplicityFunction) -> Dilations {
    if aleph.is_nilpotent() {
        return Dilations::AllNonzero;
    }
    let symmetric = aleph
        .entries()
        .iter()
        .all(|(e, s, m)| aleph.multiplicity(&e.neg().upper(), *s) == *m);
    if symmetric {
        Dilations::Sign
    } else {
        Dilations::Trivial
    }
}

/// Nonzero purely imaginary block with the 2-plane on which `ad_{e₀}` rotates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct E2Witness {
    pub block: JordanBlock,
    pub frequency: Rational,
    pub plane: [Vector; 2],
    pub restriction: Mat,
}

/// `Z(G) = ker J × T_ℵ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterDescription {
    pub kernel_basis: Vec<Vector>,
    pub torsion: TorsionDescription,
}

/// Number of quarter turns in the angle `t·b`, when it is a whole number.
fn quarter_turns(t: &TauScalar, b: &Rational) -> Option<i64> {
    let q = (t * &TauScalar::from(b.clone())).scale(&Rational::from_integer(4.into()))
        / TauScalar::tau();
    q.as_integer()?.to_i64()
}

/// `(cos tb, sin tb)` when both are rational.
fn exact_rotation(t: &TauScalar, b: &Rational) -> Option<(TauScalar, TauScalar)> {
    let (c, s) = match quarter_turns(t, b)?.rem_euclid(4) {
        0 => (1, 0),
        1 => (0, 1),
        2 => (-1, 0),
        _ => (0, -1),
    };
    Some((TauScalar::from_int(c), TauScalar::from_int(s)))
}

fn factorial(n: usize) -> Rational {
    Rational::from_integer((1..=n).map(BigInt::from).product())
}

/// Upper-triangular Toeplitz `Σ_j c_j N^j` on a block, with `c_j` given as 2×2 real cells for
/// complex blocks or scalars for real blocks.
fn toeplitz(block: &JordanBlock, cell: impl Fn(usize) -> Mat) -> Mat {
    let w = if block.is_complex() { 2 } else { 1 };
    let mut m = Mat::zeros(block.real_dim, block.real_dim);
    for j in 0..block.size {
        let c = cell(j);
        for k in 0..block.size - j {
            m.set_block(w * k, w * (k + j), &c);
        }
    }
    m
}

fn rotation_cell(c: &TauScalar, s: &TauScalar) -> Mat {
    Mat::from_rows(vec![vec![c.clone(), -s], vec![s.clone(), c.clone()]])
}

fn scalar_numeric_cells(block: &JordanBlock, coeffs: &[Complex64]) -> DMatrix<f64> {
    let w = if block.is_complex() { 2 } else { 1 };
    let mut m = DMatrix::zeros(block.real_dim, block.real_dim);
    for (j, c) in coeffs.iter().enumerate() {
        for k in 0..block.size - j {
            let (r, col) = (w * k, w * (k + j));
            if block.is_complex() {
                m[(r, col)] = c.re;
                m[(r, col + 1)] = -c.im;
                m[(r + 1, col)] = c.im;
                m[(r + 1, col + 1)] = c.re;
            } else {
                m[(r, col)] = c.re;
            }
        }
    }
    m
}

fn eigenvalue_c64(block: &JordanBlock) -> Complex64 {
    Complex64::new(
        block.eigenvalue.re.to_f64().unwrap_or(f64::NAN),
        block.eigenvalue.im.to_f64().unwrap_or(f64::NAN),
    )
}

/// `g_j(z) = (1/j!) ∫₀¹ s^j e^{sz} ds`, so that `φ(tJ_b) = Σ_j t^j g_j(t x) N^j`.
fn phi_coefficient(j: usize, z: Complex64) -> Complex64 {
    let jf = (1..=j).map(|k| k as f64).product::<f64>();
    if z.norm() <= 2.0 {
        let mut sum = Complex64::zero();
        let mut power = Complex64::one();
        let mut m_fact = 1.0;
        for m in 0..40 {
            if m > 0 {
                power *= z;
                m_fact *= m as f64;
            }
            sum += power / (m_fact * jf * (j + m + 1) as f64);
        }
        sum
    } else {
        let ez = z.exp();
        let mut integral = (ez - 1.0) / z;
        for k in 1..=j {
            integral = (ez - integral * k as f64) / z;
        }
        integral / jf
    }
}

impl AlmostAbelian {
    pub fn torsion(&self) -> TorsionDescription {
        torsion(self.aleph())
    }

    pub fn is_exponential(&self) -> ExponentialityVerdict {
        is_exponential(self.aleph())
    }

    pub fn dilation_group(&self) -> Dilations {
        dilation_group(self.aleph())
    }

    /// `e^{tJ}` on one block, when it has entries in ℚ(τ).
    pub fn block_exp_exact(&self, block: &JordanBlock, t: &TauScalar) -> Option<Mat> {
        if t.is_zero() {
            return Some(Mat::identity(block.real_dim));
        }
        if !block.eigenvalue.re.is_zero() {
            return None;
        }
        let powers = |j: usize| t.pow(j as u32).scale(&factorial(j).recip());
        if block.is_nilpotent() {
            return Some(toeplitz(block, |j| Mat::from_rows(vec![vec![powers(j)]])));
        }
        let (c, s) = exact_rotation(t, &block.eigenvalue.im)?;
        let r = rotation_cell(&c, &s);
        Some(toeplitz(block, |j| r.scale(&powers(j))))
    }

    /// `φ(tJ) = (e^{tJ} − id)/(tJ)` on one block, when it has entries in ℚ(τ).
    pub fn block_phi_exact(&self, block: &JordanBlock, t: &TauScalar) -> Option<Mat> {
        if t.is_zero() {
            return Some(Mat::identity(block.real_dim));
        }
        if block.is_nilpotent() {
            let coeff = |j: usize| t.pow(j as u32).scale(&factorial(j + 1).recip());
            return Some(toeplitz(block, |j| Mat::from_rows(vec![vec![coeff(j)]])));
        }
        let e = self.block_exp_exact(block, t)?;
        let tj = block.matrix().scale(t);
        Some(e.sub(&Mat::identity(block.real_dim)).mul(&tj.inverse()?))
    }

    fn assemble(
        &self,
        t: &TauScalar,
        f: impl Fn(&JordanBlock, &TauScalar) -> Option<Mat>,
    ) -> Result<Mat> {
        let mut m = Mat::zeros(self.dim(), self.dim());
        for b in self.blocks() {
            let part = f(b, t).ok_or_else(|| Error::ExactnessUnavailable(b.to_string()))?;
            m.set_block(b.offset, b.offset, &part);
        }
        Ok(m)
    }

    fn apply_blockwise(
        &self,
        t: &TauScalar,
        v: &[TauScalar],
        f: impl Fn(&JordanBlock, &TauScalar) -> Option<Mat>,
    ) -> Result<Vector> {
        self.check_dim(v)?;
        let mut out = vzero(self.dim());
        for b in self.blocks() {
            let part = &v[b.range()];
            if is_zero_vec(part) {
                continue;
            }
            let m = f(b, t).ok_or_else(|| Error::ExactnessUnavailable(b.to_string()))?;
            out[b.range()].clone_from_slice(&m.mul_vec(part));
        }
        Ok(out)
    }

    /// Exact `e^{tJ}`.
    pub fn exp_tj(&self, t: &TauScalar) -> Result<Mat> {
        self.assemble(t, |b, t| self.block_exp_exact(b, t))
    }

    /// Exact `φ(tJ)`; for `t ∈ T_ℵ∖{0}` this is the projection `0 ⊕ id` onto ker J.
    pub fn phi_matrix(&self, t: &TauScalar) -> Result<Mat> {
        self.assemble(t, |b, t| self.block_phi_exact(b, t))
    }

    /// `e^{tJ}v`, needing exactness only on blocks where `v` is nonzero.
    pub fn exp_apply(&self, t: &TauScalar, v: &[TauScalar]) -> Result<Vector> {
        self.apply_blockwise(t, v, |b, t| self.block_exp_exact(b, t))
    }

    /// `φ(tJ)v`, needing exactness only on blocks where `v` is nonzero.
    pub fn phi_apply(&self, t: &TauScalar, v: &[TauScalar]) -> Result<Vector> {
        self.apply_blockwise(t, v, |b, t| self.block_phi_exact(b, t))
    }

    /// `exp(v, t) = [φ(tJ)v, t]`.
    pub fn exp_map(&self, x: &AlgebraElement) -> Result<GroupElement> {
        Ok(GroupElement::new(self.phi_apply(&x.t, &x.v)?, x.t.clone()))
    }

    /// Inverse of `exp` on `ker J ⊕ ℝ`.
    pub fn central_log(&self, g: &GroupElement) -> Result<AlgebraElement> {
        self.check_dim(&g.v)?;
        if !self.in_kernel(&g.v) {
            return Err(Error::NotCentral(g.to_string()));
        }
        Ok(AlgebraElement::new(g.v.clone(), g.t.clone()))
    }

    fn numeric_blocks(
        &self,
        t: f64,
        coeffs: impl Fn(&JordanBlock, Complex64) -> Vec<Complex64>,
    ) -> DMatrix<f64> {
        let d = self.dim();
        let mut m = DMatrix::zeros(d, d);
        for b in self.blocks() {
            let z = eigenvalue_c64(b) * t;
            let part = scalar_numeric_cells(b, &coeffs(b, z));
            m.view_mut((b.offset, b.offset), (b.real_dim, b.real_dim))
                .copy_from(&part);
        }
        m
    }

    /// `e^{tJ}` in floating point: `e^{tx} Σ_j t^j N^j / j!` per block.
    pub fn exp_tj_numeric(&self, t: f64) -> DMatrix<f64> {
        self.numeric_blocks(t, |b, z| {
            let ez = z.exp();
            let mut c = Vec::with_capacity(b.size);
            let mut term = 1.0;
            for j in 0..b.size {
                if j > 0 {
                    term *= t / j as f64;
                }
                c.push(ez * term);
            }
            c
        })
    }

    /// `φ(tJ)` in floating point.
    pub fn phi_numeric(&self, t: f64) -> DMatrix<f64> {
        self.numeric_blocks(t, |b, z| {
            (0..b.size)
                .map(|j| phi_coefficient(j, z) * t.powi(j as i32))
                .collect()
        })
    }

    pub fn exp_map_numeric(&self, x: &NumElement) -> NumElement {
        NumElement {
            v: self.phi_numeric(x.t) * &x.v,
            t: x.t,
        }
    }

    /// The first block with eigenvalue `ib`, `b ≠ 0`, and the plane of its top row.
    pub fn e2_witness(&self) -> Result<E2Witness> {
        let block = self
            .blocks()
            .iter()
            .find(|b| b.eigenvalue.is_purely_imaginary())
            .ok_or(Error::NoWitness)?
            .clone();
        let b = block.eigenvalue.im.clone();
        let plane = [
            unit(self.dim(), block.offset),
            unit(self.dim(), block.offset + 1),
        ];
        let restriction = rotation_cell(&TauScalar::zero(), &TauScalar::from(b.clone()));
        Ok(E2Witness {
            block,
            frequency: b,
            plane,
            restriction,
        })
    }

    /// Two distinct algebra elements with the same exponential, `(0, τ/b)` and `(e, τ/b)` for
    /// `e` in the witness plane.
    pub fn collision_pair(&self) -> Result<(AlgebraElement, AlgebraElement)> {
        let w = self.e2_witness()?;
        let t = TauScalar::tau().scale(&w.frequency.recip());
        Ok((
            AlgebraElement::new(vzero(self.dim()), t.clone()),
            AlgebraElement::new(w.plane[0].clone(), t),
        ))
    }

    /// Some invertible `Δ` with `ΔJ = αJΔ`, built from block permutations and sign patterns.
    pub fn dilation_intertwiner(&self, alpha: &Rational) -> Option<Mat> {
        if alpha.is_zero() {
            return None;
        }
        if alpha.is_one() {
            return Some(Mat::identity(self.dim()));
        }
        let d = self.dim();
        let mut delta = Mat::zeros(d, d);
        if self.aleph().is_nilpotent() {
            for b in self.blocks() {
                for k in 0..b.size {
                    let a = num_traits::pow(alpha.recip(), k);
                    delta.set(b.offset + k, b.offset + k, TauScalar::from(a));
                }
            }
            return Some(delta);
        }
        if !(-alpha).is_one() || self.dilation_group() != Dilations::Sign {
            return None;
        }
        for b in self.blocks() {
            let target_eig = b.eigenvalue.neg().upper();
            let partner = self
                .blocks()
                .iter()
                .find(|c| c.eigenvalue == target_eig && c.size == b.size && c.copy == b.copy)?;
            for k in 0..b.size {
                let sign = TauScalar::from_int(if k % 2 == 0 { 1 } else { -1 });
                if b.is_complex() {
                    let (src, dst) = (b.offset + 2 * k, partner.offset + 2 * k);
                    delta.set(dst, src, sign.clone());
                    delta.set(dst + 1, src + 1, -sign);
                } else {
                    delta.set(partner.offset + k, b.offset + k, sign);
                }
            }
        }
        Some(delta)
    }

    pub fn center(&self) -> CenterDescription {
        CenterDescription {
            kernel_basis: self.kernel_basis(),
            torsion: self.torsion(),
        }
    }

    /// `[u, s] ∈ Z(G) ⟺ u ∈ ker J ∧ s ∈ T_ℵ`.
    pub fn is_central(&self, g: &GroupElement) -> bool {
        g.v.len() == self.dim() && self.in_kernel(&g.v) && self.torsion().contains(&g.t)
    }
}

#[cfg(test)]
mod tests {
    use nalgebra::DMatrix;
    use proptest::prelude::*;

    use super::*;
    use crate::fixtures;
    use crate::scalar::rat;
    use crate::testutil::{algebra_element, s, small_rational, tau_multiple, v};

    fn mat(rows: &[&[&str]]) -> Mat {
        Mat::from_rows(rows.iter().map(|r| v(r)).collect())
    }

    /// Plain Taylor series, independent of the block formulas.
    fn taylor(m: &DMatrix<f64>, shift: usize) -> DMatrix<f64> {
        let n = m.nrows();
        let mut term = DMatrix::<f64>::identity(n, n);
        let mut sum = DMatrix::<f64>::identity(n, n) / (1..=shift).product::<usize>() as f64;
        for k in 1..80 {
            term = &term * m / k as f64;
            let denom = ((k + 1)..=(k + shift)).map(|x| x as f64).product::<f64>();
            sum += &term / denom;
        }
        sum
    }

    fn close(a: &DMatrix<f64>, b: &DMatrix<f64>, tol: f64) -> bool {
        (a - b).amax() < tol
    }

    #[test]
    fn phi_examples() {
        let heis = fixtures::heis();
        assert_eq!(
            heis.phi_matrix(&s("3")).unwrap(),
            mat(&[&["1", "3/2"], &["0", "1"]])
        );
        for (_, g) in fixtures::all() {
            assert!(g.phi_matrix(&TauScalar::zero()).unwrap().is_identity());
        }
        assert!(fixtures::e2().phi_matrix(&s("tau")).unwrap().is_zero());
    }

    #[test]
    fn phi_on_torsion_times_projects_onto_kernel() {
        let g = fixtures::e2_r2();
        let p = g.phi_matrix(&s("-2*tau")).unwrap();
        let mut expected = Mat::zeros(4, 4);
        expected.set(2, 2, TauScalar::one());
        expected.set(3, 3, TauScalar::one());
        assert_eq!(p, expected);
    }

    #[test]
    fn block_exp_examples() {
        let heis = fixtures::heis();
        assert_eq!(
            heis.exp_tj(&s("1")).unwrap(),
            mat(&[&["1", "1"], &["0", "1"]])
        );
        let e2 = fixtures::e2();
        let r = e2.exp_tj_numeric(0.5);
        let expected = DMatrix::from_row_slice(
            2,
            2,
            &[0.5f64.cos(), -0.5f64.sin(), 0.5f64.sin(), 0.5f64.cos()],
        );
        assert!(close(&r, &expected, 1e-12));
        assert!(e2.exp_tj(&s("tau")).unwrap().is_identity());
        assert_eq!(
            e2.exp_tj(&s("tau/4")).unwrap(),
            mat(&[&["0", "-1"], &["1", "0"]])
        );
        assert!(matches!(
            e2.exp_tj(&s("1")),
            Err(Error::ExactnessUnavailable(_))
        ));
        assert!(fixtures::aff().exp_tj(&s("1")).is_err());
    }

    #[test]
    fn exp_map_examples() {
        let heis = fixtures::heis();
        let x = AlgebraElement::new(v(&["1", "2"]), s("3"));
        assert_eq!(
            heis.exp_map(&x).unwrap(),
            GroupElement::new(v(&["4", "2"]), s("3"))
        );
        assert!(heis
            .exp_map(&AlgebraElement::zero(2))
            .unwrap()
            .is_identity());
        let g = fixtures::e2_r2();
        let x = AlgebraElement::new(v(&["0", "0", "1", "-3"]), s("tau"));
        assert_eq!(
            g.exp_map(&x).unwrap(),
            GroupElement::new(x.v.clone(), x.t.clone())
        );
    }

    #[test]
    fn central_log_examples() {
        let g = fixtures::e2_r2();
        let e3 = GroupElement::new(v(&["0", "0", "1", "0"]), s("tau"));
        let x = g.central_log(&e3).unwrap();
        assert_eq!(x, AlgebraElement::new(e3.v.clone(), s("tau")));
        assert_eq!(g.exp_map(&x).unwrap(), e3);
        let heis = fixtures::heis();
        assert_eq!(
            heis.central_log(&GroupElement::identity(2)).unwrap(),
            AlgebraElement::zero(2)
        );
        let e1 = GroupElement::new(v(&["1", "0"]), s("0"));
        assert_eq!(heis.central_log(&e1).unwrap().v, e1.v);
        let e2 = GroupElement::new(v(&["0", "1"]), s("0"));
        assert!(matches!(heis.central_log(&e2), Err(Error::NotCentral(_))));
    }

    #[test]
    fn exponentiality_examples() {
        let e2 = fixtures::e2().is_exponential();
        assert!(!e2.exponential);
        assert_eq!(e2.witness, Some("i".parse().unwrap()));
        assert!(fixtures::heis().is_exponential().exponential);
        let spiral = MultiplicityFunction::new([("1+i".parse().unwrap(), 1, 1)]).unwrap();
        assert!(is_exponential(&spiral).exponential);
    }

    #[test]
    fn e2_witness_examples() {
        let w = fixtures::e2().e2_witness().unwrap();
        assert_eq!(w.plane, [unit(2, 0), unit(2, 1)]);
        assert_eq!(w.restriction, mat(&[&["0", "-1"], &["1", "0"]]));
        let w = fixtures::mix().e2_witness().unwrap();
        assert_eq!(w.block.offset, 0);
        assert_eq!(w.restriction, mat(&[&["0", "-2/3"], &["2/3", "0"]]));
        // The restriction really is ad_{e₀} on the plane.
        let j = fixtures::mix().j().clone();
        assert_eq!(j.submatrix(0..2, 0..2), w.restriction);
        assert!(matches!(
            fixtures::heis().e2_witness(),
            Err(Error::NoWitness)
        ));
    }

    #[test]
    fn collision_pair_collides() {
        for g in [fixtures::e2(), fixtures::mix(), fixtures::e2_r2()] {
            let (a, b) = g.collision_pair().unwrap();
            assert_ne!(a, b);
            assert_eq!(g.exp_map(&a).unwrap(), g.exp_map(&b).unwrap());
        }
    }

    #[test]
    fn torsion_examples() {
        let e2 = fixtures::e2().torsion();
        assert_eq!(e2.omega0, Some(rat(1, 1)));
        assert_eq!(e2.t0, Some(s("tau")));
        let mix = fixtures::mix().torsion();
        assert_eq!(mix.omega0, Some(rat(1, 3)));
        assert_eq!(mix.t0, Some(s("3*tau")));
        assert!(fixtures::heis().torsion().is_trivial());
        assert!(fixtures::aff().torsion().is_trivial());
        assert_eq!(fixtures::e2_r2().torsion().t0, Some(s("tau")));
    }

    #[test]
    fn torsion_time_is_a_period() {
        for g in [fixtures::e2(), fixtures::mix(), fixtures::e2_r2()] {
            let t0 = g.torsion().t0.unwrap();
            assert!(g.exp_tj(&t0).unwrap().is_identity());
            // No proper divisor t₀/m is a period.
            for m in 2..=6 {
                let t = t0.scale(&rat(1, m));
                assert!(g.exp_tj(&t).map_or(true, |e| !e.is_identity()));
            }
        }
        let mix = fixtures::mix();
        assert!(
            !mix.exp_tj(&s("tau")).map_or(true, |e| e.is_identity())
                || mix.exp_tj(&s("tau")).is_err()
        );
    }

    #[test]
    fn torsion_membership() {
        let t = fixtures::mix().torsion();
        assert_eq!(t.multiple(&s("-6*tau")), Some((-2).into()));
        assert!(!t.contains(&s("tau")));
        assert!(t.contains(&TauScalar::zero()));
    }

    #[test]
    fn dilation_examples() {
        assert_eq!(fixtures::e2().dilation_group(), Dilations::Sign);
        assert_eq!(fixtures::aff().dilation_group(), Dilations::Trivial);
        assert_eq!(fixtures::heis().dilation_group(), Dilations::AllNonzero);
        assert_eq!(fixtures::mix().dilation_group(), Dilations::Sign);
        let pair = MultiplicityFunction::new([
            (GaussRational::real(rat(1, 1)), 1, 1),
            (GaussRational::real(rat(-1, 1)), 1, 1),
        ])
        .unwrap();
        assert_eq!(dilation_group(&pair), Dilations::Sign);
    }

    #[test]
    fn intertwiners_satisfy_the_dilation_relation() {
        let cases: Vec<(AlmostAbelian, Vec<Rational>)> = vec![
            (fixtures::heis_r(), vec![rat(2, 1), rat(-1, 3), rat(5, 7)]),
            (
                AlmostAbelian::new(
                    MultiplicityFunction::new([(GaussRational::real(rat(0, 1)), 3, 2)]).unwrap(),
                ),
                vec![rat(-4, 1)],
            ),
            (fixtures::e2_r2(), vec![rat(-1, 1)]),
            (fixtures::mix(), vec![rat(-1, 1)]),
            (
                AlmostAbelian::new(
                    MultiplicityFunction::new([
                        ("1+2i".parse().unwrap(), 2, 1),
                        ("-1+2i".parse().unwrap(), 2, 1),
                        (GaussRational::real(rat(3, 1)), 2, 1),
                        (GaussRational::real(rat(-3, 1)), 2, 1),
                    ])
                    .unwrap(),
                ),
                vec![rat(-1, 1)],
            ),
        ];
        for (g, alphas) in cases {
            for a in alphas {
                let delta = g.dilation_intertwiner(&a).unwrap();
                assert!(delta.inverse().is_some());
                assert_eq!(
                    delta.mul(g.j()),
                    g.j().scale(&TauScalar::from(a.clone())).mul(&delta)
                );
            }
        }
        assert!(fixtures::aff().dilation_intertwiner(&rat(-1, 1)).is_none());
        assert!(fixtures::e2().dilation_intertwiner(&rat(2, 1)).is_none());
    }

    #[test]
    fn center_examples() {
        let heis = fixtures::heis().center();
        assert_eq!(heis.kernel_basis, vec![unit(2, 0)]);
        assert!(heis.torsion.is_trivial());
        let e2 = fixtures::e2();
        assert!(e2.center().kernel_basis.is_empty());
        assert!(e2.is_central(&GroupElement::new(v(&["0", "0"]), s("2*tau"))));
        assert!(!e2.is_central(&GroupElement::new(v(&["0", "0"]), s("tau/2"))));
        let g = fixtures::e2_r2();
        assert_eq!(g.center().kernel_basis, vec![unit(4, 2), unit(4, 3)]);
        assert!(g.is_central(&GroupElement::new(v(&["0", "0", "1", "tau"]), s("-tau"))));
        assert!(!g.is_central(&GroupElement::new(v(&["1", "0", "0", "0"]), s("0"))));
    }

    #[test]
    fn numeric_forms_match_taylor_series() {
        let ts = [-3.7, -0.4, 0.0, 0.9, 2.5, 6.1];
        let spiral = AlmostAbelian::new(
            MultiplicityFunction::new([
                ("-1/2+3/2i".parse().unwrap(), 3, 1),
                (GaussRational::real(rat(2, 1)), 2, 1),
            ])
            .unwrap(),
        );
        let mut groups: Vec<AlmostAbelian> = fixtures::all().into_iter().map(|(_, g)| g).collect();
        groups.push(spiral);
        for g in groups {
            let j = g.j().to_f64();
            for &t in &ts {
                let tj = &j * t;
                assert!(
                    close(&g.exp_tj_numeric(t), &taylor(&tj, 0), 1e-9),
                    "{} t={t}",
                    g.aleph()
                );
                assert!(
                    close(&g.phi_numeric(t), &taylor(&tj, 1), 1e-9),
                    "{} t={t}",
                    g.aleph()
                );
            }
        }
    }

    #[test]
    fn exact_and_numeric_agree() {
        let g = fixtures::mix();
        for k in -4..=4 {
            let t = TauScalar::tau().scale(&rat(3 * k, 4));
            let exact = g.exp_tj(&t).unwrap().to_f64();
            assert!(close(&exact, &g.exp_tj_numeric(t.to_f64()), 1e-9));
            let phi = g.phi_matrix(&t).unwrap().to_f64();
            assert!(close(&phi, &g.phi_numeric(t.to_f64()), 1e-9));
        }
    }

    proptest! {
        #[test]
        fn phi_times_tj_is_exp_minus_identity_nilpotent(t in small_rational()) {
            let g = fixtures::heis_rn(2);
            let lhs = g.phi_matrix(&t).unwrap().mul(&g.j().scale(&t));
            prop_assert_eq!(lhs, g.exp_tj(&t).unwrap().sub(&Mat::identity(g.dim())));
        }

        #[test]
        fn phi_times_tj_is_exp_minus_identity_rotation(t in tau_multiple(3, 4)) {
            let g = fixtures::mix();
            let lhs = g.phi_matrix(&t).unwrap().mul(&g.j().scale(&t));
            prop_assert_eq!(lhs, g.exp_tj(&t).unwrap().sub(&Mat::identity(g.dim())));
        }

        #[test]
        fn phi_times_tj_numeric(t in -8.0f64..8.0, a in -2i64..=2, b in 0i64..=3) {
            let aleph = MultiplicityFunction::new([
                (GaussRational { re: rat(a, 2), im: rat(b, 2) }, 2, 1),
                (GaussRational::real(rat(0, 1)), 2, 1),
            ]).unwrap();
            let g = AlmostAbelian::new(aleph);
            let lhs = g.phi_numeric(t) * (g.j().to_f64() * t);
            let rhs = g.exp_tj_numeric(t) - DMatrix::identity(g.dim(), g.dim());
            prop_assert!((lhs - rhs).amax() < 1e-10 * (1.0 + g.exp_tj_numeric(t).amax()));
        }

        #[test]
        fn one_parameter_property_exact(x in algebra_element(3, small_rational()), a in small_rational(), b in small_rational()) {
            let g = fixtures::heis_r();
            let scaled = |c: &TauScalar| AlgebraElement::new(x.v.iter().map(|e| e * c).collect(), &x.t * c);
            let lhs = g.exp_map(&scaled(&(&a + &b))).unwrap();
            let rhs = g.group_mul(&g.exp_map(&scaled(&a)).unwrap(), &g.exp_map(&scaled(&b)).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn one_parameter_property_numeric(
            v in prop::collection::vec(-3.0f64..3.0, 4),
            t in -2.0f64..2.0,
            a in -2.0f64..2.0,
            b in -2.0f64..2.0,
        ) {
            for g in [fixtures::mix(), fixtures::e2_r2()] {
                let x = |c: f64| NumElement::new(v.iter().map(|e| e * c).collect(), t * c);
                let lhs = g.exp_map_numeric(&x(a + b));
                let rhs = g.group_mul_numeric(&g.exp_map_numeric(&x(a)), &g.exp_map_numeric(&x(b)));
                prop_assert!(lhs.distance(&rhs) < 1e-10);
            }
        }
    }
}
