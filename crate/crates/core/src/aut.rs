//! Automorphisms of simply connected almost Abelian groups.
//!
//! Generic automorphisms are `[v,t] ↦ [(e^{αtJ} − id)/(αJ)·γ + Δv, αt]` with `ΔJ = αJΔ`.
//! On a central extension `H × ℝ^{d−2}` of the Heisenberg group the larger family
//! [`HeisAut`] is available, which also mixes the `y` and `t` directions.

use nalgebra::DVector;

use crate::error::{Error, Result};
use crate::jordan::{AlmostAbelian, GroupElement, MultiplicityFunction, NumElement};
use crate::lattice::DiscreteCentralSubgroup;
use crate::linalg::{vadd, vscale, vsub, IntMatrix, Mat, Vector};
use crate::scalar::{rat, TauScalar};

/// True for `{(0,2)↦1} ∪ {(0,1)↦d−2}`.
pub fn is_heisenberg_extension(aleph: &MultiplicityFunction) -> bool {
    aleph
        .entries()
        .iter()
        .all(|(e, s, m)| e.is_zero() && ((*s == 2 && *m == 1) || *s == 1))
        && aleph.entries().iter().any(|(_, s, _)| *s == 2)
}

/// Anything that acts on group elements.
pub trait Automorphism {
    fn apply(&self, group: &AlmostAbelian, g: &GroupElement) -> Result<GroupElement>;
    fn apply_numeric(&self, group: &AlmostAbelian, g: &NumElement) -> NumElement;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericAut {
    pub delta: Mat,
    pub gamma: Vector,
    pub alpha: TauScalar,
}

impl GenericAut {
    pub fn new(delta: Mat, gamma: Vector, alpha: TauScalar) -> Self {
        Self {
            delta,
            gamma,
            alpha,
        }
    }

    pub fn identity(d: usize) -> Self {
        Self::new(
            Mat::identity(d),
            vec![TauScalar::zero(); d],
            TauScalar::one(),
        )
    }

    pub fn validate(&self, group: &AlmostAbelian) -> Result<()> {
        let d = group.dim();
        if self.delta.rows() != d || self.delta.cols() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: self.delta.rows(),
            });
        }
        group.check_dim(&self.gamma)?;
        if self.alpha.is_zero() {
            return Err(Error::InvalidAutomorphism("alpha = 0".into()));
        }
        if self.delta.det().is_zero() {
            return Err(Error::InvalidAutomorphism("Delta is singular".into()));
        }
        let j = group.j();
        if self.delta.mul(j) != j.scale(&self.alpha).mul(&self.delta) {
            return Err(Error::InvalidAutomorphism(
                "Delta*J != alpha*J*Delta".into(),
            ));
        }
        if !group.dilation_group().contains(&self.alpha) {
            return Err(Error::InvalidAutomorphism(format!(
                "alpha = {} is not in Dil",
                self.alpha
            )));
        }
        Ok(())
    }

    /// `(Δ γ; 0 α)`.
    pub fn differential(&self) -> Mat {
        let d = self.delta.rows();
        let mut m = Mat::zeros(d + 1, d + 1);
        m.set_block(0, 0, &self.delta);
        for (i, g) in self.gamma.iter().enumerate() {
            m.set(i, d, g.clone());
        }
        m.set(d, d, self.alpha.clone());
        m
    }

    pub fn from_differential(m: &Mat) -> Result<Self> {
        let d = m.rows() - 1;
        if (0..d).any(|j| !m.get(d, j).is_zero()) {
            return Err(Error::InvalidAutomorphism(
                "differential mixes the t-row".into(),
            ));
        }
        Ok(Self::new(
            m.submatrix(0..d, 0..d),
            m.col(d)[..d].to_vec(),
            m.get(d, d).clone(),
        ))
    }
}

impl Automorphism for GenericAut {
    fn apply(&self, group: &AlmostAbelian, g: &GroupElement) -> Result<GroupElement> {
        group.check_dim(&g.v)?;
        let at = &self.alpha * &g.t;
        let shift = vscale(&g.t, &group.phi_apply(&at, &self.gamma)?);
        Ok(GroupElement::new(
            vadd(&shift, &self.delta.mul_vec(&g.v)),
            at,
        ))
    }

    fn apply_numeric(&self, group: &AlmostAbelian, g: &NumElement) -> NumElement {
        let alpha = self.alpha.to_f64();
        let gamma =
            DVector::from_iterator(self.gamma.len(), self.gamma.iter().map(TauScalar::to_f64));
        let v = group.phi_numeric(alpha * g.t) * gamma * g.t + self.delta.to_f64() * &g.v;
        NumElement { v, t: alpha * g.t }
    }
}

/// Parameters of the Heisenberg-extension automorphism family, in coordinates
/// `x = e₁`, `y = e₂`, `w = (e₃, …, e_d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeisAut {
    pub alpha: TauScalar,
    pub beta2: TauScalar,
    pub gamma1: TauScalar,
    pub gamma2: TauScalar,
    pub delta12: TauScalar,
    pub delta22: TauScalar,
    pub phi01: Vector,
    pub eta: Vector,
    pub rho: Vector,
    pub phi11: Mat,
}

impl HeisAut {
    pub fn identity(d: usize) -> Self {
        let n = d - 2;
        Self {
            alpha: TauScalar::one(),
            beta2: TauScalar::zero(),
            gamma1: TauScalar::zero(),
            gamma2: TauScalar::zero(),
            delta12: TauScalar::zero(),
            delta22: TauScalar::one(),
            phi01: vec![TauScalar::zero(); n],
            eta: vec![TauScalar::zero(); n],
            rho: vec![TauScalar::zero(); n],
            phi11: Mat::identity(n),
        }
    }

    fn extra(&self) -> usize {
        self.phi11.rows()
    }

    /// `αΔ₂₂ − β₂γ₂`.
    pub fn x_scale(&self) -> TauScalar {
        &(&self.alpha * &self.delta22) - &(&self.beta2 * &self.gamma2)
    }

    pub fn validate(&self, group: &AlmostAbelian) -> Result<()> {
        if !is_heisenberg_extension(group.aleph()) {
            return Err(Error::InvalidAutomorphism(
                "datum is not a Heisenberg extension".into(),
            ));
        }
        let n = group.dim() - 2;
        for (name, len) in [
            ("phi01", self.phi01.len()),
            ("eta", self.eta.len()),
            ("rho", self.rho.len()),
        ] {
            if len != n {
                return Err(Error::InvalidAutomorphism(format!(
                    "{name} has length {len}, expected {n}"
                )));
            }
        }
        if self.phi11.rows() != n || self.phi11.cols() != n {
            return Err(Error::InvalidAutomorphism(format!("phi11 must be {n}x{n}")));
        }
        if self.x_scale().is_zero() {
            return Err(Error::InvalidAutomorphism(
                "alpha*Delta22 - beta2*gamma2 = 0".into(),
            ));
        }
        if n > 0 && self.phi11.det().is_zero() {
            return Err(Error::InvalidAutomorphism("phi11 is singular".into()));
        }
        Ok(())
    }

    /// The differential in `(x, y, w, t)` coordinates.
    pub fn differential(&self) -> Mat {
        let n = self.extra();
        let (x, y, t) = (0, 1, n + 2);
        let mut m = Mat::zeros(n + 3, n + 3);
        m.set(x, x, self.x_scale());
        m.set(x, y, self.delta12.clone());
        m.set(x, t, self.gamma1.clone());
        m.set(y, y, self.delta22.clone());
        m.set(y, t, self.gamma2.clone());
        m.set(t, y, self.beta2.clone());
        m.set(t, t, self.alpha.clone());
        for i in 0..n {
            m.set(x, 2 + i, self.phi01[i].clone());
            m.set(2 + i, y, self.eta[i].clone());
            m.set(2 + i, t, self.rho[i].clone());
        }
        m.set_block(2, 2, &self.phi11);
        m
    }

    pub fn from_differential(m: &Mat) -> Result<Self> {
        let n = m.rows() - 3;
        let (x, y, t) = (0, 1, n + 2);
        let w = 2..2 + n;
        let zero_entries = std::iter::once((y, x))
            .chain(std::iter::once((t, x)))
            .chain(w.clone().map(|i| (i, x)))
            .chain(w.clone().map(|i| (y, i)))
            .chain(w.clone().map(|i| (t, i)));
        if zero_entries
            .into_iter()
            .any(|(i, j)| !m.get(i, j).is_zero())
        {
            return Err(Error::InvalidAutomorphism(
                "differential is not of Heisenberg form".into(),
            ));
        }
        let phi = Self {
            alpha: m.get(t, t).clone(),
            beta2: m.get(t, y).clone(),
            gamma1: m.get(x, t).clone(),
            gamma2: m.get(y, t).clone(),
            delta12: m.get(x, y).clone(),
            delta22: m.get(y, y).clone(),
            phi01: w.clone().map(|i| m.get(x, i).clone()).collect(),
            eta: w.clone().map(|i| m.get(i, y).clone()).collect(),
            rho: w.clone().map(|i| m.get(i, t).clone()).collect(),
            phi11: m.submatrix(w.clone(), w),
        };
        if &phi.x_scale() != m.get(x, x) {
            return Err(Error::InvalidAutomorphism(
                "x-entry differs from alpha*Delta22 - beta2*gamma2".into(),
            ));
        }
        Ok(phi)
    }
}

fn dot(a: &[TauScalar], b: &[TauScalar]) -> TauScalar {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl Automorphism for HeisAut {
    fn apply(&self, group: &AlmostAbelian, g: &GroupElement) -> Result<GroupElement> {
        group.check_dim(&g.v)?;
        let (x, y, t) = (&g.v[0], &g.v[1], &g.t);
        let w = &g.v[2..];
        let half = TauScalar::from(rat(1, 2));
        let new_x = [
            &self.x_scale() * x,
            &self.delta12 * y,
            &self.gamma1 * t,
            &(&self.beta2 * &self.gamma2) * &(t * y),
            &(&half * &self.alpha) * &(&self.gamma2 * &(t * t)),
            &(&half * &self.delta22) * &(&self.beta2 * &(y * y)),
            dot(&self.phi01, w),
        ]
        .into_iter()
        .sum();
        let new_y = &(&self.delta22 * y) + &(&self.gamma2 * t);
        let new_t = &(&self.beta2 * y) + &(&self.alpha * t);
        let new_w = vadd(
            &vadd(&vscale(y, &self.eta), &vscale(t, &self.rho)),
            &self.phi11.mul_vec(w),
        );
        let mut v = vec![new_x, new_y];
        v.extend(new_w);
        Ok(GroupElement::new(v, new_t))
    }

    fn apply_numeric(&self, _group: &AlmostAbelian, g: &NumElement) -> NumElement {
        let f = TauScalar::to_f64;
        let (x, y, t) = (g.v[0], g.v[1], g.t);
        let n = self.extra();
        let w: Vec<f64> = g.v.iter().skip(2).copied().collect();
        let dotf = |a: &[TauScalar]| a.iter().zip(&w).map(|(p, q)| f(p) * q).sum::<f64>();
        let new_x = f(&self.x_scale()) * x
            + f(&self.delta12) * y
            + f(&self.gamma1) * t
            + f(&self.beta2) * f(&self.gamma2) * t * y
            + 0.5 * f(&self.alpha) * f(&self.gamma2) * t * t
            + 0.5 * f(&self.delta22) * f(&self.beta2) * y * y
            + dotf(&self.phi01);
        let phi11 = self.phi11.to_f64();
        let mut v = vec![new_x, f(&self.delta22) * y + f(&self.gamma2) * t];
        for i in 0..n {
            let row: f64 = (0..n).map(|j| phi11[(i, j)] * w[j]).sum();
            v.push(f(&self.eta[i]) * y + f(&self.rho[i]) * t + row);
        }
        NumElement::new(v, f(&self.beta2) * y + f(&self.alpha) * t)
    }
}

/// An element of Aut(G) for simply connected G.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutElement {
    Generic(GenericAut),
    Heis(HeisAut),
}

impl AutElement {
    pub fn identity(group: &AlmostAbelian) -> Self {
        Self::Generic(GenericAut::identity(group.dim()))
    }

    pub fn validate(&self, group: &AlmostAbelian) -> Result<()> {
        match self {
            Self::Generic(p) => p.validate(group),
            Self::Heis(p) => p.validate(group),
        }
    }

    pub fn differential(&self) -> Mat {
        match self {
            Self::Generic(p) => p.differential(),
            Self::Heis(p) => p.differential(),
        }
    }

    fn from_differential(m: &Mat, heis: bool) -> Result<Self> {
        if heis {
            HeisAut::from_differential(m).map(Self::Heis)
        } else {
            GenericAut::from_differential(m).map(Self::Generic)
        }
    }

    fn is_heis(&self) -> bool {
        matches!(self, Self::Heis(_))
    }

    /// The same automorphism in Heisenberg form, when the datum allows it.
    pub fn to_heis(&self, group: &AlmostAbelian) -> Result<HeisAut> {
        if !is_heisenberg_extension(group.aleph()) {
            return Err(Error::InvalidAutomorphism(
                "datum is not a Heisenberg extension".into(),
            ));
        }
        match self {
            Self::Heis(p) => Ok(p.clone()),
            Self::Generic(p) => HeisAut::from_differential(&p.differential()),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let heis = self.is_heis() || other.is_heis();
        Self::from_differential(&self.differential().mul(&other.differential()), heis)
    }

    pub fn invert(&self) -> Result<Self> {
        let inv = self
            .differential()
            .inverse()
            .ok_or_else(|| Error::InvalidAutomorphism("differential is singular".into()))?;
        Self::from_differential(&inv, self.is_heis())
    }
}

impl Automorphism for AutElement {
    fn apply(&self, group: &AlmostAbelian, g: &GroupElement) -> Result<GroupElement> {
        match self {
            Self::Generic(p) => p.apply(group, g),
            Self::Heis(p) => p.apply(group, g),
        }
    }

    fn apply_numeric(&self, group: &AlmostAbelian, g: &NumElement) -> NumElement {
        match self {
            Self::Generic(p) => p.apply_numeric(group, g),
            Self::Heis(p) => p.apply_numeric(group, g),
        }
    }
}

/// Conjugation by `[u, s]`, kept symbolic: `Δ = e^{sJ}`, `γ = −Ju`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerAut {
    pub u: Vector,
    pub s: TauScalar,
}

impl InnerAut {
    pub fn new(g: &GroupElement) -> Self {
        Self {
            u: g.v.clone(),
            s: g.t.clone(),
        }
    }

    pub fn element(&self) -> GroupElement {
        GroupElement::new(self.u.clone(), self.s.clone())
    }

    /// Generic form, available when `e^{sJ}` is exact.
    pub fn to_generic(&self, group: &AlmostAbelian) -> Result<GenericAut> {
        let gamma = group.j().mul_vec(&self.u).iter().map(|x| -x).collect();
        Ok(GenericAut::new(
            group.exp_tj(&self.s)?,
            gamma,
            TauScalar::one(),
        ))
    }

    /// `Inn(g) ∘ Inn(h) = Inn(gh)`.
    pub fn compose(&self, group: &AlmostAbelian, other: &Self) -> Result<Self> {
        Ok(Self::new(
            &group.group_mul(&self.element(), &other.element())?,
        ))
    }
}

impl Automorphism for InnerAut {
    /// `[e^{sJ}v − (e^{tJ} − id)u, t]`.
    fn apply(&self, group: &AlmostAbelian, h: &GroupElement) -> Result<GroupElement> {
        let rotated = group.exp_apply(&self.s, &h.v)?;
        let moved = vsub(&group.exp_apply(&h.t, &self.u)?, &self.u);
        Ok(GroupElement::new(vsub(&rotated, &moved), h.t.clone()))
    }

    fn apply_numeric(&self, group: &AlmostAbelian, h: &NumElement) -> NumElement {
        let u = GroupElement::new(self.u.clone(), self.s.clone()).to_numeric();
        let d = group.dim();
        let v = group.exp_tj_numeric(u.t) * &h.v
            - (group.exp_tj_numeric(h.t) - nalgebra::DMatrix::identity(d, d)) * &u.v;
        NumElement { v, t: h.t }
    }
}

/// The integer matrix `A` with `Φ(n_i) = Σ_j n_j A_{ji}`, when it lies in GL(ℤ, k).
pub fn preserves_lattice(
    phi: &impl Automorphism,
    group: &AlmostAbelian,
    lattice: &DiscreteCentralSubgroup,
) -> Result<Option<IntMatrix>> {
    let k = lattice.rank();
    let mut a = IntMatrix::zeros(k, k);
    for (i, g) in lattice.generators().iter().enumerate() {
        let image = phi.apply(group, g)?;
        let Some(coords) = lattice.integer_coordinates(&image) else {
            return Ok(None);
        };
        for (j, c) in coords.into_iter().enumerate() {
            a.set(j, i, c);
        }
    }
    Ok(a.is_unimodular().then_some(a))
}

/// Images of a lattice's generators.
pub fn image_lattice(
    phi: &impl Automorphism,
    group: &AlmostAbelian,
    lattice: &DiscreteCentralSubgroup,
) -> Result<DiscreteCentralSubgroup> {
    let images = lattice
        .generators()
        .iter()
        .map(|g| phi.apply(group, g))
        .collect::<Result<Vec<_>>>()?;
    DiscreteCentralSubgroup::new(group, images)
}
