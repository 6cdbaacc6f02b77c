//! The Jordan datum ℵ, the real Jordan matrix J(ℵ), and the algebra and group element model.

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::Range;

use nalgebra::DVector;

use crate::error::{Error, Result};
use crate::linalg::{vadd, vzero, Mat, Subspace, Vector};
use crate::scalar::{GaussRational, Rational, TauScalar};

/// Finite map `(eigenvalue, block size) → multiplicity`, eigenvalues kept in the closed upper
/// half plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiplicityFunction {
    entries: BTreeMap<(GaussRational, usize), usize>,
}

impl MultiplicityFunction {
    /// Builds ℵ, merging conjugate eigenvalues. Rejects zero sizes and multiplicities, the empty
    /// datum and the Abelian datum made only of `(0, 1)` blocks.
    pub fn new(entries: impl IntoIterator<Item = (GaussRational, usize, usize)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (eig, size, mult) in entries {
            if size == 0 || mult == 0 {
                return Err(Error::InvalidDatum(format!(
                    "block ({eig}, {size}) needs positive size and multiplicity"
                )));
            }
            *map.entry((eig.upper(), size)).or_insert(0) += mult;
        }
        if map.is_empty() {
            return Err(Error::InvalidDatum("empty datum".into()));
        }
        if map.keys().all(|(eig, size)| eig.is_zero() && *size == 1) {
            return Err(Error::InvalidDatum(
                "only (0,1) blocks: J(ℵ) = 0 and the algebra is Abelian".into(),
            ));
        }
        Ok(Self { entries: map })
    }

    /// Entries `(eigenvalue, size, multiplicity)` in canonical block order.
    pub fn entries(&self) -> Vec<(GaussRational, usize, usize)> {
        let mut out: Vec<_> = self
            .entries
            .iter()
            .map(|((e, s), m)| (e.clone(), *s, *m))
            .collect();
        out.sort_by_key(|a| block_key(&a.0, a.1));
        out
    }

    pub fn multiplicity(&self, eigenvalue: &GaussRational, size: usize) -> usize {
        self.entries
            .get(&(eigenvalue.upper(), size))
            .copied()
            .unwrap_or(0)
    }

    /// Real dimension `d`.
    pub fn dim(&self) -> usize {
        self.entries
            .iter()
            .map(|((e, s), m)| m * s * if e.is_real() { 1 } else { 2 })
            .sum()
    }

    /// `Σ_n ℵ(0, n)`, the dimension of ker J(ℵ).
    pub fn kernel_dim(&self) -> usize {
        self.entries
            .iter()
            .filter(|((e, _), _)| e.is_zero())
            .map(|(_, m)| m)
            .sum()
    }

    /// ℵ with the `(0, 1)` entries removed.
    pub fn without_abelian_part(&self) -> Self {
        let entries = self
            .entries
            .iter()
            .filter(|((e, s), _)| !(e.is_zero() && *s == 1))
            .map(|(k, m)| (k.clone(), *m))
            .collect();
        Self { entries }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.entries.keys().all(|(e, _)| e.is_zero())
    }
}

impl fmt::Display for MultiplicityFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries()
            .iter()
            .map(|(e, s, m)| format!("({e},{s})->{m}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Canonical order: larger blocks first, zero eigenvalue last among equal sizes, then (re, im).
fn block_key(eig: &GaussRational, size: usize) -> (Reverse<usize>, bool, Rational, Rational) {
    (Reverse(size), eig.is_zero(), eig.re.clone(), eig.im.clone())
}

/// One Jordan block `J(p, n)` placed in ℝ^d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanBlock {
    pub eigenvalue: GaussRational,
    pub size: usize,
    /// Which of the `ℵ(p, n)` copies this is.
    pub copy: usize,
    pub offset: usize,
    pub real_dim: usize,
}

impl JordanBlock {
    pub fn is_complex(&self) -> bool {
        !self.eigenvalue.is_real()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.eigenvalue.is_zero()
    }

    pub fn range(&self) -> Range<usize> {
        self.offset..self.offset + self.real_dim
    }

    /// Real coordinates of the block's top row; a 2-plane for complex blocks.
    pub fn top(&self) -> Range<usize> {
        self.offset..self.offset + if self.is_complex() { 2 } else { 1 }
    }

    /// The `real_dim × real_dim` matrix of the block.
    pub fn matrix(&self) -> Mat {
        let (a, b) = (
            TauScalar::from(self.eigenvalue.re.clone()),
            TauScalar::from(self.eigenvalue.im.clone()),
        );
        let mut m = Mat::zeros(self.real_dim, self.real_dim);
        if self.is_complex() {
            for k in 0..self.size {
                let r = 2 * k;
                m.set(r, r, a.clone());
                m.set(r, r + 1, -&b);
                m.set(r + 1, r, b.clone());
                m.set(r + 1, r + 1, a.clone());
                if k + 1 < self.size {
                    m.set(r, r + 2, TauScalar::one());
                    m.set(r + 1, r + 3, TauScalar::one());
                }
            }
        } else {
            for k in 0..self.size {
                m.set(k, k, a.clone());
                if k + 1 < self.size {
                    m.set(k, k + 1, TauScalar::one());
                }
            }
        }
        m
    }
}

impl fmt::Display for JordanBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(eigenvalue {}, size {}, copy {}) at coordinates {}..{}",
            self.eigenvalue,
            self.size,
            self.copy + 1,
            self.offset + 1,
            self.offset + self.real_dim
        )
    }
}

/// The block-diagonal real matrix J(ℵ).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanMatrix {
    pub blocks: Vec<JordanBlock>,
    pub matrix: Mat,
}

pub fn build_jordan(aleph: &MultiplicityFunction) -> JordanMatrix {
    let mut blocks = Vec::new();
    let mut offset = 0;
    for (eigenvalue, size, mult) in aleph.entries() {
        let real_dim = if eigenvalue.is_real() { size } else { 2 * size };
        for copy in 0..mult {
            blocks.push(JordanBlock {
                eigenvalue: eigenvalue.clone(),
                size,
                copy,
                offset,
                real_dim,
            });
            offset += real_dim;
        }
    }
    let mut matrix = Mat::zeros(offset, offset);
    for b in &blocks {
        matrix.set_block(b.offset, b.offset, &b.matrix());
    }
    JordanMatrix { blocks, matrix }
}

/// `(v, t)` in the Lie algebra ℝ^d ⋊ ℝ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    pub v: Vector,
    pub t: TauScalar,
}

/// `[v, t]` in the simply connected group ℝ^d ⋊ ℝ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub v: Vector,
    pub t: TauScalar,
}

impl AlgebraElement {
    pub fn new(v: Vector, t: TauScalar) -> Self {
        Self { v, t }
    }

    pub fn zero(d: usize) -> Self {
        Self {
            v: vzero(d),
            t: TauScalar::zero(),
        }
    }

    pub fn to_numeric(&self) -> NumElement {
        NumElement::new(
            self.v.iter().map(TauScalar::to_f64).collect(),
            self.t.to_f64(),
        )
    }
}

impl GroupElement {
    pub fn new(v: Vector, t: TauScalar) -> Self {
        Self { v, t }
    }

    pub fn identity(d: usize) -> Self {
        Self {
            v: vzero(d),
            t: TauScalar::zero(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.t.is_zero() && self.v.iter().all(TauScalar::is_zero)
    }

    pub fn to_numeric(&self) -> NumElement {
        NumElement::new(
            self.v.iter().map(TauScalar::to_f64).collect(),
            self.t.to_f64(),
        )
    }
}

fn fmt_pair(v: &[TauScalar], t: &TauScalar, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    write!(f, "[{}]@{}", parts.join(","), t)
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_pair(&self.v, &self.t, f)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_pair(&self.v, &self.t, f)
    }
}

/// Floating-point `(v, t)`, used for both algebra and group elements in numeric mode.
#[derive(Clone, Debug, PartialEq)]
pub struct NumElement {
    pub v: DVector<f64>,
    pub t: f64,
}

impl NumElement {
    pub fn new(v: Vec<f64>, t: f64) -> Self {
        Self {
            v: DVector::from_vec(v),
            t,
        }
    }

    pub fn identity(d: usize) -> Self {
        Self {
            v: DVector::zeros(d),
            t: 0.0,
        }
    }

    pub fn distance(&self, other: &Self) -> f64 {
        (&self.v - &other.v).amax().max((self.t - other.t).abs())
    }
}

/// The ambient group `G = ℝ^d ⋊_{J(ℵ)} ℝ` together with its Lie algebra.
#[derive(Clone, Debug)]
pub struct AlmostAbelian {
    aleph: MultiplicityFunction,
    jordan: JordanMatrix,
}

impl AlmostAbelian {
    pub fn new(aleph: MultiplicityFunction) -> Self {
        let jordan = build_jordan(&aleph);
        Self { aleph, jordan }
    }

    pub fn aleph(&self) -> &MultiplicityFunction {
        &self.aleph
    }

    pub fn jordan(&self) -> &JordanMatrix {
        &self.jordan
    }

    pub fn j(&self) -> &Mat {
        &self.jordan.matrix
    }

    pub fn blocks(&self) -> &[JordanBlock] {
        &self.jordan.blocks
    }

    pub fn dim(&self) -> usize {
        self.jordan.matrix.rows()
    }

    pub fn check_dim(&self, v: &[TauScalar]) -> Result<()> {
        if v.len() == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            })
        }
    }

    /// `[x, y] = (t_x J v_y − t_y J v_x, 0)`.
    pub fn commutator(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_dim(&x.v)?;
        self.check_dim(&y.v)?;
        let a = self.j().mul_vec(&y.v);
        let b = self.j().mul_vec(&x.v);
        let v = a
            .iter()
            .zip(&b)
            .map(|(p, q)| &(&x.t * p) - &(&y.t * q))
            .collect();
        Ok(AlgebraElement::new(v, TauScalar::zero()))
    }

    /// A basis of `[L, L] = J(ℵ)ℝ^d`.
    pub fn derived_algebra_basis(&self) -> Vec<Vector> {
        self.j().column_space_basis()
    }

    pub fn derived_algebra(&self) -> Subspace {
        Subspace::span(self.dim(), &self.derived_algebra_basis())
    }

    /// Standard basis vectors at the top coordinate of every nilpotent block.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        self.blocks()
            .iter()
            .filter(|b| b.is_nilpotent())
            .map(|b| {
                let mut e = vzero(self.dim());
                e[b.offset] = TauScalar::one();
                e
            })
            .collect()
    }

    pub fn kernel(&self) -> Subspace {
        Subspace::span(self.dim(), &self.kernel_basis())
    }

    pub fn in_kernel(&self, v: &[TauScalar]) -> bool {
        self.j().mul_vec(v).iter().all(TauScalar::is_zero)
    }

    /// `[v, t]·[u, s] = [v + e^{tJ} u, t + s]`, exact where `e^{tJ}u` is.
    pub fn group_mul(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        self.check_dim(&g.v)?;
        self.check_dim(&h.v)?;
        let moved = self.exp_apply(&g.t, &h.v)?;
        Ok(GroupElement::new(vadd(&g.v, &moved), &g.t + &h.t))
    }

    /// `[v, t]⁻¹ = [−e^{−tJ} v, −t]`.
    pub fn group_inverse(&self, g: &GroupElement) -> Result<GroupElement> {
        self.check_dim(&g.v)?;
        let back = self.exp_apply(&-&g.t, &g.v)?;
        Ok(GroupElement::new(back.iter().map(|x| -x).collect(), -&g.t))
    }

    pub fn group_mul_numeric(&self, g: &NumElement, h: &NumElement) -> NumElement {
        let moved = self.exp_tj_numeric(g.t) * &h.v;
        NumElement {
            v: &g.v + moved,
            t: g.t + h.t,
        }
    }

    pub fn group_inverse_numeric(&self, g: &NumElement) -> NumElement {
        let back = self.exp_tj_numeric(-g.t) * &g.v;
        NumElement { v: -back, t: -g.t }
    }
}

pub(crate) fn unit(d: usize, i: usize) -> Vector {
    let mut e = vzero(d);
    e[i] = TauScalar::one();
    e
}

pub(crate) fn is_zero_vec(v: &[TauScalar]) -> bool {
    v.iter().all(TauScalar::is_zero)
}
