//! Matrix representations: the algebra representation, the groups G, G_I, G_II, the
//! quotient-matrix chart and the faithful representation of `G/N`.

use std::fmt;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::jordan::{
    AlgebraElement, AlmostAbelian, GroupElement, JordanBlock, MultiplicityFunction, NumElement,
};
use crate::lattice::DiscreteCentralSubgroup;
use crate::linalg::{vsub, Mat, Vector};
use crate::scalar::{Rational, TauScalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AtomKind {
    Exp,
    Cos,
    Sin,
}

/// `exp(arg)`, `cos(arg)` or `sin(arg)` with an exact argument.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Atom {
    pub kind: AtomKind,
    pub arg: TauScalar,
}

impl Atom {
    fn eval(&self) -> f64 {
        let x = self.arg.to_f64();
        match self.kind {
            AtomKind::Exp => x.exp(),
            AtomKind::Cos => x.cos(),
            AtomKind::Sin => x.sin(),
        }
    }

    /// The exact value, when it is rational: `exp(0)` and trigonometric values at quarter turns.
    fn exact(&self) -> Option<TauScalar> {
        if self.arg.is_zero() {
            return Some(TauScalar::from_int(if self.kind == AtomKind::Sin {
                0
            } else {
                1
            }));
        }
        if self.kind == AtomKind::Exp {
            return None;
        }
        let quarter = (&self.arg / &TauScalar::tau())
            .scale(&Rational::from_integer(4.into()))
            .as_integer()?;
        let q = (quarter % BigInt::from(4)).to_i64()?.rem_euclid(4);
        let (c, s) = [(1, 0), (0, 1), (-1, 0), (0, -1)][q as usize];
        Some(TauScalar::from_int(if self.kind == AtomKind::Cos {
            c
        } else {
            s
        }))
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            AtomKind::Exp => "exp",
            AtomKind::Cos => "cos",
            AtomKind::Sin => "sin",
        };
        write!(f, "{name}({})", self.arg)
    }
}

/// `coeff · Π atoms`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: TauScalar,
    pub atoms: Vec<Atom>,
}

/// A finite sum of terms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RepEntry(pub Vec<Term>);

impl RepEntry {
    pub fn constant(c: TauScalar) -> Self {
        if c.is_zero() {
            Self::default()
        } else {
            Self(vec![Term {
                coeff: c,
                atoms: Vec::new(),
            }])
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// `coeff · Π atoms`, folding exactly known atoms into the coefficient.
    pub fn term(mut coeff: TauScalar, atoms: impl IntoIterator<Item = Atom>) -> Self {
        let mut kept = Vec::new();
        for a in atoms {
            match a.exact() {
                Some(x) => coeff = &coeff * &x,
                None => kept.push(a),
            }
        }
        if coeff.is_zero() {
            return Self::zero();
        }
        kept.sort_by_key(|a| (a.kind, a.arg.to_string()));
        Self(vec![Term { coeff, atoms: kept }])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.0.clone();
        for t in &other.0 {
            match terms.iter_mut().position(|s| s.atoms == t.atoms) {
                Some(i) => terms[i].coeff = &terms[i].coeff + &t.coeff,
                None => terms.push(t.clone()),
            }
        }
        terms.retain(|t| !t.coeff.is_zero());
        Self(terms)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for a in &self.0 {
            for b in &other.0 {
                let atoms = a.atoms.iter().chain(&b.atoms).cloned();
                out = out.add(&Self::term(&a.coeff * &b.coeff, atoms));
            }
        }
        out
    }

    pub fn eval(&self) -> f64 {
        self.0
            .iter()
            .map(|t| t.coeff.to_f64() * t.atoms.iter().map(Atom::eval).product::<f64>())
            .sum()
    }

    pub fn as_exact(&self) -> Option<TauScalar> {
        self.0.iter().try_fold(TauScalar::zero(), |acc, t| {
            t.atoms.is_empty().then(|| &acc + &t.coeff)
        })
    }
}

impl fmt::Display for RepEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let atoms: Vec<String> = t.atoms.iter().map(Atom::to_string).collect();
            match (atoms.is_empty(), t.coeff.is_one(), (-&t.coeff).is_one()) {
                (true, _, _) => write!(f, "{}", t.coeff)?,
                (false, true, _) => write!(f, "{}", atoms.join("*"))?,
                (false, _, true) => write!(f, "-{}", atoms.join("*"))?,
                (false, _, _) => write!(f, "({})*{}", t.coeff, atoms.join("*"))?,
            }
        }
        Ok(())
    }
}

/// A matrix of [`RepEntry`] values, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RepMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RepEntry>,
}

impl RepMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![RepEntry::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, RepEntry::constant(TauScalar::one()));
        }
        m
    }

    pub fn from_exact(m: &Mat) -> Self {
        let mut r = Self::zeros(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                r.set(i, j, RepEntry::constant(m.get(i, j).clone()));
            }
        }
        r
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RepEntry {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: RepEntry) {
        self.entries[i * self.cols + j] = x;
    }

    pub fn set_block(&mut self, row: usize, col: usize, block: &Self) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(row + i, col + j, block.get(i, j).clone());
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = RepEntry::zero();
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn evaluate(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).eval())
    }

    /// The matrix over ℚ(τ), when no transcendental atom survives.
    pub fn exact(&self) -> Option<Mat> {
        let entries: Option<Vec<TauScalar>> = self.entries.iter().map(RepEntry::as_exact).collect();
        let entries = entries?;
        Some(Mat::from_fn(self.rows, self.cols, |i, j| {
            entries[i * self.cols + j].clone()
        }))
    }

    pub fn is_identity(&self) -> bool {
        self.exact().is_some_and(|m| m.is_identity())
    }
}

impl fmt::Display for RepMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn block_exp_symbolic(block: &JordanBlock, t: &TauScalar) -> RepMatrix {
    let n = block.real_dim;
    let mut m = RepMatrix::zeros(n, n);
    let a = TauScalar::from(block.eigenvalue.re.clone());
    let b = TauScalar::from(block.eigenvalue.im.clone());
    let growth = Atom {
        kind: AtomKind::Exp,
        arg: &a * t,
    };
    let cos = Atom {
        kind: AtomKind::Cos,
        arg: &b * t,
    };
    let sin = Atom {
        kind: AtomKind::Sin,
        arg: &b * t,
    };
    let mut factorial = BigInt::from(1);
    for j in 0..block.size {
        if j > 0 {
            factorial *= j;
        }
        let c = t
            .pow(j as u32)
            .scale(&BigRational::new(1.into(), factorial.clone()));
        for k in 0..block.size - j {
            if block.is_complex() {
                let (r, col) = (2 * k, 2 * (k + j));
                let entry = |sign: i64, trig: &Atom| {
                    RepEntry::term(
                        &c * &TauScalar::from_int(sign),
                        [growth.clone(), trig.clone()],
                    )
                };
                m.set(r, col, entry(1, &cos));
                m.set(r, col + 1, entry(-1, &sin));
                m.set(r + 1, col, entry(1, &sin));
                m.set(r + 1, col + 1, entry(1, &cos));
            } else {
                m.set(k, k + j, RepEntry::term(c.clone(), [growth.clone()]));
            }
        }
    }
    m
}

impl AlmostAbelian {
    /// `e^{tJ}` with symbolic exponential and trigonometric entries.
    pub fn exp_tj_symbolic(&self, t: &TauScalar) -> RepMatrix {
        let d = self.dim();
        let mut m = RepMatrix::zeros(d, d);
        for b in self.blocks() {
            m.set_block(b.offset, b.offset, &block_exp_symbolic(b, t));
        }
        m
    }

    /// `(v, t) ↦ [[0, 0], [v, tJ]]`.
    pub fn algebra_rep(&self, x: &AlgebraElement) -> Result<Mat> {
        self.check_dim(&x.v)?;
        let d = self.dim();
        let mut m = Mat::zeros(d + 1, d + 1);
        for (i, vi) in x.v.iter().enumerate() {
            m.set(i + 1, 0, vi.clone());
        }
        m.set_block(1, 1, &self.j().scale(&x.t));
        Ok(m)
    }

    /// The algebra representation with an extra `t` corner, the Lie algebra of G_I and G_II.
    pub fn algebra_rep_extended(&self, x: &AlgebraElement) -> Result<Mat> {
        let inner = self.algebra_rep(x)?;
        let d = self.dim();
        let mut m = Mat::zeros(d + 2, d + 2);
        m.set_block(0, 0, &inner);
        m.set(d + 1, d + 1, x.t.clone());
        Ok(m)
    }

    fn rep_core(&self, g: &GroupElement, size: usize) -> Result<RepMatrix> {
        self.check_dim(&g.v)?;
        let mut m = RepMatrix::identity(size);
        for (i, vi) in g.v.iter().enumerate() {
            m.set(i + 1, 0, RepEntry::constant(vi.clone()));
        }
        m.set_block(1, 1, &self.exp_tj_symbolic(&g.t));
        Ok(m)
    }

    /// `[v, t] ↦ [[1, 0], [v, e^{tJ}]]`; its kernel is `{0} × T_ℵ`.
    pub fn group_rep_g(&self, g: &GroupElement) -> Result<RepMatrix> {
        self.rep_core(g, self.dim() + 1)
    }

    /// G_I: the G matrix with an `e^t` corner.
    pub fn group_rep_gi(&self, g: &GroupElement) -> Result<RepMatrix> {
        let d = self.dim();
        let mut m = self.rep_core(g, d + 2)?;
        m.set(
            d + 1,
            d + 1,
            RepEntry::term(
                TauScalar::one(),
                [Atom {
                    kind: AtomKind::Exp,
                    arg: g.t.clone(),
                }],
            ),
        );
        Ok(m)
    }

    /// G_II: the G matrix with `t` in the first column of an extra row.
    pub fn group_rep_gii(&self, g: &GroupElement) -> Result<RepMatrix> {
        let d = self.dim();
        let mut m = self.rep_core(g, d + 2)?;
        m.set(d + 1, 0, RepEntry::constant(g.t.clone()));
        Ok(m)
    }

    fn rep_core_numeric(&self, g: &NumElement, size: usize) -> DMatrix<f64> {
        let d = self.dim();
        let mut m = DMatrix::identity(size, size);
        m.view_mut((1, 0), (d, 1)).copy_from(&g.v);
        m.view_mut((1, 1), (d, d))
            .copy_from(&self.exp_tj_numeric(g.t));
        m
    }

    pub fn group_rep_g_numeric(&self, g: &NumElement) -> DMatrix<f64> {
        self.rep_core_numeric(g, self.dim() + 1)
    }

    pub fn group_rep_gi_numeric(&self, g: &NumElement) -> DMatrix<f64> {
        let d = self.dim();
        let mut m = self.rep_core_numeric(g, d + 2);
        m[(d + 1, d + 1)] = g.t.exp();
        m
    }

    pub fn group_rep_gii_numeric(&self, g: &NumElement) -> DMatrix<f64> {
        let d = self.dim();
        let mut m = self.rep_core_numeric(g, d + 2);
        m[(d + 1, 0)] = g.t;
        m
    }

    /// G is simply connected iff `T_ℵ = {0}`.
    pub fn is_simply_connected_g(&self) -> bool {
        self.torsion().is_trivial()
    }

    pub fn decompose(&self) -> Decomposition {
        let abelian: Vec<usize> = self
            .blocks()
            .iter()
            .filter(|b| b.is_nilpotent() && b.size == 1)
            .map(|b| b.offset)
            .collect();
        Decomposition {
            d0: self.dim() - abelian.len(),
            abelian_coordinates: abelian,
            core_aleph: self.aleph().without_abelian_part(),
        }
    }
}

/// `𝔞𝔄(ℵ) = ℝ^{d₀} ⋊ ℝ ⊕ ℝ^{d−d₀}`, split off along the `(0,1)` blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub d0: usize,
    /// Zero-based; these are always the trailing coordinates.
    pub abelian_coordinates: Vec<usize>,
    pub core_aleph: MultiplicityFunction,
}

/// Greedy completion of independent vectors to a basis by standard basis vectors.
fn complete_basis(n: usize, vectors: &[Vector]) -> Vec<Vector> {
    let mut basis = vectors.to_vec();
    for i in 0..n {
        if basis.len() == n {
            break;
        }
        let mut e = vec![TauScalar::zero(); n];
        e[i] = TauScalar::one();
        let mut trial = basis.clone();
        trial.push(e.clone());
        if Mat::from_cols(n, &trial).rank() == trial.len() {
            basis = trial;
        }
    }
    basis
}

/// The fundamental-domain representative of `g` modulo the lattice: lattice coordinates
/// are reduced into `[0, 1)`.
pub fn quotient_chart(g: &GroupElement, n: &DiscreteCentralSubgroup) -> GroupElement {
    let d = g.v.len();
    let gens: Vec<Vector> = n.generator_matrix().to_cols();
    let basis = Mat::from_cols(d + 1, &complete_basis(d + 1, &gens));
    let mut x = g.v.clone();
    x.push(g.t.clone());
    let mut c = basis.inverse().expect("completed basis").mul_vec(&x);
    for ci in c.iter_mut().take(n.rank()) {
        let fl = TauScalar::from(BigRational::from_integer(ci.floor()));
        *ci = &*ci - &fl;
    }
    let y = basis.mul_vec(&c);
    GroupElement::new(y[..d].to_vec(), y[d].clone())
}

/// `P = (w_1 … w_m; t_1 … t_m)⁻¹` split into its first `k` rows and the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PMatrices {
    pub p: Mat,
    pub p_par: Mat,
    pub p_perp: Mat,
}

fn check_supported(group: &AlmostAbelian, n: &DiscreteCentralSubgroup) -> Result<Decomposition> {
    let dec = group.decompose();
    for g in n.generators() {
        if g.v[..dec.d0].iter().any(|x| !x.is_zero()) {
            return Err(Error::UnsupportedLattice(format!(
                "generator {g} is not supported on the abelian coordinates"
            )));
        }
    }
    Ok(dec)
}

/// Builds P from the generators `[w_i, t_i]` completed to a basis of `ℝ^{d−d₀} ⊕ ℝ`.
pub fn build_p(
    group: &AlmostAbelian,
    n: &DiscreteCentralSubgroup,
    completion: Option<&[Vector]>,
) -> Result<PMatrices> {
    let dec = check_supported(group, n)?;
    let m = group.dim() - dec.d0 + 1;
    let k = n.rank();
    let gens: Vec<Vector> = n
        .generators()
        .iter()
        .map(|g| {
            let mut c = g.v[dec.d0..].to_vec();
            c.push(g.t.clone());
            c
        })
        .collect();
    let basis = match completion {
        Some(extra) => {
            let mut b = gens.clone();
            b.extend(extra.iter().cloned());
            b
        }
        None => complete_basis(m, &gens),
    };
    if basis.len() != m || basis.iter().any(|b| b.len() != m) {
        return Err(Error::SingularCompletion);
    }
    let p = Mat::from_cols(m, &basis)
        .inverse()
        .ok_or(Error::SingularCompletion)?;
    Ok(PMatrices {
        p_par: p.submatrix(0..k, 0..m),
        p_perp: p.submatrix(k..m, 0..m),
        p,
    })
}

/// The faithful representation of `G/N` for `N ⊂ ℝ^{d−d₀} × T_ℵ`, with the unit-circle
/// entries realified into 2×2 rotation cells.
#[derive(Clone, Debug)]
pub struct QuotientRep {
    core: AlmostAbelian,
    d0: usize,
    pub p: PMatrices,
}

impl QuotientRep {
    pub fn new(group: &AlmostAbelian, n: &DiscreteCentralSubgroup) -> Result<Self> {
        Self::with_completion(group, n, None)
    }

    pub fn with_completion(
        group: &AlmostAbelian,
        n: &DiscreteCentralSubgroup,
        completion: Option<&[Vector]>,
    ) -> Result<Self> {
        let p = build_p(group, n, completion)?;
        let dec = group.decompose();
        Ok(Self {
            core: AlmostAbelian::new(dec.core_aleph),
            d0: dec.d0,
            p,
        })
    }

    pub fn k(&self) -> usize {
        self.p.p_par.rows()
    }

    /// `1 + d₀ + 2k + (m − k)`.
    pub fn dimension(&self) -> usize {
        1 + self.d0 + 2 * self.k() + self.p.p_perp.rows()
    }

    fn wt(&self, g: &GroupElement) -> Vector {
        let mut c = g.v[self.d0..].to_vec();
        c.push(g.t.clone());
        c
    }

    pub fn rep(&self, g: &GroupElement) -> Result<RepMatrix> {
        let d0 = self.d0;
        let k = self.k();
        let core = GroupElement::new(g.v[..d0].to_vec(), g.t.clone());
        let mut m = RepMatrix::identity(self.dimension());
        m.set_block(0, 0, &self.core.group_rep_g(&core)?);
        let wt = self.wt(g);
        let theta = self.p.p_par.mul_vec(&wt);
        for (i, th) in theta.iter().enumerate() {
            let arg = &TauScalar::tau() * th;
            let cos = Atom {
                kind: AtomKind::Cos,
                arg: arg.clone(),
            };
            let sin = Atom {
                kind: AtomKind::Sin,
                arg,
            };
            let r = 1 + d0 + 2 * i;
            m.set(r, r, RepEntry::term(TauScalar::one(), [cos.clone()]));
            m.set(r, r + 1, RepEntry::term(-TauScalar::one(), [sin.clone()]));
            m.set(r + 1, r, RepEntry::term(TauScalar::one(), [sin]));
            m.set(r + 1, r + 1, RepEntry::term(TauScalar::one(), [cos]));
        }
        for (i, x) in self.p.p_perp.mul_vec(&wt).into_iter().enumerate() {
            let r = 1 + d0 + 2 * k + i;
            m.set(
                r,
                r,
                RepEntry::term(
                    TauScalar::one(),
                    [Atom {
                        kind: AtomKind::Exp,
                        arg: x,
                    }],
                ),
            );
        }
        Ok(m)
    }

    pub fn rep_numeric(&self, g: &NumElement) -> DMatrix<f64> {
        let d0 = self.d0;
        let k = self.k();
        let mut m = DMatrix::identity(self.dimension(), self.dimension());
        let core = NumElement {
            v: g.v.rows(0, d0).into_owned(),
            t: g.t,
        };
        m.view_mut((0, 0), (d0 + 1, d0 + 1))
            .copy_from(&self.core.group_rep_g_numeric(&core));
        let mut wt: Vec<f64> = g.v.iter().skip(d0).copied().collect();
        wt.push(g.t);
        let apply = |p: &Mat| -> Vec<f64> {
            let pf = p.to_f64();
            (0..pf.nrows())
                .map(|i| (0..pf.ncols()).map(|j| pf[(i, j)] * wt[j]).sum())
                .collect()
        };
        for (i, th) in apply(&self.p.p_par).into_iter().enumerate() {
            let angle = std::f64::consts::TAU * th;
            let r = 1 + d0 + 2 * i;
            m[(r, r)] = angle.cos();
            m[(r, r + 1)] = -angle.sin();
            m[(r + 1, r)] = angle.sin();
            m[(r + 1, r + 1)] = angle.cos();
        }
        for (i, x) in apply(&self.p.p_perp).into_iter().enumerate() {
            let r = 1 + d0 + 2 * k + i;
            m[(r, r)] = x.exp();
        }
        m
    }
}

/// Difference of two group elements as vectors of ℝ^{d+1}.
pub fn vector_difference(g: &GroupElement, h: &GroupElement) -> Vector {
    let mut a = g.v.clone();
    a.push(g.t.clone());
    let mut b = h.v.clone();
    b.push(h.t.clone());
    vsub(&a, &b)
}
