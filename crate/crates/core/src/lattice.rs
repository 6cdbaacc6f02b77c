//! Discrete central subgroups `N ⊂ Z(G)` and the constructions built on them.
//!
//! A generator `[v, t]` is stored as a group element; as a vector of ℝ^{d+1} it is the
//! column `(v; t)`. Because N is central, products in N are sums of these columns.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::aut::{Automorphism, GenericAut};
use crate::error::{Error, Result};
use crate::jordan::{is_zero_vec, AlmostAbelian, GroupElement, JordanBlock};
use crate::linalg::{column_hnf, vadd, vscale, vzero, IntMatrix, Mat, Subspace, Vector};
use crate::reps::QuotientRep;
use crate::scalar::TauScalar;

/// A lattice of rank `k` in `ker J × T_ℵ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscreteCentralSubgroup {
    dim: usize,
    t0: Option<TauScalar>,
    generators: Vec<GroupElement>,
}

/// Checks centrality, ℝ-linear independence and the rank bound `k ≤ dim ker J + 1`.
pub fn validate(group: &AlmostAbelian, generators: &[GroupElement]) -> Result<()> {
    for (i, g) in generators.iter().enumerate() {
        group.check_dim(&g.v)?;
        if !group.in_kernel(&g.v) {
            return Err(Error::InvalidLattice(format!(
                "generator {} = {g}: v is not in ker J",
                i + 1
            )));
        }
        if !group.torsion().contains(&g.t) {
            return Err(Error::InvalidLattice(format!(
                "generator {} = {g}: t is not in T",
                i + 1
            )));
        }
    }
    let bound = group.aleph().kernel_dim() + 1;
    if generators.len() > bound {
        return Err(Error::InvalidLattice(format!(
            "rank {} exceeds dim ker J + 1 = {bound}",
            generators.len()
        )));
    }
    if columns(group.dim(), generators).rank() != generators.len() {
        return Err(Error::InvalidLattice(
            "generators are linearly dependent".into(),
        ));
    }
    Ok(())
}

fn column(g: &GroupElement) -> Vector {
    let mut c = g.v.clone();
    c.push(g.t.clone());
    c
}

fn columns(dim: usize, generators: &[GroupElement]) -> Mat {
    Mat::from_cols(dim + 1, &generators.iter().map(column).collect::<Vec<_>>())
}

fn from_column(c: &[TauScalar]) -> GroupElement {
    let d = c.len() - 1;
    GroupElement::new(c[..d].to_vec(), c[d].clone())
}

impl DiscreteCentralSubgroup {
    pub fn new(group: &AlmostAbelian, generators: Vec<GroupElement>) -> Result<Self> {
        validate(group, &generators)?;
        Ok(Self {
            dim: group.dim(),
            t0: group.torsion().t0,
            generators,
        })
    }

    pub fn trivial(group: &AlmostAbelian) -> Self {
        Self {
            dim: group.dim(),
            t0: group.torsion().t0,
            generators: Vec::new(),
        }
    }

    /// Generators given as `(v, n)` with `t = n·t₀`.
    pub fn from_multiples(
        group: &AlmostAbelian,
        generators: Vec<(Vector, BigInt)>,
    ) -> Result<Self> {
        let t0 = group.torsion().t0;
        let gens = generators
            .into_iter()
            .map(|(v, n)| {
                let t = match (&t0, n.is_zero()) {
                    (_, true) => TauScalar::zero(),
                    (Some(t0), false) => {
                        t0 * &TauScalar::from(num_rational::BigRational::from_integer(n))
                    }
                    (None, false) => {
                        return Err(Error::InvalidLattice(
                            "nonzero time multiple but T is trivial".into(),
                        ));
                    }
                };
                Ok(GroupElement::new(v, t))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(group, gens)
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn t0(&self) -> Option<&TauScalar> {
        self.t0.as_ref()
    }

    /// The `(d+1) × k` matrix with columns `(v_i; t_i)`.
    pub fn generator_matrix(&self) -> Mat {
        columns(self.dim, &self.generators)
    }

    /// `t_i / t₀`, zero when T is trivial.
    pub fn t_multiples(&self) -> Vec<BigInt> {
        self.generators
            .iter()
            .map(|g| match &self.t0 {
                Some(t0) => (&g.t / t0).as_integer().expect("validated time"),
                None => BigInt::zero(),
            })
            .collect()
    }

    /// All times but the first vanish.
    pub fn is_economic(&self) -> bool {
        self.generators.iter().skip(1).all(|g| g.t.is_zero())
    }

    /// The real span of the generator columns in ℝ^{d+1}.
    pub fn span(&self) -> Subspace {
        Subspace::span(
            self.dim + 1,
            &self.generators.iter().map(column).collect::<Vec<_>>(),
        )
    }

    /// Coefficients `a` with `[v, t] = Σ a_i n_i` as vectors, if any.
    pub fn coordinates(&self, g: &GroupElement) -> Option<Vector> {
        if g.v.len() != self.dim {
            return None;
        }
        let target = column(g);
        if self.generators.is_empty() {
            return is_zero_vec(&target).then(Vec::new);
        }
        let a = self.generator_matrix().solve(&target)?;
        Some(a)
    }

    pub fn integer_coordinates(&self, g: &GroupElement) -> Option<Vec<BigInt>> {
        self.coordinates(g)?
            .iter()
            .map(TauScalar::as_integer)
            .collect()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.integer_coordinates(g).is_some()
    }

    /// Generators `n·U`, i.e. `n'_j = Σ_i U_{ij} n_i`.
    pub fn combine(&self, u: &IntMatrix) -> Vec<GroupElement> {
        (0..u.cols())
            .map(|j| {
                let mut c = vzero(self.dim + 1);
                for (i, g) in self.generators.iter().enumerate() {
                    let coeff = TauScalar::from(num_rational::BigRational::from_integer(
                        u.get(i, j).clone(),
                    ));
                    c = vadd(&c, &vscale(&coeff, &column(g)));
                }
                from_column(&c)
            })
            .collect()
    }

    fn with_generators(&self, generators: Vec<GroupElement>) -> Self {
        Self {
            dim: self.dim,
            t0: self.t0.clone(),
            generators,
        }
    }
}

/// The integer matrix expressing `b`'s generators in `a`'s, if it exists.
fn transition(a: &[GroupElement], b: &[GroupElement], dim: usize) -> Option<IntMatrix> {
    let n = DiscreteCentralSubgroup {
        dim,
        t0: None,
        generators: a.to_vec(),
    };
    let mut m = IntMatrix::zeros(a.len(), b.len());
    for (j, g) in b.iter().enumerate() {
        for (i, c) in n.integer_coordinates(g)?.into_iter().enumerate() {
            m.set(i, j, c);
        }
    }
    Some(m)
}

fn same_lattice(a: &[GroupElement], b: &[GroupElement], dim: usize) -> bool {
    a.len() == b.len() && transition(a, b, dim).is_some_and(|m| m.is_unimodular())
}

/// Each generator of one lattice has integer coordinates in the other.
pub fn lattice_equal(n: &DiscreteCentralSubgroup, m: &DiscreteCentralSubgroup) -> bool {
    n.dim == m.dim && same_lattice(&n.generators, &m.generators, n.dim)
}

/// Unimodular column operations concentrating all times in the first generator.
pub fn reduce_generators(n: &DiscreteCentralSubgroup) -> (DiscreteCentralSubgroup, IntMatrix) {
    let row = IntMatrix::from_rows(vec![n.t_multiples()]);
    let (_, u) = column_hnf(&row);
    (n.with_generators(n.combine(&u)), u)
}

/// An automorphism Φ with `Φ(N) = (Φ(N) ∩ ker J) × (Φ(N) ∩ T)`, together with `Φ(N)`.
pub fn normalize_subgroup(
    group: &AlmostAbelian,
    n: &DiscreteCentralSubgroup,
) -> Result<(GenericAut, DiscreteCentralSubgroup)> {
    let n = if n.is_economic() {
        n.clone()
    } else {
        reduce_generators(n).0
    };
    let Some(first) = n.generators.first().filter(|g| !g.t.is_zero()) else {
        return Ok((GenericAut::identity(group.dim()), n));
    };
    let t1 = first.t.clone();
    // α = sgn t₁; for α = −1 the plain identity does not satisfy ΔJ = αJΔ, so the sign
    // intertwiner (the identity on ker J) is used instead.
    let (alpha, delta) = if t1.signum() > 0 {
        (TauScalar::one(), Mat::identity(group.dim()))
    } else {
        let minus = -num_rational::BigRational::one();
        let delta = group
            .dilation_intertwiner(&minus)
            .ok_or_else(|| Error::UnsupportedLattice("no sign intertwiner".into()))?;
        (-TauScalar::one(), delta)
    };
    let gamma = vscale(&(-t1.inv().expect("nonzero")), &first.v);
    let phi = GenericAut::new(delta, gamma, alpha);
    let images = n
        .generators
        .iter()
        .map(|g| phi.apply(group, g))
        .collect::<Result<Vec<_>>>()?;
    Ok((phi, n.with_generators(images)))
}

/// Whether `Φ(N) = M`, which makes `q_M ∘ Φ ∘ q_N⁻¹` an isomorphism `G/N → G/M`.
pub fn quotient_iso_certificate(
    group: &AlmostAbelian,
    n: &DiscreteCentralSubgroup,
    m: &DiscreteCentralSubgroup,
    phi: &impl Automorphism,
) -> Result<bool> {
    let images = n
        .generators
        .iter()
        .map(|g| phi.apply(group, g))
        .collect::<Result<Vec<_>>>()?;
    Ok(n.dim == m.dim && same_lattice(&images, &m.generators, n.dim))
}

fn kernel_blocks(group: &AlmostAbelian) -> Vec<&JordanBlock> {
    group.blocks().iter().filter(|b| b.is_nilpotent()).collect()
}

/// `ṽ`: the coordinates of a kernel vector along the kernel basis.
fn significant_rows(group: &AlmostAbelian, v: &[TauScalar]) -> Vector {
    kernel_blocks(group)
        .iter()
        .map(|b| v[b.offset].clone())
        .collect()
}

/// Entries of Δ̃ allowed to be nonzero: target block at least as large as source block.
fn allowed_entry(blocks: &[&JordanBlock], i: usize, j: usize) -> bool {
    blocks[i].size >= blocks[j].size
}

fn first_time(n: &DiscreteCentralSubgroup) -> TauScalar {
    n.generators
        .first()
        .map_or_else(TauScalar::zero, |g| g.t.clone())
}

fn check_economic(n: &DiscreteCentralSubgroup) -> Result<()> {
    if n.is_economic() {
        Ok(())
    } else {
        Err(Error::InvalidLattice(
            "lattice is not in economic form".into(),
        ))
    }
}

fn int_to_tau(x: &BigInt) -> TauScalar {
    TauScalar::from(num_rational::BigRational::from_integer(x.clone()))
}

/// Verifies a relatedness certificate `(Δ̃, A)` between two economic lattices.
pub fn related_by_aut_check(
    group: &AlmostAbelian,
    n: &DiscreteCentralSubgroup,
    m: &DiscreteCentralSubgroup,
    delta_tilde: &Mat,
    a: &IntMatrix,
) -> Result<bool> {
    check_economic(n)?;
    check_economic(m)?;
    let blocks = kernel_blocks(group);
    let q = blocks.len();
    if delta_tilde.rows() != q || delta_tilde.cols() != q {
        return Err(Error::Shape(format!("Delta~ must be {q}x{q}")));
    }
    for i in 0..q {
        for j in 0..q {
            if !allowed_entry(&blocks, i, j) && !delta_tilde.get(i, j).is_zero() {
                return Err(Error::Shape(format!(
                    "Delta~ entry ({}, {}) maps a size-{} block into a size-{} block",
                    i + 1,
                    j + 1,
                    blocks[j].size,
                    blocks[i].size
                )));
            }
        }
    }
    let k = n.rank();
    if m.rank() != k {
        return Ok(false);
    }
    if a.rows() != k || a.cols() != k {
        return Err(Error::Shape(format!("A must be {k}x{k}")));
    }
    let (t1, s1) = (first_time(n), first_time(m));
    if t1 != s1 && t1 != -&s1 {
        return Ok(false);
    }
    if !a.is_unimodular() || delta_tilde.det().is_zero() {
        return Ok(false);
    }
    if !t1.is_zero() && (1..k).any(|j| !a.get(0, j).is_zero()) {
        return Ok(false);
    }
    let v: Vec<Vector> = n
        .generators
        .iter()
        .map(|g| significant_rows(group, &g.v))
        .collect();
    let u: Vec<Vector> = m
        .generators
        .iter()
        .map(|g| significant_rows(group, &g.v))
        .collect();
    let start = usize::from(!t1.is_zero());
    for (j, vj) in v.iter().enumerate().skip(start) {
        let lhs = delta_tilde.mul_vec(vj);
        let rhs = (0..k).fold(vzero(q), |acc, i| {
            vadd(&acc, &vscale(&int_to_tau(a.get(i, j)), &u[i]))
        });
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Lifts a passing certificate to an automorphism Φ with `Φ(N) = M`.
pub fn certificate_automorphism(
    group: &AlmostAbelian,
    n: &DiscreteCentralSubgroup,
    m: &DiscreteCentralSubgroup,
    delta_tilde: &Mat,
    a: &IntMatrix,
) -> Result<GenericAut> {
    if !related_by_aut_check(group, n, m, delta_tilde, a)? {
        return Err(Error::InvalidAutomorphism(
            "certificate does not verify".into(),
        ));
    }
    let d = group.dim();
    let blocks = kernel_blocks(group);
    let mut lift = Mat::identity(d);
    for b in &blocks {
        for r in b.range() {
            lift.set(r, r, TauScalar::zero());
        }
    }
    for (i, bi) in blocks.iter().enumerate() {
        for (j, bj) in blocks.iter().enumerate() {
            let c = delta_tilde.get(i, j);
            if c.is_zero() {
                continue;
            }
            for r in 0..bj.size {
                lift.set(bi.offset + r, bj.offset + r, c.clone());
            }
        }
    }
    let (t1, s1) = (first_time(n), first_time(m));
    // α·t₁ = s₁·A₁₁ from the t-row of the matrix identity.
    let forward = t1.is_zero() || (&s1 * &int_to_tau(a.get(0, 0))) == t1;
    let (alpha, delta) = if forward {
        (TauScalar::one(), lift)
    } else {
        let minus = -num_rational::BigRational::one();
        let sign = group
            .dilation_intertwiner(&minus)
            .ok_or_else(|| Error::InvalidAutomorphism("alpha = -1 is not a dilation".into()))?;
        (-TauScalar::one(), lift.mul(&sign))
    };
    let mut gamma = vzero(d);
    if !t1.is_zero() {
        let target = m
            .generators
            .iter()
            .enumerate()
            .fold(vzero(d), |acc, (i, g)| {
                vadd(&acc, &vscale(&int_to_tau(a.get(i, 0)), &g.v))
            });
        let moved = delta.mul_vec(&n.generators[0].v);
        gamma = vscale(
            &t1.inv().expect("nonzero"),
            &crate::linalg::vsub(&target, &moved),
        );
    }
    Ok(GenericAut::new(delta, gamma, alpha))
}

/// Outcome of the bounded search for a relatedness certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found {
        delta_tilde: Mat,
        a: IntMatrix,
    },
    /// Nothing within the bound; not a proof of non-relatedness.
    NotFound,
    /// `t₁ ≠ ±s₁` or different ranks: no automorphism relates the lattices.
    Impossible,
}

fn integer_matrices(
    k: usize,
    bound: i64,
    first_row_fixed: bool,
) -> impl Iterator<Item = IntMatrix> {
    let width = (2 * bound + 1) as u64;
    let free = if first_row_fixed { k * k - k } else { k * k };
    let count = width.pow(free as u32) * if first_row_fixed { 2 } else { 1 };
    (0..count).filter_map(move |mut code| {
        let mut rows = vec![vec![BigInt::zero(); k]; k];
        let start = if first_row_fixed {
            rows[0][0] = BigInt::from(if code % 2 == 0 { 1 } else { -1 });
            code /= 2;
            1
        } else {
            0
        };
        for row in rows.iter_mut().skip(start) {
            for x in row.iter_mut() {
                *x = BigInt::from((code % width) as i64 - bound);
                code /= width;
            }
        }
        let m = IntMatrix::from_rows(rows);
        m.is_unimodular().then_some(m)
    })
}

/// Brute force over `A` with entries in `[−bound, bound]`, solving linearly for Δ̃.
pub fn related_by_aut_search(
    group: &AlmostAbelian,
    n: &DiscreteCentralSubgroup,
    m: &DiscreteCentralSubgroup,
    bound: u32,
) -> Result<SearchOutcome> {
    check_economic(n)?;
    check_economic(m)?;
    let k = n.rank();
    let (t1, s1) = (first_time(n), first_time(m));
    if m.rank() != k || (t1 != s1 && t1 != -&s1) {
        return Ok(SearchOutcome::Impossible);
    }
    let blocks = kernel_blocks(group);
    let q = blocks.len();
    let unknowns: Vec<(usize, usize)> = (0..q)
        .flat_map(|i| (0..q).map(move |j| (i, j)))
        .filter(|&(i, j)| allowed_entry(&blocks, i, j))
        .collect();
    let v: Vec<Vector> = n
        .generators
        .iter()
        .map(|g| significant_rows(group, &g.v))
        .collect();
    let u: Vec<Vector> = m
        .generators
        .iter()
        .map(|g| significant_rows(group, &g.v))
        .collect();
    let start = usize::from(!t1.is_zero());
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
    for a in integer_matrices(k, i64::from(bound), !t1.is_zero()) {
        let mut eqs = Vec::new();
        let mut rhs = Vec::new();
        for (j, vj) in v.iter().enumerate().skip(start) {
            let target = (0..k).fold(vzero(q), |acc, i| {
                vadd(&acc, &vscale(&int_to_tau(a.get(i, j)), &u[i]))
            });
            for (r, want) in target.into_iter().enumerate() {
                eqs.push(
                    unknowns
                        .iter()
                        .map(|&(i, c)| {
                            if i == r {
                                vj[c].clone()
                            } else {
                                TauScalar::zero()
                            }
                        })
                        .collect::<Vector>(),
                );
                rhs.push(want);
            }
        }
        let (particular, kernel) = if eqs.is_empty() {
            (
                vzero(unknowns.len()),
                Mat::identity(unknowns.len()).to_rows(),
            )
        } else {
            let system = Mat::from_rows(eqs);
            let Some(x) = system.solve(&rhs) else {
                continue;
            };
            (x, system.nullspace())
        };
        let assemble = |x: &[TauScalar]| {
            let mut dt = Mat::zeros(q, q);
            for (&(i, j), val) in unknowns.iter().zip(x) {
                dt.set(i, j, val.clone());
            }
            dt
        };
        let mut candidates = vec![particular.clone()];
        for _ in 0..32 {
            let mut x = particular.clone();
            for kv in &kernel {
                let c = TauScalar::from_int(rng.gen_range(-3..=3));
                x = vadd(&x, &vscale(&c, kv));
            }
            candidates.push(x);
        }
        for x in candidates {
            let dt = assemble(&x);
            if !dt.det().is_zero() && related_by_aut_check(group, n, m, &dt, &a)? {
                return Ok(SearchOutcome::Found { delta_tilde: dt, a });
            }
        }
    }
    Ok(SearchOutcome::NotFound)
}

/// `G/N` together with an automorphism carrying N into `ℝ^{d−d₀} × T_ℵ`, and the faithful
/// representation of the image quotient.
#[derive(Clone, Debug)]
pub struct FaithfulQuotient {
    pub phi: GenericAut,
    pub lattice: DiscreteCentralSubgroup,
    pub rep: QuotientRep,
}

impl FaithfulQuotient {
    /// The representation of `g·N`, i.e. the quotient representation of `Φ(g)·Φ(N)`.
    pub fn rep(&self, group: &AlmostAbelian, g: &GroupElement) -> Result<crate::reps::RepMatrix> {
        self.rep.rep(&self.phi.apply(group, g)?)
    }

    pub fn rep_numeric(
        &self,
        group: &AlmostAbelian,
        g: &crate::jordan::NumElement,
    ) -> nalgebra::DMatrix<f64> {
        self.rep.rep_numeric(&self.phi.apply_numeric(group, g))
    }
}

#[derive(Clone, Debug)]
pub struct FaithfulVerdict {
    pub faithful: bool,
    pub builder: Option<FaithfulQuotient>,
}

/// `G/N` has a faithful matrix representation iff `ℝ⟨log N⟩ ∩ [L, L] = 0`.
pub fn has_faithful_quotient_rep(
    group: &AlmostAbelian,
    n: &DiscreteCentralSubgroup,
) -> Result<FaithfulVerdict> {
    let d = group.dim();
    let derived: Vec<Vector> = group
        .derived_algebra_basis()
        .into_iter()
        .map(|mut b| {
            b.push(TauScalar::zero());
            b
        })
        .collect();
    let derived = Subspace::span(d + 1, &derived);
    let span = n.span();
    if !span.intersect(&derived).is_zero() {
        return Ok(FaithfulVerdict {
            faithful: false,
            builder: None,
        });
    }
    let (phi, normal) = normalize_subgroup(group, n)?;
    let shear = abelian_shear(group, &normal)?;
    let moved = normal.with_generators(
        normal
            .generators
            .iter()
            .map(|g| shear.apply(group, g))
            .collect::<Result<Vec<_>>>()?,
    );
    let phi =
        crate::aut::AutElement::Generic(shear).compose(&crate::aut::AutElement::Generic(phi))?;
    let crate::aut::AutElement::Generic(phi) = phi else {
        unreachable!("generic composition")
    };
    let builder = QuotientRep::new(group, &moved)
        .ok()
        .map(|rep| FaithfulQuotient {
            phi,
            lattice: moved,
            rep,
        });
    Ok(FaithfulVerdict {
        faithful: true,
        builder,
    })
}

/// `Δ = id + L` with `L` mapping the `(0,1)` coordinates into the tops of larger nilpotent
/// blocks, chosen so that every time-free generator lands in the `(0,1)` coordinates.
fn abelian_shear(group: &AlmostAbelian, n: &DiscreteCentralSubgroup) -> Result<GenericAut> {
    let d = group.dim();
    let abelian: Vec<usize> = group
        .blocks()
        .iter()
        .filter(|b| b.is_nilpotent() && b.size == 1)
        .map(|b| b.offset)
        .collect();
    let inner: Vec<usize> = group
        .blocks()
        .iter()
        .filter(|b| b.is_nilpotent() && b.size > 1)
        .map(|b| b.offset)
        .collect();
    let identity = GenericAut::identity(d);
    let free: Vec<&GroupElement> = n.generators.iter().filter(|g| g.t.is_zero()).collect();
    if inner.is_empty() || free.is_empty() {
        return Ok(identity);
    }
    let proj = |v: &Vector, idx: &[usize]| idx.iter().map(|&i| v[i].clone()).collect::<Vector>();
    let mut basis: Vec<Vector> = free.iter().map(|g| proj(&g.v, &abelian)).collect();
    let mut targets: Vec<Vector> = free
        .iter()
        .map(|g| proj(&g.v, &inner).iter().map(|x| -x).collect())
        .collect();
    for i in 0..abelian.len() {
        if basis.len() == abelian.len() {
            break;
        }
        let mut e = vzero(abelian.len());
        e[i] = TauScalar::one();
        let mut trial = basis.clone();
        trial.push(e.clone());
        if Mat::from_rows(trial).rank() == basis.len() + 1 {
            basis.push(e);
            targets.push(vzero(inner.len()));
        }
    }
    let b = Mat::from_cols(abelian.len(), &basis);
    let b_inv = b
        .inverse()
        .ok_or_else(|| Error::UnsupportedLattice("generators meet [L,L]".into()))?;
    let l = Mat::from_cols(inner.len(), &targets).mul(&b_inv);
    let mut delta = Mat::identity(d);
    for (r, &row) in inner.iter().enumerate() {
        for (c, &col) in abelian.iter().enumerate() {
            delta.set(row, col, l.get(r, c).clone());
        }
    }
    Ok(GenericAut::new(delta, vzero(d), TauScalar::one()))
}
