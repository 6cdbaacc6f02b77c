//! Connected subgroups of G and of its quotients `G/N`.

use nalgebra::{DMatrix, DVector};

use crate::aut::{image_lattice, GenericAut};
use crate::error::{Error, Result};
use crate::jordan::{AlmostAbelian, GroupElement, NumElement};
use crate::lattice::DiscreteCentralSubgroup;
use crate::linalg::{integer_kernel, vscale, vsub, vzero, IntMatrix, Mat, Subspace, Vector};
use crate::scalar::TauScalar;

/// A `J`-invariant subspace `W ⊂ ℝ^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdInvariantSubspace {
    space: Subspace,
}

/// Outcome of [`validate_subspace`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubspaceReport {
    /// `W ⊂ ker J`, so that the graph-type subalgebra over W is Abelian.
    pub central: bool,
}

pub fn validate_subspace(group: &AlmostAbelian, basis: &[Vector]) -> Result<SubspaceReport> {
    let d = group.dim();
    for b in basis {
        group.check_dim(b)?;
    }
    let w = Subspace::span(d, basis);
    if let Some(bad) = w
        .basis()
        .iter()
        .find(|b| !w.contains(&group.j().mul_vec(b)))
    {
        let img: Vec<String> = group
            .j()
            .mul_vec(bad)
            .iter()
            .map(ToString::to_string)
            .collect();
        return Err(Error::InvalidSubspace(format!(
            "J maps a basis vector to ({}) outside W",
            img.join(", ")
        )));
    }
    Ok(SubspaceReport {
        central: w.is_subspace_of(&group.kernel()),
    })
}

impl AdInvariantSubspace {
    pub fn new(group: &AlmostAbelian, basis: &[Vector]) -> Result<Self> {
        validate_subspace(group, basis)?;
        Ok(Self {
            space: Subspace::span(group.dim(), basis),
        })
    }

    pub fn zero(group: &AlmostAbelian) -> Self {
        Self {
            space: Subspace::zero(group.dim()),
        }
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn contains(&self, v: &[TauScalar]) -> bool {
        self.space.contains(v)
    }
}

/// A connected subgroup of the simply connected group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConnectedSubgroup {
    /// `exp(W) = {[w, 0] : w ∈ W}`.
    Abelian { w: AdInvariantSubspace },
    /// `{[w + (e^{tJ} − id)/J·v₀, t] : w ∈ W, t ∈ ℝ}`.
    Graph { w: AdInvariantSubspace, v0: Vector },
}

impl ConnectedSubgroup {
    pub fn abelian(group: &AlmostAbelian, basis: &[Vector]) -> Result<Self> {
        Ok(Self::Abelian {
            w: AdInvariantSubspace::new(group, basis)?,
        })
    }

    pub fn graph(group: &AlmostAbelian, basis: &[Vector], v0: Vector) -> Result<Self> {
        group.check_dim(&v0)?;
        Ok(Self::Graph {
            w: AdInvariantSubspace::new(group, basis)?,
            v0,
        })
    }

    pub fn subspace(&self) -> &AdInvariantSubspace {
        match self {
            Self::Abelian { w } | Self::Graph { w, .. } => w,
        }
    }

    /// The Lie algebra, as a subspace of ℝ^{d+1}.
    pub fn lie_algebra(&self) -> Subspace {
        let w = self.subspace().space();
        let n = w.ambient() + 1;
        let mut vectors: Vec<Vector> = w
            .basis()
            .iter()
            .map(|b| {
                let mut c = b.clone();
                c.push(TauScalar::zero());
                c
            })
            .collect();
        if let Self::Graph { v0, .. } = self {
            let mut c = v0.clone();
            c.push(TauScalar::one());
            vectors.push(c);
        }
        Subspace::span(n, &vectors)
    }

    /// The element of H with parameters `(w, t)`; `t` must vanish for the Abelian case.
    pub fn element(
        &self,
        group: &AlmostAbelian,
        w: &[TauScalar],
        t: &TauScalar,
    ) -> Result<GroupElement> {
        match self {
            Self::Abelian { .. } => Ok(GroupElement::new(w.to_vec(), TauScalar::zero())),
            Self::Graph { v0, .. } => {
                let shift = vscale(t, &group.phi_apply(t, v0)?);
                Ok(GroupElement::new(crate::linalg::vadd(w, &shift), t.clone()))
            }
        }
    }

    /// Exact membership.
    pub fn contains(&self, group: &AlmostAbelian, g: &GroupElement) -> Result<bool> {
        group.check_dim(&g.v)?;
        match self {
            Self::Abelian { w } => Ok(g.t.is_zero() && w.contains(&g.v)),
            Self::Graph { w, v0 } => {
                let shift = vscale(&g.t, &group.phi_apply(&g.t, v0)?);
                Ok(w.contains(&vsub(&g.v, &shift)))
            }
        }
    }

    /// Membership up to `tol` in the sup norm of the residual.
    pub fn contains_numeric(&self, group: &AlmostAbelian, g: &NumElement, tol: f64) -> bool {
        let d = group.dim();
        let (residual, t_ok) = match self {
            Self::Abelian { .. } => (g.v.clone(), g.t.abs() <= tol),
            Self::Graph { v0, .. } => {
                let v0 = DVector::from_iterator(d, v0.iter().map(TauScalar::to_f64));
                (&g.v - group.phi_numeric(g.t) * v0 * g.t, true)
            }
        };
        t_ok && distance_to_span(self.subspace().space(), &residual) <= tol
    }
}

fn distance_to_span(w: &Subspace, x: &DVector<f64>) -> f64 {
    if w.is_zero() {
        return x.amax();
    }
    let b = DMatrix::from_fn(w.ambient(), w.dim(), |i, j| w.basis()[j][i].to_f64());
    let qr = b.qr();
    let q = qr.q();
    (x - &q * (q.transpose() * x)).amax()
}

/// A connected subgroup `H/N` of `G/N`, described by the same Lie algebra data as its lift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSubgroup {
    pub subgroup: ConnectedSubgroup,
    pub lattice: DiscreteCentralSubgroup,
}

/// The unique connected `H ⊂ G` projecting onto `H_N`.
pub fn lift_subgroup(h: &QuotientSubgroup) -> ConnectedSubgroup {
    h.subgroup.clone()
}

/// `N = (N ∩ H) × B`.
#[derive(Clone, Debug)]
pub struct LatticeSplit {
    pub intersection: DiscreteCentralSubgroup,
    pub complement: DiscreteCentralSubgroup,
    /// Unimodular `U` with `n·U = (complement | intersection)`.
    pub transform: IntMatrix,
}

/// The linear map `(v; t) ↦ ...` whose kernel, restricted to `ker J × T_ℵ`, is `H`.
fn membership_map(group: &AlmostAbelian, h: &ConnectedSubgroup) -> Result<Mat> {
    let d = group.dim();
    let w = h.subspace().space();
    // rows spanning the annihilator of W
    let annihilator = if w.is_zero() {
        Mat::identity(d).to_rows()
    } else {
        Mat::from_rows(w.basis().to_vec()).nullspace()
    };
    let rows = match h {
        ConnectedSubgroup::Abelian { .. } => {
            let mut rows: Vec<Vector> = annihilator
                .into_iter()
                .map(|mut a| {
                    a.push(TauScalar::zero());
                    a
                })
                .collect();
            let mut t_row = vzero(d + 1);
            t_row[d] = TauScalar::one();
            rows.push(t_row);
            rows
        }
        ConnectedSubgroup::Graph { v0, .. } => {
            // on T_ℵ the shift is t·[0 ⊕ id]v₀, linear in t
            let kernel_part = match group.torsion().t0 {
                Some(t0) => group.phi_apply(&t0, v0)?,
                None => vzero(d),
            };
            annihilator
                .into_iter()
                .map(|a| {
                    let dot: TauScalar = a.iter().zip(&kernel_part).map(|(x, y)| x * y).sum();
                    let mut row = a;
                    row.push(-dot);
                    row
                })
                .collect()
        }
    };
    if rows.is_empty() {
        return Ok(Mat::zeros(0, d + 1));
    }
    Ok(Mat::from_rows(rows))
}

/// Splits N along H. `N ∩ H` is pure in N, so the complement B exists.
pub fn split_lattice_through(
    group: &AlmostAbelian,
    h: &ConnectedSubgroup,
    n: &DiscreteCentralSubgroup,
) -> Result<LatticeSplit> {
    let k = n.rank();
    let q = membership_map(group, h)?;
    let coords = if k == 0 {
        Mat::zeros(q.rows(), 0)
    } else {
        q.mul(&n.generator_matrix())
    };
    let (u, rank) = integer_kernel(&coords);
    let gens = n.combine(&u);
    let complement = DiscreteCentralSubgroup::new(group, gens[..rank].to_vec())?;
    let intersection = DiscreteCentralSubgroup::new(group, gens[rank..].to_vec())?;
    Ok(LatticeSplit {
        intersection,
        complement,
        transform: u,
    })
}

/// `b̄ar X = exp ℝ⟨log X⟩`, returned as the subspace `ℝ⟨log X⟩ ⊂ ker J ⊕ ℝ`.
pub fn bbar(group: &AlmostAbelian, x: &[GroupElement]) -> Result<Subspace> {
    let logs = x
        .iter()
        .map(|g| {
            let a = group.central_log(g)?;
            let mut c = a.v;
            c.push(a.t);
            Ok(c)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Subspace::span(group.dim() + 1, &logs))
}

/// Both sides of the closedness criterion, in the frame where `v₀ = 0`.
#[derive(Clone, Debug)]
pub struct ClosednessReport {
    pub closed: bool,
    /// `b̄ar(H ∩ N)`.
    pub lattice_side: Subspace,
    /// `H ∩ b̄ar(N)`.
    pub subgroup_side: Subspace,
}

/// Decides whether `H/N ⊂ G/N` is closed, via `b̄ar(H ∩ N) = H ∩ b̄ar(N)`.
///
/// For the graph case the automorphism `[v, t] ↦ [v + (e^{tJ} − id)/J·v₀, t]` maps
/// `exp(W) ⋊ ℝ` onto H; the criterion is evaluated after pulling N back along it, where
/// `H ∩ b̄ar(N)` is a linear subspace.
pub fn is_quotient_subgroup_closed(
    group: &AlmostAbelian,
    h: &ConnectedSubgroup,
    n: &DiscreteCentralSubgroup,
) -> Result<ClosednessReport> {
    let d = group.dim();
    let (frame, lattice) = match h {
        ConnectedSubgroup::Abelian { .. } => (h.clone(), n.clone()),
        ConnectedSubgroup::Graph { w, v0 } => {
            let pull_back = GenericAut::new(
                Mat::identity(d),
                v0.iter().map(|x| -x).collect(),
                TauScalar::one(),
            );
            let straight = ConnectedSubgroup::Graph {
                w: w.clone(),
                v0: vzero(d),
            };
            (straight, image_lattice(&pull_back, group, n)?)
        }
    };
    let split = split_lattice_through(group, &frame, &lattice)?;
    let lattice_side = bbar(group, split.intersection.generators())?;
    let subgroup_side = frame.lie_algebra().intersect(&lattice.span());
    Ok(ClosednessReport {
        closed: lattice_side == subgroup_side,
        lattice_side,
        subgroup_side,
    })
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use proptest::prelude::*;

    use super::*;
    use crate::fixtures;
    use crate::lattice::lattice_equal;
    use crate::testutil::{s, small_rational, v};

    fn gen(xs: &[&str], t: &str) -> GroupElement {
        GroupElement::new(v(xs), s(t))
    }

    fn lattice(group: &AlmostAbelian, gens: Vec<GroupElement>) -> DiscreteCentralSubgroup {
        DiscreteCentralSubgroup::new(group, gens).unwrap()
    }

    fn torus_lattice() -> (AlmostAbelian, DiscreteCentralSubgroup) {
        let g = fixtures::e2_r2();
        let n = lattice(
            &g,
            vec![
                gen(&["0", "0", "1", "0"], "0"),
                gen(&["0", "0", "0", "1"], "0"),
            ],
        );
        (g, n)
    }

    /// Nonzero integer points `(a, b)` in a box with `b = a·slope`.
    fn lattice_points_on_line(slope: &TauScalar, radius: i64) -> usize {
        let mut count = 0;
        for a in -radius..=radius {
            for b in -radius..=radius {
                if (a, b) != (0, 0) && &TauScalar::from_int(a) * slope == TauScalar::from_int(b) {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn subspace_validation_examples() {
        let heis = fixtures::heis();
        let report = validate_subspace(&heis, &heis.kernel_basis()).unwrap();
        assert!(report.central);
        assert!(validate_subspace(&heis, &[v(&["1", "0"])]).is_ok());
        let err = validate_subspace(&heis, &[v(&["0", "1"])]).unwrap_err();
        assert!(matches!(err, Error::InvalidSubspace(_)));
        let e2 = fixtures::e2_r2();
        let rot =
            validate_subspace(&e2, &[v(&["1", "0", "0", "0"]), v(&["0", "1", "0", "0"])]).unwrap();
        assert!(!rot.central);
        assert!(validate_subspace(&e2, &[v(&["1", "0", "0", "0"])]).is_err());
    }

    #[test]
    fn membership_examples() {
        let heis = fixtures::heis();
        let h = ConnectedSubgroup::graph(&heis, &[v(&["1", "0"])], v(&["0", "0"])).unwrap();
        assert!(h.contains(&heis, &gen(&["5", "0"], "3")).unwrap());
        assert!(!h.contains(&heis, &gen(&["5", "1"], "3")).unwrap());
        assert!(h.contains(&heis, &GroupElement::identity(2)).unwrap());
        let e2 = fixtures::e2_r2();
        let a = ConnectedSubgroup::abelian(&e2, &[v(&["0", "0", "1", "1"])]).unwrap();
        assert!(a.contains(&e2, &gen(&["0", "0", "2", "2"], "0")).unwrap());
        assert!(!a.contains(&e2, &gen(&["0", "0", "2", "2"], "tau")).unwrap());
        assert!(a.contains(&e2, &GroupElement::identity(4)).unwrap());
        // graph over the rotation plane with a twist
        let twisted = ConnectedSubgroup::graph(&e2, &[], v(&["1", "0", "0", "0"])).unwrap();
        assert!(twisted
            .contains(&e2, &gen(&["0", "0", "0", "0"], "tau"))
            .unwrap());
        assert!(!twisted
            .contains(&e2, &gen(&["1", "0", "0", "0"], "tau"))
            .unwrap());
        assert!(twisted.contains_numeric(
            &e2,
            &NumElement::new(vec![0.0, 0.0, 0.0, 0.0], std::f64::consts::TAU),
            1e-9
        ));
        let g = NumElement::new(vec![(1.0f64).sin(), 1.0 - (1.0f64).cos(), 0.0, 0.0], 1.0);
        assert!(twisted.contains_numeric(&e2, &g, 1e-9));
        assert!(!twisted.contains_numeric(
            &e2,
            &NumElement::new(vec![0.5, 0.0, 0.0, 0.0], 1.0),
            1e-9
        ));
    }

    #[test]
    fn lift_keeps_the_algebra() {
        let (g, n) = torus_lattice();
        let h = ConnectedSubgroup::abelian(&g, &[v(&["0", "0", "1", "1"])]).unwrap();
        let q = QuotientSubgroup {
            subgroup: h.clone(),
            lattice: n,
        };
        assert_eq!(lift_subgroup(&q), h);
        let full =
            ConnectedSubgroup::graph(&g, &Mat::identity(4).to_rows(), v(&["0", "0", "0", "0"]))
                .unwrap();
        assert_eq!(full.lie_algebra(), Subspace::full(5));
    }

    #[test]
    fn split_examples() {
        let (g, n) = torus_lattice();
        let h = ConnectedSubgroup::abelian(&g, &[v(&["0", "0", "1", "0"])]).unwrap();
        let split = split_lattice_through(&g, &h, &n).unwrap();
        assert!(lattice_equal(
            &split.intersection,
            &lattice(&g, vec![gen(&["0", "0", "1", "0"], "0")])
        ));
        assert_eq!(split.complement.rank(), 1);
        assert!(split.transform.is_unimodular());
        let mut all = split.complement.generators().to_vec();
        all.extend(split.intersection.generators().iter().cloned());
        assert!(lattice_equal(&n, &lattice(&g, all)));

        let big =
            ConnectedSubgroup::abelian(&g, &[v(&["0", "0", "1", "0"]), v(&["0", "0", "0", "1"])])
                .unwrap();
        let split = split_lattice_through(&g, &big, &n).unwrap();
        assert_eq!((split.intersection.rank(), split.complement.rank()), (2, 0));

        let rot =
            ConnectedSubgroup::abelian(&g, &[v(&["1", "0", "0", "0"]), v(&["0", "1", "0", "0"])])
                .unwrap();
        let split = split_lattice_through(&g, &rot, &n).unwrap();
        assert_eq!((split.intersection.rank(), split.complement.rank()), (0, 2));
    }

    #[test]
    fn split_with_time_and_twist() {
        let g = fixtures::e2_r2();
        let n = lattice(
            &g,
            vec![
                gen(&["0", "0", "1", "0"], "tau"),
                gen(&["0", "0", "0", "1"], "0"),
            ],
        );
        // {[t·e₃ + w, t]} contains [e₃, τ]·... only after scaling: t·e₃ at t = τ is τe₃.
        let h = ConnectedSubgroup::graph(&g, &[], v(&["0", "0", "1/tau", "0"])).unwrap();
        let split = split_lattice_through(&g, &h, &n).unwrap();
        assert_eq!(split.intersection.rank(), 1);
        assert!(h.contains(&g, &split.intersection.generators()[0]).unwrap());
    }

    #[test]
    fn bbar_examples() {
        let g = fixtures::e2_r2();
        let b = bbar(&g, &[gen(&["0", "0", "1", "0"], "0")]).unwrap();
        assert_eq!(b, Subspace::span(5, &[v(&["0", "0", "1", "0", "0"])]));
        assert!(bbar(&g, &[]).unwrap().is_zero());
        let b = bbar(
            &g,
            &[
                gen(&["0", "0", "1", "0"], "0"),
                gen(&["0", "0", "1", "1"], "0"),
            ],
        )
        .unwrap();
        assert_eq!(b.dim(), 2);
        assert!(b.contains(&v(&["0", "0", "0", "1", "0"])));
        assert!(matches!(
            bbar(&g, &[gen(&["1", "0", "0", "0"], "0")]),
            Err(Error::NotCentral(_))
        ));
    }

    #[test]
    fn closedness_examples() {
        let (g, n) = torus_lattice();
        let rational = ConnectedSubgroup::abelian(&g, &[v(&["0", "0", "1", "1"])]).unwrap();
        let report = is_quotient_subgroup_closed(&g, &rational, &n).unwrap();
        assert!(report.closed);
        assert_eq!(
            report.lattice_side,
            Subspace::span(5, &[v(&["0", "0", "1", "1", "0"])])
        );
        assert_eq!(report.lattice_side, report.subgroup_side);

        let irrational = ConnectedSubgroup::abelian(&g, &[v(&["0", "0", "1", "tau"])]).unwrap();
        let report = is_quotient_subgroup_closed(&g, &irrational, &n).unwrap();
        assert!(!report.closed);
        assert!(report.lattice_side.is_zero());
        assert_eq!(report.subgroup_side.dim(), 1);

        let trivial = DiscreteCentralSubgroup::trivial(&g);
        assert!(
            is_quotient_subgroup_closed(&g, &irrational, &trivial)
                .unwrap()
                .closed
        );
    }

    #[test]
    fn closedness_of_time_lines() {
        let g = fixtures::e2_r2();
        let line = ConnectedSubgroup::graph(&g, &[], v(&["0", "0", "0", "0"])).unwrap();
        let n = lattice(
            &g,
            vec![
                gen(&["0", "0", "0", "0"], "tau"),
                gen(&["0", "0", "1", "0"], "0"),
            ],
        );
        assert!(is_quotient_subgroup_closed(&g, &line, &n).unwrap().closed);
        let dense = lattice(
            &g,
            vec![
                gen(&["0", "0", "1", "0"], "tau"),
                gen(&["0", "0", "tau", "0"], "0"),
            ],
        );
        assert!(
            !is_quotient_subgroup_closed(&g, &line, &dense)
                .unwrap()
                .closed
        );
    }

    #[test]
    fn twisted_circle_is_closed() {
        // H = {[(e^{tJ} − id)/J·e₁, t]} contains [0, τ], so H/N is a circle.
        let g = fixtures::e2();
        let h = ConnectedSubgroup::graph(&g, &[], v(&["1", "0"])).unwrap();
        let n = lattice(&g, vec![gen(&["0", "0"], "tau")]);
        assert!(h.contains(&g, &n.generators()[0]).unwrap());
        let report = is_quotient_subgroup_closed(&g, &h, &n).unwrap();
        assert!(report.closed);
        assert_eq!(report.lattice_side.dim(), 1);
    }

    #[test]
    fn density_oracle_agrees_on_torus_lines() {
        let (g, n) = torus_lattice();
        let slopes = [
            "0",
            "1",
            "-2",
            "1/2",
            "3/4",
            "-5/3",
            "tau",
            "1+tau",
            "1/tau",
            "2*tau/3",
            "tau/(1+tau)",
        ];
        for slope in slopes {
            let sl = s(slope);
            let h = ConnectedSubgroup::abelian(&g, &[vec![s("0"), s("0"), s("1"), sl.clone()]])
                .unwrap();
            let closed = is_quotient_subgroup_closed(&g, &h, &n).unwrap().closed;
            assert_eq!(closed, lattice_points_on_line(&sl, 12) > 0, "slope {slope}");
            assert_eq!(closed, sl.is_rational(), "slope {slope}");
        }
    }

    fn member(
        group: &AlmostAbelian,
        h: &ConnectedSubgroup,
        w: &[TauScalar],
        t: &TauScalar,
    ) -> GroupElement {
        let w = h
            .subspace()
            .space()
            .basis()
            .iter()
            .zip(w)
            .fold(vzero(group.dim()), |acc, (b, c)| {
                crate::linalg::vadd(&acc, &vscale(c, b))
            });
        h.element(group, &w, t).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn membership_is_a_subgroup_predicate(
            v0 in crate::testutil::vector(4),
            a in prop::collection::vec(small_rational(), 2),
            b in prop::collection::vec(small_rational(), 2),
            t in small_rational(),
            u in small_rational(),
        ) {
            let group = fixtures::heis_rn(2);
            let h = ConnectedSubgroup::graph(&group, &[v(&["1", "0", "0", "0"]), v(&["0", "0", "1", "-1"])], v0).unwrap();
            let g1 = member(&group, &h, &a, &t);
            let g2 = member(&group, &h, &b, &u);
            prop_assert!(h.contains(&group, &g1).unwrap());
            prop_assert!(h.contains(&group, &group.group_mul(&g1, &g2).unwrap()).unwrap());
            prop_assert!(h.contains(&group, &group.group_inverse(&g1).unwrap()).unwrap());
            prop_assert!(h.contains_numeric(&group, &g1.to_numeric(), 1e-9));
        }

        #[test]
        fn split_is_pure_and_complementary(
            rows in prop::collection::vec((-3i64..=3, -3i64..=3, -2i64..=2), 1..=3),
            dir in (-2i64..=2, -2i64..=2),
            q in 1i64..=4,
            coeffs in prop::collection::vec(-3i64..=3, 3),
        ) {
            let group = fixtures::e2_r2();
            let gens: Vec<GroupElement> = rows
                .iter()
                .map(|&(a, b, k)| GroupElement::new(
                    vec![s("0"), s("0"), TauScalar::from_int(a), TauScalar::from_int(b)],
                    TauScalar::tau().scale(&crate::scalar::int(k)),
                ))
                .collect();
            let Ok(n) = DiscreteCentralSubgroup::new(&group, gens) else { return Ok(()) };
            prop_assume!(dir != (0, 0));
            let h = ConnectedSubgroup::abelian(&group, &[vec![s("0"), s("0"), TauScalar::from_int(dir.0), TauScalar::from_int(dir.1)]]).unwrap();
            let split = split_lattice_through(&group, &h, &n).unwrap();
            prop_assert!(split.transform.is_unimodular());
            let mut all = split.complement.generators().to_vec();
            all.extend(split.intersection.generators().iter().cloned());
            prop_assert!(lattice_equal(&n, &DiscreteCentralSubgroup::new(&group, all).unwrap()));
            for g in split.intersection.generators() {
                prop_assert!(h.contains(&group, g).unwrap());
            }
            // purity: g ∈ N with q·g ∈ H forces g ∈ N ∩ H
            let k = n.rank();
            let c = IntMatrix::from_rows((0..k).map(|i| vec![BigInt::from(coeffs[i])]).collect());
            let g = n.combine(&c)[0].clone();
            let multiple = GroupElement::new(vscale(&TauScalar::from_int(q), &g.v), &TauScalar::from_int(q) * &g.t);
            if h.contains(&group, &multiple).unwrap() {
                prop_assert!(split.intersection.contains(&g));
            }
            // the containment b̄ar(H ∩ N) ⊂ H ∩ b̄ar(N)
            let report = is_quotient_subgroup_closed(&group, &h, &n).unwrap();
            prop_assert!(report.lattice_side.is_subspace_of(&report.subgroup_side));
        }
    }
}
