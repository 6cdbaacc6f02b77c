//! Floating-point and brute-force oracles.
//!
//! Nothing here calls the closed-form exponentials of [`crate::exp`]: `dense_expm` works on raw
//! matrices, so agreement between the two paths is evidence for both.

use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::jordan::{AlgebraElement, AlmostAbelian, NumElement};

pub type NumericMatrix = DMatrix<f64>;
type CMatrix = DMatrix<Complex64>;

pub const DEFAULT_SEED: u64 = 0x5EED;

/// Tolerances and sampling parameters for every probe.
#[derive(Clone, Debug, PartialEq)]
pub struct OracleConfig {
    pub seed: u64,
    pub exp_tol: f64,
    pub image_tol: f64,
    pub domain_tol: f64,
    pub hypothesis_tol: f64,
    pub antihermitian_tol: f64,
    /// Samples draw coordinates uniformly from `[-radius, radius]`.
    pub radius: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            exp_tol: 1e-9,
            image_tol: 1e-6,
            domain_tol: 1e-4,
            hypothesis_tol: 1e-10,
            antihermitian_tol: 1e-8,
            radius: 3.0,
        }
    }
}

impl OracleConfig {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// One line of a report: `PASS|FAIL <name> max_dev=<float>`.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub max_dev: f64,
    pub checked: usize,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed: true,
            max_dev: 0.0,
            checked: 0,
        }
    }

    fn record(&mut self, dev: f64, ok: bool) {
        self.checked += 1;
        self.max_dev = self.max_dev.max(dev);
        self.passed &= ok && dev.is_finite();
    }

    /// Associative merge of two runs of the same check.
    pub fn merge(mut self, other: &Self) -> Self {
        self.passed &= other.passed;
        self.max_dev = self.max_dev.max(other.max_dev);
        self.checked += other.checked;
        self
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} max_dev={:e}", self.name, self.max_dev)
    }
}

const PADE13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];
const THETA13: f64 = 5.371920351148152;

fn norm1(m: &NumericMatrix) -> f64 {
    m.column_iter()
        .map(|c| c.iter().map(|x| x.abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Matrix exponential by scaling and squaring around a degree-13 Padé approximant.
pub fn dense_expm(m: &NumericMatrix) -> NumericMatrix {
    assert!(m.is_square(), "dense_expm needs a square matrix");
    let n = m.nrows();
    let id = NumericMatrix::identity(n, n);
    let norm = norm1(m);
    let squarings = if norm > THETA13 {
        (norm / THETA13).log2().ceil() as i32
    } else {
        0
    };
    let a = m * 0.5f64.powi(squarings);
    let b = &PADE13;
    let a2 = &a * &a;
    let a4 = &a2 * &a2;
    let a6 = &a4 * &a2;
    let u_inner = &a6 * (&a6 * b[13] + &a4 * b[11] + &a2 * b[9])
        + &a6 * b[7]
        + &a4 * b[5]
        + &a2 * b[3]
        + &id * b[1];
    let u = &a * u_inner;
    let v = &a6 * (&a6 * b[12] + &a4 * b[10] + &a2 * b[8])
        + &a6 * b[6]
        + &a4 * b[4]
        + &a2 * b[2]
        + &id * b[0];
    let mut r = (&v - &u)
        .lu()
        .solve(&(&v + &u))
        .expect("Padé denominator is invertible after scaling");
    for _ in 0..squarings {
        r = &r * &r;
    }
    r
}

fn max_abs(m: &NumericMatrix) -> f64 {
    m.iter().fold(0.0, |acc, x| acc.max(x.abs()))
}

/// `[[0, 0], [v, tJ]]` from floating data.
pub fn algebra_matrix_numeric(group: &AlmostAbelian, x: &NumElement) -> NumericMatrix {
    let d = group.dim();
    let mut m = NumericMatrix::zeros(d + 1, d + 1);
    m.view_mut((1, 0), (d, 1)).copy_from(&x.v);
    m.view_mut((1, 1), (d, d))
        .copy_from(&(group.j().to_f64() * x.t));
    m
}

fn random_element(group: &AlmostAbelian, rng: &mut impl Rng, radius: f64) -> NumElement {
    let v = (0..group.dim())
        .map(|_| rng.gen_range(-radius..=radius))
        .collect();
    NumElement::new(v, rng.gen_range(-radius..=radius))
}

/// Compares `exp` of the algebra matrix with the G-matrix of the closed-form exponential.
pub fn exp_crosscheck(group: &AlmostAbelian, samples: usize, config: &OracleConfig) -> CheckReport {
    let mut rng = config.rng();
    let mut report = CheckReport::new(format!("expcheck[{}]", group.aleph()));
    for _ in 0..samples {
        let x = random_element(group, &mut rng, config.radius);
        let oracle = dense_expm(&algebra_matrix_numeric(group, &x));
        let closed = group.group_rep_g_numeric(&group.exp_map_numeric(&x));
        let dev = max_abs(&(oracle - closed));
        report.record(dev, dev < config.exp_tol);
    }
    report
}

/// Outcome of [`injectivity_probe`].
#[derive(Clone, Debug, PartialEq)]
pub struct InjectivityReport {
    pub exponential: bool,
    /// The explicit pair with equal exponentials when the group is not exponential.
    pub collision: Option<(AlgebraElement, AlgebraElement)>,
    /// For a collision pair: whether the exact exponentials agree, when both are exact.
    pub exact_collision: Option<bool>,
    pub check: CheckReport,
}

/// Searches for collisions of `exp`. Exponential groups are probed with random points, each
/// paired with a second point of the same time coordinate (the only way two exponentials can
/// meet); otherwise the witness-block pair at `t = τ/b` is evaluated.
pub fn injectivity_probe(
    group: &AlmostAbelian,
    samples: usize,
    config: &OracleConfig,
) -> InjectivityReport {
    let verdict = group.is_exponential();
    let mut check = CheckReport::new(format!("inject[{}]", group.aleph()));
    if !verdict.exponential {
        let (x, y) = group
            .collision_pair()
            .expect("non-exponential data has a witness block");
        let (xn, yn) = (x.to_numeric(), y.to_numeric());
        let image = group
            .exp_map_numeric(&xn)
            .distance(&group.exp_map_numeric(&yn));
        let domain = xn.distance(&yn);
        check.record(
            image,
            image < config.image_tol && domain > config.domain_tol,
        );
        let exact_collision = match (group.exp_map(&x), group.exp_map(&y)) {
            (Ok(a), Ok(b)) => Some(a == b),
            _ => None,
        };
        if exact_collision == Some(false) {
            check.passed = false;
        }
        return InjectivityReport {
            exponential: false,
            collision: Some((x, y)),
            exact_collision,
            check,
        };
    }
    let mut rng = config.rng();
    let points: Vec<NumElement> = (0..samples)
        .map(|_| random_element(group, &mut rng, config.radius))
        .collect();
    let mut paired = Vec::with_capacity(samples);
    for x in &points {
        let mut y = random_element(group, &mut rng, config.radius);
        y.t = x.t;
        paired.push(y);
    }
    let images: Vec<NumElement> = points
        .iter()
        .chain(&paired)
        .map(|x| group.exp_map_numeric(x))
        .collect();
    let domain: Vec<&NumElement> = points.iter().chain(&paired).collect();
    for i in 0..domain.len() {
        for j in i + 1..domain.len() {
            if images[i].distance(&images[j]) < config.image_tol {
                let dev = domain[i].distance(domain[j]);
                check.record(dev, dev < config.domain_tol);
            }
        }
    }
    check.checked = domain.len() * (domain.len() - 1) / 2;
    InjectivityReport {
        exponential: true,
        collision: None,
        exact_collision: None,
        check,
    }
}

fn commutator(x: &CMatrix, y: &CMatrix) -> CMatrix {
    x * y - y * x
}

fn cnorm(m: &CMatrix) -> f64 {
    m.iter().fold(0.0, |acc, z| acc.max(z.norm()))
}

fn random_complex(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0))
}

fn random_cmatrix(n: usize, rng: &mut impl Rng) -> CMatrix {
    CMatrix::from_fn(n, n, |_, _| random_complex(rng))
}

fn random_unitary(n: usize, rng: &mut impl Rng) -> CMatrix {
    random_cmatrix(n, rng).qr().q()
}

fn random_partition(n: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut parts = Vec::new();
    let mut left = n;
    while left > 0 {
        let k = rng.gen_range(1..=left);
        parts.push(k);
        left -= k;
    }
    parts
}

/// `c₀ + c₁T + c₂T²` with random complex coefficients.
fn random_polynomial_in(t: &CMatrix, rng: &mut impl Rng) -> CMatrix {
    let n = t.nrows();
    let id = CMatrix::identity(n, n);
    &id * random_complex(rng) + t * random_complex(rng) + (t * t) * random_complex(rng)
}

/// Block-diagonal commuting pair: each block holds two polynomials in one upper triangular
/// matrix, shifted by block scalars.
fn commuting_pair(n: usize, rng: &mut impl Rng) -> (CMatrix, CMatrix) {
    let mut x = CMatrix::zeros(n, n);
    let mut y = CMatrix::zeros(n, n);
    let mut offset = 0;
    for size in random_partition(n, rng) {
        let t = CMatrix::from_fn(size, size, |i, j| {
            if i <= j {
                random_complex(rng)
            } else {
                Complex64::default()
            }
        });
        x.view_mut((offset, offset), (size, size))
            .copy_from(&random_polynomial_in(&t, rng));
        y.view_mut((offset, offset), (size, size))
            .copy_from(&random_polynomial_in(&t, rng));
        offset += size;
    }
    (x, y)
}

/// `X = aE₁₂, Y = bE₂₃` plus scalars: `[X, Y]` is central and nilpotent, never anti-Hermitian.
fn heisenberg_pair(n: usize, rng: &mut impl Rng) -> (CMatrix, CMatrix) {
    let mut x = CMatrix::identity(n, n) * random_complex(rng);
    let mut y = CMatrix::identity(n, n) * random_complex(rng);
    x[(0, 1)] += random_complex(rng) + Complex64::new(1.0, 0.0);
    y[(1, 2)] += random_complex(rng) + Complex64::new(1.0, 0.0);
    (x, y)
}

/// Outcome of [`antihermitian_probe`].
#[derive(Clone, Debug, PartialEq)]
pub struct AntiHermitianReport {
    /// Triples meeting all hypotheses; `check.max_dev` is the largest `‖Z‖` among them.
    pub check: CheckReport,
    pub excluded: usize,
}

/// Draws triples `X, Y, Z = [X, Y]` in dimension at most `max_dim` until `trials` of them
/// satisfy `[X, Z] = [Y, Z] = 0` and `Z = −Z*` within tolerance, and checks `Z = 0` for those.
/// Heisenberg-type triples are mixed in and must be excluded by the hypothesis test.
pub fn antihermitian_probe(
    trials: usize,
    max_dim: usize,
    config: &OracleConfig,
) -> AntiHermitianReport {
    let mut rng = config.rng();
    let mut check = CheckReport::new(format!("antihermitian[dim<={max_dim}]"));
    let mut excluded = 0;
    let max_dim = max_dim.max(1);
    while check.checked < trials {
        let n = rng.gen_range(1..=max_dim);
        let (x, y) = if n >= 3 && rng.gen_bool(0.2) {
            heisenberg_pair(n, &mut rng)
        } else {
            commuting_pair(n, &mut rng)
        };
        let p = random_unitary(n, &mut rng);
        let pinv = p.adjoint();
        let (x, y) = (&p * x * &pinv, &p * y * &pinv);
        let z = commutator(&x, &y);
        let hermitian_part = (&z + z.adjoint()) * Complex64::new(0.5, 0.0);
        let scale = 1.0 + cnorm(&x).max(cnorm(&y));
        let residual = cnorm(&commutator(&x, &z))
            .max(cnorm(&commutator(&y, &z)))
            .max(cnorm(&hermitian_part));
        if residual > config.hypothesis_tol * scale * scale {
            excluded += 1;
            continue;
        }
        let anti = (&z - z.adjoint()) * Complex64::new(0.5, 0.0);
        let dev = cnorm(&anti);
        check.record(dev, dev < config.antihermitian_tol);
    }
    AntiHermitianReport { check, excluded }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::fixtures;
    use crate::testutil::{s, v};

    fn close(a: &NumericMatrix, b: &NumericMatrix, tol: f64) -> bool {
        max_abs(&(a - b)) <= tol * (1.0 + max_abs(b))
    }

    #[test]
    fn expm_of_zero_and_diagonal() {
        assert_eq!(
            dense_expm(&NumericMatrix::zeros(3, 3)),
            NumericMatrix::identity(3, 3)
        );
        let d = NumericMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![1.0, 2.0]));
        let expected = NumericMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![
            1f64.exp(),
            2f64.exp(),
        ]));
        assert!(close(&dense_expm(&d), &expected, 1e-12));
    }

    #[test]
    fn expm_of_rotation_generator() {
        let theta = 2.5f64;
        let m = NumericMatrix::from_row_slice(2, 2, &[0.0, -theta, theta, 0.0]);
        let expected = NumericMatrix::from_row_slice(
            2,
            2,
            &[theta.cos(), -theta.sin(), theta.sin(), theta.cos()],
        );
        assert!(close(&dense_expm(&m), &expected, 1e-13));
    }

    #[test]
    fn expm_of_large_norm_matches_eigen_decomposition() {
        // diag(50, -30) conjugated by an integer shear
        let p = NumericMatrix::from_row_slice(2, 2, &[1.0, 1.0, 0.0, 1.0]);
        let pinv = NumericMatrix::from_row_slice(2, 2, &[1.0, -1.0, 0.0, 1.0]);
        let d = NumericMatrix::from_row_slice(2, 2, &[50.0, 0.0, 0.0, -30.0]);
        let ed = NumericMatrix::from_row_slice(2, 2, &[50f64.exp(), 0.0, 0.0, (-30f64).exp()]);
        assert!(close(
            &dense_expm(&(&p * d * &pinv)),
            &(&p * ed * &pinv),
            1e-12
        ));
    }

    #[test]
    fn heis_algebra_matrix_matches_closed_form() {
        let g = fixtures::heis();
        let x = AlgebraElement::new(v(&["1", "2"]), s("3"));
        let exact = g
            .group_rep_g(&g.exp_map(&x).unwrap())
            .unwrap()
            .exact()
            .unwrap()
            .to_f64();
        let m = g.algebra_rep(&x).unwrap().to_f64();
        assert_eq!(m, algebra_matrix_numeric(&g, &x.to_numeric()));
        assert!(close(&dense_expm(&m), &exact, 1e-13));
        // exp(1,2,3) = [(1 + 3·2/2, 2), 3]
        assert_eq!(exact[(1, 0)], 4.0);
    }

    #[test]
    fn crosscheck_passes_on_all_fixtures() {
        let config = OracleConfig::default();
        for (name, g) in fixtures::all() {
            let report = exp_crosscheck(&g, 100, &config);
            assert!(report.passed, "{name}: {report}");
            assert_eq!(report.checked, 100);
        }
    }

    #[test]
    fn crosscheck_detects_a_wrong_closed_form() {
        // exp of the algebra matrix is not e^{tJ} alone once v ≠ 0
        let g = fixtures::aff();
        let x = NumElement::new(vec![1.0], 1.0);
        let wrong = g.group_rep_g_numeric(&x);
        assert!(max_abs(&(dense_expm(&algebra_matrix_numeric(&g, &x)) - wrong)) > 0.1);
    }

    #[test]
    fn reports_are_deterministic_and_formatted() {
        let g = fixtures::mix();
        let a = exp_crosscheck(&g, 20, &OracleConfig::default());
        let b = exp_crosscheck(&g, 20, &OracleConfig::default());
        assert_eq!(a, b);
        let c = exp_crosscheck(&g, 20, &OracleConfig::with_seed(7));
        let first = |seed| rand::Rng::gen::<u64>(&mut OracleConfig::with_seed(seed).rng());
        assert_ne!(first(7), first(DEFAULT_SEED));
        let line = a.to_string();
        assert!(line.starts_with("PASS expcheck["), "{line}");
        assert!(line.contains(" max_dev="));
        let merged = a.clone().merge(&c);
        assert_eq!(merged.checked, 40);
        assert_eq!(merged.max_dev, a.max_dev.max(c.max_dev));
    }

    #[test]
    fn injectivity_examples() {
        let config = OracleConfig::default();
        let e2 = injectivity_probe(&fixtures::e2(), 10, &config);
        assert!(!e2.exponential && e2.check.passed);
        assert_eq!(e2.exact_collision, Some(true));
        let (x, y) = e2.collision.unwrap();
        assert_eq!((x.t.clone(), y.t.clone()), (s("tau"), s("tau")));
        assert_ne!(x, y);
        let mix = injectivity_probe(&fixtures::mix(), 10, &config);
        assert!(mix.check.passed, "{}", mix.check);
        for g in [fixtures::heis(), fixtures::aff(), fixtures::heis_r()] {
            let r = injectivity_probe(&g, 200, &config);
            assert!(r.exponential && r.check.passed, "{}", r.check);
            assert_eq!(r.check.max_dev, 0.0);
        }
    }

    #[test]
    fn antihermitian_examples() {
        let config = OracleConfig::default();
        let r = antihermitian_probe(200, 6, &config);
        assert!(r.check.passed, "{}", r.check);
        assert_eq!(r.check.checked, 200);
        assert!(r.excluded > 0);
        // scalar blocks commute outright
        let mut rng = config.rng();
        let x = CMatrix::identity(3, 3) * random_complex(&mut rng);
        assert_eq!(cnorm(&commutator(&x, &random_cmatrix(3, &mut rng))), 0.0);
        // the Heisenberg triple meets the commutation hypotheses but not anti-Hermiticity
        let (x, y) = heisenberg_pair(3, &mut rng);
        let z = commutator(&x, &y);
        assert!(cnorm(&commutator(&x, &z)) < 1e-12 && cnorm(&commutator(&y, &z)) < 1e-12);
        assert!(cnorm(&(&z + z.adjoint())) > 0.1);
    }

    fn small_matrix(n: usize) -> impl Strategy<Value = NumericMatrix> {
        prop::collection::vec(-3.0f64..3.0, n * n)
            .prop_map(move |xs| NumericMatrix::from_row_slice(n, n, &xs))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn expm_agrees_with_nalgebra(m in small_matrix(4)) {
            prop_assert!(close(&dense_expm(&m), &m.clone().exp(), 1e-11));
        }

        #[test]
        fn expm_inverse_and_determinant(m in small_matrix(3)) {
            let e = dense_expm(&m);
            let inv = dense_expm(&(-&m));
            prop_assert!(close(&(&e * inv), &NumericMatrix::identity(3, 3), 1e-11));
            prop_assert!((e.determinant() - m.trace().exp()).abs() < 1e-9 * m.trace().exp().max(1.0));
        }

        /// `AB = BC` implies `e^A B = B e^C`, with `A = P C P⁻¹`, `B = P`.
        #[test]
        fn expm_intertwines(c in small_matrix(3), p in small_matrix(3)) {
            let pinv = p.clone().try_inverse();
            prop_assume!(pinv.is_some() && p.determinant().abs() > 0.1);
            let a = &p * &c * pinv.unwrap();
            let lhs = dense_expm(&a) * &p;
            let rhs = &p * dense_expm(&c);
            prop_assert!(close(&lhs, &rhs, 1e-8));
        }
    }
}
