use almost_abelian::aut::{is_heisenberg_extension, preserves_lattice, Automorphism};
use almost_abelian::exp::Dilations;
use almost_abelian::lattice::{
    has_faithful_quotient_rep, normalize_subgroup, quotient_iso_certificate, reduce_generators,
    related_by_aut_search, DiscreteCentralSubgroup, SearchOutcome,
};
use almost_abelian::linalg::{IntMatrix, Mat};
use almost_abelian::oracle::{
    antihermitian_probe, exp_crosscheck, injectivity_probe, OracleConfig,
};
use almost_abelian::reps::RepMatrix;
use almost_abelian::scalar::TauScalar;
use almost_abelian::subgroups::is_quotient_subgroup_closed;
use almost_abelian::{AlgebraElement, NumElement};
use nalgebra::DMatrix;
use num_traits::One;

use crate::literal;
use crate::output::Output;
use crate::spec::SpecFile;

/// Command failures that are the caller's fault; they map to exit code 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Library(#[from] almost_abelian::Error),
}

impl From<String> for CliError {
    fn from(s: String) -> Self {
        Self::Input(s)
    }
}

pub type CmdResult = Result<bool, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Exact,
    Numeric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum RepKind {
    G,
    Gi,
    Gii,
    Quotient,
}

pub struct Ctx {
    pub mode: Mode,
    pub digits: usize,
    pub seed: u64,
    pub bound: u32,
    pub out: Output,
}

impl Ctx {
    fn num(&self, x: f64) -> String {
        format!("{x:.prec$}", prec = self.digits)
    }

    fn num_element(&self, x: &NumElement) -> String {
        let v: Vec<String> = x.v.iter().map(|c| self.num(*c)).collect();
        format!("[{}]@{}", v.join(","), self.num(x.t))
    }

    fn num_matrix(&mut self, key: &str, m: &DMatrix<f64>) {
        let rows: Vec<Vec<String>> = m
            .row_iter()
            .map(|r| r.iter().map(|x| self.num(*x)).collect())
            .collect();
        self.out.matrix(key, &rows);
    }

    fn oracle_config(&self) -> OracleConfig {
        OracleConfig::with_seed(self.seed)
    }
}

fn exact_rows(m: &Mat) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect()
}

fn int_rows(m: &IntMatrix) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect()
}

fn rep_rows(m: &RepMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect())
        .collect()
}

/// `t` as a multiple of 2π, e.g. `2π` or `3/2·2π`.
fn two_pi(t: &TauScalar) -> String {
    match (t / &TauScalar::tau()).as_rational() {
        Some(r) if r.is_one() => "2π".into(),
        Some(r) => format!("{r}·2π"),
        None => t.to_string(),
    }
}

fn require_lattice(spec: &SpecFile) -> Result<&DiscreteCentralSubgroup, CliError> {
    spec.lattice
        .as_ref()
        .ok_or_else(|| CliError::Input("spec has no `lattice` lines".into()))
}

fn print_generators(ctx: &mut Ctx, key: &str, n: &DiscreteCentralSubgroup) {
    let gens: Vec<String> = n.generators().iter().map(ToString::to_string).collect();
    ctx.out.field(
        key,
        if gens.is_empty() {
            "none".into()
        } else {
            gens.join(" ")
        },
    );
}

pub fn analyze(ctx: &mut Ctx, spec: &SpecFile) -> CmdResult {
    let g = &spec.group;
    let machine = ctx.out.is_machine();
    ctx.out.field("aleph", g.aleph());
    ctx.out.field("d", g.dim());
    ctx.out.matrix("J", &exact_rows(g.j()));
    let verdict = g.is_exponential();
    match (&verdict.witness, machine) {
        (None, _) => ctx.out.field("exponential", "YES"),
        (Some(w), false) => ctx.out.field("exponential", format!("NO (witness {w})")),
        (Some(w), true) => {
            ctx.out.field("exponential", "NO");
            ctx.out.field("witness", w);
        }
    }
    let torsion = g.torsion();
    match (&torsion.t0, &torsion.omega0) {
        (Some(t0), Some(w)) => {
            ctx.out.field("T", format!("{}·Z", two_pi(t0)));
            ctx.out.field("t0", t0);
            ctx.out.field("omega0", w);
        }
        _ => ctx.out.field("T", "{0}"),
    }
    let k = g.kernel_basis().len();
    let mut parts = Vec::new();
    match k {
        0 => {}
        1 => parts.push("ℝ".to_string()),
        _ => parts.push(format!("ℝ^{k}")),
    }
    if let Some(t0) = &torsion.t0 {
        parts.push(format!("{}Z", two_pi(t0)));
    }
    let center = if parts.is_empty() {
        "{0}".to_string()
    } else {
        parts.join(" × ")
    };
    if machine {
        ctx.out.field("center", center);
        ctx.out.field("center_kernel_dim", k);
    } else {
        let rel = if k == 0 { "=" } else { "≅" };
        ctx.out.text(format!("center {rel} {center}"));
    }
    let dil = match g.dilation_group() {
        Dilations::Trivial => "{1}",
        Dilations::Sign => "{1, -1}",
        Dilations::AllNonzero => "ℝ∖{0}",
    };
    ctx.out.field("Dil", dil);
    ctx.out
        .field("matrix_group_simply_connected", g.is_simply_connected_g());
    ctx.out
        .field("heisenberg_extension", is_heisenberg_extension(g.aleph()));
    let dec = g.decompose();
    ctx.out.field("d0", dec.d0);
    let coords: Vec<String> = dec
        .abelian_coordinates
        .iter()
        .map(|i| (i + 1).to_string())
        .collect();
    ctx.out.field(
        "abelian_coordinates",
        if coords.is_empty() {
            "none".into()
        } else {
            coords.join(",")
        },
    );
    ctx.out.field("core", dec.core_aleph);
    Ok(true)
}

pub fn exp(ctx: &mut Ctx, spec: &SpecFile, x: &str) -> CmdResult {
    let x = literal::element(x)?;
    let x = AlgebraElement::new(x.v, x.t);
    let g = &spec.group;
    g.check_dim(&x.v)?;
    match ctx.mode {
        Mode::Exact => ctx.out.field("exp", g.exp_map(&x)?),
        Mode::Numeric => {
            let y = g.exp_map_numeric(&x.to_numeric());
            ctx.out.field("exp", ctx.num_element(&y));
        }
    }
    Ok(true)
}

pub fn mul(ctx: &mut Ctx, spec: &SpecFile, a: &str, b: &str) -> CmdResult {
    let (a, b) = (literal::element(a)?, literal::element(b)?);
    let g = &spec.group;
    g.check_dim(&a.v)?;
    g.check_dim(&b.v)?;
    match ctx.mode {
        Mode::Exact => ctx.out.field("product", g.group_mul(&a, &b)?),
        Mode::Numeric => {
            let y = g.group_mul_numeric(&a.to_numeric(), &b.to_numeric());
            ctx.out.field("product", ctx.num_element(&y));
        }
    }
    Ok(true)
}

pub fn center(ctx: &mut Ctx, spec: &SpecFile, x: &str) -> CmdResult {
    let x = literal::element(x)?;
    spec.group.check_dim(&x.v)?;
    let central = spec.group.is_central(&x);
    ctx.out.field("central", central);
    Ok(central)
}

pub fn rep(ctx: &mut Ctx, spec: &SpecFile, kind: RepKind, x: &str) -> CmdResult {
    let x = literal::element(x)?;
    let g = &spec.group;
    g.check_dim(&x.v)?;
    let n = x.to_numeric();
    match kind {
        RepKind::Quotient => {
            let lattice = require_lattice(spec)?;
            let verdict = has_faithful_quotient_rep(g, lattice)?;
            let Some(builder) = verdict.builder else {
                ctx.out.field("faithful", "no (span meets [L,L])");
                return Ok(false);
            };
            match ctx.mode {
                Mode::Exact => ctx.out.matrix("rep", &rep_rows(&builder.rep(g, &x)?)),
                Mode::Numeric => {
                    let m = builder.rep_numeric(g, &n);
                    ctx.num_matrix("rep", &m);
                }
            }
        }
        _ => match ctx.mode {
            Mode::Exact => {
                let m = match kind {
                    RepKind::G => g.group_rep_g(&x)?,
                    RepKind::Gi => g.group_rep_gi(&x)?,
                    _ => g.group_rep_gii(&x)?,
                };
                ctx.out.matrix("rep", &rep_rows(&m));
            }
            Mode::Numeric => {
                let m = match kind {
                    RepKind::G => g.group_rep_g_numeric(&n),
                    RepKind::Gi => g.group_rep_gi_numeric(&n),
                    _ => g.group_rep_gii_numeric(&n),
                };
                ctx.num_matrix("rep", &m);
            }
        },
    }
    Ok(true)
}

pub fn reduce(ctx: &mut Ctx, spec: &SpecFile) -> CmdResult {
    let n = require_lattice(spec)?;
    let (reduced, a) = reduce_generators(n);
    print_generators(ctx, "generators", &reduced);
    ctx.out.matrix("A", &int_rows(&a));
    ctx.out.field("det_A", a.det());
    Ok(true)
}

pub fn normalize(ctx: &mut Ctx, spec: &SpecFile) -> CmdResult {
    let g = &spec.group;
    let n = require_lattice(spec)?;
    let (phi, m) = normalize_subgroup(g, n)?;
    ctx.out.field("alpha", &phi.alpha);
    ctx.out.matrix("delta", &exact_rows(&phi.delta));
    ctx.out.field("gamma", literal::format_vector(&phi.gamma));
    print_generators(ctx, "generators", &m);
    let kernel: Vec<String> = m
        .generators()
        .iter()
        .filter(|x| x.t.is_zero())
        .map(ToString::to_string)
        .collect();
    let time: Vec<String> = m
        .generators()
        .iter()
        .filter(|x| !x.t.is_zero())
        .map(ToString::to_string)
        .collect();
    ctx.out.field(
        "kernel_part",
        if kernel.is_empty() {
            "none".into()
        } else {
            kernel.join(" ")
        },
    );
    ctx.out.field(
        "time_part",
        if time.is_empty() {
            "none".into()
        } else {
            time.join(" ")
        },
    );
    let split = m
        .generators()
        .iter()
        .all(|x| x.t.is_zero() || x.v.iter().all(TauScalar::is_zero));
    let certificate = quotient_iso_certificate(g, n, &m, &phi)?;
    ctx.out.field("split", split);
    ctx.out
        .field("certificate", if certificate { "pass" } else { "fail" });
    Ok(split && certificate)
}

pub fn faithful(ctx: &mut Ctx, spec: &SpecFile) -> CmdResult {
    let n = require_lattice(spec)?;
    let verdict = has_faithful_quotient_rep(&spec.group, n)?;
    if verdict.faithful {
        let dim = verdict
            .builder
            .as_ref()
            .map(|b| b.rep.dimension())
            .unwrap_or(0);
        ctx.out.field("faithful", "yes");
        ctx.out.field("rep_dimension", dim);
    } else {
        ctx.out.field("faithful", "no (span meets [L,L])");
    }
    Ok(verdict.faithful)
}

pub fn closed(ctx: &mut Ctx, spec: &SpecFile) -> CmdResult {
    let h = spec
        .subgroup
        .as_ref()
        .ok_or_else(|| CliError::Input("spec has no `subgroup` line".into()))?;
    let n = spec
        .lattice
        .clone()
        .unwrap_or_else(|| DiscreteCentralSubgroup::trivial(&spec.group));
    let report = is_quotient_subgroup_closed(&spec.group, h, &n)?;
    ctx.out
        .field("closed", if report.closed { "closed" } else { "dense" });
    ctx.out.field("lattice_side_dim", report.lattice_side.dim());
    ctx.out
        .field("subgroup_side_dim", report.subgroup_side.dim());
    Ok(report.closed)
}

#[derive(Clone, Debug, clap::Subcommand)]
pub enum AutAction {
    /// Check the defining relations.
    Validate,
    /// Apply the automorphism to an element `[v]@t`.
    Apply { element: String },
    /// Whether the automorphism maps the spec lattice onto itself.
    Preserves,
}

pub fn aut(ctx: &mut Ctx, spec: &SpecFile, action: &AutAction) -> CmdResult {
    let phi = spec
        .aut
        .as_ref()
        .ok_or_else(|| CliError::Input("spec has no `aut` line".into()))?;
    let g = &spec.group;
    match action {
        AutAction::Validate => match phi.validate(g) {
            Ok(()) => {
                ctx.out.field("valid", "ok");
                Ok(true)
            }
            Err(e) => {
                ctx.out.field("valid", format!("violation: {e}"));
                Ok(false)
            }
        },
        AutAction::Apply { element } => {
            let x = literal::element(element)?;
            g.check_dim(&x.v)?;
            match ctx.mode {
                Mode::Exact => ctx.out.field("image", phi.apply(g, &x)?),
                Mode::Numeric => {
                    let y = phi.apply_numeric(g, &x.to_numeric());
                    ctx.out.field("image", ctx.num_element(&y));
                }
            }
            Ok(true)
        }
        AutAction::Preserves => {
            let n = require_lattice(spec)?;
            match preserves_lattice(phi, g, n)? {
                Some(a) => {
                    ctx.out.field("preserves", true);
                    ctx.out.matrix("A", &int_rows(&a));
                    Ok(true)
                }
                None => {
                    ctx.out.field("preserves", false);
                    Ok(false)
                }
            }
        }
    }
}

pub fn related(ctx: &mut Ctx, spec: &SpecFile, other: &SpecFile) -> CmdResult {
    if other.group.aleph() != spec.group.aleph() {
        return Err(CliError::Input(
            "the two specs describe different groups".into(),
        ));
    }
    let n = reduce_generators(require_lattice(spec)?).0;
    let m = reduce_generators(require_lattice(other)?).0;
    match related_by_aut_search(&spec.group, &n, &m, ctx.bound)? {
        SearchOutcome::Found { delta_tilde, a } => {
            ctx.out.field("related", "yes");
            ctx.out.matrix("delta_tilde", &exact_rows(&delta_tilde));
            ctx.out.matrix("A", &int_rows(&a));
            Ok(true)
        }
        SearchOutcome::NotFound => {
            ctx.out.field(
                "related",
                format!("unknown (no certificate with entries up to {})", ctx.bound),
            );
            Ok(false)
        }
        SearchOutcome::Impossible => {
            ctx.out.field("related", "no");
            Ok(false)
        }
    }
}

#[derive(Clone, Debug, clap::Subcommand)]
pub enum OracleAction {
    /// Closed-form exponential against a Padé matrix exponential.
    Expcheck {
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Collision search for the exponential map.
    Inject {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Random commutator triples with a central anti-Hermitian commutator.
    Heis {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 6)]
        dim: usize,
    },
}

pub fn oracle(ctx: &mut Ctx, spec: Option<&SpecFile>, action: &OracleAction) -> CmdResult {
    let config = ctx.oracle_config();
    let need = || spec.ok_or_else(|| CliError::Input("this oracle needs --spec".into()));
    let report = match action {
        OracleAction::Expcheck { samples } => exp_crosscheck(&need()?.group, *samples, &config),
        OracleAction::Inject { samples } => {
            let r = injectivity_probe(&need()?.group, *samples, &config);
            if let Some((x, y)) = &r.collision {
                ctx.out.field("collision", format!("{x} {y}"));
            }
            r.check
        }
        OracleAction::Heis { trials, dim } => {
            let r = antihermitian_probe(*trials, *dim, &config);
            ctx.out.field("excluded", r.excluded);
            r.check
        }
    };
    ctx.out.text(report.to_string());
    Ok(report.passed)
}

pub fn parse_seed(s: &str) -> Result<u64, String> {
    let hex = s.trim_start_matches("0x").trim_start_matches("0X");
    u64::from_str_radix(hex, 16).map_err(|_| format!("bad seed `{s}`: expected hexadecimal"))
}
