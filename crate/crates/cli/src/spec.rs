//! The line-oriented group spec file.
//!
//! ```text
//! # comment
//! block i 1 1
//! block 0 1 2
//! lattice gen [0,0,1,0] 2
//! subgroup case1 basis=[0,0,1,1]
//! aut generic alpha=-1 delta=[1,0,0,0];[0,-1,0,0];[0,0,1,0];[0,0,0,1] gamma=[0,0,0,0]
//! ```

use std::collections::BTreeMap;
use std::fmt;

use almost_abelian::aut::{AutElement, GenericAut, HeisAut};
use almost_abelian::lattice::DiscreteCentralSubgroup;
use almost_abelian::scalar::{GaussRational, TauScalar};
use almost_abelian::subgroups::ConnectedSubgroup;
use almost_abelian::{AlmostAbelian, MultiplicityFunction};
use num_bigint::BigInt;

use crate::literal;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecError {
    pub line: Option<usize>,
    pub message: String,
}

impl SpecError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        Self {
            line: Some(line),
            message: message.into(),
        }
    }
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(n) => write!(f, "line {n}: {}", self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SpecFile {
    pub group: AlmostAbelian,
    pub lattice: Option<DiscreteCentralSubgroup>,
    pub subgroup: Option<ConnectedSubgroup>,
    pub aut: Option<AutElement>,
}

struct Line<'a> {
    number: usize,
    words: Vec<&'a str>,
}

/// `key=value` words after the stanza head, rejecting unknown and repeated keys.
fn keyed<'a>(
    line: &Line<'a>,
    skip: usize,
    allowed: &[&str],
) -> Result<BTreeMap<&'a str, &'a str>, SpecError> {
    let mut out = BTreeMap::new();
    for word in &line.words[skip..] {
        let (k, v) = word.split_once('=').ok_or_else(|| {
            SpecError::at(line.number, format!("expected key=value, found `{word}`"))
        })?;
        if !allowed.contains(&k) {
            return Err(SpecError::at(line.number, format!("unknown key `{k}`")));
        }
        if out.insert(k, v).is_some() {
            return Err(SpecError::at(line.number, format!("key `{k}` given twice")));
        }
    }
    Ok(out)
}

fn lift<T>(number: usize, r: Result<T, String>) -> Result<T, SpecError> {
    r.map_err(|m| SpecError::at(number, m))
}

fn lib<T>(number: usize, r: almost_abelian::Result<T>) -> Result<T, SpecError> {
    r.map_err(|e| SpecError::at(number, e.to_string()))
}

fn parse_block(line: &Line) -> Result<(GaussRational, usize, usize), SpecError> {
    let n = line.words.len();
    if n < 4 {
        return Err(SpecError::at(
            line.number,
            "expected `block <eigenvalue> <size> <multiplicity>`",
        ));
    }
    let eig = line.words[1..n - 2].join(" ");
    let eig: GaussRational = lib(line.number, eig.parse())?;
    let count = |w: &str, what: &str| {
        w.parse::<usize>()
            .map_err(|_| SpecError::at(line.number, format!("bad {what} `{w}`")))
    };
    Ok((
        eig,
        count(line.words[n - 2], "size")?,
        count(line.words[n - 1], "multiplicity")?,
    ))
}

fn parse_lattice_gen(line: &Line) -> Result<(Vec<TauScalar>, BigInt), SpecError> {
    let n = line.words.len();
    if n < 4 || line.words[1] != "gen" {
        return Err(SpecError::at(
            line.number,
            "expected `lattice gen <vector> <multiple of t0>`",
        ));
    }
    let v = lift(line.number, literal::vector(&line.words[2..n - 1].join("")))?;
    let k = line.words[n - 1].parse::<BigInt>().map_err(|_| {
        SpecError::at(
            line.number,
            format!("bad integer multiple `{}`", line.words[n - 1]),
        )
    })?;
    Ok((v, k))
}

fn parse_subgroup(group: &AlmostAbelian, line: &Line) -> Result<ConnectedSubgroup, SpecError> {
    let d = group.dim();
    let check_len = |v: &Vec<TauScalar>| {
        if v.len() == d {
            Ok(())
        } else {
            Err(SpecError::at(
                line.number,
                format!("vector of length {} in dimension {d}", v.len()),
            ))
        }
    };
    match line.words.get(1).copied() {
        Some("case1") => {
            let keys = keyed(line, 2, &["basis"])?;
            let basis = lift(
                line.number,
                literal::rows(keys.get("basis").copied().unwrap_or("")),
            )?;
            basis.iter().try_for_each(check_len)?;
            lib(line.number, ConnectedSubgroup::abelian(group, &basis))
        }
        Some("case2") => {
            let keys = keyed(line, 2, &["basis", "v0"])?;
            let basis = lift(
                line.number,
                literal::rows(keys.get("basis").copied().unwrap_or("")),
            )?;
            basis.iter().try_for_each(check_len)?;
            let v0 = match keys.get("v0") {
                Some(s) => lift(line.number, literal::vector(s))?,
                None => vec![TauScalar::zero(); d],
            };
            check_len(&v0)?;
            lib(line.number, ConnectedSubgroup::graph(group, &basis, v0))
        }
        _ => Err(SpecError::at(
            line.number,
            "expected `subgroup case1 ...` or `subgroup case2 ...`",
        )),
    }
}

fn parse_aut(group: &AlmostAbelian, line: &Line) -> Result<AutElement, SpecError> {
    let d = group.dim();
    let number = line.number;
    let scalar = |keys: &BTreeMap<&str, &str>, k: &str, default: TauScalar| match keys.get(k) {
        Some(s) => lift(number, literal::scalar(s)),
        None => Ok(default),
    };
    let vector =
        |keys: &BTreeMap<&str, &str>, k: &str, n: usize| -> Result<Vec<TauScalar>, SpecError> {
            match keys.get(k) {
                Some(s) => {
                    let v = lift(number, literal::vector(s))?;
                    if v.len() != n {
                        return Err(SpecError::at(
                            number,
                            format!("`{k}` has length {}, expected {n}", v.len()),
                        ));
                    }
                    Ok(v)
                }
                None => Ok(vec![TauScalar::zero(); n]),
            }
        };
    match line.words.get(1).copied() {
        Some("generic") => {
            let keys = keyed(line, 2, &["alpha", "delta", "gamma"])?;
            let delta = match keys.get("delta") {
                Some(s) => lift(number, literal::matrix(s, d))?,
                None => almost_abelian::linalg::Mat::identity(d),
            };
            if delta.rows() != d {
                return Err(SpecError::at(number, format!("`delta` must be {d}x{d}")));
            }
            let alpha = scalar(&keys, "alpha", TauScalar::one())?;
            Ok(AutElement::Generic(GenericAut::new(
                delta,
                vector(&keys, "gamma", d)?,
                alpha,
            )))
        }
        Some("heis") => {
            if d < 2 {
                return Err(SpecError::at(
                    number,
                    "heis automorphisms need dimension at least 2",
                ));
            }
            let allowed = [
                "alpha", "beta2", "gamma1", "gamma2", "delta12", "delta22", "phi01", "eta", "rho",
                "phi11",
            ];
            let keys = keyed(line, 2, &allowed)?;
            let n = d - 2;
            let mut p = HeisAut::identity(d);
            p.alpha = scalar(&keys, "alpha", p.alpha.clone())?;
            p.beta2 = scalar(&keys, "beta2", p.beta2.clone())?;
            p.gamma1 = scalar(&keys, "gamma1", p.gamma1.clone())?;
            p.gamma2 = scalar(&keys, "gamma2", p.gamma2.clone())?;
            p.delta12 = scalar(&keys, "delta12", p.delta12.clone())?;
            p.delta22 = scalar(&keys, "delta22", p.delta22.clone())?;
            p.phi01 = vector(&keys, "phi01", n)?;
            p.eta = vector(&keys, "eta", n)?;
            p.rho = vector(&keys, "rho", n)?;
            if let Some(s) = keys.get("phi11") {
                p.phi11 = lift(number, literal::matrix(s, n))?;
                if p.phi11.rows() != n {
                    return Err(SpecError::at(number, format!("`phi11` must be {n}x{n}")));
                }
            }
            Ok(AutElement::Heis(p))
        }
        _ => Err(SpecError::at(
            number,
            "expected `aut generic ...` or `aut heis ...`",
        )),
    }
}

impl SpecFile {
    pub fn parse(text: &str) -> Result<Self, SpecError> {
        let lines: Vec<Line> = text
            .lines()
            .enumerate()
            .map(|(i, raw)| Line {
                number: i + 1,
                words: raw
                    .split('#')
                    .next()
                    .unwrap_or("")
                    .split_whitespace()
                    .collect(),
            })
            .filter(|l| !l.words.is_empty())
            .collect();
        let mut blocks = Vec::new();
        let mut first_block = None;
        for line in &lines {
            match line.words[0] {
                "block" => {
                    first_block.get_or_insert(line.number);
                    blocks.push(parse_block(line)?);
                }
                "lattice" | "subgroup" | "aut" => {}
                other => {
                    return Err(SpecError::at(
                        line.number,
                        format!("unknown stanza `{other}`"),
                    ))
                }
            }
        }
        let Some(first_block) = first_block else {
            return Err(SpecError {
                line: None,
                message: "spec has no `block` lines; the group section is mandatory".into(),
            });
        };
        let group = AlmostAbelian::new(lib(first_block, MultiplicityFunction::new(blocks))?);
        let d = group.dim();

        let mut gens = Vec::new();
        let mut first_lattice = None;
        let mut subgroup = None;
        let mut aut = None;
        for line in &lines {
            match line.words[0] {
                "lattice" => {
                    first_lattice.get_or_insert(line.number);
                    let (v, k) = parse_lattice_gen(line)?;
                    if v.len() != d {
                        return Err(SpecError::at(
                            line.number,
                            format!("vector of length {} in dimension {d}", v.len()),
                        ));
                    }
                    gens.push((v, k));
                }
                "subgroup" => {
                    if subgroup.is_some() {
                        return Err(SpecError::at(
                            line.number,
                            "only one subgroup stanza is allowed",
                        ));
                    }
                    subgroup = Some(parse_subgroup(&group, line)?);
                }
                "aut" => {
                    if aut.is_some() {
                        return Err(SpecError::at(line.number, "only one aut stanza is allowed"));
                    }
                    aut = Some(parse_aut(&group, line)?);
                }
                _ => {}
            }
        }
        let lattice = match first_lattice {
            Some(n) => Some(lib(
                n,
                DiscreteCentralSubgroup::from_multiples(&group, gens),
            )?),
            None => None,
        };
        Ok(Self {
            group,
            lattice,
            subgroup,
            aut,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_sections() {
        let text = "# E2 x R^2\nblock i 1 1\nblock 0 1 2\n\nlattice gen [0,0,1,0] 2\nlattice gen [0,0,0,1] 0\n\
                    subgroup case1 basis=[0,0,1,1]\naut generic alpha=1 gamma=[1,0,0,0]\n";
        let spec = SpecFile::parse(text).unwrap();
        assert_eq!(spec.group.dim(), 4);
        let n = spec.lattice.unwrap();
        assert_eq!(n.rank(), 2);
        assert_eq!(
            n.generators()[0].t,
            TauScalar::tau().scale(&almost_abelian::scalar::int(2))
        );
        assert!(spec.subgroup.is_some());
        assert!(matches!(spec.aut, Some(AutElement::Generic(_))));
    }

    #[test]
    fn eigenvalues_may_contain_spaces() {
        let spec = SpecFile::parse("block 1/2 + 3/4 i 1 2").unwrap();
        assert_eq!(spec.group.dim(), 4);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = SpecError::at(3, "unknown key `foo`");
        assert_eq!(err.to_string(), "line 3: unknown key `foo`");
        let cases = [
            ("block 0 2 1\nfoo bar", 2),
            ("block 0 2 1\nsubgroup case1 basis=[1,0] foo=1", 2),
            ("block 0 2 1\n\nsubgroup case2 basis=[0,1]", 3),
            ("block 0 2 x", 1),
            ("block 0 2 1\nlattice gen [0,1] 0", 2),
            ("block 0 2 1\naut generic delta=[1,0]", 2),
        ];
        for (text, line) in cases {
            let err = SpecFile::parse(text).unwrap_err();
            assert_eq!(err.line, Some(line), "{text}: {err}");
        }
        assert_eq!(SpecFile::parse("# nothing\n").unwrap_err().line, None);
    }
}
