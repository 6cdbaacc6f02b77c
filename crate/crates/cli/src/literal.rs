//! Vector, matrix and element literals shared by the spec file and the command line.
//!
//! Vectors are comma-separated scalars with optional brackets, `[1,1/2+tau]` or `1,1/2+tau`.
//! Matrices are `;`-separated rows. Elements are written as the library prints them,
//! `[v₁,…,v_d]@t`.

use almost_abelian::linalg::{Mat, Vector};
use almost_abelian::scalar::TauScalar;
use almost_abelian::GroupElement;

fn strip_brackets(s: &str) -> &str {
    let s = s.trim();
    s.strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .unwrap_or(s)
}

pub fn scalar(s: &str) -> Result<TauScalar, String> {
    s.trim()
        .parse()
        .map_err(|e| format!("bad scalar `{s}`: {e}"))
}

pub fn vector(s: &str) -> Result<Vector, String> {
    let body = strip_brackets(s).trim();
    if body.is_empty() {
        return Ok(Vec::new());
    }
    body.split(',').map(scalar).collect()
}

pub fn matrix(s: &str, cols: usize) -> Result<Mat, String> {
    let body = s.trim();
    if body.is_empty() || body == "[]" {
        return Ok(Mat::zeros(0, cols));
    }
    let rows = rows(body)?;
    if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
        return Err(format!(
            "matrix row has {} entries, expected {cols}",
            bad.len()
        ));
    }
    Ok(Mat::from_rows(rows))
}

/// `;`-separated vectors; the empty string is the empty list.
pub fn rows(s: &str) -> Result<Vec<Vector>, String> {
    let body = s.trim();
    if body.is_empty() {
        return Ok(Vec::new());
    }
    body.split(';').map(vector).collect()
}

pub fn element(s: &str) -> Result<GroupElement, String> {
    let (v, t) = s
        .rsplit_once('@')
        .ok_or_else(|| format!("bad element `{s}`: expected `[v1,...,vd]@t`"))?;
    Ok(GroupElement::new(vector(v)?, scalar(t)?))
}

pub fn format_vector(v: &[TauScalar]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vectors_and_matrices() {
        assert_eq!(vector("[1, 1/2+tau]").unwrap().len(), 2);
        assert_eq!(vector("1,2,3").unwrap().len(), 3);
        assert!(vector("[]").unwrap().is_empty());
        assert!(vector("[1,x]").is_err());
        let m = matrix("[1,0];[0,-1]", 2).unwrap();
        assert_eq!(m.to_string(), "[1, 0]\n[0, -1]\n");
        assert!(matrix("[1,0];[0]", 2).is_err());
        assert_eq!(rows("").unwrap().len(), 0);
    }

    #[test]
    fn elements_round_trip() {
        let g = element("[1,(1)/(1+tau)]@3*tau").unwrap();
        assert_eq!(element(&g.to_string()).unwrap(), g);
        assert_eq!(vector(&format_vector(&g.v)).unwrap(), g.v);
        assert!(element("[1,2]").is_err());
    }
}
