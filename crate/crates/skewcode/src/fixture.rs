//! Matrix fixture files and factorization fixtures.
//!
//! Matrix fixtures carry one header line
//! `q=<p^m> rows=<k> cols=<n> modulus=[c0,..,cm]` with optional `rank=` and
//! `d=` expectations, then one row per line with comma-separated element
//! tokens. Lines starting with `#` are comments.

use serde::{Deserialize, Serialize};
use std::sync::Arc;
use thiserror::Error;

use crate::field::{Field, FieldElement, FieldError};
use crate::matrix::{LinearCodeMatrix, Matrix};
use crate::skewpoly::{parse_poly, PolyError, SkewPoly};

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("bad fixture header: {0}")]
    Header(String),
    #[error("row {row}: expected {expect} entries, found {found}")]
    RowWidth { row: usize, expect: usize, found: usize },
    #[error("expected {expect} rows, found {found}")]
    RowCount { expect: usize, found: usize },
    #[error("q = {0} is not a prime power")]
    NotPrimePower(u32),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("cannot parse factorization fixture: {0}")]
    Json(#[from] serde_json::Error),
}

/// A transcribed generator matrix plus its expected invariants.
pub struct MatrixFixture {
    pub field: Arc<Field>,
    pub matrix: LinearCodeMatrix,
    pub expect_rank: Option<usize>,
    pub expect_d: Option<usize>,
}

fn factor_prime_power(q: u32) -> Option<(u32, u32)> {
    for p in 2..=q {
        if q % p == 0 {
            let mut m = 0;
            let mut v = q;
            while v % p == 0 {
                v /= p;
                m += 1;
            }
            return if v == 1 { Some((p, m)) } else { None };
        }
    }
    None
}

pub fn parse_matrix_fixture(text: &str) -> Result<MatrixFixture, FixtureError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| FixtureError::Header("empty file".into()))?;

    let mut q = None;
    let mut rows = None;
    let mut cols = None;
    let mut modulus: Option<Vec<u32>> = None;
    let mut expect_rank = None;
    let mut expect_d = None;
    for part in header.split_whitespace() {
        let (key, value) =
            part.split_once('=').ok_or_else(|| FixtureError::Header(part.into()))?;
        match key {
            "q" => q = Some(value.parse().map_err(|_| FixtureError::Header(part.into()))?),
            "rows" => rows = Some(value.parse().map_err(|_| FixtureError::Header(part.into()))?),
            "cols" => cols = Some(value.parse().map_err(|_| FixtureError::Header(part.into()))?),
            "modulus" => {
                let inner = value
                    .strip_prefix('[')
                    .and_then(|v| v.strip_suffix(']'))
                    .ok_or_else(|| FixtureError::Header(part.into()))?;
                modulus = Some(
                    inner
                        .split(',')
                        .map(|c| c.trim().parse().map_err(|_| FixtureError::Header(part.into())))
                        .collect::<Result<_, _>>()?,
                );
            }
            "rank" => {
                expect_rank = Some(value.parse().map_err(|_| FixtureError::Header(part.into()))?)
            }
            "d" => expect_d = Some(value.parse().map_err(|_| FixtureError::Header(part.into()))?),
            other => return Err(FixtureError::Header(format!("unknown key {other}"))),
        }
    }
    let q: u32 = q.ok_or_else(|| FixtureError::Header("missing q".into()))?;
    let rows: usize = rows.ok_or_else(|| FixtureError::Header("missing rows".into()))?;
    let cols: usize = cols.ok_or_else(|| FixtureError::Header("missing cols".into()))?;
    let (p, m) = factor_prime_power(q).ok_or(FixtureError::NotPrimePower(q))?;
    let field = Arc::new(match modulus {
        Some(md) => Field::new(p, m, &md, None)?,
        None => Field::with_default_modulus(p, m)?,
    });

    let mut data: Vec<Vec<FieldElement>> = Vec::with_capacity(rows);
    for (idx, line) in lines.enumerate() {
        let entries: Vec<FieldElement> = line
            .split(',')
            .map(|tok| field.parse_element(tok.trim()))
            .collect::<Result<_, _>>()?;
        if entries.len() != cols {
            return Err(FixtureError::RowWidth { row: idx + 1, expect: cols, found: entries.len() });
        }
        data.push(entries);
    }
    if data.len() != rows {
        return Err(FixtureError::RowCount { expect: rows, found: data.len() });
    }
    let matrix = LinearCodeMatrix::new(field.clone(), Matrix::from_rows(&field, &data));
    Ok(MatrixFixture { field, matrix, expect_rank, expect_d })
}

pub fn read_matrix_fixture(path: &str) -> Result<MatrixFixture, FixtureError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| FixtureError::Io { path: path.into(), source })?;
    parse_matrix_fixture(&text)
}

/// Renders a matrix in the fixture format.
pub fn write_matrix_fixture(
    field: &Field,
    matrix: &Matrix,
    expect_rank: Option<usize>,
    expect_d: Option<usize>,
) -> String {
    let mut out = format!(
        "q={} rows={} cols={} modulus=[{}]",
        field.q(),
        matrix.rows(),
        matrix.cols(),
        field.modulus().iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    );
    if let Some(rk) = expect_rank {
        out.push_str(&format!(" rank={rk}"));
    }
    if let Some(d) = expect_d {
        out.push_str(&format!(" d={d}"));
    }
    out.push('\n');
    for i in 0..matrix.rows() {
        let row: Vec<String> = matrix.row(i).iter().map(|&e| field.display(e)).collect();
        out.push_str(&row.join(", "));
        out.push('\n');
    }
    out
}

/// One product identity over GF(p^m)[x; theta_i]: `product = left * right`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorizationFixture {
    pub p: u32,
    pub m: u32,
    pub i: u32,
    pub product: String,
    pub left: String,
    pub right: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

pub fn read_factorization_fixtures(path: &str) -> Result<Vec<FactorizationFixture>, FixtureError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| FixtureError::Io { path: path.into(), source })?;
    Ok(serde_json::from_str(&text)?)
}

/// Verifies `product = left * right` both by multiplying out and by right
/// division with zero remainder.
pub fn verify_factorization(fx: &FactorizationFixture) -> Result<bool, FixtureError> {
    let field = Arc::new(Field::with_default_modulus(fx.p, fx.m)?);
    let product = parse_poly(&field, fx.i, &fx.product)?;
    let left = parse_poly(&field, fx.i, &fx.left)?;
    let right = parse_poly(&field, fx.i, &fx.right)?;
    if left.mul(&field, &right) != product {
        return Ok(false);
    }
    let (quot, rem): (SkewPoly<Field>, SkewPoly<Field>) = product.right_divmod(&field, &right)?;
    Ok(rem.is_zero() && quot == left)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_fixture_roundtrip() {
        let text = "# sample\nq=27 rows=2 cols=3 modulus=[1,2,0,1] rank=2 d=2\n1, t^5, 0\n0, 2, t\n";
        let fx = parse_matrix_fixture(text).unwrap();
        assert_eq!((fx.matrix.rows(), fx.matrix.cols()), (2, 3));
        assert_eq!(fx.expect_rank, Some(2));
        assert_eq!(fx.expect_d, Some(2));
        let rendered = write_matrix_fixture(
            &fx.field,
            fx.matrix.matrix(),
            fx.expect_rank,
            fx.expect_d,
        );
        let again = parse_matrix_fixture(&rendered).unwrap();
        assert_eq!(again.matrix.matrix(), fx.matrix.matrix());
    }

    #[test]
    fn header_errors() {
        assert!(parse_matrix_fixture("q=6 rows=1 cols=1 modulus=[1,1]\n0\n").is_err());
        assert!(parse_matrix_fixture("rows=1 cols=1\n0\n").is_err());
        assert!(parse_matrix_fixture("q=4 rows=2 cols=1\n0\n").is_err());
        assert!(parse_matrix_fixture("q=4 rows=1 cols=2\n0\n").is_err());
    }

    #[test]
    fn factorization_check() {
        let fx = FactorizationFixture {
            p: 3,
            m: 3,
            i: 1,
            product: "x^6 - 1".into(),
            left: "x^3 + t^4*x^2 + x + t^14".into(),
            right: "x^3 + t^17*x^2 + t^22*x + t^25".into(),
            note: None,
        };
        assert!(verify_factorization(&fx).unwrap());
        let broken = FactorizationFixture { right: "x^3 + t^17*x^2 + t^22*x + t^24".into(), ..fx };
        assert!(!verify_factorization(&broken).unwrap());
    }
}
