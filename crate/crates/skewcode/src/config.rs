//! Job configuration documents: field description, automorphism index,
//! block lengths, the six component polynomials in the text grammar, and
//! optional Gray-matrix/budget overrides. Unknown keys are rejected.

use serde::{Deserialize, Serialize};
use std::sync::Arc;
use thiserror::Error;

use crate::distance::DistanceBudget;
use crate::doublecode::{Components, DoubleCodeSpec};
use crate::field::{Field, FieldError};
use crate::gray::{GrayError, GrayMatrix};
use crate::skewpoly::{parse_poly, PolyError};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot parse config: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Gray(#[from] GrayError),
    #[error("automorphism index {i} must lie below m = {m}")]
    AutoIndex { i: u32, m: u32 },
    #[error("block lengths must be at least 1")]
    BadLength,
}

/// Field description block: `{p, m, modulus, label}`; modulus coefficients
/// ascending, optional when a built-in default exists.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct FieldConfig {
    pub p: u32,
    pub m: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub modulus: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub label: Option<String>,
}

impl FieldConfig {
    pub fn build(&self) -> Result<Arc<Field>, FieldError> {
        let field = match &self.modulus {
            Some(m) => Field::new(self.p, self.m, m, self.label.clone())?,
            None => Field::with_default_modulus(self.p, self.m)?,
        };
        Ok(Arc::new(field))
    }

    pub fn of_field(field: &Field) -> FieldConfig {
        FieldConfig {
            p: field.p(),
            m: field.m(),
            modulus: Some(field.modulus().to_vec()),
            label: field.label().map(str::to_owned),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct BudgetConfig {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_ops: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_secs: Option<u64>,
}

impl BudgetConfig {
    pub fn to_budget(&self, base: DistanceBudget) -> DistanceBudget {
        DistanceBudget {
            max_ops: self.max_ops.unwrap_or(base.max_ops),
            max_secs: self.max_secs.or(base.max_secs),
        }
    }
}

/// One code job: everything needed to build, evaluate and report.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub field: FieldConfig,
    pub i: u32,
    pub r: usize,
    pub s: usize,
    pub g_v: String,
    pub g_vp: String,
    #[serde(default = "zero_poly")]
    pub l_v: String,
    #[serde(default = "zero_poly")]
    pub l_vp: String,
    pub h_v: String,
    pub h_vp: String,
    /// Optional Gray matrix override, row-major element tokens.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gray: Option<[[String; 2]; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub budget: Option<BudgetConfig>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub format: Option<String>,
}

fn zero_poly() -> String {
    "0".into()
}

impl JobConfig {
    pub fn from_json(text: &str) -> Result<JobConfig, ConfigError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn from_path(path: &str) -> Result<JobConfig, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| ConfigError::Io { path: path.into(), source })?;
        JobConfig::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn build_field(&self) -> Result<Arc<Field>, ConfigError> {
        let field = self.field.build()?;
        if self.i >= field.m() {
            return Err(ConfigError::AutoIndex { i: self.i, m: field.m() });
        }
        Ok(field)
    }

    pub fn build_spec(&self) -> Result<DoubleCodeSpec, ConfigError> {
        if self.r == 0 || self.s == 0 {
            return Err(ConfigError::BadLength);
        }
        let field = self.build_field()?;
        let pp = |text: &str| parse_poly(&field, self.i, text);
        let comp = Components {
            g_v: pp(&self.g_v)?,
            g_vp: pp(&self.g_vp)?,
            l_v: pp(&self.l_v)?,
            l_vp: pp(&self.l_vp)?,
            h_v: pp(&self.h_v)?,
            h_vp: pp(&self.h_vp)?,
        };
        Ok(DoubleCodeSpec::from_components(field, self.i, self.r, self.s, &comp))
    }

    pub fn build_gray(&self, field: &Arc<Field>) -> Result<GrayMatrix, ConfigError> {
        match &self.gray {
            None => Ok(GrayMatrix::default_for(field)?),
            Some(rows) => {
                let e = |t: &String| field.parse_element(t);
                let n = [e(&rows[0][0])?, e(&rows[0][1])?, e(&rows[1][0])?, e(&rows[1][1])?];
                Ok(GrayMatrix::new(field, n)?)
            }
        }
    }

    pub fn budget(&self, base: DistanceBudget) -> DistanceBudget {
        match &self.budget {
            Some(b) => b.to_budget(base),
            None => base,
        }
    }

    /// Canonical re-emission: polynomials re-rendered from their parsed
    /// forms, modulus pinned explicitly.
    pub fn canonicalize(&self) -> Result<JobConfig, ConfigError> {
        let field = self.build_field()?;
        let spec = self.build_spec()?;
        let c = spec.components();
        let disp = |p: &crate::skewpoly::SkewPoly<Field>| p.display(&field);
        Ok(JobConfig {
            field: FieldConfig::of_field(&field),
            i: self.i,
            r: self.r,
            s: self.s,
            g_v: disp(&c.g_v),
            g_vp: disp(&c.g_vp),
            l_v: disp(&c.l_v),
            l_vp: disp(&c.l_vp),
            h_v: disp(&c.h_v),
            h_vp: disp(&c.h_vp),
            gray: self.gray.clone(),
            budget: self.budget.clone(),
            format: self.format.clone(),
        })
    }
}
