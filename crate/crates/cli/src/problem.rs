//! JSON problem files.
//!
//! ```json
//! {"curve": {"n": 3, "omega": "x2^2 - x1^3 - x1^2", "rhos": ["2*x1^2 + 2*x1"]},
//!  "queries": {"lambda": "x1^2 - 11*x1 + 24", "thetas": ["...", "..."]},
//!  "options": {"eps": "1/1000000"}}
//! ```
//!
//! Polynomials are strings in the grammar of [`crate::parse`] or lists of
//! `[e1, e2, "coeff"]` triples.

use ccq_core::params::{OneDimParam, ZeroDimParam};
use ccq_core::poly::{BiPoly, Rational, Term, UniPoly};
use serde::{Deserialize, Serialize};

use crate::parse::{parse_bivariate, parse_rational, parse_univariate, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Int(i64),
    Text(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolyRepr {
    Text(String),
    Terms(Vec<(u32, u32, Coeff)>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveSpec {
    pub n: usize,
    pub omega: PolyRepr,
    #[serde(default)]
    pub rhos: Vec<PolyRepr>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuerySpec {
    pub lambda: PolyRepr,
    pub thetas: Vec<PolyRepr>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dot: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub svg: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub curve: CurveSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub queries: Option<QuerySpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub options: Option<Options>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Problem {
    pub curve: OneDimParam,
    pub queries: Option<ZeroDimParam>,
    pub eps: Option<Rational>,
    pub dot: Option<String>,
    pub svg: Option<String>,
}

#[derive(Debug)]
pub enum LoadError {
    Json(serde_json::Error),
    /// JSON path of the offending field and the polynomial parse error.
    Poly(String, ParseError),
}

impl std::fmt::Display for LoadError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LoadError::Json(e) => write!(f, "line {}, column {}: {e}", e.line(), e.column()),
            LoadError::Poly(path, e) => write!(f, "{path}: {e}"),
        }
    }
}

impl std::error::Error for LoadError {}

fn coeff(c: &Coeff, path: &str) -> Result<Rational, LoadError> {
    match c {
        Coeff::Int(v) => Ok(Rational::from_integer((*v).into())),
        Coeff::Text(s) => parse_rational(s).map_err(|e| LoadError::Poly(path.to_string(), e)),
    }
}

fn bivariate(p: &PolyRepr, path: &str) -> Result<BiPoly, LoadError> {
    match p {
        PolyRepr::Text(s) => parse_bivariate(s).map_err(|e| LoadError::Poly(path.to_string(), e)),
        PolyRepr::Terms(ts) => {
            let terms = ts
                .iter()
                .map(|(e1, e2, c)| Ok(Term { e1: *e1, e2: *e2, coeff: coeff(c, path)? }))
                .collect::<Result<Vec<_>, LoadError>>()?;
            Ok(BiPoly::from_terms(terms))
        }
    }
}

fn univariate(p: &PolyRepr, path: &str) -> Result<UniPoly, LoadError> {
    match p {
        PolyRepr::Text(s) => parse_univariate(s).map_err(|e| LoadError::Poly(path.to_string(), e)),
        PolyRepr::Terms(ts) => {
            if let Some((_, _, _)) = ts.iter().find(|t| t.1 != 0) {
                let e = ParseError { column: 1, message: "x2 exponent in a univariate polynomial".into() };
                return Err(LoadError::Poly(path.to_string(), e));
            }
            let b = bivariate(p, path)?;
            Ok(b.coeffs_in_x2().into_iter().next().unwrap_or_else(UniPoly::zero))
        }
    }
}

impl ProblemFile {
    pub fn from_json(text: &str) -> Result<ProblemFile, LoadError> {
        serde_json::from_str(text).map_err(LoadError::Json)
    }

    pub fn to_problem(&self) -> Result<Problem, LoadError> {
        let c = &self.curve;
        let omega = bivariate(&c.omega, "curve.omega")?;
        let rhos = c
            .rhos
            .iter()
            .enumerate()
            .map(|(i, r)| bivariate(r, &format!("curve.rhos[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        let queries = match &self.queries {
            None => None,
            Some(q) => Some(ZeroDimParam {
                n: c.n,
                lambda: univariate(&q.lambda, "queries.lambda")?,
                thetas: q
                    .thetas
                    .iter()
                    .enumerate()
                    .map(|(i, t)| univariate(t, &format!("queries.thetas[{i}]")))
                    .collect::<Result<Vec<_>, _>>()?,
            }),
        };
        let opts = self.options.clone().unwrap_or_default();
        let eps = match &opts.eps {
            None => None,
            Some(s) => Some(parse_rational(s).map_err(|e| LoadError::Poly("options.eps".into(), e))?),
        };
        Ok(Problem {
            curve: OneDimParam { n: c.n, omega, rhos },
            queries,
            eps,
            dot: opts.dot,
            svg: opts.svg,
        })
    }

    /// Canonical file for a pair of parametrizations, polynomials as strings.
    pub fn from_params(curve: &OneDimParam, queries: Option<&ZeroDimParam>) -> ProblemFile {
        ProblemFile {
            curve: CurveSpec {
                n: curve.n,
                omega: PolyRepr::Text(curve.omega.to_string()),
                rhos: curve.rhos.iter().map(|r| PolyRepr::Text(r.to_string())).collect(),
            },
            queries: queries.map(|q| QuerySpec {
                lambda: PolyRepr::Text(q.lambda.display("x1")),
                thetas: q.thetas.iter().map(|t| PolyRepr::Text(t.display("x1"))).collect(),
            }),
            options: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triples_and_strings_agree() {
        let a = ProblemFile::from_json(r#"{"curve":{"n":2,"omega":"x2^2 - x1^3 - x1^2"}}"#).unwrap();
        let b = ProblemFile::from_json(r#"{"curve":{"n":2,"omega":[[0,2,1],[3,0,"-1"],[2,0,-1]]}}"#).unwrap();
        assert_eq!(a.to_problem().unwrap(), b.to_problem().unwrap());
    }

    #[test]
    fn errors_name_the_field() {
        let f = ProblemFile::from_json(r#"{"curve":{"n":2,"omega":"x2^2 + "}}"#).unwrap();
        let e = f.to_problem().unwrap_err().to_string();
        assert!(e.starts_with("curve.omega: column"), "{e}");
        let e = ProblemFile::from_json("{\n\"curve\": 3}").unwrap_err().to_string();
        assert!(e.starts_with("line 2"), "{e}");
    }
}
