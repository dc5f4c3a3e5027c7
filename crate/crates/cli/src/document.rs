//! JSON input documents.
//!
//! Every scalar is an expression string over the declared symbols. Bracket
//! keys are 1-based basis positions `"i,j"` with `i < j`; matrices are lists
//! of rows, and column `j` of `phi` holds the coordinates of `φ(e_j)`.

use std::collections::BTreeMap;
use std::sync::Arc;

use acn_core::catalog::{ExampleBundle, Induction};
use acn_core::geometry::{AlmostContactData, AmbientSpace, GeometryError, LieAlgebraFrame, NordenMetric};
use acn_core::submanifold::NormalSection;
use acn_core::{Fraction, Matrix, SymbolTable, Vector};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Relation {
    pub symbol: String,
    pub square: String,
}

#[derive(Clone, Debug, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InduceBlock {
    /// `"nonorthogonal"` or `"orthogonal"`; inferred from the section when
    /// absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<i64>,
    /// `"lambda1"` or `"lambda2"`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub branch: Option<String>,
    /// Explicit `k` with `k² = a² - b²`. A fresh ruled symbol is used when
    /// absent and `a² - b²` is not a rational square.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t0: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t2: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SectionBlock {
    pub n1: Vec<String>,
    pub n2: Vec<String>,
    pub tangent: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub induce: Option<InduceBlock>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(default)]
    pub symbols: Vec<String>,
    #[serde(default)]
    pub relations: Vec<Relation>,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: BTreeMap<String, Vec<String>>,
    pub metric: Vec<Vec<String>>,
    pub phi: Vec<Vec<String>>,
    pub xi: Vec<String>,
    pub eta: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub section: Option<SectionBlock>,
}

/// A document turned into library objects over one symbol table.
#[derive(Clone, Debug)]
pub struct Built {
    pub table: Arc<SymbolTable>,
    pub space: AmbientSpace<Fraction>,
    pub section: Option<NormalSection<Fraction>>,
}

impl InputDocument {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    /// The symbol table, with `extra` symbols (and optional square rules)
    /// appended after the declared ones.
    pub fn table(&self, extra: &[(String, Option<String>)]) -> Result<Arc<SymbolTable>, CliError> {
        let names = self.symbols.iter().cloned().chain(extra.iter().map(|(s, _)| s.clone()));
        let mut t = SymbolTable::new(names).map_err(|e| CliError::field("symbols", e))?;
        for (i, r) in self.relations.iter().enumerate() {
            t = t.with_rule(&r.symbol, &r.square).map_err(|e| CliError::field(format!("relations[{i}]"), e))?;
        }
        for (s, rule) in extra {
            if let Some(rule) = rule {
                t = t.with_rule(s, rule).map_err(|e| CliError::field("induce", e))?;
            }
        }
        Ok(t.into_shared())
    }

    pub fn build(&self) -> Result<Built, CliError> {
        self.build_with(&[])
    }

    pub fn build_with(&self, extra: &[(String, Option<String>)]) -> Result<Built, CliError> {
        let t = self.table(extra)?;
        let n = self.dim;
        if self.basis.len() != n {
            return Err(CliError::Validation(format!("basis: {} names for dim {n}", self.basis.len())));
        }
        let mut brackets = Vec::new();
        for (key, v) in &self.brackets {
            let (i, j) = parse_key(key, n)?;
            brackets.push(((i, j), vector(&t, &format!("brackets[\"{key}\"]"), v, n)?));
        }
        let frame = LieAlgebraFrame::new(self.basis.clone(), brackets).map_err(geometry_error)?;
        let metric = NordenMetric::new(matrix(&t, "metric", &self.metric, n)?).map_err(geometry_error)?;
        let acd = AlmostContactData::new(
            matrix(&t, "phi", &self.phi, n)?,
            vector(&t, "xi", &self.xi, n)?,
            vector(&t, "eta", &self.eta, n)?,
        )
        .map_err(geometry_error)?;
        let space = AmbientSpace::new(frame, metric, acd).map_err(geometry_error)?;
        let section = match &self.section {
            None => None,
            Some(s) => {
                let tangent = s
                    .tangent
                    .iter()
                    .enumerate()
                    .map(|(i, v)| vector(&t, &format!("section.tangent[{i}]"), v, n))
                    .collect::<Result<Vec<_>, _>>()?;
                let sec = NormalSection::new(
                    vector(&t, "section.n1", &s.n1, n)?,
                    vector(&t, "section.n2", &s.n2, n)?,
                    tangent,
                )
                .map_err(|e| CliError::Validation(format!("section: {e}")))?;
                Some(sec)
            }
        };
        Ok(Built { table: t, space, section })
    }

    /// Document describing `space`, with the rules of `table`.
    pub fn from_space(table: &Arc<SymbolTable>, space: &AmbientSpace<Fraction>) -> Self {
        let n = space.dim();
        let mut brackets = BTreeMap::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = space.frame.structure(i, j);
                if !v.is_zero() {
                    brackets.insert(format!("{},{}", i + 1, j + 1), strings(v));
                }
            }
        }
        InputDocument {
            symbols: table.symbols().to_vec(),
            relations: table
                .rules()
                .into_iter()
                .map(|r| Relation { symbol: r.symbol, square: r.replacement.to_string() })
                .collect(),
            dim: n,
            basis: space.frame.names().to_vec(),
            brackets,
            metric: rows(space.metric.matrix()),
            phi: rows(&space.structure.phi),
            xi: strings(&space.structure.xi),
            eta: strings(&space.structure.eta),
            section: None,
        }
    }

    pub fn from_bundle(table: &Arc<SymbolTable>, bundle: &ExampleBundle) -> Self {
        let mut doc = Self::from_space(table, &bundle.ambient);
        let induce = match &bundle.induction {
            Induction::NonOrthogonal { k } => InduceBlock {
                case: Some("nonorthogonal".into()),
                epsilon: Some(1),
                branch: Some("lambda1".into()),
                k: Some(k.to_string()),
                ..Default::default()
            },
            Induction::Orthogonal { t0, t2 } => InduceBlock {
                case: Some("orthogonal".into()),
                t0: Some(t0.to_string()),
                t2: Some(t2.to_string()),
                ..Default::default()
            },
        };
        doc.section = Some(SectionBlock {
            n1: strings(&bundle.section.n1),
            n2: strings(&bundle.section.n2),
            tangent: bundle.section.tangent.iter().map(strings).collect(),
            induce: Some(induce),
        });
        doc
    }
}

fn strings(v: &Vector<Fraction>) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn rows(m: &Matrix<Fraction>) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect()
}

fn geometry_error(e: GeometryError) -> CliError {
    match e {
        GeometryError::SingularMetric => CliError::Precondition(e.to_string()),
        other => CliError::Validation(other.to_string()),
    }
}

fn parse_key(key: &str, n: usize) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Validation(format!("brackets: key \"{key}\" is not \"i,j\" with 1 <= i < j <= {n}"));
    let (i, j) = key.split_once(',').ok_or_else(bad)?;
    let i: usize = i.trim().parse().map_err(|_| bad())?;
    let j: usize = j.trim().parse().map_err(|_| bad())?;
    if i == 0 || i >= j || j > n {
        return Err(bad());
    }
    Ok((i - 1, j - 1))
}

fn scalar(t: &Arc<SymbolTable>, field: &str, text: &str) -> Result<Fraction, CliError> {
    Fraction::parse(t, text).map_err(|e| CliError::field(field, e))
}

fn vector(t: &Arc<SymbolTable>, field: &str, xs: &[String], n: usize) -> Result<Vector<Fraction>, CliError> {
    if xs.len() != n {
        return Err(CliError::Validation(format!("{field}: {} entries, expected {n}", xs.len())));
    }
    xs.iter()
        .enumerate()
        .map(|(i, x)| scalar(t, &format!("{field}[{i}]"), x))
        .collect::<Result<Vec<_>, _>>()
        .map(Vector::new)
}

fn matrix(t: &Arc<SymbolTable>, field: &str, rows: &[Vec<String>], n: usize) -> Result<Matrix<Fraction>, CliError> {
    if rows.len() != n {
        return Err(CliError::Validation(format!("{field}: {} rows, expected {n}", rows.len())));
    }
    let rows = rows
        .iter()
        .enumerate()
        .map(|(i, r)| vector(t, &format!("{field}[{i}]"), r, n).map(Vector::into_inner))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(rows).expect("square"))
}
