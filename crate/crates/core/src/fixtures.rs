//! Fixture records and their parsing into algebra elements.
//!
//! Built-in fixtures are embedded at compile time; `load_*` read the same
//! schema from disk.

use crate::error::{Error, Result};
use crate::oq::OElement;
use crate::parse::{parse_scalar, parse_with, Value};
use crate::scalar::{RealForm, Scalar};
use crate::uq::{Mat2, UElement};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::path::Path;

pub const BASIS_NAMES: [&str; 3] = ["H", "X", "Y"];

/// Coefficients keyed by pair names such as `"HX"` (meaning `ω_H⊗ω_X`).
pub type PairMap = BTreeMap<String, String>;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BraidingRecord {
    pub minimal_poly: String,
    pub eigenvalue: String,
    pub eigenvectors: Vec<PairMap>,
}

/// A value printed differently in the source tables, with the corrected
/// value stored in the record itself.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Erratum {
    pub field: String,
    pub printed: String,
    pub note: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CalculusRecord {
    pub name: String,
    pub number: u32,
    pub item: u32,
    pub coideal: Vec<String>,
    #[serde(rename = "H")]
    pub h: String,
    #[serde(rename = "X")]
    pub x: String,
    #[serde(rename = "Y")]
    pub y: String,
    pub real_forms: Vec<String>,
    pub fund_repr: BTreeMap<String, [[String; 2]; 2]>,
    pub relations: Vec<String>,
    pub f_matrix: Vec<Vec<String>>,
    pub d_omega: BTreeMap<String, PairMap>,
    pub pairing_table: BTreeMap<String, Vec<String>>,
    pub right_ideal: Vec<String>,
    pub sym2_forms: Vec<PairMap>,
    pub braiding: Option<BraidingRecord>,
    #[serde(default)]
    pub errata: Vec<Erratum>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct CalculusFile {
    calculi: Vec<CalculusRecord>,
}

const CALCULI_JSON: &str = include_str!("../fixtures/calculi.json");
const COIDEALS_JSON: &str = include_str!("../fixtures/coideals.json");
const LIST_JSON: &str = include_str!("../fixtures/list.json");
const REFERENCE_JSON: &str = include_str!("../fixtures/reference.json");

/// What a sample is expected to show.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    /// A coideal of the stated dimension.
    Member,
    /// Not a coideal of the stated dimension.
    Degenerate,
    /// A coideal of the stated dimension failing the LI condition.
    NotLi,
    /// Equal to another entry of the lists.
    Duplicate,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct EntryRef {
    pub entry: String,
    pub params: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Expectation {
    pub outcome: Outcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub same_as: Option<EntryRef>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Sample {
    pub kind: String,
    pub params: BTreeMap<String, String>,
    pub expect: Expectation,
}

/// One entry of the coideal lists of dimension at most 4.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CoidealRecord {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub side_conditions: Vec<String>,
    /// Whether the entry is marked as satisfying LI.
    #[serde(default)]
    pub li: Option<bool>,
    pub samples: Vec<Sample>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct CoidealFile {
    coideals: Vec<CoidealRecord>,
}

/// One item of the list of calculi with three-dimensional universal 2-forms.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ListItem {
    pub item: u32,
    /// Coideal family and parameter values it specializes.
    pub source: String,
    pub basis: Vec<String>,
    #[serde(default)]
    pub params: BTreeMap<String, String>,
    pub two_form_dim: usize,
    pub hopf_invariant: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct ListFile {
    items: Vec<ListItem>,
}

/// Independent description of the 3D calculus.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ReferenceRecord {
    pub name: String,
    pub tangent: Vec<String>,
    pub right_ideal: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct ReferenceFile {
    references: Vec<ReferenceRecord>,
}

pub fn builtin_coideals() -> Vec<CoidealRecord> {
    serde_json::from_str::<CoidealFile>(COIDEALS_JSON)
        .expect("embedded coideal fixtures are valid")
        .coideals
}

pub fn load_coideals(path: &Path) -> Result<Vec<CoidealRecord>> {
    Ok(serde_json::from_str::<CoidealFile>(&std::fs::read_to_string(path)?)?.coideals)
}

pub fn builtin_list() -> Vec<ListItem> {
    serde_json::from_str::<ListFile>(LIST_JSON)
        .expect("embedded list fixtures are valid")
        .items
}

pub fn load_list(path: &Path) -> Result<Vec<ListItem>> {
    Ok(serde_json::from_str::<ListFile>(&std::fs::read_to_string(path)?)?.items)
}

pub fn builtin_references() -> Vec<ReferenceRecord> {
    serde_json::from_str::<ReferenceFile>(REFERENCE_JSON)
        .expect("embedded reference fixtures are valid")
        .references
}

/// Names beginning with `mu` or `nu` are group labels; everything else is
/// a scalar.
pub fn is_label_param(name: &str) -> bool {
    name.starts_with("mu") || name.starts_with("nu")
}

/// Binds sample values: labels to `f_μ`, other names to scalars.
pub fn sample_env(params: &BTreeMap<String, String>) -> Result<HashMap<String, Value>> {
    params
        .iter()
        .map(|(k, v)| {
            let val = if is_label_param(k) {
                Value::U(crate::parse::parse_u(&format!("f[{v}]"))?)
            } else {
                Value::Scalar(parse_scalar(v)?)
            };
            Ok((k.clone(), val))
        })
        .collect()
}

/// Parses `exprs` with `params` bound.
pub fn parse_basis(exprs: &[String], params: &BTreeMap<String, String>) -> Result<Vec<UElement>> {
    let env = sample_env(params)?;
    exprs.iter().map(|e| parse_with(e, &env)?.into_u()).collect()
}

impl CoidealRecord {
    pub fn basis_at(&self, params: &BTreeMap<String, String>) -> Result<Vec<UElement>> {
        parse_basis(&self.basis, params)
    }
}

impl ListItem {
    pub fn elements(&self) -> Result<Vec<UElement>> {
        parse_basis(&self.basis, &self.params)
    }
}

pub fn find_coideal<'a>(set: &'a [CoidealRecord], name: &str) -> Result<&'a CoidealRecord> {
    set.iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))
}

pub fn parse_calculi(text: &str) -> Result<Vec<CalculusRecord>> {
    Ok(serde_json::from_str::<CalculusFile>(text)?.calculi)
}

pub fn builtin_calculi() -> Vec<CalculusRecord> {
    parse_calculi(CALCULI_JSON).expect("embedded calculus fixtures are valid")
}

pub fn load_calculi(path: &Path) -> Result<Vec<CalculusRecord>> {
    parse_calculi(&std::fs::read_to_string(path)?)
}

/// Looks up a record by name (`calc3`), number (`3`) or list item
/// (`item9`).
pub fn find_calculus<'a>(set: &'a [CalculusRecord], key: &str) -> Result<&'a CalculusRecord> {
    set.iter()
        .find(|c| {
            c.name == key
                || key.parse::<u32>().is_ok_and(|p| p == c.number)
                || key.strip_prefix("item").and_then(|k| k.parse::<u32>().ok()) == Some(c.item)
        })
        .ok_or_else(|| Error::UnknownFixture(key.to_string()))
}

fn schema(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

pub fn real_form_named(name: &str) -> Result<RealForm> {
    match name {
        "SU_q(2)" => Ok(RealForm::Su2),
        "SU_q(1,1)" => Ok(RealForm::Su11),
        "SL_q(2,R)" => Ok(RealForm::Sl2R),
        _ => Err(schema(format!("unknown real form `{name}`"))),
    }
}

pub fn real_form_name(f: RealForm) -> &'static str {
    match f {
        RealForm::Su2 => "SU_q(2)",
        RealForm::Su11 => "SU_q(1,1)",
        RealForm::Sl2R => "SL_q(2,R)",
    }
}

fn basis_index(c: char) -> Result<usize> {
    BASIS_NAMES
        .iter()
        .position(|n| n.starts_with(c))
        .ok_or_else(|| schema(format!("unknown basis letter `{c}`")))
}

/// `"HX"` ↦ `(0, 1)`.
pub fn pair_name(name: &str) -> Result<(usize, usize)> {
    let cs: Vec<char> = name.chars().collect();
    match cs.as_slice() {
        [a, b] => Ok((basis_index(*a)?, basis_index(*b)?)),
        _ => Err(schema(format!("bad pair name `{name}`"))),
    }
}

/// Coordinates on `ω_i⊗ω_j`, index `3i + j`.
pub fn pair_vector(m: &PairMap) -> Result<Vec<Scalar>> {
    let mut v = vec![Scalar::zero(); 9];
    for (k, c) in m {
        let (i, j) = pair_name(k)?;
        v[3 * i + j] = &v[3 * i + j] + &parse_scalar(c)?;
    }
    Ok(v)
}

impl CalculusRecord {
    pub fn coideal_gens(&self) -> Result<Vec<UElement>> {
        self.coideal.iter().map(|s| crate::parse::parse_u(s)).collect()
    }

    pub fn basis(&self) -> Result<Vec<UElement>> {
        [&self.h, &self.x, &self.y]
            .iter()
            .map(|s| crate::parse::parse_u(s))
            .collect()
    }

    /// `H`, `X`, `Y` bound to the given elements.
    pub fn env(basis: &[UElement]) -> HashMap<String, Value> {
        BASIS_NAMES
            .iter()
            .zip(basis)
            .map(|(n, x)| (n.to_string(), Value::U(x.clone())))
            .collect()
    }

    pub fn f_matrix(&self, basis: &[UElement]) -> Result<Vec<Vec<UElement>>> {
        let env = Self::env(basis);
        if self.f_matrix.len() != 3 || self.f_matrix.iter().any(|r| r.len() != 3) {
            return Err(schema(format!("{}: f_matrix must be 3×3", self.name)));
        }
        self.f_matrix
            .iter()
            .map(|row| row.iter().map(|s| parse_with(s, &env)?.into_u()).collect())
            .collect()
    }

    /// Each relation `lhs = rhs` as `lhs − rhs`.
    pub fn relations(&self, basis: &[UElement]) -> Result<Vec<UElement>> {
        let env = Self::env(basis);
        self.relations
            .iter()
            .map(|r| {
                let (l, rhs) = r
                    .split_once('=')
                    .ok_or_else(|| schema(format!("relation without `=`: {r}")))?;
                Ok(parse_with(l, &env)?.into_u()?.sub(&parse_with(rhs, &env)?.into_u()?))
            })
            .collect()
    }

    pub fn fundamental(&self) -> Result<Vec<Mat2>> {
        BASIS_NAMES
            .iter()
            .map(|n| {
                let m = self
                    .fund_repr
                    .get(*n)
                    .ok_or_else(|| schema(format!("{}: fund_repr lacks {n}", self.name)))?;
                let mut out = Mat2::zero();
                for r in 0..2 {
                    for c in 0..2 {
                        out.0[r][c] = parse_scalar(&m[r][c])?;
                    }
                }
                Ok(out)
            })
            .collect()
    }

    pub fn pairing_rows(&self) -> Result<Vec<Vec<Scalar>>> {
        BASIS_NAMES
            .iter()
            .map(|n| {
                let row = self
                    .pairing_table
                    .get(*n)
                    .ok_or_else(|| schema(format!("{}: pairing_table lacks {n}", self.name)))?;
                if row.len() != 9 {
                    return Err(schema(format!("{}: pairing row {n} needs 9 entries", self.name)));
                }
                row.iter().map(|s| parse_scalar(s)).collect()
            })
            .collect()
    }

    pub fn right_ideal(&self) -> Result<Vec<OElement>> {
        self.right_ideal.iter().map(|s| crate::parse::parse_o(s)).collect()
    }

    pub fn sym2_vectors(&self) -> Result<Vec<Vec<Scalar>>> {
        self.sym2_forms.iter().map(pair_vector).collect()
    }

    /// `dω_c` as tensor coordinates, in the order `H, X, Y`.
    pub fn d_omega_tensors(&self) -> Result<Vec<Vec<Scalar>>> {
        BASIS_NAMES
            .iter()
            .map(|n| {
                self.d_omega
                    .get(*n)
                    .map(pair_vector)
                    .unwrap_or_else(|| Ok(vec![Scalar::zero(); 9]))
            })
            .collect()
    }

    pub fn real_form_set(&self) -> Result<Vec<RealForm>> {
        let mut v: Vec<RealForm> = self
            .real_forms
            .iter()
            .map(|s| real_form_named(s))
            .collect::<Result<_>>()?;
        v.sort();
        Ok(v)
    }
}

impl BraidingRecord {
    pub fn eigenvalue(&self) -> Result<Scalar> {
        parse_scalar(&self.eigenvalue)
    }

    pub fn vectors(&self) -> Result<Vec<Vec<Scalar>>> {
        self.eigenvectors.iter().map(pair_vector).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_records_parse() {
        let set = builtin_calculi();
        assert_eq!(set.len(), 11);
        for c in &set {
            let b = c.basis().unwrap();
            c.coideal_gens().unwrap();
            c.f_matrix(&b).unwrap();
            c.relations(&b).unwrap();
            c.fundamental().unwrap();
            c.pairing_rows().unwrap();
            c.right_ideal().unwrap();
            assert_eq!(c.sym2_vectors().unwrap().len(), 6);
            c.d_omega_tensors().unwrap();
            c.real_form_set().unwrap();
        }
        assert_eq!(set.iter().filter(|c| c.braiding.is_some()).count(), 9);
    }

    #[test]
    fn lookup() {
        let set = builtin_calculi();
        assert_eq!(find_calculus(&set, "calc2").unwrap().item, 8);
        assert_eq!(find_calculus(&set, "item17").unwrap().number, 9);
        assert_eq!(find_calculus(&set, "10").unwrap().item, 18);
        assert!(find_calculus(&set, "calc12").is_err());
    }

    #[test]
    fn pair_names() {
        assert_eq!(pair_name("YH").unwrap(), (2, 0));
        assert!(pair_name("HZ").is_err());
    }
}
