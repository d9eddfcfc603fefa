//! JSON description of a quadratic pair with optional modules and settings.
//!
//! See `docs/document-format.md` for the schema.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::liealg::{InvariantForm, LieAlgebra, QuadraticPair};
use crate::scalar::{Field, Scalar};
use crate::specrep::GModule;

pub const DEFAULT_CAP: usize = 3;

fn default_cap() -> usize {
    DEFAULT_CAP
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Settings {
    #[serde(default = "default_cap")]
    pub cap: usize,
    #[serde(default)]
    pub field: Field,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { cap: DEFAULT_CAP, field: Field::Rational }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub pair: [String; 2],
    pub value: BTreeMap<String, Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleBlock {
    pub name: String,
    pub dim: usize,
    pub action: BTreeMap<String, Vec<Vec<Scalar>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairDocument {
    pub name: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub description: String,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    pub form: Vec<Vec<Scalar>>,
    #[serde(default)]
    pub subalgebra: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub modules: Vec<ModuleBlock>,
    #[serde(default)]
    pub settings: Settings,
}

impl PairDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: PairDocument = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        doc.check_shape()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    fn index(&self, label: &str, at: &str) -> Result<usize> {
        self.basis
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::Schema(format!("{at}: unknown basis label `{label}`")))
    }

    fn check_scalar(&self, x: &Scalar, at: &str) -> Result<()> {
        if self.settings.field.admits(x) {
            Ok(())
        } else {
            Err(Error::Schema(format!("{at}: `{x}` is not in the field {}", self.settings.field)))
        }
    }

    fn check_shape(&self) -> Result<()> {
        let n = self.basis.len();
        for (i, l) in self.basis.iter().enumerate() {
            if l.is_empty() || self.basis[..i].contains(l) {
                return Err(Error::Schema(format!("basis[{i}]: empty or repeated label `{l}`")));
            }
        }
        for (k, b) in self.brackets.iter().enumerate() {
            let at = format!("brackets[{k}]");
            self.index(&b.pair[0], &at)?;
            self.index(&b.pair[1], &at)?;
            for (l, x) in &b.value {
                self.index(l, &format!("{at}.value"))?;
                self.check_scalar(x, &format!("{at}.value.{l}"))?;
            }
        }
        if self.form.len() != n {
            return Err(Error::Schema(format!("form: expected {n} rows, found {}", self.form.len())));
        }
        for (i, row) in self.form.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Schema(format!("form[{i}]: expected {n} entries, found {}", row.len())));
            }
            for (j, x) in row.iter().enumerate() {
                self.check_scalar(x, &format!("form[{i}][{j}]"))?;
            }
        }
        for l in &self.subalgebra {
            self.index(l, "subalgebra")?;
        }
        for (k, m) in self.modules.iter().enumerate() {
            let at = format!("modules[{k}] ({})", m.name);
            for l in m.action.keys() {
                self.index(l, &format!("{at}.action"))?;
            }
            for l in &self.basis {
                let rows =
                    m.action.get(l).ok_or_else(|| Error::Schema(format!("{at}.action: missing matrix for `{l}`")))?;
                if rows.len() != m.dim || rows.iter().any(|r| r.len() != m.dim) {
                    return Err(Error::Schema(format!("{at}.action.{l}: expected a {0}x{0} matrix", m.dim)));
                }
                for (i, r) in rows.iter().enumerate() {
                    for (j, x) in r.iter().enumerate() {
                        self.check_scalar(x, &format!("{at}.action.{l}[{i}][{j}]"))?;
                    }
                }
            }
        }
        Ok(())
    }

    /// Structure constants with antisymmetric fill; no Lie-algebra axioms are checked.
    pub fn lie_algebra_unchecked(&self) -> Result<LieAlgebra> {
        let n = self.basis.len();
        let mut c: Vec<Vec<Option<Vec<Scalar>>>> = vec![vec![None; n]; n];
        for (k, b) in self.brackets.iter().enumerate() {
            let at = format!("brackets[{k}]");
            let i = self.index(&b.pair[0], &at)?;
            let j = self.index(&b.pair[1], &at)?;
            let mut v = vec![Scalar::zero(); n];
            for (l, x) in &b.value {
                v[self.index(l, &at)?] = x.clone();
            }
            let neg: Vec<Scalar> = v.iter().map(|x| -x).collect();
            if i == j && v.iter().any(|x| !x.is_zero()) {
                return Err(Error::Schema(format!("{at}: [{0}, {0}] must vanish", b.pair[0])));
            }
            for (a, bb, val) in [(i, j, v), (j, i, neg)] {
                match &c[a][bb] {
                    Some(old) if *old != val => {
                        return Err(Error::Schema(format!(
                            "{at}: conflicts with an earlier entry for [{}, {}]",
                            self.basis[a], self.basis[bb]
                        )))
                    }
                    _ => c[a][bb] = Some(val),
                }
            }
        }
        let constants = c
            .into_iter()
            .map(|row| row.into_iter().map(|v| v.unwrap_or_else(|| vec![Scalar::zero(); n])).collect())
            .collect();
        LieAlgebra::new_unchecked(self.basis.clone(), constants)
    }

    pub fn form(&self) -> InvariantForm {
        InvariantForm::new(self.form.clone()).expect("shape checked")
    }

    pub fn subalgebra_indices(&self) -> Result<Vec<usize>> {
        self.subalgebra.iter().map(|l| self.index(l, "subalgebra")).collect()
    }

    /// Full validation into a quadratic pair.
    pub fn to_pair(&self) -> Result<QuadraticPair> {
        let g = self.lie_algebra_unchecked()?;
        QuadraticPair::new(g, self.form(), self.subalgebra_indices()?)
    }

    pub fn module_names(&self) -> Vec<&str> {
        self.modules.iter().map(|m| m.name.as_str()).collect()
    }

    /// The named module, with its representation property checked against `g`.
    pub fn module(&self, name: &str, g: &LieAlgebra) -> Result<GModule> {
        let m = self
            .modules
            .iter()
            .find(|m| m.name == name)
            .ok_or_else(|| Error::Schema(format!("no module named `{name}`")))?;
        let action = self.basis.iter().map(|l| Matrix::from_rows(m.action[l].clone())).collect();
        GModule::new(m.name.clone(), g, action)
    }
}
