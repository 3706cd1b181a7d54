//! On-disk tensor formats and input resolution.
//!
//! `.json` files hold a [`TensorDocument`]; any other extension is read and
//! written as a plain-text matrix (whitespace-separated rows, blank lines
//! between layers).

use std::fs;
use std::path::Path;

use daa_core::{fixture, CompoundRecipe, IntTensor, Variant};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecipeEcho {
    pub variant: String,
    pub k: u32,
    pub m: usize,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed_a: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed_b: Option<String>,
}

impl From<&CompoundRecipe> for RecipeEcho {
    fn from(r: &CompoundRecipe) -> Self {
        Self {
            variant: r.variant.name().to_string(),
            k: r.k,
            m: r.m,
            n: r.n,
            seed_a: r.seed_a.clone(),
            seed_b: r.seed_b.clone(),
        }
    }
}

impl RecipeEcho {
    pub fn to_recipe(&self) -> Result<CompoundRecipe, CliError> {
        let variant: Variant = self.variant.parse()?;
        let mut recipe = CompoundRecipe::new(variant, self.k, self.m, self.n)?;
        recipe.seed_a = self.seed_a.clone();
        recipe.seed_b = self.seed_b.clone();
        Ok(recipe)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorDocument {
    pub dims: usize,
    pub side: usize,
    pub data: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recipe: Option<RecipeEcho>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl TensorDocument {
    pub fn new(tensor: &IntTensor) -> Self {
        Self {
            dims: tensor.dims(),
            side: tensor.side(),
            data: tensor.data().to_vec(),
            recipe: None,
            name: None,
        }
    }

    pub fn tensor(&self) -> Result<IntTensor, CliError> {
        Ok(IntTensor::new(self.dims, self.side, self.data.clone())?)
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let doc: Self = serde_json::from_str(text)
            .map_err(|e| CliError::Input(format!("malformed tensor document: {e}")))?;
        doc.tensor()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }
}

/// Parses the plain-text matrix format. The side is the length of the first
/// row and the number of axes follows from the element count.
pub fn parse_text(text: &str) -> Result<IntTensor, CliError> {
    let rows: Vec<Vec<i64>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            l.split_whitespace()
                .map(|tok| {
                    tok.parse::<i64>()
                        .map_err(|_| CliError::Input(format!("not an integer: {tok:?}")))
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let side = rows.first().map_or(0, Vec::len);
    if side == 0 {
        return Err(CliError::Input("empty matrix".into()));
    }
    if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != side) {
        return Err(CliError::Input(format!(
            "row {i} has {} entries, expected {side}",
            row.len()
        )));
    }
    let total = rows.len() * side;
    let mut dims = 2;
    let mut volume = side * side;
    while side > 1 && volume < total {
        volume *= side;
        dims += 1;
    }
    if volume != total {
        return Err(CliError::Input(format!(
            "{} rows of length {side} do not form a hypercube",
            rows.len()
        )));
    }
    Ok(IntTensor::new(dims, side, rows.concat())?)
}

fn is_json(path: &Path) -> bool {
    path.extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("json"))
}

pub fn read_document(path: &Path) -> Result<TensorDocument, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    if is_json(path) {
        TensorDocument::from_json(&text)
    } else {
        Ok(TensorDocument::new(&parse_text(&text)?))
    }
}

/// Writes `doc` in the format chosen by the extension of `path`.
pub fn write_document(path: &Path, doc: &TensorDocument) -> Result<(), CliError> {
    let text = if is_json(path) {
        doc.to_json() + "\n"
    } else {
        doc.tensor()?.to_string()
    };
    fs::write(path, text)
        .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))
}

/// Resolves a fixture name first, then a file path.
pub fn resolve(reference: &str) -> Result<TensorDocument, CliError> {
    if let Ok(entry) = fixture(reference) {
        let mut doc = TensorDocument::new(&entry.tensor);
        doc.name = Some(entry.name.to_string());
        return Ok(doc);
    }
    let path = Path::new(reference);
    if !path.exists() {
        return Err(CliError::Input(format!(
            "{reference:?} is neither a fixture name nor an existing file"
        )));
    }
    read_document(path)
}
