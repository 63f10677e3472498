//! System files: JSON with exact rationals written as strings.
//!
//! ```json
//! {
//!   "n": 2,
//!   "matrices": [[["0", "1"], ["1", "0"]], [["1/2", "1/2"], ["1/2", "1/2"]]],
//!   "names": ["P", "Avg"]
//! }
//! ```
//!
//! An optional `custom_polyhedron` block replaces the consensus polyhedron
//! by a centrally symmetric polygon (`n = 2` only):
//!
//! ```json
//! "custom_polyhedron": {
//!   "constraints": [{"a": ["1", "1"], "b": "1"}, ...],
//!   "face_reps": [["1", "0"], ...]
//! }
//! ```

use std::fs;
use std::path::{Path, PathBuf};

use consensus_faces::exactnum::parse_rational;
use consensus_faces::facegraph::Halfspace;
use consensus_faces::{CustomPolyhedron2D, Rational, RationalMatrix, SwitchedSystem};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemFile {
    pub n: usize,
    pub matrices: Vec<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub custom_polyhedron: Option<CustomPolyhedronBlock>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CustomPolyhedronBlock {
    pub constraints: Vec<HalfspaceEntry>,
    pub face_reps: Vec<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HalfspaceEntry {
    pub a: [String; 2],
    pub b: String,
}

/// A parsed and validated system file.
#[derive(Debug, Clone)]
pub enum LoadedSystem {
    Standard(SwitchedSystem),
    Custom {
        poly: CustomPolyhedron2D,
        matrices: Vec<RationalMatrix>,
        labels: Vec<String>,
    },
}

impl LoadedSystem {
    pub fn dim(&self) -> usize {
        match self {
            LoadedSystem::Standard(s) => s.dim(),
            LoadedSystem::Custom { .. } => 2,
        }
    }
}

pub fn load(path: &Path) -> Result<LoadedSystem, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    let file: SystemFile = serde_json::from_str(&text).map_err(|e| CliError::Parse {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    file.into_system(path)
}

impl SystemFile {
    pub fn into_system(self, path: &Path) -> Result<LoadedSystem, CliError> {
        let parse_err = |message: String| CliError::Parse {
            path: PathBuf::from(path),
            message,
        };
        let rational = |s: &str| parse_rational(s).map_err(|e| parse_err(e.to_string()));
        if self.matrices.is_empty() {
            return Err(parse_err("\"matrices\" is empty".into()));
        }
        let mut matrices = Vec::with_capacity(self.matrices.len());
        for (k, rows) in self.matrices.iter().enumerate() {
            if rows.len() != self.n {
                return Err(parse_err(format!("matrix {k} has {} rows, expected n = {}", rows.len(), self.n)));
            }
            let mut parsed = Vec::with_capacity(self.n);
            for (i, row) in rows.iter().enumerate() {
                if row.len() != self.n {
                    return Err(parse_err(format!(
                        "matrix {k} row {i} has {} entries, expected n = {}",
                        row.len(),
                        self.n
                    )));
                }
                parsed.push(row.iter().map(|s| rational(s)).collect::<Result<Vec<_>, _>>()?);
            }
            matrices.push(RationalMatrix::from_rows(parsed).map_err(|e| parse_err(format!("matrix {k}: {e}")))?);
        }
        let labels = match self.names {
            Some(names) if names.len() != matrices.len() => {
                return Err(parse_err(format!(
                    "{} names given for {} matrices",
                    names.len(),
                    matrices.len()
                )))
            }
            Some(names) => names,
            None => (0..matrices.len()).map(|i| format!("A{i}")).collect(),
        };
        let Some(custom) = self.custom_polyhedron else {
            return Ok(LoadedSystem::Standard(SwitchedSystem::with_labels(matrices, labels)?));
        };
        if self.n != 2 {
            return Err(parse_err(format!("custom polyhedra need n = 2, found {}", self.n)));
        }
        let pair = |p: &[String; 2]| -> Result<[Rational; 2], CliError> { Ok([rational(&p[0])?, rational(&p[1])?]) };
        let constraints = custom
            .constraints
            .iter()
            .map(|h| {
                Ok(Halfspace {
                    a: pair(&h.a)?,
                    b: rational(&h.b)?,
                })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        let reps = custom.face_reps.iter().map(pair).collect::<Result<Vec<_>, _>>()?;
        let poly = CustomPolyhedron2D::new(constraints, reps)?;
        Ok(LoadedSystem::Custom {
            poly,
            matrices,
            labels,
        })
    }
}
