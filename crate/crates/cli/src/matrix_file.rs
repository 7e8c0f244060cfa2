//! The on-disk matrix format: `{"n": 2, "entries": [[re, im], ...]}` with the
//! `n²` entries in row-major order.

use std::fs;
use std::path::Path;

use expcommute_core::{ComplexMatrix, ComplexScalar};
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::number::{Cplx, Real};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub n: usize,
    pub entries: Vec<Cplx>,
}

impl MatrixFile {
    pub fn from_matrix(m: &ComplexMatrix) -> Self {
        MatrixFile { n: m.n(), entries: m.entries().iter().map(|&z| z.into()).collect() }
    }

    pub fn to_matrix(&self) -> Result<ComplexMatrix, CliError> {
        let entries = self.entries.iter().map(|&c| ComplexScalar::from(c)).collect();
        Ok(ComplexMatrix::new(self.n, entries)?)
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| e.to_string())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("matrix files always serialize");
        s.push('\n');
        s
    }

    /// Reads, parses and validates a matrix file.
    pub fn load(path: &Path) -> Result<ComplexMatrix, CliError> {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
        let file = Self::parse(&text).map_err(|message| CliError::Parse { path: path.into(), message })?;
        file.to_matrix().map_err(|e| match e {
            CliError::Core(e) => CliError::Parse { path: path.into(), message: e.to_string() },
            other => other,
        })
    }

    pub fn save(&self, path: &Path) -> Result<(), CliError> {
        fs::write(path, self.to_json()).map_err(|source| CliError::Io { path: path.into(), source })
    }

    pub fn real(n: usize, values: &[f64]) -> Self {
        MatrixFile { n, entries: values.iter().map(|&x| Cplx(Real(x), Real(0.0))).collect() }
    }
}
