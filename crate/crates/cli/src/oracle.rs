//! Brute-force report for a small finite matrix given inline.

use conekit::irreducibility;
use conekit::{ExactMatrix, FiniteMatrix};
use serde::{Deserialize, Serialize};

use crate::document::{format_rational, parse_rational, DocumentError};
use crate::report::{Tool, REPORT_VERSION};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct OracleReport {
    pub report_version: u32,
    pub tool: Tool,
    pub oracle: Oracle,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Oracle {
    pub size: usize,
    pub matrix: Vec<Vec<String>>,
    pub invariant_zero_sets: Vec<Vec<usize>>,
    pub strongly_connected: bool,
    pub irreducible: bool,
}

/// Rows separated by `;`, entries by commas or whitespace:
/// `"0 1; 1 0"`.
pub fn parse_matrix(text: &str) -> Result<ExactMatrix, DocumentError> {
    let mut rows = vec![];
    for (i, row) in text.split(';').enumerate() {
        let mut entries = vec![];
        for (j, cell) in row.split(|c: char| c == ',' || c.is_whitespace()).filter(|c| !c.is_empty()).enumerate() {
            let at = || format!("$[{i}][{j}]");
            let v = parse_rational(cell)
                .ok_or_else(|| DocumentError::Validation { path: at(), message: format!("malformed rational {cell:?}") })?;
            entries.push(v);
        }
        rows.push(entries);
    }
    FiniteMatrix::new(rows).map_err(|e| DocumentError::Validation { path: "$".into(), message: e.to_string() })
}

pub fn run(matrix: &ExactMatrix) -> conekit::Result<OracleReport> {
    let sets = irreducibility::brute_force_invariant_zero_sets(matrix)?;
    let n = matrix.size();
    let irreducible = sets.len() == 2 && sets[0].is_empty() && sets[1].len() == n;
    Ok(OracleReport {
        report_version: REPORT_VERSION,
        tool: Tool { name: "conekit".into(), version: env!("CARGO_PKG_VERSION").into() },
        oracle: Oracle {
            size: n,
            matrix: matrix.rows().iter().map(|r| r.iter().map(format_rational).collect()).collect(),
            invariant_zero_sets: sets,
            strongly_connected: irreducibility::is_strongly_connected(matrix),
            irreducible,
        },
    })
}
