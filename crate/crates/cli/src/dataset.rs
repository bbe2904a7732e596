//! CSV ingestion: classical datasets to rank, and level-annotated truth
//! tables to synthesize from.

use std::path::Path;

use thiserror::Error;

use lexilog_core::semantics::Assignment;
use lexilog_core::synthesis::{LevelTable, TableError};
use lexilog_core::value::TruthValue;

#[derive(Debug, Error)]
pub enum DataError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: csv::Error,
    },
    #[error("{path}: row {row}, column `{column}`: `{text}` is not a truth value (use T/F, 1/0, or true/false)")]
    BadCell {
        path: String,
        row: usize,
        column: String,
        text: String,
    },
    #[error("{path}: row {row}: `{text}` is not a level (non-negative integer)")]
    BadLevel { path: String, row: usize, text: String },
    #[error("{path}: expected header `x1,...,xn,level`, found `{found}`")]
    BadHeader { path: String, found: String },
    #[error("{path}: {source}")]
    Table {
        path: String,
        source: TableError,
    },
}

/// T/F, 1/0, or true/false, any case.
pub fn parse_bool_cell(text: &str) -> Option<bool> {
    match text.to_ascii_lowercase().as_str() {
        "t" | "1" | "true" => Some(true),
        "f" | "0" | "false" => Some(false),
        _ => None,
    }
}

/// A classical dataset: named attribute columns, one record per row, and an
/// optional leading `id` column carried through to output.
#[derive(Debug, Clone)]
pub struct Dataset {
    pub columns: Vec<String>,
    pub ids: Option<Vec<String>>,
    pub records: Vec<Vec<bool>>,
}

fn open_reader(path: &Path) -> Result<csv::Reader<std::fs::File>, DataError> {
    csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|source| DataError::Read { path: path.display().to_string(), source })
}

impl Dataset {
    pub fn from_path(path: &Path) -> Result<Dataset, DataError> {
        let display = path.display().to_string();
        let mut reader = open_reader(path)?;
        let headers = reader
            .headers()
            .map_err(|source| DataError::Read { path: display.clone(), source })?
            .clone();
        let has_id = headers.get(0).is_some_and(|h| h.eq_ignore_ascii_case("id"));
        let columns: Vec<String> = headers
            .iter()
            .skip(usize::from(has_id))
            .map(|h| h.to_string())
            .collect();
        let mut ids = if has_id { Some(Vec::new()) } else { None };
        let mut records = Vec::new();
        for (row_index, record) in reader.records().enumerate() {
            let record =
                record.map_err(|source| DataError::Read { path: display.clone(), source })?;
            let mut fields = record.iter();
            if let Some(ids) = ids.as_mut() {
                ids.push(fields.next().unwrap_or("").to_string());
            }
            let mut row = Vec::with_capacity(columns.len());
            for (column, text) in columns.iter().zip(fields) {
                let bit = parse_bool_cell(text).ok_or_else(|| DataError::BadCell {
                    path: display.clone(),
                    row: row_index + 1,
                    column: column.clone(),
                    text: text.to_string(),
                })?;
                row.push(bit);
            }
            records.push(row);
        }
        Ok(Dataset { columns, ids, records })
    }

    /// Every record as an assignment over the attribute columns.
    pub fn assignments(&self) -> Vec<Assignment> {
        self.records
            .iter()
            .map(|record| {
                let mut assignment = Assignment::new();
                for (column, bit) in self.columns.iter().zip(record) {
                    assignment.bind(column.clone(), TruthValue::from_bool(*bit));
                }
                assignment
            })
            .collect()
    }

    /// The record's id cell, or its 1-based row number.
    pub fn label(&self, index: usize) -> String {
        match &self.ids {
            Some(ids) => ids[index].clone(),
            None => (index + 1).to_string(),
        }
    }
}

/// Reads a level table: header `x1,...,xn,level`, one row per input
/// combination, bits and a decimal level per row.
pub fn load_level_table(path: &Path) -> Result<LevelTable, DataError> {
    let display = path.display().to_string();
    let mut reader = open_reader(path)?;
    let headers = reader
        .headers()
        .map_err(|source| DataError::Read { path: display.clone(), source })?
        .clone();
    let bad_header = || DataError::BadHeader {
        path: display.clone(),
        found: headers.iter().collect::<Vec<_>>().join(","),
    };
    let width = headers.len();
    if width < 2 || !headers.get(width - 1).is_some_and(|h| h.eq_ignore_ascii_case("level")) {
        return Err(bad_header());
    }
    let arity = width - 1;
    for (i, header) in headers.iter().take(arity).enumerate() {
        if header != format!("x{}", i + 1) {
            return Err(bad_header());
        }
    }
    let mut rows = Vec::new();
    for (row_index, record) in reader.records().enumerate() {
        let record = record.map_err(|source| DataError::Read { path: display.clone(), source })?;
        let mut inputs = Vec::with_capacity(arity);
        for position in 0..arity {
            let text = record.get(position).unwrap_or("");
            let bit = parse_bool_cell(text).ok_or_else(|| DataError::BadCell {
                path: display.clone(),
                row: row_index + 1,
                column: format!("x{}", position + 1),
                text: text.to_string(),
            })?;
            inputs.push(bit);
        }
        let level_text = record.get(arity).unwrap_or("");
        let level: usize = level_text.parse().map_err(|_| DataError::BadLevel {
            path: display.clone(),
            row: row_index + 1,
            text: level_text.to_string(),
        })?;
        rows.push((inputs, level));
    }
    LevelTable::new(arity, rows).map_err(|source| DataError::Table { path: display, source })
}
