use std::fmt::Write;

use clap::ValueEnum;
use thiserror::Error;

use crate::corpus::DistanceMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
    Phylip,
}

const PHYLIP_LABEL_WIDTH: usize = 10;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Emitted {
    pub bytes: Vec<u8>,
    /// Diagnostics for the caller to print, such as truncated labels.
    pub warnings: Vec<String>,
}

pub fn emit(matrix: &DistanceMatrix, format: Format) -> Emitted {
    let mut out = String::new();
    let mut warnings = Vec::new();
    match format {
        Format::Tsv => {
            for label in &matrix.labels {
                out.push('\t');
                out.push_str(label);
            }
            out.push('\n');
            for (label, row) in matrix.labels.iter().zip(&matrix.values) {
                out.push_str(label);
                for v in row {
                    write!(out, "\t{v:.6}").unwrap();
                }
                out.push('\n');
            }
        }
        Format::Json => {
            out = serde_json::to_string(matrix).expect("matrix serializes");
            out.push('\n');
        }
        Format::Phylip => {
            writeln!(out, "{}", matrix.len()).unwrap();
            for (label, row) in matrix.labels.iter().zip(&matrix.values) {
                let short: String = label.chars().take(PHYLIP_LABEL_WIDTH).collect();
                if short.len() < label.len() {
                    warnings.push(format!("phylip label {label:?} truncated to {short:?}"));
                }
                write!(out, "{short:<PHYLIP_LABEL_WIDTH$}").unwrap();
                for v in row {
                    write!(out, " {v:.6}").unwrap();
                }
                out.push('\n');
            }
        }
    }
    Emitted {
        bytes: out.into_bytes(),
        warnings,
    }
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Tsv { line: usize, message: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub fn parse_tsv(text: &str) -> Result<DistanceMatrix, ParseError> {
    let mut lines = text.lines();
    let header = lines.next().ok_or(ParseError::Tsv {
        line: 1,
        message: "missing header".into(),
    })?;
    let labels: Vec<String> = header.split('\t').skip(1).map(str::to_string).collect();
    let mut values = Vec::with_capacity(labels.len());
    for (i, line) in lines.enumerate() {
        let err = |message: String| ParseError::Tsv {
            line: i + 2,
            message,
        };
        let mut cells = line.split('\t');
        let label = cells.next().unwrap_or_default();
        if labels.get(i).map(String::as_str) != Some(label) {
            return Err(err(format!(
                "row label {label:?} does not match the header"
            )));
        }
        let row = cells
            .map(|c| c.parse::<f64>().map_err(|e| err(format!("{c:?}: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != labels.len() {
            return Err(err(format!(
                "expected {} values, found {}",
                labels.len(),
                row.len()
            )));
        }
        values.push(row);
    }
    if values.len() != labels.len() {
        return Err(ParseError::Tsv {
            line: values.len() + 2,
            message: format!("expected {} rows", labels.len()),
        });
    }
    Ok(DistanceMatrix { labels, values })
}

pub fn parse_json(text: &str) -> Result<DistanceMatrix, ParseError> {
    Ok(serde_json::from_str(text)?)
}
