use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use setdist_core::{dist, map_string, BinaryString, FiniteSet, MapperConfig};

use crate::encode::{encode, Encoding};
use crate::error::CliError;

#[derive(Clone, Debug)]
pub struct Document {
    pub label: String,
    pub payload: BinaryString,
    pub byte_length: usize,
}

impl Document {
    pub fn from_bytes(
        label: impl Into<String>,
        raw: &[u8],
        encoding: Encoding,
    ) -> Result<Self, CliError> {
        let label = label.into();
        let payload = encode(raw, encoding).map_err(|source| CliError::Encode {
            label: label.clone(),
            source,
        })?;
        Ok(Self {
            payload: payload.with_label(label.clone()),
            label,
            byte_length: raw.len(),
        })
    }
}

/// Symmetric matrix of pairwise distances in bits, rows in label order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistanceMatrix {
    pub labels: Vec<String>,
    #[serde(rename = "matrix")]
    pub values: Vec<Vec<f64>>,
}

impl DistanceMatrix {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.len();
        self.values.len() == n
            && self.values.iter().all(|row| row.len() == n)
            && (0..n).all(|i| {
                self.values[i][i] == 0.0 && (0..i).all(|j| self.values[i][j] == self.values[j][i])
            })
    }
}

#[derive(Clone, Debug)]
pub struct MatrixOutcome {
    pub matrix: DistanceMatrix,
    /// Labels dropped because their mapped set had fewer than two elements.
    pub skipped: Vec<String>,
}

fn list_dir(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let io = |source| CliError::Io {
        path: dir.to_path_buf(),
        source,
    };
    let mut files = Vec::new();
    for entry in fs::read_dir(dir).map_err(io)? {
        let path = entry.map_err(io)?.path();
        if path.is_file() {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

/// Expands directories (top-level regular files, sorted by name) and reads
/// every file. Labels are file names unless two collide, in which case the
/// paths as given are used.
pub fn load_documents(inputs: &[PathBuf], encoding: Encoding) -> Result<Vec<Document>, CliError> {
    let mut paths = Vec::new();
    for input in inputs {
        if input.is_dir() {
            paths.extend(list_dir(input)?);
        } else {
            paths.push(input.clone());
        }
    }

    let names: Vec<String> = paths
        .iter()
        .map(|p| {
            p.file_name()
                .map(|n| n.to_string_lossy().into_owned())
                .unwrap_or_else(|| p.display().to_string())
        })
        .collect();
    let unique: HashSet<&String> = names.iter().collect();
    let labels: Vec<String> = if unique.len() == names.len() {
        names
    } else {
        paths.iter().map(|p| p.display().to_string()).collect()
    };
    let distinct: HashSet<&String> = labels.iter().collect();
    if distinct.len() != labels.len() {
        return Err(CliError::Usage(
            "the same file was given more than once".into(),
        ));
    }

    paths
        .iter()
        .zip(labels)
        .map(|(path, label)| {
            let raw = fs::read(path).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            Document::from_bytes(label, &raw, encoding)
        })
        .collect()
}

/// Maps every document once and fills the distance matrix in parallel.
pub fn build_matrix(
    docs: &[Document],
    cfg: &MapperConfig,
    skip_degenerate: bool,
) -> Result<MatrixOutcome, CliError> {
    let mapped: Vec<Result<FiniteSet, setdist_core::Error>> = docs
        .par_iter()
        .map(|d| map_string(&d.payload, cfg))
        .collect();

    let mut kept: Vec<(&Document, FiniteSet)> = Vec::with_capacity(docs.len());
    let mut degenerate = Vec::new();
    for (doc, result) in docs.iter().zip(mapped) {
        match result {
            Ok(set) => kept.push((doc, set)),
            Err(setdist_core::Error::Degenerate { .. }) => degenerate.push(doc.label.clone()),
            Err(source) => {
                return Err(CliError::Map {
                    label: doc.label.clone(),
                    source,
                })
            }
        }
    }
    if !degenerate.is_empty() && !skip_degenerate {
        return Err(CliError::Degenerate { labels: degenerate });
    }
    if kept.len() < 2 {
        return Err(CliError::Input(format!(
            "a distance matrix needs at least 2 usable documents, found {}",
            kept.len()
        )));
    }

    let n = kept.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let distances: Vec<f64> = pairs
        .par_iter()
        .map(|&(i, j)| {
            dist(&kept[i].1, &kept[j].1)
                .expect("mapped sets are non-empty")
                .bits()
        })
        .collect();

    let mut values = vec![vec![0.0; n]; n];
    for (&(i, j), d) in pairs.iter().zip(distances) {
        values[i][j] = d;
        values[j][i] = d;
    }
    Ok(MatrixOutcome {
        matrix: DistanceMatrix {
            labels: kept.iter().map(|(d, _)| d.label.clone()).collect(),
            values,
        },
        skipped: degenerate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use setdist_core::dist_strings;

    fn doc(label: &str, bits: &str) -> Document {
        Document::from_bytes(label, bits.as_bytes(), Encoding::BitstringText).unwrap()
    }

    #[test]
    fn identical_documents() {
        let docs = [doc("a", "10010110"), doc("b", "10010110")];
        let out = build_matrix(&docs, &MapperConfig::chunk(4), false).unwrap();
        assert_eq!(out.matrix.values, vec![vec![0.0, 0.0], vec![0.0, 0.0]]);
    }

    #[test]
    fn disjoint_words() {
        let docs = [doc("a", "10010110"), doc("b", "11110000")];
        let out = build_matrix(&docs, &MapperConfig::chunk(4), false).unwrap();
        assert_eq!(out.matrix.values[0][1], 2.0);
        assert_eq!(out.matrix.values[1][0], 2.0);
    }

    #[test]
    fn entries_match_pairwise_distances() {
        let docs = [
            doc("a", "0001101001000101"),
            doc("b", "0110100110010110"),
            doc("c", "1111000011110001"),
        ];
        let cfg = MapperConfig::Lz76;
        let m = build_matrix(&docs, &cfg, false).unwrap().matrix;
        assert!(m.is_symmetric());
        for i in 0..3 {
            for j in 0..3 {
                let expected = dist_strings(&docs[i].payload, &docs[j].payload, &cfg).unwrap();
                assert_eq!(m.values[i][j], expected.bits());
            }
        }
    }

    #[test]
    fn degenerate_documents() {
        let docs = [
            doc("a", "10010110"),
            doc("flat", "11111111"),
            doc("b", "11110000"),
        ];
        let cfg = MapperConfig::chunk(4);
        match build_matrix(&docs, &cfg, false) {
            Err(CliError::Degenerate { labels }) => assert_eq!(labels, ["flat"]),
            other => panic!("unexpected {other:?}"),
        }
        let out = build_matrix(&docs, &cfg, true).unwrap();
        assert_eq!(out.skipped, ["flat"]);
        assert_eq!(out.matrix.labels, ["a", "b"]);
    }

    #[test]
    fn too_few_documents() {
        let docs = [doc("a", "10010110")];
        assert!(matches!(
            build_matrix(&docs, &MapperConfig::chunk(4), false),
            Err(CliError::Input(_))
        ));
    }

    #[test]
    fn short_document_is_input_error() {
        let docs = [doc("a", "10010110"), doc("b", "10")];
        let err = build_matrix(&docs, &MapperConfig::window(2), false).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }
}
