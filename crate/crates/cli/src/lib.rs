//! Corpus front end for the information set-distance: byte encodings,
//! pairwise distance matrices and their serialized forms.

pub mod corpus;
pub mod emit;
pub mod encode;
pub mod error;

pub use corpus::{build_matrix, load_documents, DistanceMatrix, Document, MatrixOutcome};
pub use emit::{emit, parse_json, parse_tsv, Emitted, Format};
pub use encode::{encode, Encoding};
pub use error::CliError;
