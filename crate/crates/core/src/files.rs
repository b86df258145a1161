//! JSON formats shared with the command-line tool.
//!
//! A poset file is `{"n": 3, "lt": [[0, 1], [0, 2]]}` with `lt` listing the
//! full strict relation, transitive pairs included. A type file is
//! `{"leaves": ["XL", "RRX"]}` and parses directly into a
//! [`PosetTree`](crate::tree::PosetTree). An ambient file is a poset file
//! with optional `seed` and `strategy` fields recording how it was grown.

use serde::{Deserialize, Serialize};

use crate::poset::{FinitePoset, PosetViolation};
use crate::tree::PosetTree;

/// On-disk form of a finite poset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetFile {
    pub n: usize,
    pub lt: Vec<(usize, usize)>,
}

impl PosetFile {
    pub fn from_poset(p: &FinitePoset) -> PosetFile {
        PosetFile { n: p.n(), lt: p.pairs() }
    }

    pub fn into_poset(self) -> Result<FinitePoset, PosetViolation> {
        FinitePoset::new(self.n, self.lt)
    }
}

/// On-disk form of an ambient poset; `seed` and `strategy` are present
/// when the ambient was grown by this toolkit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AmbientFile {
    pub n: usize,
    pub lt: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strategy: Option<String>,
}

/// Errors raised while reading any of the file formats.
#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("not a valid poset: {0}")]
    Poset(#[from] PosetViolation),
}

pub fn parse_poset_json(text: &str) -> Result<FinitePoset, FileError> {
    let file: PosetFile = serde_json::from_str(text)?;
    Ok(file.into_poset()?)
}

pub fn poset_to_json(p: &FinitePoset) -> String {
    serde_json::to_string_pretty(&PosetFile::from_poset(p)).expect("poset serialization")
}

pub fn parse_type_json(text: &str) -> Result<PosetTree, FileError> {
    Ok(serde_json::from_str(text)?)
}

pub fn type_to_json(t: &PosetTree) -> String {
    serde_json::to_string_pretty(t).expect("tree serialization")
}

pub fn parse_ambient_json(text: &str) -> Result<(FinitePoset, Option<u64>, Option<String>), FileError> {
    let file: AmbientFile = serde_json::from_str(text)?;
    let poset = FinitePoset::new(file.n, file.lt)?;
    Ok((poset, file.seed, file.strategy))
}
