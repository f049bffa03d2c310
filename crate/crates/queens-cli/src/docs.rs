//! On-disk document formats.
//!
//! Digraphs are stored as `{"n": 5, "arcs": [[1, 5], [2, 3], ...]}` and
//! placements as `{"n": 5, "queens": [[1, 5], ...], "modular": true}` with
//! the `modular` flag optional. Assignment files for the `product`
//! subcommand look like `{"arcs": [{"arc": [u, v], "index": i}, ...]}`,
//! where `index` points into the `--family` list (0-based). Labels are
//! 1-based on disk, arc and queen lists are kept sorted, and saving a loaded
//! document reproduces it byte for byte.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use queens::{LabeledDigraph, Placement};

#[derive(Debug, Error)]
pub enum DocError {
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("{path}: {source}")]
    Invalid { path: String, source: queens::Error },
    #[error("document must contain an \"arcs\" or \"queens\" field")]
    UnknownKind,
}

fn invalid(path: String, source: queens::Error) -> DocError {
    DocError::Invalid { path, source }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigraphDocument {
    pub n: usize,
    pub arcs: Vec<[usize; 2]>,
}

impl DigraphDocument {
    pub fn from_digraph(d: &LabeledDigraph) -> Self {
        Self {
            n: d.n(),
            arcs: d.arcs().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_digraph(&self) -> Result<LabeledDigraph, DocError> {
        if self.n == 0 {
            return Err(invalid("n".into(), queens::Error::InvalidOrder));
        }
        let mut seen = BTreeSet::new();
        for (i, &[u, v]) in self.arcs.iter().enumerate() {
            if u == 0 || v == 0 || u > self.n || v > self.n {
                return Err(invalid(
                    format!("arcs[{i}]"),
                    queens::Error::ArcOutOfRange { u, v, n: self.n },
                ));
            }
            if !seen.insert((u, v)) {
                return Err(invalid(
                    format!("arcs[{i}]"),
                    queens::Error::DuplicateArc { u, v },
                ));
            }
        }
        Ok(LabeledDigraph::from_arcs(self.n, seen).expect("arcs validated"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlacementDocument {
    pub n: usize,
    pub queens: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modular: Option<bool>,
}

impl PlacementDocument {
    pub fn from_placement(p: &Placement, modular: Option<bool>) -> Self {
        Self {
            n: p.n(),
            queens: p.queens().iter().map(|&(r, c)| [r, c]).collect(),
            modular,
        }
    }

    pub fn to_placement(&self) -> Result<Placement, DocError> {
        if self.n == 0 {
            return Err(invalid("n".into(), queens::Error::InvalidOrder));
        }
        let mut seen = BTreeSet::new();
        for (i, &[row, col]) in self.queens.iter().enumerate() {
            if row == 0 || col == 0 || row > self.n || col > self.n {
                return Err(invalid(
                    format!("queens[{i}]"),
                    queens::Error::PositionOutOfRange {
                        row,
                        col,
                        n: self.n,
                    },
                ));
            }
            if !seen.insert((row, col)) {
                return Err(invalid(
                    format!("queens[{i}]"),
                    queens::Error::DuplicateQueen { row, col },
                ));
            }
        }
        Ok(Placement::new(self.n, seen).expect("queens validated"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssignmentEntry {
    pub arc: [usize; 2],
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssignmentDocument {
    pub arcs: Vec<AssignmentEntry>,
}

impl AssignmentDocument {
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.arcs.iter().map(|e| ((e.arc[0], e.arc[1]), e.index))
    }
}

/// Either kind of board-object document, detected by field name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Digraph(DigraphDocument),
    Placement(PlacementDocument),
}

pub fn parse_document(text: &str) -> Result<Document, DocError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let object = value.as_object().ok_or(DocError::UnknownKind)?;
    if object.contains_key("arcs") {
        Ok(Document::Digraph(serde_json::from_str(text)?))
    } else if object.contains_key("queens") {
        Ok(Document::Placement(serde_json::from_str(text)?))
    } else {
        Err(DocError::UnknownKind)
    }
}

pub fn load_document(path: &Path) -> Result<Document, DocError> {
    parse_document(&fs::read_to_string(path)?)
}

pub fn load_digraph(path: &Path) -> Result<LabeledDigraph, DocError> {
    match load_document(path)? {
        Document::Digraph(doc) => doc.to_digraph(),
        Document::Placement(_) => Err(DocError::UnknownKind),
    }
}

pub fn load_assignment(path: &Path) -> Result<AssignmentDocument, DocError> {
    Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut text = serde_json::to_string(doc).expect("documents serialize");
    text.push('\n');
    text
}

pub fn save<T: Serialize>(doc: &T, path: &Path) -> Result<(), DocError> {
    Ok(fs::write(path, to_json(doc))?)
}
