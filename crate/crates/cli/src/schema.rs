//! JSON documents printed by `--format json`.
//!
//! Every document is an object carrying `schema_version` and `command`
//! next to the command-specific fields below. Bump [`SCHEMA_VERSION`] on
//! any incompatible change.

use maxclust::enumerate::CensusRow;
use maxclust::triples::TripleReport;
use maxclust::words_roots::BraidKind;
use maxclust::{FinitenessReport, Root, Word};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub schema_version: u32,
    pub command: String,
    #[serde(flatten)]
    pub body: T,
}

impl<T> Envelope<T> {
    pub fn new(command: &str, body: T) -> Self {
        Envelope { schema_version: SCHEMA_VERSION, command: command.to_string(), body }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub vertices: Vec<u32>,
    pub edges: Vec<(u32, u32)>,
    pub report: FinitenessReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyDoc {
    pub report: TripleReport,
}

/// `roots[q]` belongs to word position `q` (0-based, left to right).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSeqDoc {
    pub word: Word,
    pub roots: Vec<Root>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Move {
    pub pos: usize,
    pub kind: BraidKind,
    pub result: Word,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MovesDoc {
    pub word: Word,
    pub moves: Vec<Move>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractDoc {
    pub word: Word,
    /// Bracketed form, e.g. `3 [1 2 1]`.
    pub contracted: String,
    pub contracted_word: Word,
    pub plain: Vec<Word>,
    pub clusters: Vec<Word>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiDoc {
    pub word: Word,
    /// The cluster index used, or `null` for the full reduction.
    pub index: Option<usize>,
    pub image: Word,
    pub n_tilde_w: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusDoc {
    pub rows: Vec<CensusRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct McAllDoc {
    pub count: usize,
    /// False when `--max-length` stopped the search early.
    pub complete: bool,
    /// Canonical words by length then lexicographically; omitted with `--count`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub words: Option<Vec<Word>>,
}
