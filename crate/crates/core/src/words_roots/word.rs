use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::CoxeterGraph;

/// A finite sequence of generator labels.
///
/// Ordering is lexicographic on the label sequence, which is the order used
/// by every "lexicographically least" choice in the crate.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn new(letters: impl Into<Vec<u32>>) -> Self {
        Word(letters.into())
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn concat(parts: impl IntoIterator<Item = impl AsRef<[u32]>>) -> Word {
        let mut out = Vec::new();
        for p in parts {
            out.extend_from_slice(p.as_ref());
        }
        Word(out)
    }

    /// The contiguous subword `self[start..end]`.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// Maps labels to vertex indices, failing on letters outside `g`.
    pub fn indices(&self, g: &CoxeterGraph) -> Result<Vec<usize>> {
        self.0.iter().map(|&l| g.require_index(l)).collect()
    }

    pub(crate) fn from_indices(g: &CoxeterGraph, idx: &[usize]) -> Word {
        Word(idx.iter().map(|&i| g.label(i)).collect())
    }
}

impl AsRef<[u32]> for Word {
    fn as_ref(&self) -> &[u32] {
        &self.0
    }
}

impl From<Vec<u32>> for Word {
    fn from(v: Vec<u32>) -> Self {
        Word(v)
    }
}

impl<const N: usize> From<[u32; N]> for Word {
    fn from(v: [u32; N]) -> Self {
        Word(v.to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Accepts comma- and/or whitespace-separated labels; the empty string is
/// the empty word.
impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| Error::WordSyntax(format!("`{t}` is not a vertex label")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}
