use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{classify_graph, CoxeterGraph, Reason};
use crate::words_roots::{reduced_word_graph, Word};
use crate::Limits;

/// A palindrome `i_1 ... i_n i_{n+1} i_n ... i_1` with distinct letters in
/// which every `i_q` (`q <= n`) has exactly one neighbour among the later
/// letters `i_{q+1}, ..., i_{n+1}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BraidCluster {
    word: Word,
    middle: u32,
    half_length: usize,
}

fn cluster_shape(g: &CoxeterGraph, letters: &[u32]) -> Option<usize> {
    let len = letters.len();
    if len < 3 || len.is_multiple_of(2) {
        return None;
    }
    let n = len / 2;
    if (0..n).any(|k| letters[k] != letters[len - 1 - k]) {
        return None;
    }
    let head: Vec<usize> = letters[..=n]
        .iter()
        .map(|&l| g.index_of(l))
        .collect::<Option<_>>()?;
    let distinct: BTreeSet<usize> = head.iter().copied().collect();
    if distinct.len() != head.len() {
        return None;
    }
    for q in 0..n {
        let later = head[q + 1..].iter().filter(|&&r| g.adjacent(head[q], r)).count();
        if later != 1 {
            return None;
        }
    }
    Some(n)
}

pub fn is_braid_cluster(g: &CoxeterGraph, w: &Word) -> bool {
    cluster_shape(g, w.letters()).is_some()
}

impl BraidCluster {
    pub fn new(g: &CoxeterGraph, word: Word) -> Result<Self> {
        let n = cluster_shape(g, word.letters()).ok_or_else(|| Error::NotBraidCluster(word.clone()))?;
        let middle = word.letters()[n];
        Ok(BraidCluster { word, middle, half_length: n })
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn middle(&self) -> u32 {
        self.middle
    }

    pub fn half_length(&self) -> usize {
        self.half_length
    }

    /// `i_1 ... i_{n+1}`: the distinct letters in order of first appearance.
    pub fn letters(&self) -> &[u32] {
        &self.word.letters()[..=self.half_length]
    }

    /// The part before the middle letter.
    pub fn first_half(&self) -> &[u32] {
        &self.word.letters()[..self.half_length]
    }

    /// The part after the middle letter.
    pub fn second_half(&self) -> &[u32] {
        &self.word.letters()[self.half_length + 1..]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClusterShape {
    A(usize),
    D(usize),
    E(usize),
}

/// The induced subgraph of a cluster, oriented from earlier to later letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterGraph {
    pub graph: CoxeterGraph,
    /// `(from, to)` label pairs.
    pub arrows: Vec<(u32, u32)>,
    pub sink: u32,
    pub shape: ClusterShape,
}

impl ClusterGraph {
    pub fn branch_points(&self) -> Vec<u32> {
        (0..self.graph.rank())
            .filter(|&i| self.graph.degree(i) >= 3)
            .map(|i| self.graph.label(i))
            .collect()
    }

    pub fn has_branch_point(&self) -> bool {
        !self.branch_points().is_empty()
    }

    pub fn degree_of(&self, label: u32) -> usize {
        self.graph.index_of(label).map_or(0, |i| self.graph.degree(i))
    }
}

/// Orients the induced subgraph and checks the unique-sink and ADE-shape
/// properties. A failure here means an upstream bug and is reported.
pub fn cluster_graph(g: &CoxeterGraph, c: &BraidCluster) -> Result<ClusterGraph> {
    let letters = c.letters();
    let set: BTreeSet<u32> = letters.iter().copied().collect();
    let sub = g.induced_subgraph(&set)?;
    let invalid = |reason: String| Error::ClusterGraphInvalid { cluster: c.word().clone(), reason };

    let mut arrows = Vec::new();
    for (j, &a) in letters.iter().enumerate() {
        for &b in &letters[j + 1..] {
            if sub.bond(a, b)? == 3 {
                arrows.push((a, b));
            }
        }
    }
    if arrows.len() != sub.edges().len() {
        return Err(invalid("edge without a unique orientation".into()));
    }
    let sinks: Vec<u32> = letters
        .iter()
        .copied()
        .filter(|&v| arrows.iter().all(|&(from, _)| from != v))
        .collect();
    if sinks != [c.middle()] {
        return Err(invalid(format!("sinks {sinks:?}, expected only the middle {}", c.middle())));
    }

    let report = classify_graph(&sub);
    if report.per_component.len() != 1 {
        return Err(invalid("induced subgraph is disconnected".into()));
    }
    let n = letters.len();
    let shape = match report.per_component[0].reason {
        Reason::Path => ClusterShape::A(n),
        Reason::DArm => ClusterShape::D(n),
        Reason::EArm => ClusterShape::E(n),
        other => return Err(invalid(format!("induced subgraph is not of type A, D or E ({})", other.as_str()))),
    };
    Ok(ClusterGraph { graph: sub, arrows, sink: c.middle(), shape })
}

/// Middle letter extremal in a branch-free graph, or the middle letter is
/// the unique branch point.
pub fn is_normalized(g: &CoxeterGraph, c: &BraidCluster) -> Result<bool> {
    let cg = cluster_graph(g, c)?;
    let branches = cg.branch_points();
    Ok(if branches.is_empty() {
        cg.degree_of(c.middle()) <= 1
    } else {
        branches == [c.middle()]
    })
}

/// The lexicographically least normalized braid-cluster word for the same
/// element, or `c` itself when already normalized.
pub fn normalize_cluster(g: &CoxeterGraph, c: &BraidCluster, limits: &Limits) -> Result<BraidCluster> {
    if is_normalized(g, c)? {
        return Ok(c.clone());
    }
    let words = reduced_word_graph(g, c.word(), limits)?;
    for w in &words {
        if let Ok(candidate) = BraidCluster::new(g, w.clone()) {
            if is_normalized(g, &candidate)? {
                return Ok(candidate);
            }
        }
    }
    Err(Error::NoNormalizedRepresentative { cluster: c.word().clone(), searched: words.len() })
}
