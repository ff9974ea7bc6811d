//! Simply laced Coxeter graphs and the MC-finiteness classification.
//!
//! A graph is a set of generator labels plus undirected edges; an edge
//! between `i` and `j` means `m_ij = 3`, a non-edge means `m_ij = 2`.
//! Internally vertices are addressed by their position in the sorted label
//! list, and every root or matrix in the crate uses that order.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterGraph {
    labels: Vec<u32>,
    neighbors: Vec<Vec<usize>>,
    adjacent: Vec<bool>,
}

impl CoxeterGraph {
    /// Builds a graph from vertex labels and an edge list.
    ///
    /// Edges are unordered; listing `{i, j}` twice (in either orientation)
    /// is an error, as is a self-loop or an endpoint not in `vertices`.
    pub fn new(vertices: impl IntoIterator<Item = u32>, edges: &[(u32, u32)]) -> Result<Self> {
        let set: BTreeSet<u32> = vertices.into_iter().collect();
        let labels: Vec<u32> = set.into_iter().collect();
        let n = labels.len();
        let mut graph = CoxeterGraph {
            labels,
            neighbors: vec![Vec::new(); n],
            adjacent: vec![false; n * n],
        };
        for &(a, b) in edges {
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let i = graph.index_of(a).ok_or(Error::UnknownLabel(a))?;
            let j = graph.index_of(b).ok_or(Error::UnknownLabel(b))?;
            if graph.adjacent[i * n + j] {
                return Err(Error::DuplicateEdge(a.min(b), a.max(b)));
            }
            graph.adjacent[i * n + j] = true;
            graph.adjacent[j * n + i] = true;
            graph.neighbors[i].push(j);
            graph.neighbors[j].push(i);
        }
        for list in &mut graph.neighbors {
            list.sort_unstable();
        }
        Ok(graph)
    }

    /// Type `A_n`: the path `1 - 2 - ... - n`.
    pub fn type_a(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::FamilyOutOfRange { family: 'A', n, min: 1 });
        }
        let edges: Vec<_> = (1..n as u32).map(|i| (i, i + 1)).collect();
        Self::new(1..=n as u32, &edges)
    }

    /// Type `D_n`: the path `1 - ... - (n-1)` with `n` attached to `n-2`.
    pub fn type_d(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::FamilyOutOfRange { family: 'D', n, min: 4 });
        }
        let n32 = n as u32;
        let mut edges: Vec<_> = (1..n32 - 1).map(|i| (i, i + 1)).collect();
        edges.push((n32 - 2, n32));
        Self::new(1..=n32, &edges)
    }

    /// Type `E_n`: the path `1 - 2 - ... - (n-1)` with vertex `0` attached
    /// to `3`. Deleting `0` leaves `A_{n-1}`, deleting `1` leaves `D_{n-1}`.
    pub fn type_e(n: usize) -> Result<Self> {
        if n < 6 {
            return Err(Error::FamilyOutOfRange { family: 'E', n, min: 6 });
        }
        let n32 = n as u32;
        let mut edges: Vec<_> = (1..n32 - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, 3));
        Self::new(0..n32, &edges)
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> u32 {
        self.labels[index]
    }

    pub fn index_of(&self, label: u32) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    pub(crate) fn require_index(&self, label: u32) -> Result<usize> {
        self.index_of(label).ok_or(Error::UnknownLabel(label))
    }

    /// Neighbour indices of the vertex at `index`.
    pub fn neighbors(&self, index: usize) -> &[usize] {
        &self.neighbors[index]
    }

    pub fn degree(&self, index: usize) -> usize {
        self.neighbors[index].len()
    }

    /// Adjacency by vertex index.
    #[inline]
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacent[i * self.rank() + j]
    }

    /// The Coxeter matrix entry `m_ij` for two labels.
    pub fn bond(&self, a: u32, b: u32) -> Result<u32> {
        let i = self.require_index(a)?;
        let j = self.require_index(b)?;
        Ok(if i == j {
            1
        } else if self.adjacent(i, j) {
            3
        } else {
            2
        })
    }

    /// Edges as label pairs `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for i in 0..self.rank() {
            for &j in &self.neighbors[i] {
                if i < j {
                    out.push((self.labels[i], self.labels[j]));
                }
            }
        }
        out
    }

    /// Connected components as sorted lists of vertex indices.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.neighbors[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn induced_subgraph(&self, letters: &BTreeSet<u32>) -> Result<CoxeterGraph> {
        for &l in letters {
            self.require_index(l)?;
        }
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .filter(|(a, b)| letters.contains(a) && letters.contains(b))
            .collect();
        CoxeterGraph::new(letters.iter().copied(), &edges)
    }
}

#[derive(Deserialize)]
struct GraphDocument {
    vertices: Vec<u32>,
    #[serde(default)]
    edges: Vec<[u32; 2]>,
}

fn parse_document(text: &str) -> Result<GraphDocument> {
    if let Ok(doc) = serde_json::from_str::<GraphDocument>(text) {
        return Ok(doc);
    }
    // `key: <json value>` lines
    let mut vertices = None;
    let mut edges = None;
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| Error::GraphSpec(format!("expected `key: value`, got `{line}`")))?;
        match key.trim() {
            "vertices" => {
                vertices = Some(
                    serde_json::from_str::<Vec<u32>>(value.trim())
                        .map_err(|e| Error::GraphSpec(format!("vertices: {e}")))?,
                )
            }
            "edges" => {
                edges = Some(
                    serde_json::from_str::<Vec<[u32; 2]>>(value.trim())
                        .map_err(|e| Error::GraphSpec(format!("edges: {e}")))?,
                )
            }
            other => return Err(Error::GraphSpec(format!("unknown field `{other}`"))),
        }
    }
    Ok(GraphDocument {
        vertices: vertices.ok_or_else(|| Error::GraphSpec("missing `vertices`".into()))?,
        edges: edges.unwrap_or_default(),
    })
}

/// Parses `A<n>`, `D<n>`, `E<n>` or a `vertices`/`edges` document (JSON
/// object, or one `key: value` line per field).
pub fn parse_graph(spec: &str) -> Result<CoxeterGraph> {
    let spec = spec.trim();
    let mut chars = spec.chars();
    if let Some(family @ ('A' | 'D' | 'E')) = chars.next() {
        let rest = chars.as_str();
        if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
            let n: usize = rest
                .parse()
                .map_err(|_| Error::GraphSpec(format!("bad rank in `{spec}`")))?;
            return match family {
                'A' => CoxeterGraph::type_a(n),
                'D' => CoxeterGraph::type_d(n),
                _ => CoxeterGraph::type_e(n),
            };
        }
    }
    if spec.is_empty() {
        return Err(Error::GraphSpec("empty spec".into()));
    }
    let doc = parse_document(spec)?;
    let mut seen = BTreeSet::new();
    for &v in &doc.vertices {
        if !seen.insert(v) {
            return Err(Error::GraphSpec(format!("duplicate vertex {v}")));
        }
    }
    let edges: Vec<_> = doc.edges.iter().map(|e| (e[0], e[1])).collect();
    CoxeterGraph::new(doc.vertices, &edges)
}

impl FromStr for CoxeterGraph {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_graph(s)
    }
}

impl fmt::Display for CoxeterGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges().iter().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "vertices {:?}, edges [{}]", self.labels, edges.join(", "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Reason {
    #[serde(rename = "path")]
    Path,
    #[serde(rename = "D-arm")]
    DArm,
    #[serde(rename = "E-arm")]
    EArm,
    #[serde(rename = "cycle")]
    Cycle,
    #[serde(rename = "branch-degree")]
    BranchDegree,
    #[serde(rename = "two-branches")]
    TwoBranches,
    #[serde(rename = "long-arms")]
    LongArms,
}

impl Reason {
    pub fn as_str(self) -> &'static str {
        match self {
            Reason::Path => "path",
            Reason::DArm => "D-arm",
            Reason::EArm => "E-arm",
            Reason::Cycle => "cycle",
            Reason::BranchDegree => "branch-degree",
            Reason::TwoBranches => "two-branches",
            Reason::LongArms => "long-arms",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentVerdict {
    pub vertices: Vec<u32>,
    pub mc_finite: bool,
    pub reason: Reason,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinitenessReport {
    pub mc_finite: bool,
    pub per_component: Vec<ComponentVerdict>,
}

/// Arm lengths (vertex counts) hanging off `center` in a tree component,
/// sorted ascending.
fn arm_lengths(g: &CoxeterGraph, center: usize) -> Vec<usize> {
    let mut arms: Vec<usize> = g
        .neighbors(center)
        .iter()
        .map(|&start| {
            let (mut prev, mut cur, mut len) = (center, start, 1);
            loop {
                let next: Vec<usize> = g.neighbors(cur).iter().copied().filter(|&u| u != prev).collect();
                match next.as_slice() {
                    [u] => {
                        prev = cur;
                        cur = *u;
                        len += 1;
                    }
                    _ => break len,
                }
            }
        })
        .collect();
    arms.sort_unstable();
    arms
}

fn classify_component(g: &CoxeterGraph, comp: &[usize]) -> (bool, Reason) {
    let edge_count: usize = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
    if edge_count >= comp.len() {
        return (false, Reason::Cycle);
    }
    if comp.iter().any(|&v| g.degree(v) >= 4) {
        return (false, Reason::BranchDegree);
    }
    let branches: Vec<usize> = comp.iter().copied().filter(|&v| g.degree(v) == 3).collect();
    match branches.as_slice() {
        [] => (true, Reason::Path),
        [center] => {
            let arms = arm_lengths(g, *center);
            match (arms[0], arms[1]) {
                (1, 1) => (true, Reason::DArm),
                (1, 2) => (true, Reason::EArm),
                _ => (false, Reason::LongArms),
            }
        }
        _ => (false, Reason::TwoBranches),
    }
}

/// Decides whether every component is a subgraph of some `E_n`; by the
/// finiteness equivalence this answers MC-, FB- and FC-finiteness at once.
pub fn classify_graph(g: &CoxeterGraph) -> FinitenessReport {
    let per_component: Vec<ComponentVerdict> = g
        .components()
        .into_iter()
        .map(|comp| {
            let (mc_finite, reason) = classify_component(g, &comp);
            ComponentVerdict {
                vertices: comp.iter().map(|&v| g.label(v)).collect(),
                mc_finite,
                reason,
            }
        })
        .collect();
    FinitenessReport {
        mc_finite: per_component.iter().all(|c| c.mc_finite),
        per_component,
    }
}

/// Star with three arms of the given vertex counts; centre is labelled 0.
pub fn star(arms: [usize; 3]) -> CoxeterGraph {
    let mut edges = Vec::new();
    let mut next = 1u32;
    for len in arms {
        let mut prev = 0u32;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    CoxeterGraph::new(0..next, &edges).expect("star edges are well formed")
}
