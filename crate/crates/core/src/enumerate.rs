//! Breadth-first enumeration of group elements by length.
//!
//! Elements are keyed by their matrix, and level `l + 1` is built from level
//! `l` by right multiplication `w -> w s_i` whenever `w(gamma_i) > 0`. For
//! maximally clustered elements the frontier can be pruned to MC elements
//! only: removing the last letter of a reduced word of an MC element leaves
//! an MC element, so every MC element of length `l + 1` extends one of
//! length `l`.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{classify_graph, CoxeterGraph};
use crate::triples::{Classifier, TripleStats};
use crate::words_roots::{GroupElement, Word};
use crate::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub length: usize,
    pub total: usize,
    pub fc: usize,
    pub fb: usize,
    pub mc: usize,
}

/// Per-length counts among maximally clustered elements only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct McRow {
    pub length: usize,
    pub fc: usize,
    pub fb: usize,
    pub mc: usize,
}

fn next_level(g: &CoxeterGraph, level: &[GroupElement]) -> Vec<GroupElement> {
    let candidates: Vec<GroupElement> = level
        .par_iter()
        .flat_map_iter(|w| (0..g.rank()).filter_map(move |i| w.extend_right(g, i)))
        .collect();
    let mut seen = HashSet::with_capacity(candidates.len());
    let mut out: Vec<GroupElement> = candidates.into_iter().filter(|e| seen.insert(e.clone())).collect();
    out.sort_unstable();
    out
}

fn classify_level(classifier: &Classifier<'_>, level: &[GroupElement]) -> Result<Vec<TripleStats>> {
    level.par_iter().map(|e| classifier.stats(e)).collect()
}

/// Census of every element up to `max_len`, split by class. Lengths past
/// the longest element get zero rows.
pub fn enumerate_by_length(g: &CoxeterGraph, max_len: usize, limits: &Limits) -> Result<Vec<CensusRow>> {
    census(g, Some(max_len), limits)
}

/// Census up to `max_len`, or until the group is exhausted when `None`
/// (an infinite group then runs into the node cap).
pub fn census(g: &CoxeterGraph, max_len: Option<usize>, limits: &Limits) -> Result<Vec<CensusRow>> {
    let classifier = Classifier::new(g, *limits);
    let mut level = vec![GroupElement::identity(g.rank())];
    let mut visited = 1usize;
    let mut rows = Vec::new();
    for length in 0.. {
        if max_len.is_some_and(|m| length > m) {
            break;
        }
        if level.is_empty() {
            if max_len.is_none() {
                break;
            }
            rows.push(CensusRow { length, total: 0, fc: 0, fb: 0, mc: 0 });
            continue;
        }
        let stats = classify_level(&classifier, &level)?;
        rows.push(CensusRow {
            length,
            total: level.len(),
            fc: stats.iter().filter(|s| s.flags.fully_commutative).count(),
            fb: stats.iter().filter(|s| s.flags.freely_braided).count(),
            mc: stats.iter().filter(|s| s.flags.maximally_clustered).count(),
        });
        if max_len != Some(length) {
            level = next_level(g, &level);
            visited += level.len();
            if visited > limits.max_nodes {
                return Err(Error::CapExceeded { limit: limits.max_nodes });
            }
        }
    }
    Ok(rows)
}

/// Maximally clustered elements grouped by length, from the pruned BFS.
#[derive(Clone, Debug)]
pub struct McLevels {
    pub levels: Vec<Vec<(GroupElement, TripleStats)>>,
    /// The frontier emptied, so `levels` holds every MC element.
    pub exhausted: bool,
}

impl McLevels {
    pub fn rows(&self) -> Vec<McRow> {
        self.levels
            .iter()
            .enumerate()
            .map(|(length, level)| McRow {
                length,
                fc: level.iter().filter(|(_, s)| s.flags.fully_commutative).count(),
                fb: level.iter().filter(|(_, s)| s.flags.freely_braided).count(),
                mc: level.len(),
            })
            .collect()
    }

    pub fn total(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn elements(&self) -> impl Iterator<Item = &GroupElement> {
        self.levels.iter().flatten().map(|(e, _)| e)
    }
}

/// Pruned BFS over maximally clustered elements, stopping when the
/// frontier empties or after `max_len` (when given).
pub fn mc_levels(g: &CoxeterGraph, max_len: Option<usize>, limits: &Limits) -> Result<McLevels> {
    let classifier = Classifier::new(g, *limits);
    let identity = GroupElement::identity(g.rank());
    let id_stats = classifier.stats(&identity)?;
    let mut levels = vec![vec![(identity, id_stats)]];
    let mut found = 1usize;
    loop {
        let length = levels.len() - 1;
        if max_len.is_some_and(|m| length >= m) {
            return Ok(McLevels { levels, exhausted: false });
        }
        let current: Vec<GroupElement> = levels[length].iter().map(|(e, _)| e.clone()).collect();
        let candidates = next_level(g, &current);
        let stats = classify_level(&classifier, &candidates)?;
        let next: Vec<(GroupElement, TripleStats)> = candidates
            .into_iter()
            .zip(stats)
            .filter(|(_, s)| s.flags.maximally_clustered)
            .collect();
        if next.is_empty() {
            return Ok(McLevels { levels, exhausted: true });
        }
        found += next.len();
        if found > limits.max_nodes {
            return Err(Error::CapExceeded { limit: limits.max_nodes });
        }
        levels.push(next);
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumerateOptions {
    /// Run on graphs that are not MC-finite; the node cap then bounds the
    /// search.
    pub override_finiteness: bool,
    pub limits: Limits,
}

/// Every maximally clustered element, as canonical words sorted by length
/// then lexicographically.
pub fn enumerate_all_mc(g: &CoxeterGraph, opts: &EnumerateOptions) -> Result<Vec<Word>> {
    if !opts.override_finiteness && !classify_graph(g).mc_finite {
        return Err(Error::NotMcFinite);
    }
    let levels = mc_levels(g, None, &opts.limits)?;
    let mut out: Vec<Word> = levels
        .levels
        .par_iter()
        .flat_map_iter(|level| level.iter().map(|(e, _)| e.canonical_word(g)))
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    #[test]
    fn a2_census() {
        let a2 = parse_graph("A2").unwrap();
        let rows = enumerate_by_length(&a2, 3, &Limits::default()).unwrap();
        let totals: Vec<usize> = rows.iter().map(|r| r.total).collect();
        assert_eq!(totals, vec![1, 2, 2, 1]);
        assert!(rows.iter().all(|r| r.mc == r.total));
        assert_eq!(rows[3].fc, 0);
    }

    #[test]
    fn a3_census_matches_known_counts() {
        let a3 = parse_graph("A3").unwrap();
        let rows = enumerate_by_length(&a3, 6, &Limits::default()).unwrap();
        assert_eq!(rows.iter().map(|r| r.total).sum::<usize>(), 24);
        assert_eq!(rows.iter().map(|r| r.mc).sum::<usize>(), 21);
        assert!(rows.iter().all(|r| r.fc <= r.fb && r.fb <= r.mc && r.mc <= r.total));
    }

    #[test]
    fn small_mc_sets() {
        let opts = EnumerateOptions::default();
        assert_eq!(enumerate_all_mc(&parse_graph("A1").unwrap(), &opts).unwrap(), vec![Word::empty(), Word::from([1])]);
        assert_eq!(enumerate_all_mc(&parse_graph("A2").unwrap(), &opts).unwrap().len(), 6);
        assert_eq!(enumerate_all_mc(&parse_graph("A3").unwrap(), &opts).unwrap().len(), 21);
    }

    #[test]
    fn refuses_infinite_without_override() {
        let tri = parse_graph("vertices: [0,1,2]\nedges: [[0,1],[1,2],[2,0]]").unwrap();
        assert_eq!(enumerate_all_mc(&tri, &EnumerateOptions::default()), Err(Error::NotMcFinite));
        let opts = EnumerateOptions { override_finiteness: true, limits: Limits { max_nodes: 200 } };
        assert_eq!(enumerate_all_mc(&tri, &opts), Err(Error::CapExceeded { limit: 200 }));
    }

    #[test]
    fn unbounded_census_stops_at_the_longest_element() {
        let a3 = parse_graph("A3").unwrap();
        let rows = census(&a3, None, &Limits::default()).unwrap();
        assert_eq!(rows.len(), 7);
        assert_eq!(rows.last().unwrap().total, 1);
        let tri = parse_graph("vertices: [0,1,2]\nedges: [[0,1],[1,2],[2,0]]").unwrap();
        assert_eq!(census(&tri, None, &Limits { max_nodes: 100 }), Err(Error::CapExceeded { limit: 100 }));
    }

    #[test]
    fn census_cap() {
        let a4 = parse_graph("A4").unwrap();
        assert_eq!(
            enumerate_by_length(&a4, 10, &Limits { max_nodes: 50 }),
            Err(Error::CapExceeded { limit: 50 })
        );
    }
}
