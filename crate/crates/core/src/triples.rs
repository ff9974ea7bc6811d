//! Inversion triples, contractible triples and the element classes built on
//! them.
//!
//! A contractible triple is found wherever some reduced word of `w` admits a
//! long braid move. Rather than walking every reduced word, we walk the
//! factorizations `w = x * y` with `l(w) = l(x) + l(y)`: whenever `x` has two
//! adjacent right descents `i`, `j`, the word `u (iji) v` is reduced for
//! `w` and its three roots are `y^{-1}{gamma_i, gamma_i + gamma_j, gamma_j}`.
//! The number of such `x` is the size of a weak-order interval, far smaller
//! than the number of reduced words.

use std::collections::{BTreeSet, HashSet, VecDeque};

use dashmap::DashMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::CoxeterGraph;
use crate::words_roots::{
    commutation_class, evaluate_word, reduced_word_graph, root_sequence, GroupElement, Root, Word,
};
use crate::Limits;

/// `{low_a, low_b, high}` with `high = low_a + low_b`; the lows are stored
/// in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct InversionTriple {
    pub low_a: Root,
    pub low_b: Root,
    pub high: Root,
    pub contractible: bool,
}

impl InversionTriple {
    pub fn new(a: Root, b: Root, contractible: bool) -> Self {
        let high = &a + &b;
        let (low_a, low_b) = if a <= b { (a, b) } else { (b, a) };
        InversionTriple { low_a, low_b, high, contractible }
    }

    pub fn roots(&self) -> [&Root; 3] {
        [&self.low_a, &self.low_b, &self.high]
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.roots().contains(&r)
    }

    /// Number of roots shared with `other` (compared by value).
    pub fn shared(&self, other: &InversionTriple) -> usize {
        self.roots().iter().filter(|r| other.contains(r)).count()
    }

    pub fn intersects(&self, other: &InversionTriple) -> bool {
        self.shared(other) > 0
    }

    pub fn same_roots(&self, other: &InversionTriple) -> bool {
        self.low_a == other.low_a && self.low_b == other.low_b && self.high == other.high
    }
}

pub fn inversion_set(g: &CoxeterGraph, w: &Word) -> Result<BTreeSet<Root>> {
    Ok(root_sequence(g, w)?.0.into_iter().collect())
}

fn triples_in(roots: &BTreeSet<Root>) -> BTreeSet<InversionTriple> {
    let list: Vec<&Root> = roots.iter().collect();
    let mut out = BTreeSet::new();
    for (k, a) in list.iter().enumerate() {
        for b in &list[k + 1..] {
            if roots.contains(&(*a + *b)) {
                out.insert(InversionTriple::new((*a).clone(), (*b).clone(), false));
            }
        }
    }
    out
}

/// All triples `{a, b, a + b}` inside `Phi(w)`, contractible flag unset.
pub fn inversion_triples(g: &CoxeterGraph, w: &Word) -> Result<BTreeSet<InversionTriple>> {
    Ok(triples_in(&inversion_set(g, w)?))
}

/// Contractible triples of an element, by walking its left factors.
pub fn contractible_triples_of(
    g: &CoxeterGraph,
    w: &GroupElement,
    limits: &Limits,
) -> Result<BTreeSet<InversionTriple>> {
    let n = g.rank();
    let mut out = BTreeSet::new();
    let mut seen: HashSet<GroupElement> = HashSet::from([w.clone()]);
    // (x, y^{-1}) with w = x y.
    let mut queue = VecDeque::from([(w.clone(), GroupElement::identity(n))]);
    while let Some((x, y_inv)) = queue.pop_front() {
        let descents = x.right_descents();
        for (k, &i) in descents.iter().enumerate() {
            for &j in &descents[k + 1..] {
                if g.adjacent(i, j) {
                    let a = Root { coeffs: y_inv.column(i).to_vec() };
                    let b = Root { coeffs: y_inv.column(j).to_vec() };
                    out.insert(InversionTriple::new(a, b, true));
                }
            }
        }
        for &i in &descents {
            let next = x.times_generator(g, i);
            if seen.insert(next.clone()) {
                if seen.len() > limits.max_nodes {
                    return Err(Error::CapExceeded { limit: limits.max_nodes });
                }
                queue.push_back((next, y_inv.times_generator(g, i)));
            }
        }
    }
    Ok(out)
}

fn reduced_element(g: &CoxeterGraph, w: &Word) -> Result<GroupElement> {
    let e = evaluate_word(g, w)?;
    if e.length() != w.len() {
        return Err(Error::NotReduced(w.clone()));
    }
    Ok(e)
}

pub fn contractible_triples(
    g: &CoxeterGraph,
    w: &Word,
    limits: &Limits,
) -> Result<BTreeSet<InversionTriple>> {
    contractible_triples_of(g, &reduced_element(g, w)?, limits)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementFlags {
    pub fully_commutative: bool,
    pub freely_braided: bool,
    pub maximally_clustered: bool,
}

/// Counts and flags derived from the contractible triples alone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleStats {
    pub n_w: usize,
    pub n_tilde_w: usize,
    /// Contractible triples are pairwise disjoint (clause (b) of the freely
    /// braided definition, recorded separately from clustering).
    pub pairwise_disjoint: bool,
    pub flags: ElementFlags,
}

impl TripleStats {
    pub fn from_contractible(triples: &BTreeSet<InversionTriple>) -> Self {
        let list: Vec<&InversionTriple> = triples.iter().collect();
        let highs: BTreeSet<&Root> = list.iter().map(|t| &t.high).collect();
        let mut clustered = true;
        let mut disjoint = true;
        for (k, t) in list.iter().enumerate() {
            for u in &list[k + 1..] {
                if t.intersects(u) {
                    disjoint = false;
                    if t.high != u.high {
                        clustered = false;
                    }
                }
            }
        }
        TripleStats {
            n_w: list.len(),
            n_tilde_w: highs.len(),
            pairwise_disjoint: disjoint,
            flags: ElementFlags {
                fully_commutative: list.is_empty(),
                freely_braided: clustered && disjoint,
                maximally_clustered: clustered,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleReport {
    pub word: Word,
    pub triples: Vec<InversionTriple>,
    pub n_w: usize,
    pub n_tilde_w: usize,
    pub pairwise_disjoint: bool,
    pub flags: ElementFlags,
}

/// Full triple analysis of a reduced word.
pub fn classify_element(g: &CoxeterGraph, w: &Word, limits: &Limits) -> Result<TripleReport> {
    let inversions = inversion_set(g, w)?;
    let contractible = contractible_triples(g, w, limits)?;
    let stats = TripleStats::from_contractible(&contractible);
    let triples = triples_in(&inversions)
        .into_iter()
        .map(|t| {
            let c = contractible.contains(&InversionTriple { contractible: true, ..t.clone() });
            InversionTriple { contractible: c, ..t }
        })
        .collect();
    Ok(TripleReport {
        word: w.clone(),
        triples,
        n_w: stats.n_w,
        n_tilde_w: stats.n_tilde_w,
        pairwise_disjoint: stats.pairwise_disjoint,
        flags: stats.flags,
    })
}

/// Fully commutative by definition: every reduced word lies in the
/// commutation class of `w`.
pub fn is_fully_commutative_by_definition(g: &CoxeterGraph, w: &Word, limits: &Limits) -> Result<bool> {
    let all = reduced_word_graph(g, w, limits)?;
    let short = commutation_class(g, w, limits)?;
    Ok(all.len() == short.len())
}

pub fn is_maximally_clustered(g: &CoxeterGraph, w: &Word, limits: &Limits) -> Result<bool> {
    let t = contractible_triples(g, w, limits)?;
    Ok(TripleStats::from_contractible(&t).flags.maximally_clustered)
}

/// Every contiguous subword of an MC reduced word is reduced and MC.
pub fn check_subword_heredity(g: &CoxeterGraph, w: &Word, limits: &Limits) -> Result<bool> {
    if !is_maximally_clustered(g, w, limits)? {
        return Err(Error::PreconditionViolated(format!(
            "{w} is not a reduced word of a maximally clustered element"
        )));
    }
    for start in 0..w.len() {
        for end in start + 1..=w.len() {
            let sub = w.slice(start, end);
            match is_maximally_clustered(g, &sub, limits) {
                Ok(true) => {}
                Ok(false) | Err(Error::NotReduced(_)) => return Ok(false),
                Err(e) => return Err(e),
            }
        }
    }
    Ok(true)
}

/// Memoized [`TripleStats`] per element, shareable across threads.
pub struct Classifier<'g> {
    graph: &'g CoxeterGraph,
    limits: Limits,
    memo: DashMap<GroupElement, TripleStats>,
}

impl<'g> Classifier<'g> {
    pub fn new(graph: &'g CoxeterGraph, limits: Limits) -> Self {
        Classifier { graph, limits, memo: DashMap::new() }
    }

    pub fn graph(&self) -> &'g CoxeterGraph {
        self.graph
    }

    pub fn stats(&self, e: &GroupElement) -> Result<TripleStats> {
        if let Some(s) = self.memo.get(e) {
            return Ok(*s);
        }
        let t = contractible_triples_of(self.graph, e, &self.limits)?;
        let s = TripleStats::from_contractible(&t);
        self.memo.insert(e.clone(), s);
        Ok(s)
    }

    pub fn stats_of_word(&self, w: &Word) -> Result<TripleStats> {
        self.stats(&reduced_element(self.graph, w)?)
    }

    pub fn cached(&self) -> usize {
        self.memo.len()
    }
}
