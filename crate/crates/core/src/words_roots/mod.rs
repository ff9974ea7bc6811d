//! Words, roots and group elements: the reflection representation, reduced
//! words, root sequences, braid moves and the closures they generate.

mod element;
mod root;
mod word;

use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

pub use element::{canonical_form, evaluate_word, GroupElement};
pub use root::{pairing, reflect, Root};
pub use word::Word;

use crate::error::{Error, Result};
use crate::graph::CoxeterGraph;
use crate::Limits;

/// The positive roots `(r_1, ..., r_n)` of a reduced word, `r_1` belonging
/// to the last letter.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootSequence(pub Vec<Root>);

impl RootSequence {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn roots(&self) -> &[Root] {
        &self.0
    }

    /// Root belonging to the letter at word position `pos`.
    pub fn at_position(&self, pos: usize) -> &Root {
        &self.0[self.0.len() - 1 - pos]
    }
}

/// Root sequence of an index word, or `None` if the word is not reduced.
pub(crate) fn root_sequence_indices(g: &CoxeterGraph, idx: &[usize]) -> Option<Vec<Root>> {
    let mut suffix = GroupElement::identity(g.rank());
    let mut out = Vec::with_capacity(idx.len());
    for &i in idx.iter().rev() {
        let r = Root { coeffs: suffix.column(i).to_vec() };
        if !r.is_positive() {
            return None;
        }
        out.push(r);
        suffix.mul_generator_raw(g, i);
    }
    Some(out)
}

pub(crate) fn is_reduced_indices(g: &CoxeterGraph, idx: &[usize]) -> bool {
    let mut suffix = GroupElement::identity(g.rank());
    for &i in idx.iter().rev() {
        if suffix.has_right_descent(i) {
            return false;
        }
        suffix.mul_generator_raw(g, i);
    }
    true
}

/// Right-to-left descent scan: the word is reduced iff every root-sequence
/// entry comes out positive.
pub fn is_reduced(g: &CoxeterGraph, w: &Word) -> Result<bool> {
    Ok(is_reduced_indices(g, &w.indices(g)?))
}

pub fn root_sequence(g: &CoxeterGraph, w: &Word) -> Result<RootSequence> {
    let idx = w.indices(g)?;
    root_sequence_indices(g, &idx)
        .map(RootSequence)
        .ok_or_else(|| Error::NotReduced(w.clone()))
}

/// Inverts [`root_sequence`]: `r_q` pulled back through the letters already
/// recovered must be a simple root, which names the next letter.
pub fn word_from_root_sequence(g: &CoxeterGraph, rs: &RootSequence) -> Result<Word> {
    let n = g.rank();
    let mut letters_rev: Vec<usize> = Vec::with_capacity(rs.len());
    for (q, r) in rs.roots().iter().enumerate() {
        if r.coeffs.len() != n {
            return Err(Error::NotRealizable(format!("root {r} has wrong dimension for rank {n}")));
        }
        if !r.is_positive() {
            return Err(Error::NotRealizable(format!("entry {} = {r} is not positive", q + 1)));
        }
        // r_q = s_{i_n} ... s_{i_{n-q+2}} (gamma); undo the reflections.
        let mut v = r.coeffs.clone();
        for &i in &letters_rev {
            let mut sum = -v[i];
            for &j in g.neighbors(i) {
                sum += v[j];
            }
            v[i] = sum;
        }
        let pulled = Root { coeffs: v };
        let i = pulled.simple_index().ok_or_else(|| {
            Error::NotRealizable(format!(
                "entry {} = {r} pulls back to {pulled}, which is not a simple root",
                q + 1
            ))
        })?;
        letters_rev.push(i);
    }
    letters_rev.reverse();
    if !is_reduced_indices(g, &letters_rev) {
        return Err(Error::NotRealizable("recovered word is not reduced".into()));
    }
    Ok(Word::from_indices(g, &letters_rev))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BraidKind {
    Short,
    Long,
}

/// The braid move available at `pos` of an index word, if any.
pub(crate) fn braid_at(g: &CoxeterGraph, idx: &[usize], pos: usize) -> Option<BraidKind> {
    let a = *idx.get(pos)?;
    let b = *idx.get(pos + 1)?;
    if a != b && !g.adjacent(a, b) {
        return Some(BraidKind::Short);
    }
    match idx.get(pos + 2) {
        Some(&c) if c == a && g.adjacent(a, b) => Some(BraidKind::Long),
        _ => None,
    }
}

fn apply_in_place(idx: &mut [usize], pos: usize, kind: BraidKind) {
    match kind {
        BraidKind::Short => idx.swap(pos, pos + 1),
        BraidKind::Long => {
            let (a, b) = (idx[pos], idx[pos + 1]);
            idx[pos] = b;
            idx[pos + 1] = a;
            idx[pos + 2] = b;
        }
    }
}

/// Applies the short (`ij -> ji`) or long (`iji -> jij`) move at the
/// 0-based position `pos`.
pub fn apply_braid_move(g: &CoxeterGraph, w: &Word, pos: usize) -> Result<Word> {
    let mut idx = w.indices(g)?;
    if !is_reduced_indices(g, &idx) {
        return Err(Error::NotReduced(w.clone()));
    }
    let kind = braid_at(g, &idx, pos).ok_or_else(|| Error::NoBraidMove { word: w.clone(), pos })?;
    apply_in_place(&mut idx, pos, kind);
    Ok(Word::from_indices(g, &idx))
}

/// Every braid move applicable to `w`, as `(pos, kind, result)`.
pub fn available_moves(g: &CoxeterGraph, w: &Word) -> Result<Vec<(usize, BraidKind, Word)>> {
    let idx = w.indices(g)?;
    if !is_reduced_indices(g, &idx) {
        return Err(Error::NotReduced(w.clone()));
    }
    Ok((0..idx.len())
        .filter_map(|pos| {
            braid_at(g, &idx, pos).map(|kind| {
                let mut next = idx.clone();
                apply_in_place(&mut next, pos, kind);
                (pos, kind, Word::from_indices(g, &next))
            })
        })
        .collect())
}

/// Breadth-first closure of an index word under braid moves.
pub(crate) fn closure_indices(
    g: &CoxeterGraph,
    start: Vec<usize>,
    long_moves: bool,
    limits: &Limits,
) -> Result<Vec<Vec<usize>>> {
    let mut seen: HashSet<Vec<usize>> = HashSet::from([start.clone()]);
    let mut order = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        for pos in 0..cur.len() {
            let kind = match braid_at(g, &cur, pos) {
                Some(BraidKind::Long) if !long_moves => continue,
                Some(k) => k,
                None => continue,
            };
            let mut next = cur.clone();
            apply_in_place(&mut next, pos, kind);
            if seen.insert(next.clone()) {
                if seen.len() > limits.max_nodes {
                    return Err(Error::CapExceeded { limit: limits.max_nodes });
                }
                order.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(order)
}

fn closure(g: &CoxeterGraph, w: &Word, long_moves: bool, limits: &Limits) -> Result<BTreeSet<Word>> {
    let idx = w.indices(g)?;
    if !is_reduced_indices(g, &idx) {
        return Err(Error::NotReduced(w.clone()));
    }
    Ok(closure_indices(g, idx, long_moves, limits)?
        .iter()
        .map(|v| Word::from_indices(g, v))
        .collect())
}

/// All reduced words of the element of `w` (closure under all braid moves).
pub fn reduced_word_graph(g: &CoxeterGraph, w: &Word, limits: &Limits) -> Result<BTreeSet<Word>> {
    closure(g, w, true, limits)
}

/// The commutation class of `w` (closure under short moves only).
pub fn commutation_class(g: &CoxeterGraph, w: &Word, limits: &Limits) -> Result<BTreeSet<Word>> {
    closure(g, w, false, limits)
}

/// The set `Phi(w)` of positive roots made negative by `w`.
pub fn inversion_roots(g: &CoxeterGraph, e: &GroupElement) -> BTreeSet<Root> {
    let w = e.canonical_word(g);
    let idx = w.indices(g).expect("canonical words use graph labels");
    root_sequence_indices(g, &idx)
        .expect("canonical words are reduced")
        .into_iter()
        .collect()
}
