use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use super::root::Root;
use super::word::Word;
use crate::error::Result;
use crate::graph::CoxeterGraph;

/// A group element, stored as the integer matrix of its action on the
/// simple-root basis (column `j` is `w(gamma_j)`).
///
/// Equality, ordering and hashing look only at the matrix; the cached
/// length is derived from it.
#[derive(Clone, Debug)]
pub struct GroupElement {
    rank: usize,
    matrix: Vec<i64>,
    length: usize,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.matrix.cmp(&other.matrix)
    }
}

#[inline]
fn negative(col: &[i64]) -> bool {
    col.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0)
}

impl GroupElement {
    pub fn identity(rank: usize) -> Self {
        let mut matrix = vec![0; rank * rank];
        for i in 0..rank {
            matrix[i * rank + i] = 1;
        }
        GroupElement { rank, matrix, length: 0 }
    }

    /// Builds an element from a column-major matrix known to lie in the
    /// image of the reflection representation, computing its length.
    pub(crate) fn from_matrix(g: &CoxeterGraph, matrix: Vec<i64>) -> Option<Self> {
        let rank = g.rank();
        if matrix.len() != rank * rank {
            return None;
        }
        let mut el = GroupElement { rank, matrix, length: 0 };
        let stripped = el.strip(g)?;
        el.length = stripped.len();
        Some(el)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// Column-major entries.
    pub fn matrix(&self) -> &[i64] {
        &self.matrix
    }

    /// `w(gamma_j)` as a coefficient slice.
    pub fn column(&self, j: usize) -> &[i64] {
        &self.matrix[j * self.rank..(j + 1) * self.rank]
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// `l(w s_i) < l(w)`, i.e. `w(gamma_i)` is negative.
    #[inline]
    pub fn has_right_descent(&self, i: usize) -> bool {
        negative(self.column(i))
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (0..self.rank).filter(|&i| self.has_right_descent(i)).collect()
    }

    /// Right multiplication by `s_i` without touching the cached length.
    #[inline]
    pub(crate) fn mul_generator_raw(&mut self, g: &CoxeterGraph, i: usize) {
        // (w s_i)(gamma_i) = -w(gamma_i) and (w s_i)(gamma_j) = w(gamma_j) +
        // w(gamma_i) for j adjacent to i; other columns are unchanged.
        let n = self.rank;
        let old: Vec<i64> = self.column(i).to_vec();
        for c in &mut self.matrix[i * n..(i + 1) * n] {
            *c = -*c;
        }
        for &j in g.neighbors(i) {
            for (c, o) in self.matrix[j * n..(j + 1) * n].iter_mut().zip(&old) {
                *c += o;
            }
        }
    }

    /// `w s_i` with its length.
    pub fn times_generator(&self, g: &CoxeterGraph, i: usize) -> GroupElement {
        let down = self.has_right_descent(i);
        let mut out = self.clone();
        out.mul_generator_raw(g, i);
        out.length = if down { self.length - 1 } else { self.length + 1 };
        out
    }

    /// `w s_i` when it is longer than `w`.
    pub fn extend_right(&self, g: &CoxeterGraph, i: usize) -> Option<GroupElement> {
        (!self.has_right_descent(i)).then(|| self.times_generator(g, i))
    }

    pub fn act(&self, v: &Root) -> Root {
        let n = self.rank;
        let mut out = vec![0; n];
        for (j, &c) in v.coeffs.iter().enumerate() {
            if c != 0 {
                for (k, o) in out.iter_mut().enumerate() {
                    *o += c * self.matrix[j * n + k];
                }
            }
        }
        Root { coeffs: out }
    }

    /// Strips right descents (smallest index first) until the identity is
    /// reached; returns the stripped indices in stripping order, or `None`
    /// if the matrix never reaches the identity.
    fn strip(&self, g: &CoxeterGraph) -> Option<Vec<usize>> {
        let mut cur = self.clone();
        let identity = GroupElement::identity(self.rank);
        let mut out = Vec::new();
        loop {
            match (0..self.rank).find(|&i| cur.has_right_descent(i)) {
                Some(i) => {
                    cur.mul_generator_raw(g, i);
                    out.push(i);
                }
                None => return (cur.matrix == identity.matrix).then_some(out),
            }
        }
    }

    pub fn inverse(&self, g: &CoxeterGraph) -> GroupElement {
        // w s_{k1} ... s_{km} = e, so w^{-1} = s_{k1} ... s_{km}.
        let stripped = self.strip(g).expect("group elements strip to the identity");
        let mut inv = GroupElement::identity(self.rank);
        for i in stripped {
            inv.mul_generator_raw(g, i);
        }
        inv.length = self.length;
        inv
    }

    /// Product `self * other`.
    pub fn compose(&self, g: &CoxeterGraph, other: &GroupElement) -> GroupElement {
        let n = self.rank;
        let mut matrix = vec![0; n * n];
        for j in 0..n {
            let col = self.act(&Root { coeffs: other.column(j).to_vec() });
            matrix[j * n..(j + 1) * n].copy_from_slice(&col.coeffs);
        }
        GroupElement::from_matrix(g, matrix).expect("product of group elements")
    }

    /// Lexicographically least reduced word, built greedily from the
    /// smallest left descent.
    pub fn canonical_word(&self, g: &CoxeterGraph) -> Word {
        // Left descents of w are right descents of w^{-1}; peeling s_k off
        // the left of w is right-multiplying w^{-1} by s_k.
        let mut inv = self.inverse(g);
        let mut out = Vec::with_capacity(self.length);
        while let Some(k) = (0..self.rank).find(|&i| inv.has_right_descent(i)) {
            inv.mul_generator_raw(g, k);
            out.push(k);
        }
        Word::from_indices(g, &out)
    }
}

/// The element represented by a word (reduced or not).
pub fn evaluate_word(g: &CoxeterGraph, w: &Word) -> Result<GroupElement> {
    let idx = w.indices(g)?;
    let mut el = GroupElement::identity(g.rank());
    for &i in &idx {
        el.mul_generator_raw(g, i);
    }
    el.length = el.strip(g).expect("words evaluate to group elements").len();
    Ok(el)
}

/// Lexicographically least reduced word for `e`.
pub fn canonical_form(g: &CoxeterGraph, e: &GroupElement) -> Word {
    e.canonical_word(g)
}
