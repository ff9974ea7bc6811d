//! Independent oracles for the integration tests. Nothing here goes through
//! `GroupElement`: elements are plain integer matrices built by multiplying
//! reflection matrices, and reduced words come from descent recursion.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use maxclust::{CoxeterGraph, Word};
use rand::Rng;

pub type Mat = Vec<Vec<i64>>;
pub type Vector = Vec<i64>;

/// Reflection matrix of `s_i` on root coordinates.
pub fn reflection(g: &CoxeterGraph, i: usize) -> Mat {
    let n = g.rank();
    let mut m = vec![vec![0; n]; n];
    for (r, row) in m.iter_mut().enumerate() {
        row[r] = 1;
    }
    // s_i(v) = v - <v, gamma_i> gamma_i with <gamma_j, gamma_i> = 2, -1, 0.
    for j in 0..n {
        let p = if j == i {
            2
        } else if g.adjacent(i, j) {
            -1
        } else {
            0
        };
        m[i][j] -= p;
    }
    m
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = vec![vec![0; n]; n];
    for r in 0..n {
        for k in 0..n {
            if a[r][k] != 0 {
                for c in 0..n {
                    out[r][c] += a[r][k] * b[k][c];
                }
            }
        }
    }
    out
}

pub fn mat_vec(a: &Mat, v: &[i64]) -> Vector {
    a.iter().map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}

pub fn identity(n: usize) -> Mat {
    (0..n).map(|r| (0..n).map(|c| i64::from(r == c)).collect()).collect()
}

pub fn simple(n: usize, i: usize) -> Vector {
    (0..n).map(|k| i64::from(k == i)).collect()
}

pub fn positive(v: &[i64]) -> bool {
    v.iter().all(|&c| c >= 0) && v.iter().any(|&c| c > 0)
}

pub fn negative(v: &[i64]) -> bool {
    v.iter().all(|&c| c <= 0) && v.iter().any(|&c| c < 0)
}

pub fn word_matrix(g: &CoxeterGraph, idx: &[usize]) -> Mat {
    idx.iter().fold(identity(g.rank()), |m, &i| mat_mul(&m, &reflection(g, i)))
}

pub fn indices(g: &CoxeterGraph, w: &Word) -> Vec<usize> {
    w.indices(g).unwrap()
}

/// Root of the letter at each position `q`: `s_{i_l} ... s_{i_{q+1}}(gamma_{i_q})`.
pub fn root_sequence(g: &CoxeterGraph, idx: &[usize]) -> Vec<Vector> {
    (0..idx.len())
        .map(|q| {
            let mut v = simple(g.rank(), idx[q]);
            for &k in &idx[q + 1..] {
                v = mat_vec(&reflection(g, k), &v);
            }
            v
        })
        .collect()
}

pub fn is_reduced(g: &CoxeterGraph, idx: &[usize]) -> bool {
    root_sequence(g, idx).iter().all(|r| positive(r))
}

/// All elements up to `max_len`, keyed by matrix, with one reduced word
/// each, in BFS order.
pub fn elements(g: &CoxeterGraph, max_len: usize) -> Vec<(Mat, Vec<usize>)> {
    let refl: Vec<Mat> = (0..g.rank()).map(|i| reflection(g, i)).collect();
    let mut seen: HashSet<Mat> = HashSet::new();
    let start = identity(g.rank());
    seen.insert(start.clone());
    let mut out = vec![(start.clone(), Vec::new())];
    let mut frontier = vec![(start, Vec::new())];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (m, w) in &frontier {
            for (i, r) in refl.iter().enumerate() {
                let p = mat_mul(m, r);
                if seen.insert(p.clone()) {
                    let mut w2: Vec<usize> = w.clone();
                    w2.push(i);
                    next.push((p, w2));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Per-length element counts from [`elements`].
pub fn growth(g: &CoxeterGraph, max_len: usize) -> Vec<usize> {
    let mut counts = vec![0; max_len + 1];
    for (_, w) in elements(g, max_len) {
        counts[w.len()] += 1;
    }
    counts
}

/// Every reduced word of the element represented by the reduced word
/// `idx`, by recursion on right descents: `w = (w s_i) s_i` whenever
/// `w(gamma_i) < 0`.
pub fn reduced_words(g: &CoxeterGraph, idx: &[usize]) -> BTreeSet<Vec<usize>> {
    let mut memo = HashMap::new();
    reduced_words_of(g, word_matrix(g, idx), &mut memo)
}

fn reduced_words_of(g: &CoxeterGraph, m: Mat, memo: &mut HashMap<Mat, BTreeSet<Vec<usize>>>) -> BTreeSet<Vec<usize>> {
    if let Some(hit) = memo.get(&m) {
        return hit.clone();
    }
    let n = g.rank();
    let mut out = BTreeSet::new();
    let mut any = false;
    for i in 0..n {
        let col: Vector = (0..n).map(|r| m[r][i]).collect();
        if negative(&col) {
            any = true;
            for mut w in reduced_words_of(g, mat_mul(&m, &reflection(g, i)), memo) {
                w.push(i);
                out.insert(w);
            }
        }
    }
    if !any {
        out.insert(Vec::new());
    }
    memo.insert(m, out.clone());
    out
}

/// Closure of a word under `ij -> ji` for non-adjacent distinct letters.
pub fn short_closure(g: &CoxeterGraph, idx: &[usize]) -> BTreeSet<Vec<usize>> {
    let mut seen = BTreeSet::from([idx.to_vec()]);
    let mut queue = VecDeque::from([idx.to_vec()]);
    while let Some(w) = queue.pop_front() {
        for p in 0..w.len().saturating_sub(1) {
            if w[p] != w[p + 1] && !g.adjacent(w[p], w[p + 1]) {
                let mut v = w.clone();
                v.swap(p, p + 1);
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
    }
    seen
}

/// Fully commutative by definition.
pub fn is_fc(g: &CoxeterGraph, idx: &[usize]) -> bool {
    short_closure(g, idx) == reduced_words(g, idx)
}

pub type Triple = (Vector, Vector, Vector);

fn as_triple(a: &Vector, b: &Vector, c: &Vector) -> Option<Triple> {
    let sum = |x: &Vector, y: &Vector| -> Vector { x.iter().zip(y).map(|(p, q)| p + q).collect() };
    let lows = [a, b, c];
    for k in 0..3 {
        let (x, y, z) = (lows[k], lows[(k + 1) % 3], lows[(k + 2) % 3]);
        if sum(y, z) == *x {
            let (mut lo, mut hi) = (y.clone(), z.clone());
            if hi < lo {
                std::mem::swap(&mut lo, &mut hi);
            }
            return Some((lo, hi, x.clone()));
        }
    }
    None
}

/// Contractible triples by scanning three consecutive entries of every
/// root sequence of every reduced word.
pub fn contractible_by_scan(g: &CoxeterGraph, idx: &[usize]) -> BTreeSet<Triple> {
    let mut out = BTreeSet::new();
    for w in reduced_words(g, idx) {
        let rs = root_sequence(g, &w);
        for q in 0..rs.len().saturating_sub(2) {
            if let Some(t) = as_triple(&rs[q], &rs[q + 1], &rs[q + 2]) {
                out.insert(t);
            }
        }
    }
    out
}

/// A reduced word of length `len` (or shorter if the group runs out),
/// grown letter by letter.
pub fn random_reduced(g: &CoxeterGraph, len: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut w: Vec<usize> = Vec::new();
    let mut m = identity(g.rank());
    let n = g.rank();
    while w.len() < len {
        let ok: Vec<usize> = (0..n)
            .filter(|&i| positive(&(0..n).map(|r| m[r][i]).collect::<Vec<_>>()))
            .collect();
        if ok.is_empty() {
            break;
        }
        let i = ok[rng.gen_range(0..ok.len())];
        m = mat_mul(&m, &reflection(g, i));
        w.push(i);
    }
    w
}

pub fn to_word(g: &CoxeterGraph, idx: &[usize]) -> Word {
    Word::new(idx.iter().map(|&i| g.label(i)).collect::<Vec<_>>())
}

/// Words of all elements of a finite group (or up to `max_len`).
pub fn element_words(g: &CoxeterGraph, max_len: usize) -> Vec<Word> {
    elements(g, max_len).into_iter().map(|(_, w)| to_word(g, &w)).collect()
}

pub fn graph(spec: &str) -> CoxeterGraph {
    maxclust::parse_graph(spec).unwrap()
}

pub fn triangle() -> CoxeterGraph {
    graph(r#"{"vertices":[0,1,2],"edges":[[0,1],[1,2],[2,0]]}"#)
}
