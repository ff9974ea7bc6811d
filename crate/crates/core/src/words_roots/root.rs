use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::CoxeterGraph;

/// Integer coefficient vector over the simple roots, in vertex-index order.
///
/// Arithmetic is exact. The bilinear form used throughout is the Cartan
/// pairing `2B`, so a root has `pairing(a, a) == 2` and orthogonality is
/// `pairing(a, b) == 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root {
    pub coeffs: Vec<i64>,
}

impl Root {
    pub fn zero(rank: usize) -> Self {
        Root { coeffs: vec![0; rank] }
    }

    /// The simple root at vertex index `i`.
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut r = Self::zero(rank);
        r.coeffs[i] = 1;
        r
    }

    /// The simple root for a label of `g`.
    pub fn simple_for(g: &CoxeterGraph, label: u32) -> Result<Self> {
        Ok(Self::simple(g.rank(), g.require_index(label)?))
    }

    pub fn from_coeffs(coeffs: impl Into<Vec<i64>>) -> Self {
        Root { coeffs: coeffs.into() }
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0) && self.coeffs.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.coeffs.iter().all(|&c| c <= 0) && self.coeffs.iter().any(|&c| c < 0)
    }

    /// Index of the simple root this equals, if any.
    pub fn simple_index(&self) -> Option<usize> {
        let mut found = None;
        for (i, &c) in self.coeffs.iter().enumerate() {
            match c {
                0 => {}
                1 if found.is_none() => found = Some(i),
                _ => return None,
            }
        }
        found
    }
}

impl Add for &Root {
    type Output = Root;
    fn add(self, rhs: &Root) -> Root {
        Root {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Cartan pairing `2B(u, v)`: `2` on the diagonal, `-1` across an edge.
pub fn pairing(g: &CoxeterGraph, u: &Root, v: &Root) -> i64 {
    let n = g.rank();
    let mut total = 0;
    for i in 0..n {
        if u.coeffs[i] == 0 {
            continue;
        }
        let mut row = 2 * v.coeffs[i];
        for &j in g.neighbors(i) {
            row -= v.coeffs[j];
        }
        total += u.coeffs[i] * row;
    }
    total
}

/// In-place `s_i` on a coefficient slice: only coordinate `i` changes.
#[inline]
pub(crate) fn reflect_in_place(g: &CoxeterGraph, i: usize, v: &mut [i64]) {
    let mut sum = -v[i];
    for &j in g.neighbors(i) {
        sum += v[j];
    }
    v[i] = sum;
}

/// `s_i(a)` for the generator labelled `label`.
pub fn reflect(g: &CoxeterGraph, label: u32, a: &Root) -> Result<Root> {
    let i = g.require_index(label)?;
    let mut out = a.clone();
    reflect_in_place(g, i, &mut out.coeffs);
    Ok(out)
}
