//! Maximally clustered elements of simply laced Coxeter groups.
//!
//! The crate works with Coxeter groups whose bonds are all 2 or 3, described
//! by a [`CoxeterGraph`]. Group elements act on the root lattice by exact
//! integer matrices, so finite and infinite groups are handled the same way.
//!
//! * [`graph`]: graphs, named families and the MC-finiteness classifier.
//! * [`words_roots`]: reduced words, root sequences, braid moves.
//! * [`triples`]: inversion and contractible triples, `N(w)`, `Ñ(w)`, and
//!   the fully commutative / freely braided / maximally clustered flags.
//! * [`clusters`]: braid clusters, contracted decompositions, the `π_j`
//!   contraction operators.
//! * [`enumerate`]: census by length and exhaustive MC enumeration.
//!
//! ```
//! use maxclust::{enumerate::enumerate_all_mc, graph::parse_graph};
//!
//! let a3 = parse_graph("A3").unwrap();
//! let mc = enumerate_all_mc(&a3, &Default::default()).unwrap();
//! assert_eq!(mc.len(), 21);
//! ```

pub mod clusters;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod triples;
pub mod words_roots;

pub use error::{Error, Result};
pub use graph::{classify_graph, parse_graph, CoxeterGraph, FinitenessReport};
pub use words_roots::{GroupElement, Root, RootSequence, Word};

/// Default node cap for closure searches and enumerations.
pub const DEFAULT_MAX_NODES: usize = 1_000_000;

/// Caps on combinatorial searches. Exceeding a cap is an error, never a
/// silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_nodes: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_nodes: DEFAULT_MAX_NODES }
    }
}
