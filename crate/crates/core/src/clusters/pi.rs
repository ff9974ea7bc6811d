use super::cluster::{cluster_graph, normalize_cluster};
use super::decomposition::{find_contracted_decomposition, ContractedDecomposition};
use crate::error::{Error, Result};
use crate::graph::{classify_graph, CoxeterGraph};
use crate::triples::contractible_triples;
use crate::triples::TripleStats;
use crate::words_roots::{is_reduced, Word};
use crate::Limits;

fn require_scope(g: &CoxeterGraph) -> Result<()> {
    let report = classify_graph(g);
    if report.mc_finite {
        return Ok(());
    }
    let bad: Vec<String> = report
        .per_component
        .iter()
        .filter(|c| !c.mc_finite)
        .map(|c| format!("{:?} ({})", c.vertices, c.reason.as_str()))
        .collect();
    Err(Error::OutOfScope(format!(
        "components not contained in any E_n: {}",
        bad.join(", ")
    )))
}

/// The contraction operator on cluster `j` (1-based).
///
/// With `c_j = c' m c''` normalized and `i'` the part of the word before
/// `c_j`, the cluster is replaced by `c''` when its graph has a branch point
/// and `i' m` is not reduced, and by `m c''` otherwise.
pub fn pi(g: &CoxeterGraph, d: &ContractedDecomposition, j: usize, limits: &Limits) -> Result<Word> {
    require_scope(g)?;
    let k = d.num_clusters();
    if j == 0 || j > k {
        return Err(Error::ClusterIndexOutOfRange { j, clusters: k });
    }
    let cluster = normalize_cluster(g, &d.clusters()[j - 1], limits)?;
    let before = d.prefix_before(j);
    let after = d.suffix_after(j);

    let branch = cluster_graph(g, &cluster)?.has_branch_point();
    let mut probe = before.0.clone();
    probe.push(cluster.middle());
    let drop_middle = branch && !is_reduced(g, &Word(probe))?;

    let mut out = before.0;
    if !drop_middle {
        out.push(cluster.middle());
    }
    out.extend_from_slice(cluster.second_half());
    out.extend_from_slice(after.letters());
    Ok(Word(out))
}

/// One contraction step on an arbitrary reduced word of an MC element:
/// find the contracted expression, decompose it and apply `π_1`.
pub fn pi_first(g: &CoxeterGraph, w: &Word, limits: &Limits) -> Result<Word> {
    require_scope(g)?;
    let d = find_contracted_decomposition(g, w, limits)?;
    pi(g, &d, 1, limits)
}

/// `π_1` applied `Ñ(w)` times, re-parsing the word before every step.
pub fn pi_full(g: &CoxeterGraph, w: &Word, limits: &Limits) -> Result<Word> {
    require_scope(g)?;
    let steps = TripleStats::from_contractible(&contractible_triples(g, w, limits)?).n_tilde_w;
    let mut cur = w.clone();
    for _ in 0..steps {
        let d = find_contracted_decomposition(g, &cur, limits)?;
        if d.num_clusters() == 0 {
            return Err(Error::InvariantViolation(format!(
                "{cur} has no clusters left before {steps} contraction steps"
            )));
        }
        cur = pi(g, &d, 1, limits)?;
    }
    Ok(cur)
}
