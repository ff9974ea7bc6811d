use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::cluster::BraidCluster;
use crate::error::{Error, Result};
use crate::graph::CoxeterGraph;
use crate::triples::{contractible_triples_of, InversionTriple, TripleStats};
use crate::words_roots::{
    commutation_class, evaluate_word, root_sequence_indices, GroupElement, Root, Word,
};
use crate::Limits;

/// A contracted reduced expression parsed as `i_0 c_1 i_1 ... c_k i_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractedDecomposition {
    plain: Vec<Word>,
    clusters: Vec<BraidCluster>,
    owner: GroupElement,
}

impl ContractedDecomposition {
    /// The plain segments `i_0, ..., i_k` (possibly empty words).
    pub fn plain(&self) -> &[Word] {
        &self.plain
    }

    pub fn clusters(&self) -> &[BraidCluster] {
        &self.clusters
    }

    pub fn owner(&self) -> &GroupElement {
        &self.owner
    }

    pub fn num_clusters(&self) -> usize {
        self.clusters.len()
    }

    pub fn half_length_sum(&self) -> usize {
        self.clusters.iter().map(BraidCluster::half_length).sum()
    }

    /// The concatenated reduced word.
    pub fn word(&self) -> Word {
        let mut out = self.plain[0].0.clone();
        for (c, p) in self.clusters.iter().zip(&self.plain[1..]) {
            out.extend_from_slice(c.word().letters());
            out.extend_from_slice(p.letters());
        }
        Word(out)
    }

    /// `i_0 c_1 ... i_{j-1}` for a 1-based cluster index `j`.
    pub fn prefix_before(&self, j: usize) -> Word {
        let mut out = self.plain[0].0.clone();
        for q in 1..j {
            out.extend_from_slice(self.clusters[q - 1].word().letters());
            out.extend_from_slice(self.plain[q].letters());
        }
        Word(out)
    }

    /// `i_j c_{j+1} ... i_k` for a 1-based cluster index `j`.
    pub fn suffix_after(&self, j: usize) -> Word {
        let mut out = self.plain[j].0.clone();
        for q in j + 1..=self.clusters.len() {
            out.extend_from_slice(self.clusters[q - 1].word().letters());
            out.extend_from_slice(self.plain[q].letters());
        }
        Word(out)
    }

    /// Reads the bracketed form, e.g. `3 [1 2 1]`, and checks that it is a
    /// valid contracted decomposition.
    pub fn parse_bracketed(g: &CoxeterGraph, text: &str, limits: &Limits) -> Result<Self> {
        let (word, spans) = tokenize_bracketed(text)?;
        let idx = word.indices(g)?;
        let ctx = ParseContext::new(g, &word, &idx, limits)?;
        for &(start, half) in &spans {
            let candidate = word.slice(start, start + 2 * half + 1);
            BraidCluster::new(g, candidate)?;
        }
        let highs = spans
            .iter()
            .map(|&(start, half)| ctx.cluster_high(start, half))
            .collect::<Option<BTreeSet<&Root>>>();
        match highs {
            Some(h) if h.len() == spans.len() && h.len() == ctx.n_tilde => Ok(ctx.build(g, &spans)),
            _ => Err(Error::NotContracted(word)),
        }
    }
}

impl fmt::Display for ContractedDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |w: &[u32]| w.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
        let mut parts = Vec::new();
        if !self.plain[0].is_empty() {
            parts.push(join(self.plain[0].letters()));
        }
        for (c, p) in self.clusters.iter().zip(&self.plain[1..]) {
            parts.push(format!("[{}]", join(c.word().letters())));
            if !p.is_empty() {
                parts.push(join(p.letters()));
            }
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// Splits `3 [1 2 1] 4` into the flat word and `(start, half_length)` spans.
fn tokenize_bracketed(text: &str) -> Result<(Word, Vec<(usize, usize)>)> {
    let mut letters = Vec::new();
    let mut spans = Vec::new();
    let mut open: Option<usize> = None;
    let mut number = String::new();
    let flush = |number: &mut String, letters: &mut Vec<u32>| -> Result<()> {
        if !number.is_empty() {
            letters.push(number.parse().map_err(|_| Error::WordSyntax(format!("bad label `{number}`")))?);
            number.clear();
        }
        Ok(())
    };
    for ch in text.chars() {
        match ch {
            '0'..='9' => number.push(ch),
            '[' => {
                flush(&mut number, &mut letters)?;
                if open.is_some() {
                    return Err(Error::WordSyntax("nested `[`".into()));
                }
                open = Some(letters.len());
            }
            ']' => {
                flush(&mut number, &mut letters)?;
                let start = open.take().ok_or_else(|| Error::WordSyntax("unmatched `]`".into()))?;
                let len = letters.len() - start;
                if len % 2 == 0 {
                    return Err(Error::NotBraidCluster(Word(letters[start..].to_vec())));
                }
                spans.push((start, len / 2));
            }
            c if c == ',' || c.is_whitespace() => flush(&mut number, &mut letters)?,
            other => return Err(Error::WordSyntax(format!("unexpected character `{other}`"))),
        }
    }
    flush(&mut number, &mut letters)?;
    if open.is_some() {
        return Err(Error::WordSyntax("unclosed `[`".into()));
    }
    Ok((Word(letters), spans))
}

/// Shared data for recognising clusters inside one reduced word.
struct ParseContext<'a> {
    idx: &'a [usize],
    letters: &'a Word,
    /// Root of the letter at each word position.
    roots: Vec<Root>,
    contractible: BTreeSet<InversionTriple>,
    /// Number of contractible triples per highest root.
    per_high: BTreeMap<Root, usize>,
    n_tilde: usize,
    owner: GroupElement,
}

impl<'a> ParseContext<'a> {
    fn new(g: &CoxeterGraph, word: &'a Word, idx: &'a [usize], limits: &Limits) -> Result<Self> {
        let mut roots = root_sequence_indices(g, idx).ok_or_else(|| Error::NotReduced(word.clone()))?;
        roots.reverse();
        let owner = evaluate_word(g, word)?;
        let contractible = contractible_triples_of(g, &owner, limits)?;
        Self::with_triples(word, idx, roots, contractible, owner)
    }

    fn with_triples(
        word: &'a Word,
        idx: &'a [usize],
        roots: Vec<Root>,
        contractible: BTreeSet<InversionTriple>,
        owner: GroupElement,
    ) -> Result<Self> {
        let stats = TripleStats::from_contractible(&contractible);
        if !stats.flags.maximally_clustered {
            return Err(Error::NotMaximallyClustered(word.clone()));
        }
        let mut per_high = BTreeMap::new();
        for t in &contractible {
            *per_high.entry(t.high.clone()).or_insert(0) += 1;
        }
        Ok(ParseContext {
            idx,
            letters: word,
            roots,
            contractible,
            per_high,
            n_tilde: stats.n_tilde_w,
            owner,
        })
    }

    /// If positions `start ..= start + 2 half` carry a full maximal set of
    /// triples `{a_k, b_k, high}` in the pattern `a_1 .. a_n high b_n .. b_1`,
    /// returns that highest root.
    fn cluster_high(&self, start: usize, half: usize) -> Option<&Root> {
        let end = start + 2 * half;
        if end >= self.idx.len() {
            return None;
        }
        let (high_root, count) = self.per_high.get_key_value(&self.roots[start + half])?;
        if *count != half {
            return None;
        }
        for k in 0..half {
            let a = &self.roots[start + k];
            let b = &self.roots[end - k];
            if &(a + b) != high_root {
                return None;
            }
            let t = InversionTriple::new(a.clone(), b.clone(), true);
            if !self.contractible.contains(&t) {
                return None;
            }
        }
        Some(high_root)
    }

    fn candidate(&self, g: &CoxeterGraph, start: usize, half: usize) -> Option<&Root> {
        let end = start + 2 * half;
        if end >= self.idx.len() || !super::is_braid_cluster(g, &self.letters.slice(start, end + 1)) {
            return None;
        }
        self.cluster_high(start, half)
    }

    /// Greedy longest-match parse with backtracking; succeeds only when the
    /// clusters found account for every contractible triple.
    fn search(&self, g: &CoxeterGraph) -> Option<Vec<(usize, usize)>> {
        let mut spans = Vec::new();
        let mut used = BTreeSet::new();
        self.descend(g, 0, &mut spans, &mut used).then_some(spans)
    }

    fn descend<'s>(
        &'s self,
        g: &CoxeterGraph,
        pos: usize,
        spans: &mut Vec<(usize, usize)>,
        used: &mut BTreeSet<&'s Root>,
    ) -> bool {
        let len = self.idx.len();
        if pos == len {
            return used.len() == self.n_tilde;
        }
        if used.len() < self.n_tilde {
            for half in (1..=(len - pos - 1) / 2).rev() {
                if let Some(high) = self.candidate(g, pos, half) {
                    if used.insert(high) {
                        spans.push((pos, half));
                        if self.descend(g, pos + 2 * half + 1, spans, used) {
                            return true;
                        }
                        spans.pop();
                        used.remove(high);
                    }
                }
            }
        }
        self.descend(g, pos + 1, spans, used)
    }

    fn build(&self, g: &CoxeterGraph, spans: &[(usize, usize)]) -> ContractedDecomposition {
        let mut plain = Vec::with_capacity(spans.len() + 1);
        let mut clusters = Vec::with_capacity(spans.len());
        let mut cursor = 0;
        for &(start, half) in spans {
            plain.push(self.letters.slice(cursor, start));
            let end = start + 2 * half + 1;
            clusters.push(
                BraidCluster::new(g, self.letters.slice(start, end)).expect("spans were checked as clusters"),
            );
            cursor = end;
        }
        plain.push(self.letters.slice(cursor, self.letters.len()));
        ContractedDecomposition { plain, clusters, owner: self.owner.clone() }
    }
}

/// Parses a contracted reduced expression of a maximally clustered element
/// into plain segments and braid clusters.
pub fn contracted_decomposition(g: &CoxeterGraph, w: &Word, limits: &Limits) -> Result<ContractedDecomposition> {
    let idx = w.indices(g)?;
    let ctx = ParseContext::new(g, w, &idx, limits)?;
    let spans = ctx.search(g).ok_or_else(|| Error::NotContracted(w.clone()))?;
    Ok(ctx.build(g, &spans))
}

/// The lexicographically least member of the commutation class of `w` that
/// parses as a contracted expression, with its decomposition.
pub fn find_contracted_decomposition(
    g: &CoxeterGraph,
    w: &Word,
    limits: &Limits,
) -> Result<ContractedDecomposition> {
    let owner = evaluate_word(g, w)?;
    if owner.length() != w.len() {
        return Err(Error::NotReduced(w.clone()));
    }
    let contractible = contractible_triples_of(g, &owner, limits)?;
    if !TripleStats::from_contractible(&contractible).flags.maximally_clustered {
        return Err(Error::NotMaximallyClustered(w.clone()));
    }
    for member in commutation_class(g, w, limits)? {
        let idx = member.indices(g)?;
        let mut roots = root_sequence_indices(g, &idx).expect("commutation class members are reduced");
        roots.reverse();
        let ctx = ParseContext::with_triples(&member, &idx, roots, contractible.clone(), owner.clone())?;
        if let Some(spans) = ctx.search(g) {
            return Ok(ctx.build(g, &spans));
        }
    }
    Err(Error::InvariantViolation(format!(
        "no contracted expression in the commutation class of {w}"
    )))
}

pub fn find_contracted_expression(g: &CoxeterGraph, w: &Word, limits: &Limits) -> Result<Word> {
    Ok(find_contracted_decomposition(g, w, limits)?.word())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn decomposition_examples() {
        let a2 = parse_graph("A2").unwrap();
        let a3 = parse_graph("A3").unwrap();
        let lim = Limits::default();

        let d = contracted_decomposition(&a2, &w("1,2,1"), &lim).unwrap();
        assert_eq!(d.plain(), &[Word::empty(), Word::empty()]);
        assert_eq!(d.clusters()[0].word(), &w("1,2,1"));
        assert_eq!(d.to_string(), "[1 2 1]");

        let d = contracted_decomposition(&a3, &w("3,1,2,1"), &lim).unwrap();
        assert_eq!(d.plain(), &[w("3"), Word::empty()]);
        assert_eq!(d.clusters()[0].word(), &w("1,2,1"));
        assert_eq!(d.to_string(), "3 [1 2 1]");

        let d = contracted_decomposition(&a3, &w("1,2"), &lim).unwrap();
        assert_eq!(d.plain(), &[w("1,2")]);
        assert_eq!(d.num_clusters(), 0);
        assert_eq!(d.to_string(), "1 2");
    }

    #[test]
    fn decomposition_errors() {
        let a3 = parse_graph("A3").unwrap();
        let lim = Limits::default();
        assert_eq!(
            contracted_decomposition(&a3, &w("1,2,3,1"), &lim),
            Err(Error::NotContracted(w("1,2,3,1")))
        );
        assert!(matches!(
            contracted_decomposition(&a3, &w("1,2,1,3,2,1"), &lim),
            Err(Error::NotMaximallyClustered(_))
        ));
        assert!(matches!(contracted_decomposition(&a3, &w("1,1"), &lim), Err(Error::NotReduced(_))));
    }

    #[test]
    fn find_examples() {
        let a2 = parse_graph("A2").unwrap();
        let a3 = parse_graph("A3").unwrap();
        let lim = Limits::default();
        assert_eq!(find_contracted_expression(&a2, &w("1,2,1"), &lim).unwrap(), w("1,2,1"));
        assert_eq!(find_contracted_expression(&a3, &w("1,2,3,1"), &lim).unwrap(), w("1,2,1,3"));
        assert_eq!(find_contracted_expression(&a3, &w("3,1"), &lim).unwrap(), w("1,3"));
    }

    #[test]
    fn bracketed_round_trip() {
        let a3 = parse_graph("A3").unwrap();
        let lim = Limits::default();
        let d = ContractedDecomposition::parse_bracketed(&a3, "3 [1 2 1]", &lim).unwrap();
        assert_eq!(d.word(), w("3,1,2,1"));
        assert_eq!(d.to_string(), "3 [1 2 1]");
        assert!(matches!(
            ContractedDecomposition::parse_bracketed(&a3, "[3 1 2 1]", &lim),
            Err(Error::NotBraidCluster(_))
        ));
        assert!(matches!(
            ContractedDecomposition::parse_bracketed(&a3, "3 1 2 1", &lim),
            Err(Error::NotContracted(_))
        ));
        assert!(matches!(
            ContractedDecomposition::parse_bracketed(&a3, "[1 2 1", &lim),
            Err(Error::WordSyntax(_))
        ));
    }
}
