//! The `maxclust` command line, as a library so tests can drive it
//! in-process. Exit status: 0 success, 1 domain error, 2 usage error.

use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use maxclust::clusters::{find_contracted_decomposition, pi, pi_full, ContractedDecomposition};
use maxclust::enumerate::{census, mc_levels};
use maxclust::triples::{classify_element, contractible_triples, TripleStats};
use maxclust::words_roots::{available_moves, root_sequence};
use maxclust::{classify_graph, parse_graph, CoxeterGraph, Limits, Word, DEFAULT_MAX_NODES};
use serde::Serialize;

pub mod schema;

use schema::*;

#[derive(Parser, Debug)]
#[command(name = "maxclust", version, about = "Maximally clustered elements of simply laced Coxeter groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct Common {
    /// Graph: family token (A4, D5, E6, ...), inline document, or @file.
    #[arg(long)]
    graph: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Cap on elements or words visited by any search.
    #[arg(long, default_value_t = DEFAULT_MAX_NODES)]
    max_nodes: usize,
}

#[derive(Args, Debug)]
struct WithWord {
    #[command(flatten)]
    common: Common,
    /// Comma-separated word, or @file.
    #[arg(long, allow_hyphen_values = true)]
    word: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// MC-finiteness verdict for a graph.
    Graph {
        spec: Option<String>,
        #[arg(long = "graph")]
        graph_flag: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Inversion triples and the FC / FB / MC flags of a reduced word.
    Classify(WithWord),
    /// Root sequence of a reduced word.
    Rootseq(WithWord),
    /// Braid moves applicable to a reduced word.
    Moves(WithWord),
    /// Contracted expression of an MC word (plain or bracketed input).
    Contract(WithWord),
    /// Contraction operator on one cluster, or the full reduction.
    Pi {
        #[command(flatten)]
        input: WithWord,
        /// 1-based cluster index.
        #[arg(long, default_value_t = 1, conflicts_with = "full")]
        index: usize,
        /// Apply pi_1 repeatedly until no cluster is left.
        #[arg(long)]
        full: bool,
    },
    /// Element counts by length, split into FC / FB / MC.
    Census {
        #[command(flatten)]
        common: Common,
        /// Stop after this length; without it the whole group is counted.
        #[arg(long)]
        max_length: Option<usize>,
    },
    /// Every maximally clustered element, or their number.
    McAll {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        max_length: Option<usize>,
        #[arg(long)]
        count: bool,
        /// Run on graphs that are not MC-finite (bounded by the caps).
        #[arg(long)]
        override_finiteness: bool,
    },
}

enum Failure {
    Usage(String),
    Domain(maxclust::Error),
}

impl From<maxclust::Error> for Failure {
    fn from(e: maxclust::Error) -> Self {
        Failure::Domain(e)
    }
}

/// Resolves `@path` indirection.
fn read_arg(value: &str) -> Result<String, Failure> {
    match value.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map(|s| s.trim().to_string())
            .map_err(|e| Failure::Usage(format!("cannot read {path}: {e}"))),
        None => Ok(value.to_string()),
    }
}

fn load_graph(spec: &str) -> Result<CoxeterGraph, Failure> {
    Ok(parse_graph(&read_arg(spec)?)?)
}

fn load_word(text: &str) -> Result<Word, Failure> {
    Ok(text.parse::<Word>()?)
}

fn emit<T: Serialize>(command: &str, body: T) -> String {
    let mut s = serde_json::to_string_pretty(&Envelope::new(command, body)).expect("documents serialize");
    s.push('\n');
    s
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join(w: &[u32]) -> String {
    w.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn n_tilde(g: &CoxeterGraph, w: &Word, limits: &Limits) -> maxclust::Result<usize> {
    Ok(TripleStats::from_contractible(&contractible_triples(g, w, limits)?).n_tilde_w)
}

fn dispatch(command: Command) -> Result<String, Failure> {
    let mut out = String::new();
    match command {
        Command::Graph { spec, graph_flag, format } => {
            let spec = match (spec, graph_flag) {
                (Some(s), None) | (None, Some(s)) => s,
                _ => return Err(Failure::Usage("give the graph either positionally or with --graph".into())),
            };
            let g = load_graph(&spec)?;
            let report = classify_graph(&g);
            if format == Format::Json {
                let doc = GraphDoc { vertices: g.labels().to_vec(), edges: g.edges(), report };
                return Ok(emit("graph", doc));
            }
            writeln!(out, "mc_finite={}", report.mc_finite).unwrap();
            for c in &report.per_component {
                writeln!(out, "component {}: mc_finite={} ({})", join(&c.vertices), c.mc_finite, c.reason.as_str())
                    .unwrap();
            }
        }
        Command::Classify(a) => {
            let (g, w, limits) = prepare(&a)?;
            let report = classify_element(&g, &w, &limits)?;
            if a.common.format == Format::Json {
                return Ok(emit("classify", ClassifyDoc { report }));
            }
            let f = report.flags;
            writeln!(
                out,
                "MC={} FB={} FC={} N={} Ñ={}",
                yes(f.maximally_clustered),
                yes(f.freely_braided),
                yes(f.fully_commutative),
                report.n_w,
                report.n_tilde_w
            )
            .unwrap();
            writeln!(out, "pairwise_disjoint={}", yes(report.pairwise_disjoint)).unwrap();
            for t in &report.triples {
                let tag = if t.contractible { "contractible" } else { "-" };
                writeln!(out, "{} + {} = {} {tag}", t.low_a, t.low_b, t.high).unwrap();
            }
        }
        Command::Rootseq(a) => {
            let (g, w, _) = prepare(&a)?;
            let seq = root_sequence(&g, &w)?;
            let roots: Vec<_> = (0..w.len()).map(|p| seq.at_position(p).clone()).collect();
            if a.common.format == Format::Json {
                return Ok(emit("rootseq", RootSeqDoc { word: w, roots }));
            }
            for (p, (l, r)) in w.letters().iter().zip(&roots).enumerate() {
                writeln!(out, "{p}\t{l}\t{r}").unwrap();
            }
        }
        Command::Moves(a) => {
            let (g, w, _) = prepare(&a)?;
            let moves: Vec<Move> = available_moves(&g, &w)?
                .into_iter()
                .map(|(pos, kind, result)| Move { pos, kind, result })
                .collect();
            if a.common.format == Format::Json {
                return Ok(emit("moves", MovesDoc { word: w, moves }));
            }
            for m in &moves {
                writeln!(out, "{}\t{:?}\t{}", m.pos, m.kind, m.result).unwrap();
            }
        }
        Command::Contract(a) => {
            let (_, d, w) = decompose(&a)?;
            if a.common.format == Format::Json {
                let doc = ContractDoc {
                    word: w,
                    contracted: d.to_string(),
                    contracted_word: d.word(),
                    plain: d.plain().to_vec(),
                    clusters: d.clusters().iter().map(|c| c.word().clone()).collect(),
                };
                return Ok(emit("contract", doc));
            }
            writeln!(out, "{d}").unwrap();
        }
        Command::Pi { input, index, full } => {
            let limits = Limits { max_nodes: input.common.max_nodes };
            let (image, w, g, idx) = if full {
                let g = load_graph(&input.common.graph)?;
                let w = load_word(&read_arg(&input.word)?)?;
                (pi_full(&g, &w, &limits)?, w, g, None)
            } else {
                let (g, d, w) = decompose(&input)?;
                (pi(&g, &d, index, &limits)?, w, g, Some(index))
            };
            let nt = n_tilde(&g, &image, &limits)?;
            if input.common.format == Format::Json {
                return Ok(emit("pi", PiDoc { word: w, index: idx, image, n_tilde_w: nt }));
            }
            writeln!(out, "{image}").unwrap();
            writeln!(out, "Ñ={nt}").unwrap();
        }
        Command::Census { common, max_length } => {
            let g = load_graph(&common.graph)?;
            let rows = census(&g, max_length, &Limits { max_nodes: common.max_nodes })?;
            if common.format == Format::Json {
                return Ok(emit("census", CensusDoc { rows }));
            }
            let header = ["length", "total", "fc", "fb", "mc"];
            let cells: Vec<[String; 5]> = rows
                .iter()
                .map(|r| [r.length, r.total, r.fc, r.fb, r.mc].map(|v| v.to_string()))
                .collect();
            let widths: Vec<usize> = (0..5)
                .map(|k| cells.iter().map(|c| c[k].len()).chain([header[k].len()]).max().unwrap())
                .collect();
            let line = |c: &[&str]| -> String {
                c.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect::<Vec<_>>().join("  ")
            };
            writeln!(out, "{}", line(&header)).unwrap();
            for c in &cells {
                writeln!(out, "{}", line(&c.each_ref().map(String::as_str))).unwrap();
            }
        }
        Command::McAll { common, max_length, count, override_finiteness } => {
            let g = load_graph(&common.graph)?;
            if !override_finiteness && !classify_graph(&g).mc_finite {
                return Err(maxclust::Error::NotMcFinite.into());
            }
            let levels = mc_levels(&g, max_length, &Limits { max_nodes: common.max_nodes })?;
            let doc = McAllDoc {
                count: levels.total(),
                complete: levels.exhausted,
                words: (!count).then(|| {
                    let mut words: Vec<Word> = levels.elements().map(|e| e.canonical_word(&g)).collect();
                    words.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
                    words
                }),
            };
            if common.format == Format::Json {
                return Ok(emit("mc-all", doc));
            }
            match &doc.words {
                None => writeln!(out, "{}", doc.count).unwrap(),
                Some(words) => {
                    for w in words {
                        writeln!(out, "{}", if w.is_empty() { "()".to_string() } else { w.to_string() }).unwrap();
                    }
                }
            }
            if !doc.complete {
                writeln!(out, "# stopped at length {}", levels.levels.len() - 1).unwrap();
            }
        }
    }
    Ok(out)
}

fn prepare(a: &WithWord) -> Result<(CoxeterGraph, Word, Limits), Failure> {
    let g = load_graph(&a.common.graph)?;
    let w = load_word(&read_arg(&a.word)?)?;
    w.indices(&g)?;
    Ok((g, w, Limits { max_nodes: a.common.max_nodes }))
}

/// A plain word is searched for its contracted expression; a bracketed one
/// is checked as given.
fn decompose(a: &WithWord) -> Result<(CoxeterGraph, ContractedDecomposition, Word), Failure> {
    let g = load_graph(&a.common.graph)?;
    let text = read_arg(&a.word)?;
    let limits = Limits { max_nodes: a.common.max_nodes };
    if text.contains('[') {
        let d = ContractedDecomposition::parse_bracketed(&g, &text, &limits)?;
        let w = d.word();
        Ok((g, d, w))
    } else {
        let w = load_word(&text)?;
        let d = find_contracted_decomposition(&g, &w, &limits)?;
        Ok((g, d, w))
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            2
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
