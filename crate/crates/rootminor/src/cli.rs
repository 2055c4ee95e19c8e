//! Command-line front end: the graph file format, instance generators,
//! result documents and the subcommands of the `folio` binary.
//!
//! Graph files are line based. Blank lines and lines starting with `#` are
//! ignored. An optional header `p <n> <m>` declares vertices `0..n` and the
//! number of edges. Edge lines are `<u> <v>` with non-negative ids. A
//! `roots <id ...>` line names the root set, `pair <s> <t>` lines name
//! terminal pairs, and `pi <u> <id ...>` lines give the root set of vertex
//! `u` when the file describes a rooted pattern.

use std::collections::BTreeMap;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::carving::{find_chips, ChipSearch, SplitterMode};
use crate::graph::{Graph, VSet, Vertex};
use crate::pattern::{MinorModel, RootedGraph};
use crate::solver::{ReedOutcome, Solver, SolverConfig, Stats};
use crate::{Error, Result};

/// Largest folio member list written to a result document.
pub const MEMBER_LIMIT: usize = 200_000;

/// Contents of a graph file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    pub roots: Option<VSet>,
    pub pairs: Vec<(Vertex, Vertex)>,
    /// Root sets of pattern vertices given by `pi` lines.
    pub pi: BTreeMap<Vertex, Vec<Vertex>>,
}

impl GraphFile {
    pub fn new(graph: Graph) -> Self {
        GraphFile { graph, ..GraphFile::default() }
    }

    /// Parses the text of a graph file.
    pub fn parse(text: &str) -> Result<GraphFile> {
        let mut out = GraphFile::default();
        let mut header: Option<(usize, usize, usize)> = None;
        let mut edge_lines = 0usize;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let err = |msg: String| Error::Parse { line, msg };
            let body = raw.trim();
            if body.is_empty() || body.starts_with('#') {
                continue;
            }
            let mut words = body.split_whitespace();
            let head = words.next().expect("non-empty line");
            let ids = |words: std::str::SplitWhitespace| -> Result<Vec<Vertex>> {
                words.map(|w| w.parse::<Vertex>().map_err(|_| err(format!("bad vertex id {w:?}")))).collect()
            };
            let check = |v: Vertex| -> Result<Vertex> {
                match header {
                    Some((n, _, _)) if v as usize >= n => Err(err(format!("vertex {v} outside the declared {n} vertices"))),
                    _ => Ok(v),
                }
            };
            match head {
                "p" => {
                    if header.is_some() {
                        return Err(err("second header line".into()));
                    }
                    let nums: Vec<usize> = words
                        .map(|w| w.parse::<usize>().map_err(|_| err(format!("bad header value {w:?}"))))
                        .collect::<Result<_>>()?;
                    let [n, m] = nums[..] else {
                        return Err(err("header must be `p <n> <m>`".into()));
                    };
                    if edge_lines > 0 || out.graph.n() > 0 {
                        return Err(err("header must precede all other lines".into()));
                    }
                    if n > Vertex::MAX as usize {
                        return Err(err("too many vertices".into()));
                    }
                    for v in 0..n {
                        out.graph.add_vertex(v as Vertex);
                    }
                    header = Some((n, m, line));
                }
                "roots" => {
                    if out.roots.is_some() {
                        return Err(err("second roots line".into()));
                    }
                    let mut set = VSet::new();
                    for v in ids(words)? {
                        out.graph.add_vertex(check(v)?);
                        if !set.insert(v) {
                            return Err(err(format!("root {v} listed twice")));
                        }
                    }
                    out.roots = Some(set);
                }
                "pair" => {
                    let [s, t] = ids(words)?[..] else {
                        return Err(err("pair line must be `pair <s> <t>`".into()));
                    };
                    out.graph.add_vertex(check(s)?);
                    out.graph.add_vertex(check(t)?);
                    out.pairs.push((s, t));
                }
                "pi" => {
                    let list = ids(words)?;
                    let Some((&u, rest)) = list.split_first() else {
                        return Err(err("pi line must be `pi <u> <id ...>`".into()));
                    };
                    out.graph.add_vertex(check(u)?);
                    if out.pi.insert(u, rest.to_vec()).is_some() {
                        return Err(err(format!("second pi line for vertex {u}")));
                    }
                }
                _ => {
                    let u: Vertex = head.parse().map_err(|_| err(format!("unknown line kind {head:?}")))?;
                    let [v] = ids(words)?[..] else {
                        return Err(err("edge line must be `<u> <v>`".into()));
                    };
                    let (u, v) = (check(u)?, check(v)?);
                    if u == v {
                        return Err(err(format!("self-loop at {u}")));
                    }
                    if out.graph.contains(u) && out.graph.has_edge(u, v) {
                        return Err(err(format!("duplicate edge {{{u}, {v}}}")));
                    }
                    out.graph.add_edge(u, v);
                    edge_lines += 1;
                }
            }
        }
        if let Some((_, m, line)) = header {
            if m != edge_lines {
                return Err(Error::Parse { line, msg: format!("header declares {m} edges, file has {edge_lines}") });
            }
        }
        Ok(out)
    }

    /// Writes the file with a header covering ids `0..=max`, sorted edges,
    /// then roots, pairs and pattern root sets.
    pub fn emit(&self) -> String {
        let g = &self.graph;
        let n = g.vertices().last().map_or(0, |v| v as usize + 1);
        let mut out = format!("p {} {}\n", n, g.m());
        for (u, v) in g.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        if let Some(r) = &self.roots {
            out.push_str(&join_line("roots", r.iter()));
        }
        for (s, t) in &self.pairs {
            out.push_str(&format!("pair {s} {t}\n"));
        }
        for (u, r) in &self.pi {
            out.push_str(&join_line(&format!("pi {u}"), r.iter()));
        }
        out
    }

    /// The rooted pattern described by the file: vertex `u` has root set
    /// `pi[u]` (empty when absent).
    pub fn pattern(&self) -> Result<(RootedGraph, Vec<Vertex>)> {
        let ids: Vec<Vertex> = self.graph.vertices().collect();
        let pos: BTreeMap<Vertex, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let roots: Vec<Vec<Vertex>> = ids.iter().map(|v| self.pi.get(v).cloned().unwrap_or_default()).collect();
        let edges: Vec<(usize, usize)> = self.graph.edges().iter().map(|(u, v)| (pos[u], pos[v])).collect();
        Ok((RootedGraph::new(roots, &edges)?, ids))
    }
}

fn join_line<'a>(head: &str, items: impl Iterator<Item = &'a Vertex>) -> String {
    let mut s = head.to_string();
    for v in items {
        s.push(' ');
        s.push_str(&v.to_string());
    }
    s.push('\n');
    s
}

/// Instance families of `gen` and `bench`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GenKind {
    /// `G(n, 0.3)` on `size` vertices.
    Random,
    /// The `size × size` grid.
    Grid,
    /// The clique on `size` vertices.
    Clique,
    /// A `K4` core rooted at two corners with a random tree of
    /// `max(size, 12)` vertices hanging from each other corner.
    Chipheavy,
}

/// A deterministic instance of the given family.
pub fn generate(kind: GenKind, size: usize, seed: u64) -> GraphFile {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new();
    let mut roots = None;
    match kind {
        GenKind::Random => {
            for v in 0..size as Vertex {
                g.add_vertex(v);
            }
            for v in 0..size as Vertex {
                for u in 0..v {
                    if rng.gen_bool(0.3) {
                        g.add_edge(u, v);
                    }
                }
            }
        }
        GenKind::Grid => {
            let s = size as Vertex;
            for r in 0..s {
                for c in 0..s {
                    let v = r * s + c;
                    g.add_vertex(v);
                    if c > 0 {
                        g.add_edge(v - 1, v);
                    }
                    if r > 0 {
                        g.add_edge(v - s, v);
                    }
                }
            }
        }
        GenKind::Clique => {
            for v in 0..size as Vertex {
                g.add_vertex(v);
                for u in 0..v {
                    g.add_edge(u, v);
                }
            }
        }
        GenKind::Chipheavy => {
            for v in 0..4 {
                for u in 0..v {
                    g.add_edge(u, v);
                }
            }
            let tree = size.max(12) as Vertex;
            let mut next = 4;
            for anchor in [2, 3] {
                let first = next;
                for i in 0..tree {
                    let parent = if i == 0 { anchor } else { first + rng.gen_range(0..i) };
                    g.add_edge(parent, next);
                    next += 1;
                }
            }
            roots = Some(VSet::from([0, 1]));
        }
    }
    GraphFile { graph: g, roots, ..GraphFile::default() }
}

/// Splitter choice on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Splitter {
    Exhaustive,
    Hash,
    Cosmall,
}

/// Options shared by all subcommands.
#[derive(Args, Clone, Debug)]
pub struct Opts {
    /// Detail bound δ.
    #[arg(long, global = true, default_value_t = 0)]
    pub delta: usize,
    /// Comma-separated root set; overrides the file's `roots` line.
    #[arg(long, global = true, value_delimiter = ',')]
    pub roots: Option<Vec<Vertex>>,
    /// Instances with at most this many vertices are solved exhaustively.
    #[arg(long, global = true, default_value_t = 10)]
    pub cutoff: usize,
    /// Preserver size budget.
    #[arg(long, global = true)]
    pub budget: Option<usize>,
    /// Chip size threshold α.
    #[arg(long, global = true)]
    pub alpha: Option<usize>,
    /// Enables the edge-density clique test with this constant.
    #[arg(long = "density-c", global = true)]
    pub density_c: Option<f64>,
    /// Splitter family used by chip finding.
    #[arg(long, global = true, value_enum, default_value_t = Splitter::Cosmall)]
    pub splitter: Splitter,
    /// Largest recursion depth.
    #[arg(long = "depth-guard", global = true)]
    pub depth_guard: Option<usize>,
    /// Seed for generators and hashed splitters.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
}

impl Opts {
    pub fn config(&self) -> SolverConfig {
        let mode = match self.splitter {
            Splitter::Exhaustive => SplitterMode::Exhaustive,
            Splitter::Hash => SplitterMode::Hash,
            Splitter::Cosmall => SplitterMode::CoSmall,
        };
        SolverConfig {
            cutoff: self.cutoff,
            size_budget: self.budget,
            alpha: self.alpha,
            density_c: self.density_c,
            chips: ChipSearch { mode, seed: self.seed },
            depth_guard: self.depth_guard,
            ..SolverConfig::default()
        }
    }
}

#[derive(Subcommand, Clone, Debug)]
pub enum Command {
    /// The (X, δ)-folio of a graph with one witness per member.
    Folio { file: String },
    /// Whether a rooted pattern is a minor of a host graph.
    Minor { host: String, pattern: String },
    /// Vertex-disjoint paths for the file's `pair` lines.
    Paths { file: String },
    /// Pairwise non-touching chips with boundary below `k` (default |X|).
    Carve { file: String, k: Option<usize> },
    /// Balanced separation or well-linked set for parameter `k`.
    Reed { file: String, k: usize },
    /// Writes a generated graph file.
    Gen { kind: GenKind, size: usize },
    /// Solves `count` generated instances and reports work counters.
    Bench {
        kind: GenKind,
        size: usize,
        #[arg(long, default_value_t = 5)]
        count: usize,
    },
}

#[derive(Parser, Clone, Debug)]
#[command(name = "folio", version, about = "Rooted minor containment and folio computation")]
pub struct Cli {
    #[command(flatten)]
    pub opts: Opts,
    #[command(subcommand)]
    pub command: Command,
}

/// One folio member with its witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberDoc {
    pub pattern: String,
    pub branch_sets: Vec<Vec<Vertex>>,
}

/// One separation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationDoc {
    pub a: Vec<Vertex>,
    pub b: Vec<Vertex>,
}

/// One benchmark instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRow {
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub maximal_members: usize,
    pub counters: Stats,
}

/// Output of every subcommand except `gen`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub command: String,
    pub verdict: String,
    pub n: usize,
    pub m: usize,
    pub roots: Vec<Vertex>,
    pub delta: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub members: Vec<MemberDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub model: Option<MemberDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub paths: Option<Vec<Vec<Vertex>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub separation: Option<SeparationDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wset: Option<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chips: Option<Vec<Vec<Vertex>>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub bench: Vec<BenchRow>,
    pub counters: Stats,
    pub config: SolverConfig,
}

fn list(s: &VSet) -> Vec<Vertex> {
    s.iter().copied().collect()
}

fn words(v: &[Vertex]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn sets(v: &[Vec<Vertex>]) -> String {
    v.iter().map(|b| words(b)).collect::<Vec<_>>().join(" | ")
}

impl ResultDocument {
    fn new(command: &str, g: &Graph, roots: &VSet, delta: usize, cfg: &SolverConfig) -> Self {
        ResultDocument {
            command: command.into(),
            verdict: String::new(),
            n: g.n(),
            m: g.m(),
            roots: list(roots),
            delta,
            members: Vec::new(),
            model: None,
            paths: None,
            separation: None,
            wset: None,
            chips: None,
            bench: Vec::new(),
            counters: Stats::default(),
            config: cfg.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })
    }

    /// Line-oriented rendering with the same field order as the JSON form.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\nverdict: {}\n", self.command, self.verdict));
        out.push_str(&format!("graph: n={} m={}\nroots: {}\ndelta: {}\n", self.n, self.m, words(&self.roots), self.delta));
        for mdoc in &self.members {
            out.push_str(&format!("member: {} => {}\n", mdoc.pattern, sets(&mdoc.branch_sets)));
        }
        if let Some(mdoc) = &self.model {
            out.push_str(&format!("model: {} => {}\n", mdoc.pattern, sets(&mdoc.branch_sets)));
        }
        for p in self.paths.iter().flatten() {
            out.push_str(&format!("path: {}\n", words(p)));
        }
        if let Some(s) = &self.separation {
            out.push_str(&format!("separation: A = {} ; B = {}\n", words(&s.a), words(&s.b)));
        }
        if let Some(w) = &self.wset {
            out.push_str(&format!("well-linked set: {}\n", words(w)));
        }
        for c in self.chips.iter().flatten() {
            out.push_str(&format!("chip: {}\n", words(c)));
        }
        for r in &self.bench {
            out.push_str(&format!(
                "bench: seed={} n={} m={} maximal={} calls={} base={}\n",
                r.seed, r.n, r.m, r.maximal_members, r.counters.calls, r.counters.base_cases
            ));
        }
        let c = serde_json::to_value(&self.counters).expect("counters serialize");
        let fields: Vec<String> = c.as_object().into_iter().flatten().map(|(k, v)| format!("{k}={v}")).collect();
        out.push_str(&format!("counters: {}\n", fields.join(" ")));
        out.push_str(&format!("config: {}\n", serde_json::to_string(&self.config).expect("config serializes")));
        out
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            self.to_json()
        } else {
            self.to_text()
        }
    }
}

/// Process exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Invalid(_) | Error::Separable { .. } => 2,
        Error::Resource(_) => 3,
        Error::Internal(_) => 1,
    }
}

/// Reads and parses a graph file.
pub fn read_graph_file(path: &str) -> Result<GraphFile> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("cannot read {path}: {e}")))?;
    GraphFile::parse(&text)
}

fn resolve_roots(opts: &Opts, file: &GraphFile) -> Result<VSet> {
    let x: VSet = match (&opts.roots, &file.roots) {
        (Some(r), _) => r.iter().copied().collect(),
        (None, Some(r)) => r.clone(),
        (None, None) => VSet::new(),
    };
    if let Some(v) = x.iter().find(|v| !file.graph.contains(**v)) {
        return Err(Error::Invalid(format!("root {v} is not a vertex of the graph")));
    }
    Ok(x)
}

fn member_doc(p: &RootedGraph, m: &MinorModel) -> MemberDoc {
    MemberDoc { pattern: p.encode(), branch_sets: m.branch.iter().map(list).collect() }
}

/// Runs one subcommand and returns what it writes to standard output.
pub fn run(cli: &Cli) -> Result<String> {
    let opts = &cli.opts;
    let cfg = opts.config();
    let mut solver = Solver::new(cfg.clone());
    let doc = match &cli.command {
        Command::Gen { kind, size } => return Ok(generate(*kind, *size, opts.seed).emit()),
        Command::Folio { file } => {
            let f = read_graph_file(file)?;
            let x = resolve_roots(opts, &f)?;
            let mf = solver.solve_folio(&f.graph, &x, opts.delta)?;
            let mut doc = ResultDocument::new("folio", &f.graph, &x, opts.delta, &cfg);
            let members = mf.folio().members(MEMBER_LIMIT)?;
            for p in &members {
                let m = mf.witness(p).ok_or_else(|| Error::Internal("member without witness".into()))?;
                doc.members.push(member_doc(p, &m));
            }
            doc.verdict = format!("{} members", members.len());
            doc
        }
        Command::Minor { host, pattern } => {
            let h = read_graph_file(host)?;
            let pf = read_graph_file(pattern)?;
            let (p, _) = pf.pattern()?;
            let mut x = resolve_roots(opts, &h)?;
            if opts.roots.is_none() && h.roots.is_none() {
                x = p.root_union();
            }
            if let Some(v) = p.root_union().iter().find(|v| !x.contains(v)) {
                return Err(Error::Invalid(format!("pattern root {v} is not in the root set")));
            }
            let mut doc = ResultDocument::new("minor", &h.graph, &x, p.detail(), &cfg);
            match solver.minor(&h.graph, &x, &p)? {
                Some(m) => {
                    doc.verdict = "present".into();
                    doc.model = Some(member_doc(&p, &m));
                }
                None => doc.verdict = "absent".into(),
            }
            doc
        }
        Command::Paths { file } => {
            let f = read_graph_file(file)?;
            if f.pairs.is_empty() {
                return Err(Error::Invalid("no pair lines".into()));
            }
            let x: VSet = f.pairs.iter().flat_map(|&(s, t)| [s, t]).collect();
            let mut doc = ResultDocument::new("paths", &f.graph, &x, 0, &cfg);
            match solver.disjoint_paths(&f.graph, &f.pairs)? {
                Some(paths) => {
                    doc.verdict = "feasible".into();
                    doc.paths = Some(paths);
                }
                None => doc.verdict = "infeasible".into(),
            }
            doc
        }
        Command::Carve { file, k } => {
            let f = read_graph_file(file)?;
            let x = resolve_roots(opts, &f)?;
            let k = k.unwrap_or(x.len());
            let alpha = cfg.alpha_for(k, opts.delta);
            let chips = find_chips(&f.graph, &x, k, alpha, cfg.chips)?;
            let mut doc = ResultDocument::new("carve", &f.graph, &x, opts.delta, &cfg);
            doc.verdict = format!("{} chips (k={k}, alpha={alpha})", chips.len());
            doc.chips = Some(chips.iter().map(list).collect());
            doc
        }
        Command::Reed { file, k } => {
            let f = read_graph_file(file)?;
            let mut doc = ResultDocument::new("reed", &f.graph, &VSet::new(), 0, &cfg);
            match solver.reed(&f.graph, *k)? {
                ReedOutcome::Separation(s) => {
                    doc.verdict = format!("separation of order {}", s.order());
                    doc.separation = Some(SeparationDoc { a: list(&s.a), b: list(&s.b) });
                }
                ReedOutcome::WellLinkedSet(w) => {
                    doc.verdict = "well-linked set".into();
                    doc.wset = Some(list(&w));
                }
            }
            doc
        }
        Command::Bench { kind, size, count } => {
            let mut doc = ResultDocument::new("bench", &Graph::new(), &VSet::new(), opts.delta, &cfg);
            for i in 0..*count as u64 {
                let seed = opts.seed.wrapping_add(i);
                let f = generate(*kind, *size, seed);
                let x = match resolve_roots(opts, &f) {
                    Ok(x) => x,
                    Err(_) => VSet::from_iter(f.graph.vertices().take(1)),
                };
                let mut s = Solver::new(cfg.clone());
                let start = Instant::now();
                let mf = s.solve_folio(&f.graph, &x, opts.delta)?;
                eprintln!("bench seed={seed}: {:.3}s", start.elapsed().as_secs_f64());
                doc.bench.push(BenchRow {
                    seed,
                    n: f.graph.n(),
                    m: f.graph.m(),
                    maximal_members: mf.maximal_count(),
                    counters: s.stats.clone(),
                });
            }
            doc.verdict = format!("{} instances", doc.bench.len());
            doc
        }
    };
    let mut doc = doc;
    if doc.command != "bench" {
        doc.counters = solver.stats.clone();
    }
    Ok(doc.render(opts.json))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_emit() {
        let f = GraphFile::parse("# triangle\np 3 3\n0 1\n1 2\n0 2\nroots 0 2\n").unwrap();
        assert_eq!(f.graph.m(), 3);
        assert_eq!(f.roots, Some(VSet::from([0, 2])));
        assert_eq!(GraphFile::parse(&f.emit()).unwrap(), f);
        let e = GraphFile::parse("p 3 1\n0 1\n1 x\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e}");
        assert!(matches!(GraphFile::parse("0 1\n1 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(GraphFile::parse("p 2 1\n0 5\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(GraphFile::parse("p 2 2\n0 1\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn generators_are_deterministic() {
        for kind in [GenKind::Random, GenKind::Grid, GenKind::Clique, GenKind::Chipheavy] {
            let a = generate(kind, 5, 7).emit();
            assert_eq!(a, generate(kind, 5, 7).emit());
            assert_eq!(GraphFile::parse(&a).unwrap(), generate(kind, 5, 7));
        }
        assert_eq!(generate(GenKind::Clique, 5, 0).graph.m(), 10);
        let ch = generate(GenKind::Chipheavy, 1, 1);
        let x = ch.roots.clone().unwrap();
        assert!(!find_chips(&ch.graph, &x, 2, SolverConfig::default().alpha_for(2, 0), ChipSearch::default()).unwrap().is_empty());
    }
}
