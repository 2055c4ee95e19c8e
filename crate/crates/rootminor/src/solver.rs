//! The recursive folio solver: balanced separations, the clique-minor
//! existence recursion, the edge-prefix binary search that turns a clique
//! flag into a clique model, generic folios of compact graphs, the general
//! chip-reduction recursion and disjoint paths.
//!
//! The compact base case is the exhaustive solver of [`crate::oracle`] on
//! instances with at most `cutoff` vertices. Every reduction preserves the
//! folio exactly, so answers are always correct; instances that the
//! reductions cannot shrink end in a resource error instead.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::carving::{find_chips, ChipSearch};
use crate::cuts::{is_well_linked, min_vertex_cut, CutSide, WellLinked};
use crate::folio::ModelFolio;
use crate::graph::{contract_sets, Graph, Separation, VSet, Vertex};
use crate::oracle::{brute_folio, compose_model_folios, partial_partitions};
use crate::pattern::{MinorModel, RootedGraph, MAX_PATTERN};
use crate::preservers::{replace_chips, ModelMapper, PreserverSearch};
use crate::{Error, Limits, Result};

pub use crate::carving::count_carvable;

/// Solver parameters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Instances with at most this many vertices are solved exhaustively.
    pub cutoff: usize,
    /// Largest preserver size tried per chip; `None` means `⌊α/2⌋`.
    pub size_budget: Option<usize>,
    /// Smallest chip size; `None` means `2·(k − 1 + δ + 4)`.
    pub alpha: Option<usize>,
    /// Constant of the edge-density clique test; `None` disables the test.
    /// A constant that is too small makes clique answers unsound.
    pub density_c: Option<f64>,
    /// Splitter used by chip finding.
    pub chips: ChipSearch,
    /// Largest recursion depth; `None` means `64·k·⌈log₂(n + 2)⌉`.
    pub depth_guard: Option<usize>,
    pub limits: Limits,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            cutoff: 10,
            size_budget: None,
            alpha: None,
            density_c: None,
            chips: ChipSearch::default(),
            depth_guard: None,
            limits: Limits::default(),
        }
    }
}

impl SolverConfig {
    /// Chip size threshold for boundaries below `k` and detail `delta`.
    pub fn alpha_for(&self, k: usize, delta: usize) -> usize {
        self.alpha.unwrap_or(2 * (k.saturating_sub(1) + delta + 4)).max(1)
    }

    /// Preserver size budget for chip threshold `alpha`.
    pub fn budget_for(&self, alpha: usize) -> usize {
        self.size_budget.unwrap_or(alpha / 2)
    }

    fn check(&self) -> Result<()> {
        if self.cutoff == 0 {
            return Err(Error::Invalid("cutoff must be at least 1".into()));
        }
        if matches!(self.density_c, Some(c) if !(c.is_finite() && c > 0.0)) {
            return Err(Error::Invalid("density constant must be positive".into()));
        }
        Ok(())
    }
}

/// Work counters of a solver run. They replace wall-clock timings in result
/// documents so that output is reproducible.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub calls: u64,
    pub max_depth: usize,
    pub base_cases: u64,
    pub component_splits: u64,
    pub linkage_splits: u64,
    pub reed_separations: u64,
    pub reed_wsets: u64,
    pub chip_rounds: u64,
    pub chips_replaced: u64,
    pub chips_kept: u64,
    pub density_exits: u64,
    pub probes: u64,
    pub generic_extractions: u64,
    pub generic_fallbacks: u64,
}

/// Result of the balanced-separation procedure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReedOutcome {
    /// A separation of order at most `3k` with both open sides at most
    /// `(1 − 1/(100k²))·n`.
    Separation(Separation),
    /// A well-linked set of exactly `3k` vertices.
    WellLinkedSet(VSet),
}

/// Result of the clique-minor existence solver.
#[derive(Clone, Debug, PartialEq)]
pub enum Existence {
    Folio(ModelFolio),
    /// The graph contains `K_h` as a minor.
    Clique,
}

/// Result of [`Solver::folio_or_clique`].
#[derive(Clone, Debug, PartialEq)]
pub enum FolioOrClique {
    Folio(ModelFolio),
    /// A model of `K_h`, and the index `a` such that the first `a` edges
    /// carry no `K_h` minor while the first `a + 1` do.
    Clique { model: MinorModel, index: usize },
}

/// Parameters fixed for one run of the existence recursion.
#[derive(Clone, Debug)]
struct Ctx {
    h: usize,
    delta: usize,
    k: usize,
    alpha: usize,
    clique_possible: bool,
}

enum Mode<'a> {
    Exist(&'a Ctx),
    Folio,
}

/// A solver with its configuration and accumulated counters.
#[derive(Clone, Debug, Default)]
pub struct Solver {
    pub cfg: SolverConfig,
    pub stats: Stats,
    guard: usize,
}

/// The graph on all vertices of `g` with only its first `i` edges in
/// ascending order.
pub fn edge_prefix(g: &Graph, i: usize) -> Graph {
    let vs: Vec<Vertex> = g.vertices().collect();
    let mut h = Graph::from_edges(&vs, g.edges().into_iter().take(i));
    h.reserve_ids(g.next_id());
    h
}

fn check_roots(g: &Graph, x: &VSet) -> Result<()> {
    if x.iter().all(|v| g.contains(*v)) {
        Ok(())
    } else {
        Err(Error::Invalid("roots must lie in the graph".into()))
    }
}

fn trivial_folio(x: &VSet, delta: usize) -> ModelFolio {
    let mut f = ModelFolio::new(x.clone(), delta);
    f.insert(RootedGraph::empty(), MinorModel::default());
    f
}

fn clique_possible(g: &Graph, h: usize) -> bool {
    g.n() >= h && g.m() >= h * h.saturating_sub(1) / 2
}

fn ceil_log2(n: usize) -> usize {
    (usize::BITS - n.saturating_sub(1).leading_zeros()) as usize
}

/// A clique on `h` pattern vertices inside some member of `f`, as a model.
pub fn clique_in_folio(f: &ModelFolio, h: usize) -> Option<MinorModel> {
    fn grow(adj: &[u32], h: usize, from: usize, cand: u32, cur: &mut Vec<usize>) -> bool {
        if cur.len() == h {
            return true;
        }
        for v in from..adj.len() {
            if cand >> v & 1 == 1 {
                cur.push(v);
                if grow(adj, h, v + 1, cand & adj[v], cur) {
                    return true;
                }
                cur.pop();
            }
        }
        false
    }
    if h == 0 {
        return Some(MinorModel::default());
    }
    for (p, m) in f.entries() {
        if p.n() < h {
            continue;
        }
        let adj = p.adjacency();
        let all = if p.n() >= 32 { !0 } else { (1u32 << p.n()) - 1 };
        let mut cur = Vec::new();
        if grow(&adj, h, 0, all, &mut cur) {
            return Some(MinorModel::new(cur.iter().map(|&i| m.branch[i].clone()).collect()));
        }
    }
    None
}

/// Whether `m` is a model of the unrooted clique on `m.branch.len()`
/// vertices in `g`.
pub fn is_clique_model(g: &Graph, m: &MinorModel) -> bool {
    let mut seen = VSet::new();
    for b in &m.branch {
        if b.is_empty() || !b.iter().all(|v| g.contains(*v)) || !g.is_connected_set(b) {
            return false;
        }
        if !b.iter().all(|v| seen.insert(*v)) {
            return false;
        }
    }
    let nb: Vec<VSet> = m.branch.iter().map(|b| g.open_nbhd(b)).collect();
    (0..m.branch.len()).all(|i| (i + 1..m.branch.len()).all(|j| !nb[i].is_disjoint(&m.branch[j])))
}

/// Balanced separation or well-linked set of size `3k`.
pub fn reed(g: &Graph, k: usize) -> Result<ReedOutcome> {
    reed_avoiding(g, k, &VSet::new())
}

/// Like [`reed`]; the single vertex of a trivial separation is taken outside
/// `avoid` when possible, choosing the vertex whose removal (together with
/// `avoid`) leaves the smallest largest component.
pub fn reed_avoiding(g: &Graph, k: usize, avoid: &VSet) -> Result<ReedOutcome> {
    if k == 0 {
        return Err(Error::Invalid("k must be at least 1".into()));
    }
    let n = g.n();
    if n == 0 {
        return Err(Error::Invalid("empty graph".into()));
    }
    let scale = 100 * k * k;
    let all = g.vertex_set();
    if n <= scale {
        let mut pool: Vec<Vertex> = g.vertices().filter(|v| !avoid.contains(v)).collect();
        if pool.is_empty() {
            pool = g.vertices().collect();
        }
        let mut best = (usize::MAX, pool[0]);
        for &u in &pool {
            let mut blocked = avoid.clone();
            blocked.insert(u);
            let worst = g.without(&blocked).components().iter().map(|c| c.len()).max().unwrap_or(0);
            if worst < best.0 {
                best = (worst, u);
            }
        }
        return Ok(ReedOutcome::Separation(Separation::new(VSet::from([best.1]), all)));
    }
    let beta = n as f64 / scale as f64;
    let beta_size = beta.ceil() as usize;
    let mut s = VSet::new();
    for _ in 0..3 * k {
        let comps = g.without(&s).components();
        let Some(big) = comps.iter().find(|c| 2 * c.len() > n).cloned() else {
            return Ok(ReedOutcome::Separation(balanced_split(&s, comps, n)));
        };
        let tree = SpanningTree::new(g, &big);
        if let Some(u) = tree.rich_vertex(3 * k, beta) {
            s.insert(u);
            continue;
        }
        let roots = tree.cut_subtrees(beta_size);
        if roots.len() < 3 * k {
            return Err(Error::Internal(format!("only {} subtrees of size at least {beta_size}", roots.len())));
        }
        let x: VSet = roots.into_iter().take(3 * k).collect();
        return finish_reed(g, x);
    }
    finish_reed(g, s)
}

fn finish_reed(g: &Graph, x: VSet) -> Result<ReedOutcome> {
    Ok(match is_well_linked(g, &x)? {
        WellLinked::Counterexample(sep) => ReedOutcome::Separation(sep),
        WellLinked::WellLinked => ReedOutcome::WellLinkedSet(x),
    })
}

/// Components of `G − S`, each of at most `n/2` vertices, grouped into two
/// sides of at most `2n/3` vertices each.
fn balanced_split(s: &VSet, mut comps: Vec<VSet>, n: usize) -> Separation {
    comps.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let mut a = s.clone();
    let mut b = s.clone();
    let mut taken = 0usize;
    for c in comps {
        if 3 * taken < n {
            taken += c.len();
            a.extend(c);
        } else {
            b.extend(c);
        }
    }
    Separation::new(a, b)
}

/// A breadth-first spanning tree of a connected vertex set.
struct SpanningTree {
    order: Vec<Vertex>,
    children: BTreeMap<Vertex, Vec<Vertex>>,
    size: BTreeMap<Vertex, usize>,
}

impl SpanningTree {
    fn new(g: &Graph, set: &VSet) -> SpanningTree {
        let root = *set.iter().next().expect("non-empty component");
        let mut order = vec![root];
        let mut children: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
        let mut seen = VSet::from([root]);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if set.contains(&v) && seen.insert(v) {
                    children.entry(u).or_default().push(v);
                    order.push(v);
                    queue.push_back(v);
                }
            }
        }
        let mut size = BTreeMap::new();
        for &u in order.iter().rev() {
            let s = 1 + children.get(&u).map_or(0, |cs| cs.iter().map(|c| size[c]).sum());
            size.insert(u, s);
        }
        SpanningTree { order, children, size }
    }

    /// The smallest vertex with more than `top` children whose child
    /// subtrees, except the `top` largest, hold at least `β − 1` vertices.
    fn rich_vertex(&self, top: usize, beta: f64) -> Option<Vertex> {
        self.children
            .iter()
            .filter(|(_, cs)| cs.len() > top)
            .find(|(_, cs)| {
                let mut sizes: Vec<usize> = cs.iter().map(|c| self.size[c]).collect();
                sizes.sort_unstable_by(|a, b| b.cmp(a));
                sizes[top..].iter().sum::<usize>() as f64 >= beta - 1.0
            })
            .map(|(u, _)| *u)
    }

    /// Roots of disjoint subtrees of at least `beta` vertices, each cut at a
    /// lowest vertex whose remaining subtree reaches `beta`.
    fn cut_subtrees(&self, beta: usize) -> Vec<Vertex> {
        let mut rest: BTreeMap<Vertex, usize> = BTreeMap::new();
        let mut roots = Vec::new();
        for &u in self.order.iter().rev() {
            let r = 1 + self.children.get(&u).map_or(0, |cs| cs.iter().map(|c| rest[c]).sum());
            if r >= beta {
                roots.push(u);
                rest.insert(u, 0);
            } else {
                rest.insert(u, r);
            }
        }
        roots
    }
}

/// Groups the branch sets of a clique model into `t` consecutive groups of
/// `⌈h/t⌉` or `⌊h/t⌋` sets.
pub fn group_branch_sets(m: &MinorModel, t: usize) -> Result<MinorModel> {
    let h = m.branch.len();
    if t > h {
        return Err(Error::Invalid(format!("cannot group {h} branch sets into {t}")));
    }
    if t == 0 {
        return Ok(MinorModel::default());
    }
    let mut out = Vec::with_capacity(t);
    let mut it = m.branch.iter();
    for i in 0..t {
        let take = h / t + usize::from(i < h % t);
        out.push(it.by_ref().take(take).flatten().copied().collect());
    }
    Ok(MinorModel::new(out))
}

/// The generic `(X, δ)`-model-folio from a clique model whose branch sets
/// cannot be cut off from `X` by fewer than `|X|` vertices.
pub fn generic_extract(g: &Graph, x: &VSet, delta: usize, m: &MinorModel) -> Result<ModelFolio> {
    check_roots(g, x)?;
    let k = x.len();
    let h = m.branch.len();
    if h < 3 * k + delta {
        return Err(Error::Invalid(format!("clique of order {h} is below 3|X| + δ = {}", 3 * k + delta)));
    }
    if !is_clique_model(g, m) {
        return Err(Error::Invalid("not a clique model".into()));
    }
    if k + delta > MAX_PATTERN {
        return Err(Error::Resource(format!("patterns on {} vertices", k + delta)));
    }
    if k > 0 {
        for (v, b) in m.branch.iter().enumerate() {
            if let Some(f) = min_vertex_cut(g, x, b, b, k - 1, CutSide::Closest) {
                let mut a = f.source_side.clone();
                a.extend(f.separator.iter().copied());
                let rest: VSet = g.vertices().filter(|u| !f.source_side.contains(u)).collect();
                return Err(Error::Separable { vertex: v, separation: Separation::new(a, rest) });
            }
        }
    }
    let pool: Vec<usize> = (0..h).filter(|&v| m.branch[v].is_disjoint(x)).take(2 * k + delta).collect();
    if pool.len() < 2 * k + delta {
        return Err(Error::Internal("too few branch sets avoid X".into()));
    }
    let mut pick: Vec<usize> = (0..k + delta).collect();
    loop {
        let w: Vec<usize> = pick.iter().map(|&i| pool[i]).collect();
        if let Some(rooted) = route_witnessing_clique(g, x, m, &w)? {
            return Ok(universal_folio(x, delta, rooted));
        }
        // Next combination of k + δ positions out of the pool.
        let r = pick.len();
        let mut i = r;
        loop {
            if i == 0 {
                return Err(Error::Internal("no witnessing clique found".into()));
            }
            i -= 1;
            if pick[i] < pool.len() - r + i {
                pick[i] += 1;
                for j in i + 1..r {
                    pick[j] = pick[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Branch sets of a rooted clique: one per root (its routed path plus the
/// endpoint branch set) followed by the unused branch sets of `w`.
fn route_witnessing_clique(g: &Graph, x: &VSet, m: &MinorModel, w: &[usize]) -> Result<Option<(Vec<VSet>, Vec<VSet>)>> {
    let k = x.len();
    let parts: Vec<VSet> = w.iter().map(|&i| m.branch[i].clone()).collect();
    let (h, map) = contract_sets(g, &parts)?;
    let wv: Vec<Vertex> = parts.iter().map(|p| map[p.iter().next().expect("non-empty")]).collect();
    if k > 0 {
        for &v in &wv {
            let one = VSet::from([v]);
            if min_vertex_cut(&h, x, &one, &one, k - 1, CutSide::Closest).is_some() {
                return Ok(None);
            }
        }
    }
    let wset: VSet = wv.iter().copied().collect();
    let flow = match min_vertex_cut(&h, x, &wset, &VSet::new(), k, CutSide::Closest) {
        Some(f) if f.value == k => f,
        _ => return Ok(None),
    };
    let mut rooted: BTreeMap<Vertex, VSet> = BTreeMap::new();
    let mut used = VSet::new();
    for path in &flow.paths {
        let end = path.iter().position(|v| wset.contains(v)).ok_or_else(|| Error::Internal("path misses W".into()))?;
        let wi = wv.iter().position(|v| *v == path[end]).expect("endpoint in W");
        used.insert(wi as Vertex);
        let mut b: VSet = path[..end].iter().copied().collect();
        b.extend(parts[wi].iter().copied());
        rooted.insert(path[0], b);
    }
    if rooted.len() != k || !rooted.keys().all(|v| x.contains(v)) {
        return Err(Error::Internal("paths do not start at distinct roots".into()));
    }
    let free: Vec<VSet> = (0..wv.len()).filter(|i| !used.contains(&(*i as Vertex))).map(|i| parts[i].clone()).collect();
    Ok(Some((rooted.into_values().collect(), free)))
}

/// Every complete rooted pattern over `x` with detail at most `delta`,
/// witnessed by merging the rooted branch sets and dropping unused ones.
fn universal_folio(x: &VSet, delta: usize, (rooted, free): (Vec<VSet>, Vec<VSet>)) -> ModelFolio {
    let xs: Vec<Vertex> = x.iter().copied().collect();
    let mut out = ModelFolio::new(x.clone(), delta);
    for blocks in partial_partitions(&xs) {
        for d in 0..=delta {
            let n = blocks.len() + d;
            let mut roots = blocks.clone();
            roots.extend(std::iter::repeat_n(Vec::new(), d));
            let mut branch: Vec<VSet> = blocks
                .iter()
                .map(|b| b.iter().flat_map(|r| rooted[xs.iter().position(|v| v == r).expect("root")].iter().copied()).collect())
                .collect();
            branch.extend(free.iter().take(d).cloned());
            let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
            let adj: Vec<u32> = (0..n).map(|i| full & !(1 << i)).collect();
            out.insert_raw(roots, &adj, branch);
        }
    }
    out
}

impl Solver {
    pub fn new(cfg: SolverConfig) -> Self {
        Solver { cfg, stats: Stats::default(), guard: 0 }
    }

    fn start(&mut self, g: &Graph, k: usize) -> Result<()> {
        self.cfg.check()?;
        self.guard = self.cfg.depth_guard.unwrap_or(64 * k.max(1) * ceil_log2(g.n() + 2).max(1));
        Ok(())
    }

    fn enter(&mut self, depth: usize) -> Result<()> {
        self.stats.calls += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);
        if depth > self.guard {
            return Err(Error::Resource(format!("recursion depth exceeds the guard {}", self.guard)));
        }
        Ok(())
    }

    fn base(&mut self, g: &Graph, x: &VSet, delta: usize) -> Result<ModelFolio> {
        self.stats.base_cases += 1;
        brute_folio(g, x, delta, &self.cfg.limits)
    }

    pub fn reed(&mut self, g: &Graph, k: usize) -> Result<ReedOutcome> {
        let out = reed(g, k)?;
        match out {
            ReedOutcome::Separation(_) => self.stats.reed_separations += 1,
            ReedOutcome::WellLinkedSet(_) => self.stats.reed_wsets += 1,
        }
        Ok(out)
    }

    fn context(&self, g: &Graph, x: &VSet, delta: usize, h: usize) -> Ctx {
        let possible = clique_possible(g, h);
        let delta = if possible { delta.max(h) } else { delta };
        let k = x.len() + 1;
        Ctx { h, delta, k, alpha: self.cfg.alpha_for(k, delta), clique_possible: possible }
    }

    /// Either the `(X, δ)`-model-folio of `g` or the flag that `g` contains
    /// `K_h` as a minor. The flag is raised exactly when `K_h ≼ G`.
    pub fn folio_or_clique_existence(&mut self, g: &Graph, x: &VSet, delta: usize, h: usize) -> Result<Existence> {
        check_roots(g, x)?;
        self.start(g, x.len() + 1)?;
        Ok(match self.exist_raw(g, x, delta, h, 0)? {
            Some(f) => Existence::Folio(f.restrict_detail(delta)),
            None => Existence::Clique,
        })
    }

    fn exist_raw(&mut self, g: &Graph, x: &VSet, delta: usize, h: usize, depth: usize) -> Result<Option<ModelFolio>> {
        let ctx = self.context(g, x, delta, h);
        self.exist_rec(g, x, &ctx, depth)
    }

    fn exist_rec(&mut self, g: &Graph, x: &VSet, c: &Ctx, depth: usize) -> Result<Option<ModelFolio>> {
        self.enter(depth)?;
        if c.clique_possible {
            if let Some(dc) = self.cfg.density_c {
                let h = c.h as f64;
                if g.m() as f64 >= dc * h * h.ln().max(0.0).sqrt() * g.n() as f64 {
                    self.stats.density_exits += 1;
                    return Ok(None);
                }
            }
        }
        let Some(f) = self.exist_cases(g, x, c, depth)? else {
            return Ok(None);
        };
        if c.clique_possible && clique_in_folio(&f, c.h).is_some() {
            return Ok(None);
        }
        Ok(Some(f))
    }

    fn exist_cases(&mut self, g: &Graph, x: &VSet, c: &Ctx, depth: usize) -> Result<Option<ModelFolio>> {
        let rest: VSet = g.vertices().filter(|v| !x.contains(v)).collect();
        if g.n() <= self.cfg.cutoff || rest.is_empty() {
            return self.base(g, x, c.delta).map(Some);
        }
        let comps = g.induced(&rest).components();
        if comps.len() >= 2 {
            self.stats.component_splits += 1;
            let mut parts = Vec::with_capacity(comps.len());
            for comp in &comps {
                let mut s = comp.clone();
                s.extend(x.iter().copied());
                match self.exist_rec(&g.induced(&s), x, c, depth + 1)? {
                    Some(f) => parts.push(f),
                    None => return Ok(None),
                }
            }
            return combine_all(&parts, x, c.delta).map(Some);
        }
        if let WellLinked::Counterexample(sep) = is_well_linked(g, x)? {
            self.stats.linkage_splits += 1;
            return self.exist_split(g, x, &sep, c, depth);
        }
        if x.len() < c.k {
            match reed_avoiding(g, c.k, x)? {
                ReedOutcome::Separation(sep) => {
                    self.stats.reed_separations += 1;
                    return self.exist_split(g, x, &sep, c, depth);
                }
                ReedOutcome::WellLinkedSet(w) => {
                    self.stats.reed_wsets += 1;
                    let xw: VSet = x.union(&w).copied().collect();
                    if xw.len() > 4 * c.k - 1 {
                        return Err(Error::Internal("root augmentation exceeds 4k − 1".into()));
                    }
                    return Ok(self.exist_rec(g, &xw, c, depth + 1)?.map(|f| f.restrict_roots(x, c.delta)));
                }
            }
        }
        let Some((gl, mapper)) = self.carve_loop(&Mode::Exist(c), g, x, c.k, c.alpha, c.delta, depth)? else {
            return Ok(None);
        };
        let f = self.base(&gl, x, c.delta)?;
        mapper.map_folio(&f).map(Some)
    }

    fn exist_split(&mut self, g: &Graph, x: &VSet, sep: &Separation, c: &Ctx, depth: usize) -> Result<Option<ModelFolio>> {
        let mid = sep.separator();
        let side = |s: &VSet| -> VSet { s.iter().filter(|v| x.contains(v)).chain(mid.iter()).copied().collect() };
        let (xa, xb) = (side(&sep.a), side(&sep.b));
        let Some(fa) = self.exist_rec(&g.induced(&sep.a), &xa, c, depth + 1)? else {
            return Ok(None);
        };
        let Some(fb) = self.exist_rec(&g.induced(&sep.b), &xb, c, depth + 1)? else {
            return Ok(None);
        };
        compose_model_folios(&fa, &fb, x, c.delta).map(Some)
    }

    fn sub_folio(&mut self, mode: &Mode, g: &Graph, x: &VSet, delta: usize, depth: usize) -> Result<Option<ModelFolio>> {
        match mode {
            Mode::Exist(c) => self.exist_rec(g, x, c, depth),
            Mode::Folio => self.solve_rec(g, x, delta, depth).map(Some),
        }
    }

    /// Replaces chips until none is found or none can be replaced. `None`
    /// means a chip instance contains the clique of the existence run.
    #[allow(clippy::too_many_arguments)]
    fn carve_loop(
        &mut self,
        mode: &Mode,
        g: &Graph,
        x: &VSet,
        k: usize,
        alpha: usize,
        delta: usize,
        depth: usize,
    ) -> Result<Option<(Graph, ModelMapper)>> {
        let mut cur = g.clone();
        let mut mapper = ModelMapper::default();
        let search = PreserverSearch::with_budget(self.cfg.budget_for(alpha));
        loop {
            let chips = find_chips(&cur, x, k, alpha, self.cfg.chips)?;
            if chips.is_empty() {
                break;
            }
            self.stats.chip_rounds += 1;
            let mut folios = Vec::with_capacity(chips.len());
            for chip in &chips {
                let bd = cur.open_nbhd(chip);
                let local = cur.induced(&chip.union(&bd).copied().collect());
                match self.sub_folio(mode, &local, &bd, delta, depth + 1)? {
                    Some(f) => folios.push(f),
                    None => return Ok(None),
                }
            }
            let (next, step, report) = replace_chips(&cur, x, k, delta, &chips, &folios, &search, &self.cfg.limits)?;
            self.stats.chips_replaced += report.replaced.len() as u64;
            self.stats.chips_kept += report.kept.len() as u64;
            if report.replaced.is_empty() {
                break;
            }
            mapper.extend(step);
            cur = next;
        }
        Ok(Some((cur, mapper)))
    }

    /// The `(X, δ)`-model-folio of `g`, or a model of `K_h` found by binary
    /// search over the edge prefixes of `g`.
    pub fn folio_or_clique(&mut self, g: &Graph, x: &VSet, delta: usize, h: usize) -> Result<FolioOrClique> {
        check_roots(g, x)?;
        self.start(g, x.len() + 1)?;
        self.foc(g, x, delta, h, 0)
    }

    fn foc(&mut self, g: &Graph, x: &VSet, delta: usize, h: usize, depth: usize) -> Result<FolioOrClique> {
        if h < 2 {
            return Err(Error::Invalid("clique order must be at least 2".into()));
        }
        if let Some(f) = self.exist_raw(g, x, delta, h, depth)? {
            return Ok(FolioOrClique::Folio(f.restrict_detail(delta)));
        }
        let (mut lo, mut hi) = (0usize, g.m());
        let mut lo_folio: Option<ModelFolio> = None;
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            self.stats.probes += 1;
            match self.exist_raw(&edge_prefix(g, mid), x, delta, h, depth)? {
                Some(f) => {
                    lo = mid;
                    lo_folio = Some(f);
                }
                None => hi = mid,
            }
        }
        if let Some(model) = lo_folio.as_ref().and_then(|f| clique_in_folio(f, h)) {
            return Ok(FolioOrClique::Clique { model, index: lo });
        }
        let next = edge_prefix(g, lo + 1);
        let f = self
            .exist_raw(&next, x, delta.max(h), h + 1, depth)?
            .ok_or_else(|| Error::Internal("one edge raised the clique minor order by two".into()))?;
        let model = clique_in_folio(&f, h).ok_or_else(|| Error::Internal("clique missing after the threshold edge".into()))?;
        Ok(FolioOrClique::Clique { model, index: lo })
    }

    /// The `(X, δ)`-model-folio of `g`.
    pub fn solve_folio(&mut self, g: &Graph, x: &VSet, delta: usize) -> Result<ModelFolio> {
        check_roots(g, x)?;
        self.start(g, x.len() + 1)?;
        self.solve_rec(g, x, delta, 0)
    }

    fn solve_rec(&mut self, g: &Graph, x: &VSet, delta: usize, depth: usize) -> Result<ModelFolio> {
        self.enter(depth)?;
        if x.len() + delta == 0 {
            return Ok(trivial_folio(x, delta));
        }
        if g.n() <= self.cfg.cutoff {
            return self.base(g, x, delta);
        }
        let k = x.len();
        let alpha = self.cfg.alpha_for(k, delta);
        let (gl, mapper) = self
            .carve_loop(&Mode::Folio, g, x, k, alpha, delta, depth)?
            .ok_or_else(|| Error::Internal("folio mode never reports a clique".into()))?;
        let h = (alpha * (3 * k + delta)).max(2);
        let f = match self.foc(&gl, x, delta, h, depth + 1)? {
            FolioOrClique::Folio(f) => f,
            FolioOrClique::Clique { model, .. } => {
                let grouped = group_branch_sets(&model, 3 * k + delta)?;
                match generic_extract(&gl, x, delta, &grouped) {
                    Ok(f) => {
                        self.stats.generic_extractions += 1;
                        f
                    }
                    Err(Error::Separable { .. }) => {
                        self.stats.generic_fallbacks += 1;
                        self.base(&gl, x, delta)?
                    }
                    Err(e) => return Err(e),
                }
            }
        };
        mapper.map_folio(&f)
    }

    /// A model of the rooted pattern `p` in `g` with roots `x`, if any.
    pub fn minor(&mut self, g: &Graph, x: &VSet, p: &RootedGraph) -> Result<Option<MinorModel>> {
        if !p.root_union().is_subset(x) {
            return Err(Error::Invalid("pattern roots must lie in X".into()));
        }
        let f = self.solve_folio(g, x, p.detail())?;
        Ok(f.witness(p))
    }

    /// Vertex-disjoint paths joining each pair, or `None` when they do not
    /// exist.
    pub fn disjoint_paths(&mut self, g: &Graph, pairs: &[(Vertex, Vertex)]) -> Result<Option<Vec<Vec<Vertex>>>> {
        let mut x = VSet::new();
        for &(s, t) in pairs {
            if !x.insert(s) || !x.insert(t) {
                return Err(Error::Invalid("terminals must be pairwise distinct".into()));
            }
        }
        check_roots(g, &x)?;
        if pairs.is_empty() {
            return Ok(Some(Vec::new()));
        }
        let roots: Vec<Vec<Vertex>> = pairs.iter().map(|&(s, t)| vec![s, t]).collect();
        let p = RootedGraph::new(roots, &[])?;
        let f = self.solve_folio(g, &x, 0)?;
        let Some(m) = f.witness(&p) else {
            return Ok(None);
        };
        let mut paths = Vec::with_capacity(pairs.len());
        for &(s, t) in pairs {
            let b = m.branch.iter().find(|b| b.contains(&s)).ok_or_else(|| Error::Internal("terminal not covered".into()))?;
            let path = path_within(g, b, s, t).ok_or_else(|| Error::Internal("branch set does not join its pair".into()))?;
            paths.push(path);
        }
        Ok(Some(paths))
    }
}

/// A shortest `s`–`t` path inside `G[set]`.
pub fn path_within(g: &Graph, set: &VSet, s: Vertex, t: Vertex) -> Option<Vec<Vertex>> {
    let mut prev: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    let mut queue = VecDeque::from([s]);
    prev.insert(s, s);
    while let Some(u) = queue.pop_front() {
        if u == t {
            let mut path = vec![t];
            let mut v = t;
            while v != s {
                v = prev[&v];
                path.push(v);
            }
            path.reverse();
            return Some(path);
        }
        for &v in g.neighbors(u) {
            if set.contains(&v) && !prev.contains_key(&v) {
                prev.insert(v, u);
                queue.push_back(v);
            }
        }
    }
    None
}

/// Divide-and-conquer composition of folios over `X`-separations.
fn combine_all(parts: &[ModelFolio], x: &VSet, delta: usize) -> Result<ModelFolio> {
    match parts.len() {
        0 => Ok(trivial_folio(x, delta)),
        1 => Ok(parts[0].clone()),
        n => {
            let (a, b) = parts.split_at(n / 2);
            compose_model_folios(&combine_all(a, x, delta)?, &combine_all(b, x, delta)?, x, delta)
        }
    }
}

/// See [`Solver::folio_or_clique_existence`].
pub fn folio_or_clique_existence(g: &Graph, x: &VSet, delta: usize, h: usize, cfg: &SolverConfig) -> Result<Existence> {
    Solver::new(cfg.clone()).folio_or_clique_existence(g, x, delta, h)
}

/// See [`Solver::folio_or_clique`].
pub fn folio_or_clique(g: &Graph, x: &VSet, delta: usize, h: usize, cfg: &SolverConfig) -> Result<FolioOrClique> {
    Solver::new(cfg.clone()).folio_or_clique(g, x, delta, h)
}

/// See [`Solver::solve_folio`].
pub fn solve_folio(g: &Graph, x: &VSet, delta: usize, cfg: &SolverConfig) -> Result<ModelFolio> {
    Solver::new(cfg.clone()).solve_folio(g, x, delta)
}

/// See [`Solver::disjoint_paths`].
pub fn disjoint_paths(g: &Graph, pairs: &[(Vertex, Vertex)], cfg: &SolverConfig) -> Result<Option<Vec<Vec<Vertex>>>> {
    Solver::new(cfg.clone()).disjoint_paths(g, pairs)
}
