//! Terminal carving and chip finding.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cuts::{isolating_cuts, min_vertex_cut, mu_bar, CutSide};
use crate::graph::{contract_sets, Graph, VSet, Vertex};
use crate::{Error, Result};

/// An instance `(G, z, T, k)` of terminal carving.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CarvingInstance {
    pub graph: Graph,
    pub z: Vertex,
    pub terminals: VSet,
    pub k: usize,
}

impl CarvingInstance {
    pub fn new(graph: Graph, z: Vertex, terminals: VSet, k: usize) -> Result<Self> {
        let inst = CarvingInstance { graph, z, terminals, k };
        inst.check()?;
        Ok(inst)
    }

    /// `T ∪ {z}`.
    pub fn all_terminals(&self) -> VSet {
        let mut t = self.terminals.clone();
        t.insert(self.z);
        t
    }

    fn check(&self) -> Result<()> {
        if !self.graph.contains(self.z) || self.terminals.contains(&self.z) {
            return Err(Error::Invalid("z must be a vertex outside T".into()));
        }
        if !self.terminals.iter().all(|t| self.graph.contains(*t)) {
            return Err(Error::Invalid("terminals must lie in the graph".into()));
        }
        if !self.graph.is_independent(&self.all_terminals()) {
            return Err(Error::Invalid("T ∪ {z} must be independent".into()));
        }
        Ok(())
    }

    /// Whether `t` is `k`-carvable: `μ̄(t, z) < k` with `T ∪ {z}` undeletable.
    pub fn is_carvable(&self, t: Vertex) -> Result<bool> {
        Ok(mu_bar(&self.graph, &self.all_terminals(), &VSet::from([t]), &VSet::from([self.z]))? < self.k)
    }

    /// Whether `c` is a terminal `k`-chip.
    pub fn is_terminal_chip(&self, c: &VSet) -> bool {
        let n = self.graph.open_nbhd(c);
        !c.is_empty()
            && self.graph.is_connected_set(c)
            && !c.contains(&self.z)
            && !c.is_disjoint(&self.terminals)
            && n.is_disjoint(&self.all_terminals())
            && n.len() < self.k
    }
}

/// Size reduction that keeps capped cut values between the vertices of `w`.
pub trait Sparsifier {
    fn reduce(&self, g: &Graph, w: &VSet, k: usize) -> Graph;
}

/// The reduction that returns its input.
#[derive(Clone, Copy, Debug, Default)]
pub struct IdentitySparsifier;

impl Sparsifier for IdentitySparsifier {
    fn reduce(&self, g: &Graph, _w: &VSet, _k: usize) -> Graph {
        g.clone()
    }
}

/// Builds a graph `H` containing `T'` as an independent set such that
/// `min(μ̄_{G,T}(A,B), k) = min(μ̄_{H,T'}(A,B), k)` for disjoint `A, B ⊆ T'`.
/// Each terminal becomes a `k`-clique adjacent to its former neighbours, the
/// reducer runs on the clique union, and the vertices of `T'` are then
/// reattached to their cliques under their original ids.
pub fn sparsify(g: &Graph, t: &VSet, tp: &VSet, k: usize, reducer: &dyn Sparsifier) -> Result<Graph> {
    if !g.is_independent(t) || !tp.is_subset(t) {
        return Err(Error::Invalid("sparsify needs an independent T ⊇ T'".into()));
    }
    let mut h = g.clone();
    let mut cliques: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for &v in t {
        let nb: Vec<Vertex> = g.neighbors(v).iter().copied().collect();
        h.remove_vertex(v);
        let w: Vec<Vertex> = (0..k).map(|_| h.fresh_vertex()).collect();
        for (i, &a) in w.iter().enumerate() {
            for &b in &w[..i] {
                h.add_edge(a, b);
            }
            for &u in &nb {
                h.add_edge(a, u);
            }
        }
        cliques.insert(v, w);
    }
    let keep: VSet = tp.iter().flat_map(|v| cliques[v].iter().copied()).collect();
    let mut h = reducer.reduce(&h, &keep, k);
    for &v in tp {
        h.add_vertex(v);
        for &a in &cliques[&v] {
            h.add_edge(v, a);
        }
    }
    Ok(h)
}

/// The set `T_t` for a carvable terminal `t` whose isolating set is `c`:
/// the terminals on the source side of the closest minimum cut between `t`
/// and `N(c)` inside `G[N[c]]`.
fn pushed_terminals(g: &Graph, tstar: &VSet, terms: &VSet, t: Vertex, c: &VSet) -> VSet {
    let boundary = g.open_nbhd(c);
    let local: VSet = c.union(&boundary).copied().collect();
    let h = g.induced(&local);
    let lock: VSet = tstar.intersection(&local).copied().collect();
    match min_vertex_cut(&h, &VSet::from([t]), &boundary, &lock, h.n(), CutSide::Closest) {
        Some(f) => f.source_side.intersection(terms).copied().collect(),
        None => c.intersection(terms).copied().collect(),
    }
}

/// A minimal representative set, by divide and conquer over the terminals.
pub fn representative_set(inst: &CarvingInstance, reducer: &dyn Sparsifier) -> Result<VSet> {
    inst.check()?;
    let ts: Vec<Vertex> = inst.terminals.iter().copied().collect();
    if ts.is_empty() {
        return Ok(VSet::new());
    }
    if ts.len() == 1 {
        return Ok(if inst.is_carvable(ts[0])? { VSet::from([ts[0]]) } else { VSet::new() });
    }
    let tstar = inst.all_terminals();
    let half = ts.len().div_ceil(2);
    let mut chosen: Vec<(Vertex, VSet)> = Vec::new();
    for part in [&ts[..half], &ts[half..]] {
        let ti: VSet = part.iter().copied().collect();
        let mut tis = ti.clone();
        tis.insert(inst.z);
        let h = sparsify(&inst.graph, &tstar, &tis, inst.k, reducer)?;
        let sub = CarvingInstance { graph: h, z: inst.z, terminals: ti, k: inst.k };
        let ri = representative_set(&sub, reducer)?;
        if ri.is_empty() {
            continue;
        }
        let mut tp = ri.clone();
        tp.insert(inst.z);
        let cuts = isolating_cuts(&inst.graph, &tstar, &tp)?;
        for &t in &ri {
            chosen.push((t, pushed_terminals(&inst.graph, &tstar, &inst.terminals, t, &cuts[&t])));
        }
    }
    chosen.sort_by(|a, b| b.1.len().cmp(&a.1.len()).then(a.0.cmp(&b.0)));
    let mut r = VSet::new();
    let mut processed: Vec<&VSet> = Vec::new();
    for (t, tt) in &chosen {
        if !processed.iter().any(|s| s.contains(t)) {
            r.insert(*t);
        }
        processed.push(tt);
    }
    Ok(r)
}

/// Pairwise non-touching terminal `k`-chips covering every carvable terminal.
pub fn terminal_carving(inst: &CarvingInstance, reducer: &dyn Sparsifier) -> Result<Vec<VSet>> {
    let r = representative_set(inst, reducer)?;
    if r.is_empty() {
        return Ok(Vec::new());
    }
    let mut tp = r.clone();
    tp.insert(inst.z);
    let cuts = isolating_cuts(&inst.graph, &inst.all_terminals(), &tp)?;
    Ok(r.iter().map(|t| cuts[t].clone()).collect())
}

/// How the splitter family is built.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum SplitterMode {
    /// Every subset of the universe (falls back to `CoSmall` above 16 elements).
    Exhaustive,
    /// Seeded pseudorandom subsets; coverage is not guaranteed.
    Hash,
    /// The complements of all sets of at most `b` elements.
    #[default]
    CoSmall,
}

/// A family of subsets of `universe` separating small disjoint pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitterFamily {
    pub universe: VSet,
    pub a: usize,
    pub b: usize,
    pub mode: SplitterMode,
    pub sets: Vec<VSet>,
}

impl SplitterFamily {
    /// Whether some member contains `a` and misses `b`.
    pub fn separates(&self, a: &VSet, b: &VSet) -> bool {
        self.sets.iter().any(|s| a.is_subset(s) && s.is_disjoint(b))
    }
}

const HASH_FAMILY_CAP: usize = 4096;

fn subsets_up_to(items: &[Vertex], b: usize, out: &mut Vec<VSet>) {
    fn go(items: &[Vertex], from: usize, left: usize, cur: &mut Vec<Vertex>, out: &mut Vec<VSet>) {
        out.push(cur.iter().copied().collect());
        if left == 0 {
            return;
        }
        for i in from..items.len() {
            cur.push(items[i]);
            go(items, i + 1, left - 1, cur, out);
            cur.pop();
        }
    }
    go(items, 0, b, &mut Vec::new(), out);
}

/// Splitter family over `universe` for pairs `(A, B)` with `|A| ≤ a`,
/// `|B| ≤ b`.
pub fn splitter_family(universe: &VSet, a: usize, b: usize, mode: SplitterMode, seed: u64) -> SplitterFamily {
    let items: Vec<Vertex> = universe.iter().copied().collect();
    let all_subsets = |items: &[Vertex]| -> Vec<VSet> {
        (0u32..(1u32 << items.len()))
            .map(|m| items.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &v)| v).collect())
            .collect()
    };
    let (mode, sets) = if a == 0 {
        (mode, vec![VSet::new()])
    } else if items.len() <= a + b || (mode == SplitterMode::Exhaustive && items.len() <= 16) {
        (SplitterMode::Exhaustive, all_subsets(&items))
    } else if mode == SplitterMode::Hash {
        let ab = (a + b) as f64;
        let want = (8.0 * 2f64.powf(ab) * (ab + 1.0) * (items.len() as f64).ln()).ceil() as usize;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sets = (0..want.min(HASH_FAMILY_CAP))
            .map(|_| items.iter().copied().filter(|_| rng.gen_bool(0.5)).collect())
            .collect();
        (SplitterMode::Hash, sets)
    } else {
        let mut small = Vec::new();
        subsets_up_to(&items, b, &mut small);
        (SplitterMode::CoSmall, small.into_iter().map(|s| universe.difference(&s).copied().collect()).collect())
    };
    SplitterFamily { universe: universe.clone(), a, b, mode, sets }
}

/// Whether `c` is an `(X, k, α)`-chip.
pub fn is_chip(g: &Graph, x: &VSet, k: usize, alpha: usize, c: &VSet) -> bool {
    !c.is_empty()
        && c.len() >= alpha
        && c.is_disjoint(x)
        && c.iter().all(|v| g.contains(*v))
        && g.is_connected_set(c)
        && g.open_nbhd(c).len() < k
}

/// Chips found for one splitter set `s`: large components of `G[S]` are
/// contracted into terminals, a root terminal is attached to `X`, and the
/// terminal chips are uncontracted.
pub fn chips_for_set(g: &Graph, x: &VSet, k: usize, alpha: usize, s: &VSet, reducer: &dyn Sparsifier) -> Result<Vec<VSet>> {
    let large: Vec<VSet> = g.induced(s).components().into_iter().filter(|c| c.len() >= alpha.max(1)).collect();
    chips_for_components(g, x, k, &large, reducer)
}

fn chips_for_components(g: &Graph, x: &VSet, k: usize, large: &[VSet], reducer: &dyn Sparsifier) -> Result<Vec<VSet>> {
    if large.is_empty() || k == 0 {
        return Ok(Vec::new());
    }
    let (mut h, map) = contract_sets(g, large)?;
    let mut back: BTreeMap<Vertex, VSet> = BTreeMap::new();
    for part in large {
        let v = map[part.iter().next().expect("non-empty part")];
        back.insert(v, part.clone());
    }
    let z = h.fresh_vertex();
    h.add_vertex(z);
    for &v in x {
        h.add_edge(z, map.get(&v).copied().unwrap_or(v));
    }
    let terms: VSet = back.keys().copied().collect();
    let inst = CarvingInstance::new(h, z, terms, k)?;
    let chips = terminal_carving(&inst, reducer)?;
    Ok(chips
        .into_iter()
        .map(|c| c.iter().flat_map(|v| back.get(v).cloned().unwrap_or_else(|| VSet::from([*v]))).collect())
        .collect())
}

/// Configuration of chip finding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChipSearch {
    pub mode: SplitterMode,
    pub seed: u64,
}

impl Default for ChipSearch {
    fn default() -> Self {
        ChipSearch { mode: SplitterMode::CoSmall, seed: 0 }
    }
}

/// Pairwise non-touching `(X, k, α)`-chips: the per-splitter-set family
/// with the largest union, the first one winning ties.
pub fn find_chips(g: &Graph, x: &VSet, k: usize, alpha: usize, search: ChipSearch) -> Result<Vec<VSet>> {
    if !x.iter().all(|v| g.contains(*v)) {
        return Err(Error::Invalid("X must lie in the graph".into()));
    }
    if k == 0 || alpha > g.n() {
        return Ok(Vec::new());
    }
    let universe: VSet = g.vertices().filter(|v| !x.contains(v)).collect();
    let family = splitter_family(&universe, alpha, k - 1, search.mode, search.seed);
    let reducer = IdentitySparsifier;
    let mut seen: BTreeSet<Vec<VSet>> = BTreeSet::new();
    let mut best: Vec<VSet> = Vec::new();
    let mut best_size = 0usize;
    for s in &family.sets {
        let large: Vec<VSet> = g.induced(s).components().into_iter().filter(|c| c.len() >= alpha.max(1)).collect();
        if large.is_empty() || !seen.insert(large.clone()) {
            continue;
        }
        let chips = chips_for_components(g, x, k, &large, &reducer)?;
        let size: usize = chips.iter().map(|c| c.len()).sum();
        if size > best_size {
            best_size = size;
            best = chips;
        }
    }
    debug_assert!(best.iter().all(|c| is_chip(g, x, k, alpha, c)));
    Ok(best)
}

/// Number of `(X, k, α)`-carvable vertices and the size of a largest chip,
/// by enumerating every candidate boundary of fewer than `k` vertices.
pub fn carvable_stats(g: &Graph, x: &VSet, k: usize, alpha: usize) -> (usize, usize) {
    if k == 0 {
        return (0, 0);
    }
    let items: Vec<Vertex> = g.vertices().collect();
    let mut bounds = Vec::new();
    subsets_up_to(&items, k - 1, &mut bounds);
    let mut carvable = VSet::new();
    let mut largest = 0;
    for b in bounds {
        for c in g.without(&b).components() {
            if c.len() >= alpha.max(1) && c.is_disjoint(x) {
                largest = largest.max(c.len());
                carvable.extend(c);
            }
        }
    }
    (carvable.len(), largest)
}

pub fn count_carvable(g: &Graph, x: &VSet, k: usize, alpha: usize) -> usize {
    carvable_stats(g, x, k, alpha).0
}

pub fn largest_chip(g: &Graph, x: &VSet, k: usize, alpha: usize) -> usize {
    carvable_stats(g, x, k, alpha).1
}
