//! Rooted patterns `(H, π)` in canonical form, minor models and their check.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VSet, Vertex};
use crate::{Error, Result};

/// Largest pattern the packed edge word can hold.
pub const MAX_PATTERN: usize = 16;

/// Bit of the unordered pair `i < j`. Pairs are ordered column by column,
/// `(0,1), (0,2), (1,2), (0,3), ...`, and the first pair is the most
/// significant bit, so numeric order on the packed word is lexicographic
/// order on the adjacency bitstring.
#[inline]
pub fn pair_bit(i: usize, j: usize) -> u128 {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    1u128 << (127 - (j * (j - 1) / 2 + i))
}

/// Vertex classes of a canonical pattern: the root sets of its rooted
/// vertices in ascending order, plus the number of unrooted vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub rooted: Vec<Vec<Vertex>>,
    pub unrooted: usize,
}

impl Signature {
    pub fn n(&self) -> usize {
        self.rooted.len() + self.unrooted
    }
}

/// An `X`-rooted graph in canonical form. Vertex `i` has root set `roots[i]`;
/// rooted vertices come first, sorted by root set, then the unrooted ones.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RootedGraph {
    roots: Vec<Vec<Vertex>>,
    edges: u128,
}

impl RootedGraph {
    pub fn empty() -> Self {
        RootedGraph { roots: Vec::new(), edges: 0 }
    }

    /// Build from arbitrary labels `0..roots.len()`; the result is canonical.
    pub fn new(roots: Vec<Vec<Vertex>>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = roots.len();
        if n > MAX_PATTERN {
            return Err(Error::Resource(format!("pattern with {n} vertices exceeds {MAX_PATTERN}")));
        }
        let mut adj = vec![0u32; n];
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(Error::Invalid(format!("bad pattern edge ({a},{b})")));
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        let mut seen = VSet::new();
        for r in &roots {
            for &x in r {
                if !seen.insert(x) {
                    return Err(Error::Invalid(format!("root {x} assigned twice")));
                }
            }
        }
        Ok(canonicalize(roots, &adj).0)
    }

    /// Rooted graph from a signature and a packed canonical edge word.
    pub fn from_parts(sig: &Signature, edges: u128) -> Self {
        let mut roots = sig.rooted.clone();
        roots.extend(std::iter::repeat_n(Vec::new(), sig.unrooted));
        RootedGraph { roots, edges }
    }

    pub fn n(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[Vec<Vertex>] {
        &self.roots
    }

    pub fn pi(&self, i: usize) -> &[Vertex] {
        &self.roots[i]
    }

    pub fn edge_word(&self) -> u128 {
        self.edges
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.edges & pair_bit(i, j) != 0
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn adjacency(&self) -> Vec<u32> {
        unpack(self.edges, self.n())
    }

    pub fn rooted_count(&self) -> usize {
        self.roots.iter().filter(|r| !r.is_empty()).count()
    }

    pub fn detail(&self) -> usize {
        self.n() - self.rooted_count()
    }

    pub fn signature(&self) -> Signature {
        let r = self.rooted_count();
        Signature { rooted: self.roots[..r].to_vec(), unrooted: self.n() - r }
    }

    /// Root vertices used by the pattern.
    pub fn root_union(&self) -> VSet {
        self.roots.iter().flatten().copied().collect()
    }

    /// The unrooted clique `K_h`.
    pub fn clique(h: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for i in 0..h {
            for j in i + 1..h {
                edges.push((i, j));
            }
        }
        RootedGraph::new(vec![Vec::new(); h], &edges)
    }

    /// Canonical text: `n;pi_1|pi_2|...;bits` with 1-based vertex numbering
    /// implied by position and bits over pairs in column order.
    pub fn encode(&self) -> String {
        let roots: Vec<String> = self
            .roots
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        let n = self.n();
        let mut bits = String::new();
        for j in 1..n {
            for i in 0..j {
                bits.push(if self.has_edge(i, j) { '1' } else { '0' });
            }
        }
        format!("{};{};{}", n, roots.join("|"), bits)
    }

    /// Inverse of [`RootedGraph::encode`].
    pub fn decode(text: &str) -> Result<Self> {
        let bad = |m: &str| Error::Invalid(format!("pattern encoding {text:?}: {m}"));
        let mut parts = text.split(';');
        let (Some(n), Some(roots), Some(bits), None) = (parts.next(), parts.next(), parts.next(), parts.next()) else {
            return Err(bad("expected three fields"));
        };
        let n: usize = n.parse().map_err(|_| bad("vertex count"))?;
        let roots: Vec<Vec<Vertex>> = if n == 0 {
            Vec::new()
        } else {
            roots
                .split('|')
                .map(|r| if r.is_empty() { Ok(Vec::new()) } else { r.split(',').map(|x| x.parse().map_err(|_| bad("root id"))).collect() })
                .collect::<Result<_>>()?
        };
        if roots.len() != n || bits.len() != n * n.saturating_sub(1) / 2 {
            return Err(bad("field lengths disagree"));
        }
        let mut edges = Vec::new();
        let mut it = bits.chars();
        for j in 1..n {
            for i in 0..j {
                match it.next() {
                    Some('1') => edges.push((i, j)),
                    Some('0') => {}
                    _ => return Err(bad("edge bits")),
                }
            }
        }
        RootedGraph::new(roots, &edges)
    }
}

pub fn unpack(edges: u128, n: usize) -> Vec<u32> {
    let mut adj = vec![0u32; n];
    for j in 1..n {
        for i in 0..j {
            if edges & pair_bit(i, j) != 0 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

fn pack(adj: &[u32], order: &[usize]) -> u128 {
    let mut w = 0u128;
    for j in 1..order.len() {
        for i in 0..j {
            if adj[order[i]] & (1 << order[j]) != 0 {
                w |= pair_bit(i, j);
            }
        }
    }
    w
}

/// Canonical form of a rooted graph given by per-vertex root sets and
/// adjacency rows. Returns the pattern and `order`, where `order[p]` is the
/// input vertex placed at canonical position `p`.
pub fn canonicalize(mut roots: Vec<Vec<Vertex>>, adj: &[u32]) -> (RootedGraph, Vec<usize>) {
    let n = roots.len();
    for r in roots.iter_mut() {
        r.sort_unstable();
    }
    let mut rooted: Vec<usize> = (0..n).filter(|&i| !roots[i].is_empty()).collect();
    rooted.sort_by(|&a, &b| roots[a].cmp(&roots[b]));
    let free: Vec<usize> = (0..n).filter(|&i| roots[i].is_empty()).collect();
    let mut order = rooted;
    let order = if free.len() <= 1 {
        order.extend(free);
        order
    } else {
        let mut best: Option<(u128, Vec<usize>)> = None;
        let mut remaining = free;
        search_order(adj, &mut order, &mut remaining, &mut best);
        best.unwrap().1
    };
    let edges = pack(adj, &order);
    let new_roots = order.iter().map(|&i| roots[i].clone()).collect();
    (RootedGraph { roots: new_roots, edges }, order)
}

fn block(adj: &[u32], order: &[usize], c: usize) -> u32 {
    // bits for pairs (i, j) with j = order.len(): i = 0 is most significant
    let j = order.len();
    let mut b = 0u32;
    for (i, &o) in order.iter().enumerate() {
        if adj[o] & (1 << c) != 0 {
            b |= 1 << (j - 1 - i);
        }
    }
    b
}

fn search_order(
    adj: &[u32],
    order: &mut Vec<usize>,
    remaining: &mut Vec<usize>,
    best: &mut Option<(u128, Vec<usize>)>,
) {
    if remaining.is_empty() {
        let w = pack(adj, order);
        if best.as_ref().is_none_or(|(bw, _)| w < *bw) {
            *best = Some((w, order.clone()));
        }
        return;
    }
    let blocks: Vec<u32> = remaining.iter().map(|&c| block(adj, order, c)).collect();
    let min = *blocks.iter().min().unwrap();
    let mut tried: Vec<usize> = Vec::new();
    for idx in 0..remaining.len() {
        if blocks[idx] != min {
            continue;
        }
        let c = remaining[idx];
        // interchangeable vertices give the same string
        if tried.iter().any(|&t| adj[t] & !(1 << c) == adj[c] & !(1 << t)) {
            continue;
        }
        tried.push(c);
        remaining.remove(idx);
        order.push(c);
        search_order(adj, order, remaining, best);
        order.pop();
        remaining.insert(idx, c);
    }
}

/// True when `p` is, up to renaming unrooted vertices, a spanning subgraph
/// of `q`. Both must share a signature.
pub fn edge_dominated(p: u128, q: u128, sig: &Signature) -> bool {
    if p & !q == 0 {
        return true;
    }
    if sig.unrooted <= 1 || p.count_ones() > q.count_ones() {
        return false;
    }
    let n = sig.n();
    let r = sig.rooted.len();
    let pa = unpack(p, n);
    let qa = unpack(q, n);
    // rooted part is fixed
    for i in 0..r {
        if pa[i] & !qa[i] & ((1 << r) - 1) != 0 {
            return false;
        }
    }
    let mut map: Vec<usize> = (0..r).collect();
    map.resize(n, usize::MAX);
    let mut used = 0u32;
    extend_map(&pa, &qa, r, r, n, &mut map, &mut used)
}

fn extend_map(pa: &[u32], qa: &[u32], r: usize, v: usize, n: usize, map: &mut [usize], used: &mut u32) -> bool {
    if v == n {
        return true;
    }
    for c in r..n {
        if *used & (1 << c) != 0 {
            continue;
        }
        let ok = (0..v).all(|u| pa[v] & (1 << u) == 0 || qa[c] & (1 << map[u]) != 0);
        if !ok {
            continue;
        }
        map[v] = c;
        *used |= 1 << c;
        if extend_map(pa, qa, r, v + 1, n, map, used) {
            return true;
        }
        *used &= !(1 << c);
        map[v] = usize::MAX;
    }
    false
}

/// Branch sets `η(u)`, indexed by pattern vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorModel {
    pub branch: Vec<VSet>,
}

impl MinorModel {
    pub fn new(branch: Vec<VSet>) -> Self {
        MinorModel { branch }
    }

    /// Reindex by a canonical order: new vertex `p` takes old `order[p]`.
    pub fn reorder(&self, order: &[usize]) -> MinorModel {
        MinorModel { branch: order.iter().map(|&i| self.branch[i].clone()).collect() }
    }

    pub fn vertices(&self) -> VSet {
        self.branch.iter().flatten().copied().collect()
    }
}

/// Reasons a model cannot even be checked.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("model has {got} branch sets but the pattern has {want} vertices")]
    Arity { got: usize, want: usize },
    #[error("branch set of pattern vertex {0} mentions unknown host vertex {1}")]
    UnknownVertex(usize, Vertex),
}

/// Checks the three model conditions: disjoint connected non-empty branch
/// sets, every pattern edge realised, and `η(u) ∩ X = π(u)`.
pub fn validate_model(g: &Graph, x: &VSet, p: &RootedGraph, m: &MinorModel) -> std::result::Result<bool, ModelError> {
    if m.branch.len() != p.n() {
        return Err(ModelError::Arity { got: m.branch.len(), want: p.n() });
    }
    for (i, b) in m.branch.iter().enumerate() {
        if let Some(v) = b.iter().find(|v| !g.contains(**v)) {
            return Err(ModelError::UnknownVertex(i, *v));
        }
    }
    let mut owner: BTreeMap<Vertex, usize> = BTreeMap::new();
    for (i, b) in m.branch.iter().enumerate() {
        if b.is_empty() || !g.is_connected_set(b) {
            return Ok(false);
        }
        for &v in b {
            if owner.insert(v, i).is_some() {
                return Ok(false);
            }
        }
        let hit: Vec<Vertex> = b.intersection(x).copied().collect();
        if hit != p.pi(i) {
            return Ok(false);
        }
    }
    for (i, j) in p.edge_list() {
        let touch = m.branch[i].iter().any(|&v| g.neighbors(v).iter().any(|u| owner.get(u) == Some(&j)));
        if !touch {
            return Ok(false);
        }
    }
    Ok(true)
}
