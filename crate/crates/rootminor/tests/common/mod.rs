//! Independent brute-force helpers shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rootminor::folio::ModelFolio;
use rootminor::pattern::validate_model;
use rootminor::{Graph, VSet, Vertex};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)` on vertices `0..n`.
pub fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for v in 0..n as Vertex {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::with_n(n, &edges)
}

/// A random tree on `0..n` plus `extra` random chords.
pub fn random_sparse_connected(n: usize, extra: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::with_n(n, &[]);
    for v in 1..n as Vertex {
        g.add_edge(rng.gen_range(0..v), v);
    }
    for _ in 0..extra {
        let (u, v) = (rng.gen_range(0..n as Vertex), rng.gen_range(0..n as Vertex));
        if u != v {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn clique(n: usize) -> Graph {
    let mut edges = Vec::new();
    for v in 0..n as Vertex {
        for u in 0..v {
            edges.push((u, v));
        }
    }
    Graph::with_n(n, &edges)
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<(Vertex, Vertex)> = (1..n as Vertex).map(|v| (v - 1, v)).collect();
    Graph::with_n(n, &edges)
}

/// A uniformly random subset of `items` with exactly `size` elements.
pub fn random_subset(items: &[Vertex], size: usize, rng: &mut ChaCha8Rng) -> VSet {
    let mut v = items.to_vec();
    v.shuffle(rng);
    v.into_iter().take(size).collect()
}

/// A random independent set built greedily from a shuffled order, of size
/// at most `cap`.
pub fn random_independent(g: &Graph, cap: usize, rng: &mut ChaCha8Rng) -> VSet {
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.shuffle(rng);
    let mut out = VSet::new();
    for v in order {
        if out.len() < cap && out.iter().all(|u| !g.has_edge(*u, v)) {
            out.insert(v);
        }
    }
    out
}

/// Vertices reachable from `from − blocked` in `G − blocked`.
pub fn reach(g: &Graph, from: &VSet, blocked: &VSet) -> VSet {
    let mut seen: VSet = from.difference(blocked).copied().collect();
    let mut queue: VecDeque<Vertex> = seen.iter().copied().collect();
    while let Some(v) = queue.pop_front() {
        for &u in g.neighbors(v) {
            if !blocked.contains(&u) && seen.insert(u) {
                queue.push_back(u);
            }
        }
    }
    seen
}

pub fn is_connected(g: &Graph, s: &VSet) -> bool {
    let Some(&first) = s.iter().next() else { return false };
    let outside: VSet = g.vertices().filter(|v| !s.contains(v)).collect();
    reach(g, &VSet::from([first]), &outside) == *s
}

pub fn open_nbhd(g: &Graph, s: &VSet) -> VSet {
    s.iter().flat_map(|v| g.neighbors(*v).iter().copied()).filter(|u| !s.contains(u)).collect()
}

pub fn touching(g: &Graph, a: &VSet, b: &VSet) -> bool {
    !a.is_disjoint(b) || a.iter().any(|v| g.neighbors(*v).iter().any(|u| b.contains(u)))
}

/// Every subset of `items` with at most `k` elements, by size.
pub fn subsets_up_to(items: &[Vertex], k: usize) -> Vec<VSet> {
    let mut out = vec![VSet::new()];
    let mut layer = vec![(VSet::new(), 0usize)];
    for _ in 0..k {
        let mut next = Vec::new();
        for (s, start) in &layer {
            for (i, &v) in items.iter().enumerate().skip(*start) {
                let mut t = s.clone();
                t.insert(v);
                out.push(t.clone());
                next.push((t, i + 1));
            }
        }
        layer = next;
    }
    out
}

/// Whether every `A`–`B` path meets `s`.
pub fn is_ab_separator(g: &Graph, a: &VSet, b: &VSet, s: &VSet) -> bool {
    reach(g, a, s).is_disjoint(&b.difference(s).copied().collect())
}

/// Smallest `(A, B)`-separator avoiding `i`, if one of size at most `cap`
/// exists.
pub fn brute_mu(g: &Graph, i: &VSet, a: &VSet, b: &VSet, cap: usize) -> Option<usize> {
    let free: Vec<Vertex> = g.vertices().filter(|v| !i.contains(v)).collect();
    subsets_up_to(&free, cap).into_iter().filter(|s| is_ab_separator(g, a, b, s)).map(|s| s.len()).min()
}

/// Whether vertex-disjoint `s_i`–`t_i` paths exist, by exhaustive search over
/// simple paths.
pub fn brute_disjoint_paths(g: &Graph, pairs: &[(Vertex, Vertex)]) -> bool {
    fn extend(g: &Graph, pairs: &[(Vertex, Vertex)], i: usize, cur: Vertex, used: &mut VSet, reserved: &VSet) -> bool {
        let (_, t) = pairs[i];
        if cur == t {
            return i + 1 == pairs.len() || extend(g, pairs, i + 1, pairs[i + 1].0, used, reserved);
        }
        for &u in g.neighbors(cur) {
            if used.contains(&u) || (reserved.contains(&u) && u != t) {
                continue;
            }
            used.insert(u);
            if extend(g, pairs, i, u, used, reserved) {
                return true;
            }
            used.remove(&u);
        }
        false
    }
    if pairs.is_empty() {
        return true;
    }
    let reserved: VSet = pairs.iter().flat_map(|&(s, t)| [s, t]).collect();
    let mut used: VSet = pairs.iter().map(|p| p.0).collect();
    extend(g, pairs, 0, pairs[0].0, &mut used, &reserved)
}

/// One representative of every isomorphism class of graphs on `0..n`.
pub fn all_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let index = |i: usize, j: usize| pairs.iter().position(|&p| p == (i.min(j), i.max(j))).expect("pair");
    let mut perms: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..n {
        perms = perms
            .into_iter()
            .flat_map(|p| {
                (0..n).filter(|x| !p.contains(x)).map(|x| [p.clone(), vec![x]].concat()).collect::<Vec<_>>()
            })
            .collect();
    }
    let maps: Vec<Vec<usize>> =
        perms.iter().map(|p| pairs.iter().map(|&(i, j)| index(p[i], p[j])).collect()).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        let canon = maps
            .iter()
            .map(|m| m.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).fold(0u32, |acc, (_, &t)| acc | 1 << t))
            .min()
            .unwrap_or(0);
        if seen.insert(canon) {
            let edges: Vec<(Vertex, Vertex)> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| canon >> b & 1 == 1)
                .map(|(_, &(i, j))| (i as Vertex, j as Vertex))
                .collect();
            out.push(Graph::with_n(n, &edges));
        }
    }
    out
}

/// Checks that every member of the folio has a witness that validates.
pub fn check_witnesses(g: &Graph, x: &VSet, mf: &ModelFolio) -> Result<usize, String> {
    let members = mf.folio().members(1_000_000).map_err(|e| e.to_string())?;
    for p in &members {
        let m = mf.witness(p).ok_or_else(|| format!("no witness for {}", p.encode()))?;
        match validate_model(g, x, p, &m) {
            Ok(true) => {}
            other => return Err(format!("witness for {} fails: {other:?}", p.encode())),
        }
    }
    Ok(members.len())
}

/// All separations `(A, B)` of order at most `k`, as `(A, B)` pairs built from
/// a separator and a split of the components of `G − S`.
pub fn separations_up_to(g: &Graph, k: usize, mut f: impl FnMut(&VSet, &VSet)) {
    let items: Vec<Vertex> = g.vertices().collect();
    for s in subsets_up_to(&items, k) {
        let mut comps: Vec<VSet> = Vec::new();
        let mut left: VSet = items.iter().copied().filter(|v| !s.contains(v)).collect();
        while let Some(&v) = left.iter().next() {
            let c = reach(g, &VSet::from([v]), &s);
            left.retain(|u| !c.contains(u));
            comps.push(c);
        }
        assert!(comps.len() <= 20, "too many components to enumerate");
        for mask in 0u32..(1u32 << comps.len()) {
            let mut a = s.clone();
            let mut b = s.clone();
            for (i, c) in comps.iter().enumerate() {
                if mask >> i & 1 == 1 { a.extend(c) } else { b.extend(c) }
            }
            f(&a, &b);
        }
    }
}
