//! Simple undirected graphs over integer ids, separations and contraction.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub type Vertex = u32;
pub type VSet = BTreeSet<Vertex>;

/// Undirected simple graph. Ids are arbitrary; `next_id` only ever grows so
/// that fresh vertices never collide with ids used by an ancestor graph.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Graph {
    adj: BTreeMap<Vertex, VSet>,
    next_id: Vertex,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}
impl Eq for Graph {}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_edges<I: IntoIterator<Item = (Vertex, Vertex)>>(vertices: &[Vertex], edges: I) -> Self {
        let mut g = Graph::new();
        for &v in vertices {
            g.add_vertex(v);
        }
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Graph on `0..n` with the given edges.
    pub fn with_n(n: usize, edges: &[(Vertex, Vertex)]) -> Self {
        let vs: Vec<Vertex> = (0..n as Vertex).collect();
        Self::from_edges(&vs, edges.iter().copied())
    }

    pub fn add_vertex(&mut self, v: Vertex) {
        self.adj.entry(v).or_default();
        self.next_id = self.next_id.max(v + 1);
    }

    /// Adds `uv`, creating missing endpoints. Loops are ignored.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        self.add_vertex(u);
        self.add_vertex(v);
        if u == v {
            return;
        }
        self.adj.get_mut(&u).unwrap().insert(v);
        self.adj.get_mut(&v).unwrap().insert(u);
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) {
        if let Some(s) = self.adj.get_mut(&u) {
            s.remove(&v);
        }
        if let Some(s) = self.adj.get_mut(&v) {
            s.remove(&u);
        }
    }

    pub fn remove_vertex(&mut self, v: Vertex) {
        if let Some(ns) = self.adj.remove(&v) {
            for u in ns {
                self.adj.get_mut(&u).unwrap().remove(&v);
            }
        }
    }

    pub fn fresh_vertex(&mut self) -> Vertex {
        let v = self.next_id;
        self.add_vertex(v);
        v
    }

    pub fn next_id(&self) -> Vertex {
        self.next_id
    }

    /// Raise the fresh-id floor (used when a graph is derived from another).
    pub fn reserve_ids(&mut self, floor: Vertex) {
        self.next_id = self.next_id.max(floor);
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|s| s.contains(&v))
    }

    pub fn neighbors(&self, v: Vertex) -> &VSet {
        static EMPTY: VSet = BTreeSet::new();
        self.adj.get(&v).unwrap_or(&EMPTY)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> VSet {
        self.adj.keys().copied().collect()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.values().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for (&u, ns) in &self.adj {
            for &v in ns.range(u + 1..) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn induced(&self, s: &VSet) -> Graph {
        let mut adj = BTreeMap::new();
        for &v in s {
            if let Some(ns) = self.adj.get(&v) {
                adj.insert(v, ns.intersection(s).copied().collect());
            }
        }
        Graph { adj, next_id: self.next_id }
    }

    /// `G - s`.
    pub fn without(&self, s: &VSet) -> Graph {
        let keep: VSet = self.adj.keys().filter(|v| !s.contains(v)).copied().collect();
        self.induced(&keep)
    }

    /// Open neighbourhood `N(s)`.
    pub fn open_nbhd(&self, s: &VSet) -> VSet {
        let mut out = VSet::new();
        for v in s {
            for u in self.neighbors(*v) {
                if !s.contains(u) {
                    out.insert(*u);
                }
            }
        }
        out
    }

    pub fn closed_nbhd(&self, s: &VSet) -> VSet {
        let mut out = self.open_nbhd(s);
        out.extend(s.iter().copied());
        out
    }

    /// Vertices reachable from `from` without entering `blocked`.
    pub fn reach(&self, from: &VSet, blocked: &VSet) -> VSet {
        let mut seen = VSet::new();
        let mut queue = VecDeque::new();
        for &v in from {
            if self.contains(v) && !blocked.contains(&v) && seen.insert(v) {
                queue.push_back(v);
            }
        }
        while let Some(v) = queue.pop_front() {
            for &u in self.neighbors(v) {
                if !blocked.contains(&u) && seen.insert(u) {
                    queue.push_back(u);
                }
            }
        }
        seen
    }

    /// Connected components of `G[s]`, ordered by smallest vertex.
    pub fn components_of(&self, s: &VSet) -> Vec<VSet> {
        let mut seen = VSet::new();
        let mut out = Vec::new();
        for &v in s {
            if seen.contains(&v) || !self.contains(v) {
                continue;
            }
            let mut comp = VSet::new();
            let mut queue = VecDeque::from([v]);
            comp.insert(v);
            while let Some(x) = queue.pop_front() {
                for &u in self.neighbors(x) {
                    if s.contains(&u) && comp.insert(u) {
                        queue.push_back(u);
                    }
                }
            }
            seen.extend(comp.iter().copied());
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VSet> {
        self.components_of(&self.vertex_set())
    }

    pub fn is_connected_set(&self, s: &VSet) -> bool {
        match s.iter().next() {
            None => true,
            Some(&v) => {
                let mut seen = VSet::from([v]);
                let mut queue = VecDeque::from([v]);
                while let Some(x) = queue.pop_front() {
                    for &u in self.neighbors(x) {
                        if s.contains(&u) && seen.insert(u) {
                            queue.push_back(u);
                        }
                    }
                }
                seen.len() == s.len()
            }
        }
    }

    pub fn is_independent(&self, s: &VSet) -> bool {
        s.iter().all(|v| self.neighbors(*v).is_disjoint(s))
    }

    /// Union of two graphs sharing ids where they overlap.
    pub fn union(&self, other: &Graph) -> Graph {
        let mut g = self.clone();
        for v in other.vertices() {
            g.add_vertex(v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u, v);
        }
        g.reserve_ids(other.next_id);
        g
    }

    /// True when `G[s]` and `other[s]` coincide.
    pub fn same_induced(&self, other: &Graph, s: &VSet) -> bool {
        s.iter().all(|&v| {
            self.contains(v)
                && other.contains(v)
                && self.neighbors(v).intersection(s).eq(other.neighbors(v).intersection(s))
        })
    }
}

/// A pair `(A, B)` with `A ∪ B = V` and no edge between `A − B` and `B − A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Separation {
    pub a: VSet,
    pub b: VSet,
}

impl Separation {
    pub fn new(a: VSet, b: VSet) -> Self {
        Separation { a, b }
    }

    pub fn order(&self) -> usize {
        self.a.intersection(&self.b).count()
    }

    pub fn separator(&self) -> VSet {
        self.a.intersection(&self.b).copied().collect()
    }

    pub fn flipped(&self) -> Separation {
        Separation { a: self.b.clone(), b: self.a.clone() }
    }
}

pub fn is_separation(g: &Graph, sep: &Separation) -> bool {
    let all: VSet = sep.a.union(&sep.b).copied().collect();
    if all != g.vertex_set() {
        return false;
    }
    for v in sep.a.difference(&sep.b) {
        if g.neighbors(*v).iter().any(|u| !sep.a.contains(u)) {
            return false;
        }
    }
    true
}

/// Contract each part to one fresh vertex. Returns the contracted graph and
/// the map from every old vertex to its new id.
pub fn contract_sets(g: &Graph, parts: &[VSet]) -> Result<(Graph, BTreeMap<Vertex, Vertex>)> {
    let mut owner: BTreeMap<Vertex, usize> = BTreeMap::new();
    for (i, p) in parts.iter().enumerate() {
        if p.is_empty() || !g.is_connected_set(p) || p.iter().any(|v| !g.contains(*v)) {
            return Err(Error::Invalid(format!("part {i} is empty, foreign or disconnected")));
        }
        for &v in p {
            if owner.insert(v, i).is_some() {
                return Err(Error::Invalid(format!("vertex {v} lies in two parts")));
            }
        }
    }
    let mut h = Graph::new();
    h.reserve_ids(g.next_id());
    let mut map = BTreeMap::new();
    let mut part_id = Vec::with_capacity(parts.len());
    for _ in parts {
        part_id.push(h.fresh_vertex());
    }
    for v in g.vertices() {
        let nv = match owner.get(&v) {
            Some(&i) => part_id[i],
            None => {
                h.add_vertex(v);
                v
            }
        };
        map.insert(v, nv);
    }
    for (u, v) in g.edges() {
        let (a, b) = (map[&u], map[&v]);
        if a != b {
            h.add_edge(a, b);
        }
    }
    Ok((h, map))
}

pub fn vset<I: IntoIterator<Item = Vertex>>(it: I) -> VSet {
    it.into_iter().collect()
}
