//! Brute-force folios, pattern enumeration, single-pattern search and the
//! composition of folios across a separation.

use std::collections::{BTreeSet, HashMap};

use crate::folio::{complete_word, Folio, ModelFolio};
use crate::graph::{Graph, VSet, Vertex};
use crate::pattern::{canonicalize, unpack, MinorModel, RootedGraph, MAX_PATTERN};
use crate::{Error, Limits, Result};

/// All partial partitions of `x` into blocks, each block and the block list
/// sorted.
pub fn partial_partitions(x: &[Vertex]) -> Vec<Vec<Vec<Vertex>>> {
    let mut out = Vec::new();
    fn go(x: &[Vertex], i: usize, cur: &mut Vec<Vec<Vertex>>, out: &mut Vec<Vec<Vec<Vertex>>>) {
        if i == x.len() {
            let mut b = cur.clone();
            b.sort();
            out.push(b);
            return;
        }
        go(x, i + 1, cur, out);
        for j in 0..cur.len() {
            cur[j].push(x[i]);
            go(x, i + 1, cur, out);
            cur[j].pop();
        }
        cur.push(vec![x[i]]);
        go(x, i + 1, cur, out);
        cur.pop();
    }
    go(x, 0, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Every canonical `X`-rooted graph with detail at most `delta`.
pub fn enumerate_patterns(x: &VSet, delta: usize, limits: &Limits) -> Result<Vec<RootedGraph>> {
    if x.len() + delta > limits.pattern_ceiling.min(MAX_PATTERN) {
        return Err(Error::Resource(format!(
            "|X|+δ = {} exceeds the pattern ceiling {}",
            x.len() + delta,
            limits.pattern_ceiling
        )));
    }
    let xs: Vec<Vertex> = x.iter().copied().collect();
    let mut out = BTreeSet::new();
    for blocks in partial_partitions(&xs) {
        for d in 0..=delta {
            let n = blocks.len() + d;
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
            if pairs.len() > 30 {
                return Err(Error::Resource("pattern universe too large".into()));
            }
            let mut roots = blocks.clone();
            roots.extend(std::iter::repeat_n(Vec::new(), d));
            for mask in 0u64..(1u64 << pairs.len()) {
                let mut adj = vec![0u32; n];
                for (b, &(i, j)) in pairs.iter().enumerate() {
                    if mask >> b & 1 == 1 {
                        adj[i] |= 1 << j;
                        adj[j] |= 1 << i;
                    }
                }
                out.insert(canonicalize(roots.clone(), &adj).0);
                if out.len() as u64 > limits.brute_nodes {
                    return Err(Error::Resource("pattern universe too large".into()));
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Bitmask view of a graph with at most 64 vertices.
pub(crate) struct Dense {
    pub ids: Vec<Vertex>,
    pub nbr: Vec<u64>,
    pub pos: HashMap<Vertex, usize>,
}

impl Dense {
    pub fn new(g: &Graph) -> Result<Dense> {
        if g.n() > 64 {
            return Err(Error::Resource(format!("brute force on {} vertices", g.n())));
        }
        let ids: Vec<Vertex> = g.vertices().collect();
        let pos: HashMap<Vertex, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let nbr = ids.iter().map(|&v| g.neighbors(v).iter().fold(0u64, |m, u| m | 1 << pos[u])).collect();
        Ok(Dense { ids, nbr, pos })
    }

    pub fn mask(&self, s: &VSet) -> u64 {
        s.iter().filter_map(|v| self.pos.get(v)).fold(0, |m, &i| m | 1 << i)
    }

    pub fn set(&self, mut m: u64) -> VSet {
        let mut out = VSet::new();
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            out.insert(self.ids[i]);
            m &= m - 1;
        }
        out
    }

    pub fn components(&self, region: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut left = region;
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let i = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let add = self.nbr[i] & region & !comp;
                comp |= add;
                frontier |= add;
            }
            out.push(comp);
            left &= !comp;
        }
        out
    }
}

struct Brute<'a> {
    d: &'a Dense,
    xmask: u64,
    delta: usize,
    nodes: u64,
    limit: u64,
}

impl Brute<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::Resource(format!("brute-force node limit {} exceeded", self.limit)));
        }
        Ok(())
    }

    fn rootless_components(&self, region: u64) -> usize {
        self.d.components(region).into_iter().filter(|c| c & self.xmask == 0).count()
    }

    /// Antichain of quotients of all partitions of `k` into connected blocks.
    fn covers(&mut self, k: u64, xs: &VSet) -> Result<ModelFolio> {
        let mut out = ModelFolio::new(xs.clone(), self.delta);
        let mut blocks = Vec::new();
        self.rec(k, &mut blocks, 0, &mut out)?;
        Ok(out)
    }

    fn rec(&mut self, remaining: u64, blocks: &mut Vec<u64>, used: usize, out: &mut ModelFolio) -> Result<()> {
        if remaining == 0 {
            self.emit(blocks, out);
            return Ok(());
        }
        let v = remaining.trailing_zeros() as usize;
        let start = 1u64 << v;
        self.grow(start, self.d.nbr[v] & remaining & !start, 0, remaining, blocks, used, out)
    }

    #[allow(clippy::too_many_arguments)]
    fn grow(
        &mut self,
        s: u64,
        cand: u64,
        banned: u64,
        remaining: u64,
        blocks: &mut Vec<u64>,
        used: usize,
        out: &mut ModelFolio,
    ) -> Result<()> {
        self.tick()?;
        let used2 = used + usize::from(s & self.xmask == 0);
        if used2 <= self.delta && blocks.len() < MAX_PATTERN {
            let rest = remaining & !s;
            if self.rootless_components(rest) <= self.delta - used2 {
                blocks.push(s);
                self.rec(rest, blocks, used2, out)?;
                blocks.pop();
            }
        }
        let mut cand = cand;
        let mut banned = banned;
        while cand != 0 {
            let u = cand & cand.wrapping_neg();
            cand &= !u;
            let ui = u.trailing_zeros() as usize;
            let next = (cand | (self.d.nbr[ui] & remaining)) & !(s | u) & !banned;
            self.grow(s | u, next, banned, remaining, blocks, used, out)?;
            banned |= u;
        }
        Ok(())
    }

    fn emit(&self, blocks: &[u64], out: &mut ModelFolio) {
        let n = blocks.len();
        let mut adj = vec![0u32; n];
        let reach: Vec<u64> = blocks
            .iter()
            .map(|&b| {
                let mut m = 0u64;
                let mut t = b;
                while t != 0 {
                    m |= self.d.nbr[t.trailing_zeros() as usize];
                    t &= t - 1;
                }
                m
            })
            .collect();
        for i in 0..n {
            for j in i + 1..n {
                if reach[i] & blocks[j] != 0 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            }
        }
        let roots = blocks.iter().map(|&b| self.d.set(b & self.xmask).into_iter().collect()).collect();
        let branch = blocks.iter().map(|&b| self.d.set(b)).collect();
        out.insert_raw(roots, &adj, branch);
    }
}

/// Disjoint union of two rooted patterns with their models.
fn disjoint_union(a: &RootedGraph, ma: &MinorModel, b: &RootedGraph, mb: &MinorModel) -> (Vec<Vec<Vertex>>, Vec<u32>, Vec<VSet>) {
    let na = a.n();
    let mut roots = a.roots().to_vec();
    roots.extend(b.roots().iter().cloned());
    let mut adj = a.adjacency();
    adj.extend(b.adjacency().into_iter().map(|r| r << na));
    let mut branch = ma.branch.clone();
    branch.extend(mb.branch.iter().cloned());
    (roots, adj, branch)
}

/// The `(X, δ)`-model-folio of `g` by exhaustive search over partitions into
/// connected branch sets.
///
/// Only collections where no unused non-root vertex touches a branch set are
/// visited: absorbing such a vertex keeps every root set and only adds
/// pattern edges, so the edge-maximal members are all reached.
pub fn brute_folio(g: &Graph, x: &VSet, delta: usize, limits: &Limits) -> Result<ModelFolio> {
    if !x.iter().all(|v| g.contains(*v)) {
        return Err(Error::Invalid("roots must lie in the graph".into()));
    }
    let size = (x.len() + delta).min(g.n());
    if size > limits.pattern_ceiling.max(1).min(MAX_PATTERN) && x.len() + delta > limits.pattern_ceiling {
        return Err(Error::Resource(format!("pattern size {size} exceeds the ceiling {}", limits.pattern_ceiling)));
    }
    let d = Dense::new(g)?;
    let xmask = d.mask(x);
    let xs: Vec<Vertex> = x.iter().copied().collect();
    let all: u64 = if d.ids.len() == 64 { !0 } else { (1u64 << d.ids.len()) - 1 };
    let mut brute = Brute { d: &d, xmask, delta, nodes: 0, limit: limits.brute_nodes };
    let mut memo: HashMap<u64, ModelFolio> = HashMap::new();
    let mut result = ModelFolio::new(x.clone(), delta);
    for zmask in 0u32..(1u32 << xs.len()) {
        let mut unused = 0u64;
        for (i, v) in xs.iter().enumerate() {
            if zmask >> i & 1 == 1 {
                unused |= 1 << d.pos[v];
            }
        }
        let mut acc = ModelFolio::new(x.clone(), delta);
        acc.insert(RootedGraph::empty(), MinorModel::default());
        for comp in d.components(all & !unused) {
            let rooted = comp & xmask != 0;
            if !rooted && delta == 0 {
                continue;
            }
            if !memo.contains_key(&comp) {
                let local_roots = d.set(comp & xmask);
                let c = brute.covers(comp, &local_roots)?;
                memo.insert(comp, c);
            }
            let options = &memo[&comp];
            let mut next = ModelFolio::new(x.clone(), delta);
            for (pa, ma) in acc.entries() {
                if !rooted {
                    next.insert(pa.clone(), ma.clone());
                }
                for (pb, mb) in options.entries() {
                    if pa.detail() + pb.detail() > delta || pa.n() + pb.n() > MAX_PATTERN {
                        continue;
                    }
                    let (roots, adj, branch) = disjoint_union(&pa, ma, &pb, mb);
                    next.insert_raw(roots, &adj, branch);
                }
                brute.tick()?;
            }
            acc = next;
        }
        for (p, m) in acc.entries() {
            result.insert(p, m.clone());
        }
    }
    Ok(result)
}

/// Branch-and-bound search for one rooted pattern. Pattern vertices are
/// placed in canonical order; each branch set is grown as a connected set
/// from its smallest root (or from a seed vertex when unrooted).
pub fn minor_search(g: &Graph, x: &VSet, p: &RootedGraph, limits: &Limits) -> Result<Option<MinorModel>> {
    if !p.root_union().is_subset(x) || !x.iter().all(|v| g.contains(*v)) {
        return Err(Error::Invalid("pattern roots must lie in X ⊆ V(G)".into()));
    }
    if p.n() == 0 {
        return Ok(Some(MinorModel::default()));
    }
    let d = Dense::new(g)?;
    let xmask = d.mask(x);
    let adj = p.adjacency();
    let n = p.n();
    let mut twin_prev = vec![None; n];
    for j in 0..n {
        if p.pi(j).is_empty() {
            for i in (0..j).rev() {
                if p.pi(i).is_empty() && adj[i] & !(1 << j) == adj[j] & !(1 << i) {
                    twin_prev[j] = Some(i);
                    break;
                }
            }
        }
    }
    let mut s = Search {
        d: &d,
        xmask,
        need: (0..n).map(|i| d.mask(&p.pi(i).iter().copied().collect())).collect(),
        adj,
        twin_prev,
        sets: vec![0; n],
        seeds: vec![0; n],
        nodes: 0,
        limit: limits.search_nodes,
    };
    if s.place(0, 0)? {
        Ok(Some(MinorModel::new(s.sets.iter().map(|&m| d.set(m)).collect())))
    } else {
        Ok(None)
    }
}

struct Search<'a> {
    d: &'a Dense,
    xmask: u64,
    need: Vec<u64>,
    adj: Vec<u32>,
    twin_prev: Vec<Option<usize>>,
    sets: Vec<u64>,
    seeds: Vec<usize>,
    nodes: u64,
    limit: u64,
}

impl Search<'_> {
    fn place(&mut self, i: usize, used: u64) -> Result<bool> {
        if i == self.sets.len() {
            return Ok(true);
        }
        let all: u64 = if self.d.ids.len() == 64 { !0 } else { (1u64 << self.d.ids.len()) - 1 };
        let allowed = all & !used & !(self.xmask & !self.need[i]);
        if self.need[i] != 0 {
            let seed = self.need[i].trailing_zeros() as usize;
            if allowed & (1 << seed) == 0 {
                return Ok(false);
            }
            self.seeds[i] = seed;
            return self.grow(i, 1 << seed, self.d.nbr[seed] & allowed & !(1 << seed), 0, allowed, used);
        }
        let min_seed = match self.twin_prev[i] {
            Some(t) => self.seeds[t] + 1,
            None => 0,
        };
        let mut banned = 0u64;
        let mut left = allowed;
        while left != 0 {
            let seed = left.trailing_zeros() as usize;
            left &= left - 1;
            if seed < min_seed {
                banned |= 1 << seed;
                continue;
            }
            self.seeds[i] = seed;
            let region = allowed & !banned;
            if self.grow(i, 1 << seed, self.d.nbr[seed] & region & !(1 << seed), banned, region, used)? {
                return Ok(true);
            }
            banned |= 1 << seed;
        }
        Ok(false)
    }

    fn grow(&mut self, i: usize, s: u64, cand: u64, banned: u64, region: u64, used: u64) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::Resource(format!("search node limit {} exceeded", self.limit)));
        }
        if s & self.need[i] == self.need[i] && self.edges_ok(i, s) {
            self.sets[i] = s;
            if self.place(i + 1, used | s)? {
                return Ok(true);
            }
        }
        let mut cand = cand & !banned;
        let mut banned = banned;
        while cand != 0 {
            let u = cand & cand.wrapping_neg();
            cand &= !u;
            let ui = u.trailing_zeros() as usize;
            let next = (cand | (self.d.nbr[ui] & region)) & !(s | u) & !banned;
            if self.grow(i, s | u, next, banned, region, used)? {
                return Ok(true);
            }
            banned |= u;
        }
        Ok(false)
    }

    fn edges_ok(&self, i: usize, s: u64) -> bool {
        let mut reach = 0u64;
        let mut t = s;
        while t != 0 {
            reach |= self.d.nbr[t.trailing_zeros() as usize];
            t &= t - 1;
        }
        (0..i).all(|j| self.adj[i] & (1 << j) == 0 || reach & self.sets[j] != 0)
    }
}

/// Combination of two folios over a separation `(A, B)`; the root sets of
/// the inputs are `X_A` and `X_B` and their intersection is `A ∩ B`.
pub fn compose_model_folios(fa: &ModelFolio, fb: &ModelFolio, x: &VSet, delta: usize) -> Result<ModelFolio> {
    let shared: VSet = fa.roots.intersection(&fb.roots).copied().collect();
    let union: VSet = fa.roots.union(&fb.roots).copied().collect();
    let only_a_ok = fa.roots.difference(&shared).all(|v| x.contains(v));
    let only_b_ok = fb.roots.difference(&shared).all(|v| x.contains(v));
    if !x.is_subset(&union) || !only_a_ok || !only_b_ok {
        return Err(Error::Invalid("root sets of the folios do not match X".into()));
    }
    let mut out = ModelFolio::new(x.clone(), delta);
    let ea = fa.entries();
    let eb = fb.entries();
    for (pa, ma) in &ea {
        for (pb, mb) in &eb {
            let Some((roots, adj, comp_of)) = combine(pa, pb, x, delta) else { continue };
            let (p, order) = canonicalize(roots, &adj);
            if out.covers(&p) {
                continue;
            }
            let mut branch: Vec<VSet> = vec![VSet::new(); p.n()];
            for (i, b) in ma.branch.iter().chain(&mb.branch).enumerate() {
                branch[comp_of[i]].extend(b.iter().copied());
            }
            out.insert(p, MinorModel::new(branch).reorder(&order));
        }
    }
    Ok(out)
}

pub fn compose_folios(fa: &ModelFolio, fb: &ModelFolio, x: &VSet, delta: usize) -> Result<Folio> {
    Ok(compose_model_folios(fa, fb, x, delta)?.folio())
}

/// Pattern obtained by gluing `pa` and `pb` along shared roots, with the
/// merged vertex of each input vertex (`pa` first, then `pb`).
fn combine(pa: &RootedGraph, pb: &RootedGraph, x: &VSet, delta: usize) -> Option<(Vec<Vec<Vertex>>, Vec<u32>, Vec<usize>)> {
    let na = pa.n();
    let nb = pb.n();
    let mut parent = [0usize; 2 * MAX_PATTERN];
    for (v, p) in parent.iter_mut().enumerate() {
        *p = v;
    }
    fn find(p: &mut [usize], mut v: usize) -> usize {
        while p[v] != v {
            p[v] = p[p[v]];
            v = p[v];
        }
        v
    }
    for j in 0..nb {
        for r in pb.pi(j) {
            if let Some(i) = (0..na).find(|&i| pa.pi(i).contains(r)) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, na + j));
                parent[a] = b;
            }
        }
    }
    let mut comp_of = vec![0usize; na + nb];
    let mut reps = [0usize; 2 * MAX_PATTERN];
    let mut c = 0usize;
    for v in 0..na + nb {
        let r = find(&mut parent, v);
        comp_of[v] = match reps[..c].iter().position(|&q| q == r) {
            Some(i) => i,
            None => {
                reps[c] = r;
                c += 1;
                c - 1
            }
        };
    }
    if c > MAX_PATTERN {
        return None;
    }
    let pi = |v: usize| if v < na { pa.pi(v) } else { pb.pi(v - na) };
    let mut rooted = 0u32;
    for v in 0..na + nb {
        if pi(v).iter().any(|r| x.contains(r)) {
            rooted |= 1 << comp_of[v];
        }
    }
    if c - rooted.count_ones() as usize > delta {
        return None;
    }
    let mut roots: Vec<Vec<Vertex>> = vec![Vec::new(); c];
    for v in 0..na + nb {
        roots[comp_of[v]].extend(pi(v).iter().filter(|r| x.contains(r)));
    }
    for r in roots.iter_mut() {
        r.sort_unstable();
        r.dedup();
    }
    let mut adj = vec![0u32; c];
    for (base, p) in [(0, pa), (na, pb)] {
        for j in 0..p.n() {
            for i in 0..j {
                let (a, b) = (comp_of[base + i], comp_of[base + j]);
                if a != b && p.has_edge(i, j) {
                    adj[a] |= 1 << b;
                    adj[b] |= 1 << a;
                }
            }
        }
    }
    Some((roots, adj, comp_of))
}

/// True when the folio holds every rooted graph over its roots with detail
/// at most its `δ`.
pub fn is_generic(f: &Folio) -> bool {
    let xs: Vec<Vertex> = f.roots.iter().copied().collect();
    let mut expected = 0usize;
    for blocks in partial_partitions(&xs) {
        for d in 0..=f.delta {
            if blocks.len() + d > MAX_PATTERN {
                return false;
            }
            expected += 1;
            let sig = crate::pattern::Signature { rooted: blocks.clone(), unrooted: d };
            let full = RootedGraph::from_parts(&sig, complete_word(sig.n()));
            if !f.contains(&full) {
                return false;
            }
        }
    }
    f.signatures().count() == expected
}

/// Expand a small pattern's edge word into host-independent adjacency rows.
pub fn pattern_rows(p: &RootedGraph) -> Vec<u32> {
    unpack(p.edge_word(), p.n())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::vset;
    use crate::pattern::validate_model;

    fn lim() -> Limits {
        Limits::default()
    }

    fn all_valid(g: &Graph, x: &VSet, f: &ModelFolio) -> bool {
        f.entries().iter().all(|(p, m)| validate_model(g, x, p, m).unwrap())
    }

    #[test]
    fn universe_sizes() {
        assert_eq!(enumerate_patterns(&vset([]), 0, &lim()).unwrap().len(), 1);
        assert_eq!(enumerate_patterns(&vset([0]), 0, &lim()).unwrap().len(), 2);
        assert_eq!(enumerate_patterns(&vset([0, 1]), 0, &lim()).unwrap().len(), 6);
        assert!(matches!(enumerate_patterns(&vset(0..8), 2, &lim()), Err(Error::Resource(_))));
    }

    #[test]
    fn brute_folio_small_hosts() {
        let single = Graph::with_n(1, &[]);
        let f = brute_folio(&single, &vset([0]), 0, &lim()).unwrap().folio();
        assert_eq!(f.members(100).unwrap().len(), 2);

        let tri = Graph::with_n(3, &[(0, 1), (1, 2), (0, 2)]);
        let f = brute_folio(&tri, &vset([0, 1]), 0, &lim()).unwrap();
        assert_eq!(f.folio().members(100).unwrap().len(), 6);
        assert!(all_valid(&tri, &vset([0, 1]), &f));

        let two = Graph::with_n(2, &[]);
        let f = brute_folio(&two, &vset([0, 1]), 0, &lim()).unwrap().folio();
        let m = f.members(100).unwrap();
        assert_eq!(m.len(), 4);
        assert!(!m.contains(&RootedGraph::new(vec![vec![0], vec![1]], &[(0, 1)]).unwrap()));
        assert!(!m.contains(&RootedGraph::new(vec![vec![0, 1]], &[]).unwrap()));
        assert!(!is_generic(&f));
    }

    #[test]
    fn search_examples() {
        let path = Graph::with_n(3, &[(0, 1), (1, 2)]);
        let x = vset([0, 2]);
        let p = RootedGraph::new(vec![vec![0], vec![2]], &[(0, 1)]).unwrap();
        let m = minor_search(&path, &x, &p, &lim()).unwrap().unwrap();
        assert!(validate_model(&path, &x, &p, &m).unwrap());
        let two = Graph::with_n(2, &[]);
        let p2 = RootedGraph::new(vec![vec![0], vec![1]], &[(0, 1)]).unwrap();
        assert!(minor_search(&two, &vset([0, 1]), &p2, &lim()).unwrap().is_none());
        assert!(minor_search(&two, &vset([]), &RootedGraph::empty(), &lim()).unwrap().is_some());
    }

    #[test]
    fn generic_examples() {
        let k4 = Graph::with_n(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let f = brute_folio(&k4, &vset([0, 1]), 1, &lim()).unwrap().folio();
        assert!(is_generic(&f));
        let e = brute_folio(&Graph::new(), &vset([]), 0, &lim()).unwrap().folio();
        assert!(is_generic(&e));
    }

    #[test]
    fn brute_agrees_with_search() {
        let g = Graph::with_n(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)]);
        for (x, delta) in [(vset([0, 3]), 1), (vset([0, 2, 4]), 1), (vset([1]), 2)] {
            let f = brute_folio(&g, &x, delta, &lim()).unwrap().folio();
            for p in enumerate_patterns(&x, delta, &lim()).unwrap() {
                let found = minor_search(&g, &x, &p, &lim()).unwrap().is_some();
                assert_eq!(found, f.contains(&p), "{}", p.encode());
            }
        }
    }

    #[test]
    fn composition_over_a_path() {
        let g = Graph::with_n(3, &[(0, 1), (1, 2)]);
        let x = vset([0, 2]);
        let fa = brute_folio(&g.induced(&vset([0, 1])), &vset([0, 1]), 0, &lim()).unwrap();
        let fb = brute_folio(&g.induced(&vset([1, 2])), &vset([1, 2]), 0, &lim()).unwrap();
        let c = compose_model_folios(&fa, &fb, &x, 0).unwrap();
        assert_eq!(c, brute_folio(&g, &x, 0, &lim()).unwrap());
        assert!(all_valid(&g, &x, &c));
        assert!(c.contains(&RootedGraph::new(vec![vec![0], vec![2]], &[(0, 1)]).unwrap()));
    }
}
