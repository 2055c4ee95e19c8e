//! Vertex cuts: minimum separators with disjoint paths, well-linkedness,
//! the restricted cut function μ̄, important separators and isolating cuts.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Separation, VSet, Vertex};
use crate::{Error, Result};

const INF: i64 = i64::MAX / 4;

/// Which minimum separator to report when several exist.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CutSide {
    /// The minimum separator with the smallest source side.
    Closest,
    /// The minimum separator with the largest source side.
    Furthest,
}

/// A minimum `(S, T)`-separator with a maximum family of disjoint paths.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlowResult {
    pub value: usize,
    pub separator: VSet,
    /// Paths from `S` to `T`, pairwise disjoint on deletable vertices.
    pub paths: Vec<Vec<Vertex>>,
    /// Vertices reachable from `S − separator` in `G − separator`.
    pub source_side: VSet,
}

struct Net {
    head: Vec<usize>,
    cap: Vec<i64>,
    out: Vec<Vec<usize>>,
}

impl Net {
    fn new(nodes: usize) -> Net {
        Net { head: Vec::new(), cap: Vec::new(), out: vec![Vec::new(); nodes] }
    }

    fn arc(&mut self, u: usize, v: usize, c: i64) {
        self.out[u].push(self.head.len());
        self.head.push(v);
        self.cap.push(c);
        self.out[v].push(self.head.len());
        self.head.push(u);
        self.cap.push(0);
    }

    /// One shortest augmenting path; returns its bottleneck.
    fn augment(&mut self, s: usize, t: usize) -> Option<i64> {
        let mut prev = vec![usize::MAX; self.out.len()];
        let mut seen = vec![false; self.out.len()];
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            if u == t {
                break;
            }
            for &e in &self.out[u] {
                let v = self.head[e];
                if !seen[v] && self.cap[e] > 0 {
                    seen[v] = true;
                    prev[v] = e;
                    q.push_back(v);
                }
            }
        }
        if !seen[t] {
            return None;
        }
        let mut b = INF;
        let mut v = t;
        while v != s {
            let e = prev[v];
            b = b.min(self.cap[e]);
            v = self.head[e ^ 1];
        }
        let mut v = t;
        while v != s {
            let e = prev[v];
            self.cap[e] -= b;
            self.cap[e ^ 1] += b;
            v = self.head[e ^ 1];
        }
        Some(b)
    }

    fn residual_from(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &e in &self.out[u] {
                let v = self.head[e];
                if !seen[v] && self.cap[e] > 0 {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }

    fn residual_to(&self, t: usize) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[t] = true;
        let mut stack = vec![t];
        while let Some(v) = stack.pop() {
            for &e in &self.out[v] {
                // `e ^ 1` is the arc u → v; it has residual capacity when cap > 0.
                let u = self.head[e];
                if !seen[u] && self.cap[e ^ 1] > 0 {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen
    }
}

/// Minimum `(S, T)`-separator of size at most `k` that avoids `undeletable`,
/// or `None` when every such separator is larger than `k`.
pub fn min_vertex_cut(g: &Graph, s: &VSet, t: &VSet, undeletable: &VSet, k: usize, side: CutSide) -> Option<FlowResult> {
    let ids: Vec<Vertex> = g.vertices().collect();
    let pos: BTreeMap<Vertex, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let n = ids.len();
    let (src, snk) = (2 * n, 2 * n + 1);
    let mut net = Net::new(2 * n + 2);
    for (i, &v) in ids.iter().enumerate() {
        net.arc(2 * i, 2 * i + 1, if undeletable.contains(&v) { INF } else { 1 });
        for u in g.neighbors(v) {
            net.arc(2 * i + 1, 2 * pos[u], INF);
        }
    }
    for v in s.iter().filter_map(|v| pos.get(v)) {
        net.arc(src, 2 * v, INF);
    }
    for v in t.iter().filter_map(|v| pos.get(v)) {
        net.arc(2 * v + 1, snk, INF);
    }
    let mut value = 0usize;
    while let Some(b) = net.augment(src, snk) {
        if b >= INF || value >= k {
            return None;
        }
        value += b as usize;
    }
    let separator: VSet = match side {
        CutSide::Closest => {
            let r = net.residual_from(src);
            (0..n).filter(|&i| r[2 * i] && !r[2 * i + 1]).map(|i| ids[i]).collect()
        }
        CutSide::Furthest => {
            let r = net.residual_to(snk);
            (0..n).filter(|&i| !r[2 * i] && r[2 * i + 1]).map(|i| ids[i]).collect()
        }
    };
    debug_assert_eq!(separator.len(), value);
    let paths = decompose(&net, &ids, src, snk, value);
    let start: VSet = s.iter().filter(|v| g.contains(**v) && !separator.contains(v)).copied().collect();
    let source_side = g.reach(&start, &separator);
    Some(FlowResult { value, separator, paths, source_side })
}

fn decompose(net: &Net, ids: &[Vertex], src: usize, snk: usize, value: usize) -> Vec<Vec<Vertex>> {
    // Flow on arc e equals the residual capacity of its reverse arc
    // for arcs added in the forward direction (even index).
    let mut flow: Vec<i64> = (0..net.head.len()).map(|e| if e % 2 == 0 { net.cap[e ^ 1] } else { 0 }).collect();
    let mut paths = Vec::new();
    for _ in 0..value {
        let mut nodes = vec![src];
        let mut arcs: Vec<usize> = Vec::new();
        let mut u = src;
        while u != snk {
            let e = match net.out[u].iter().copied().find(|&e| e % 2 == 0 && flow[e] > 0) {
                Some(e) => e,
                None => break,
            };
            let v = net.head[e];
            if let Some(p) = nodes.iter().position(|&w| w == v) {
                for &a in &arcs[p..] {
                    flow[a] -= 1;
                }
                flow[e] -= 1;
                nodes.truncate(p + 1);
                arcs.truncate(p);
                u = v;
                continue;
            }
            arcs.push(e);
            nodes.push(v);
            u = v;
        }
        for &a in &arcs {
            flow[a] -= 1;
        }
        let mut path: Vec<Vertex> = Vec::new();
        for &x in &nodes {
            if x < src && x % 2 == 0 {
                path.push(ids[x / 2]);
            }
        }
        paths.push(path);
    }
    paths
}

/// Outcome of the well-linkedness test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WellLinked {
    WellLinked,
    Counterexample(Separation),
}

/// Decides whether `x` is well-linked in `g`, returning a separation
/// `(A, B)` with `|A ∩ X| > |A ∩ B|` and `|B ∩ X| > |A ∩ B|` otherwise.
///
/// Every tri-partition `(A_X, S_X, B_X)` of `X` is tested for an
/// `(A_X, B_X)`-separator in `G − S_X` of size below
/// `min(|A_X|, |B_X|)`. By symmetry the smallest vertex of `X` never goes
/// to `B_X`.
pub fn is_well_linked(g: &Graph, x: &VSet) -> Result<WellLinked> {
    if !x.iter().all(|v| g.contains(*v)) {
        return Err(Error::Invalid("X must lie in the graph".into()));
    }
    let xs: Vec<Vertex> = x.iter().copied().collect();
    if xs.len() < 2 {
        return Ok(WellLinked::WellLinked);
    }
    if xs.len() > 20 {
        return Err(Error::Resource(format!("well-linkedness test on |X| = {}", xs.len())));
    }
    let mut code = vec![0u8; xs.len()];
    loop {
        let mut a = VSet::new();
        let mut sx = VSet::new();
        let mut b = VSet::new();
        for (i, &v) in xs.iter().enumerate() {
            match code[i] {
                0 => a.insert(v),
                1 => sx.insert(v),
                _ => b.insert(v),
            };
        }
        let bound = a.len().min(b.len());
        if bound > 0 {
            let h = g.without(&sx);
            if let Some(f) = min_vertex_cut(&h, &a, &b, &VSet::new(), bound - 1, CutSide::Closest) {
                let sep: VSet = f.separator.union(&sx).copied().collect();
                let mut side_a = f.source_side.clone();
                side_a.extend(sep.iter().copied());
                let side_b: VSet = g.vertices().filter(|v| !f.source_side.contains(v)).collect();
                return Ok(WellLinked::Counterexample(Separation::new(side_a, side_b)));
            }
        }
        // Next code with code[0] ∈ {0, 1}.
        let mut i = xs.len() - 1;
        loop {
            let top = if i == 0 { 1 } else { 2 };
            if code[i] < top {
                code[i] += 1;
                break;
            }
            code[i] = 0;
            if i == 0 {
                return Ok(WellLinked::WellLinked);
            }
            i -= 1;
        }
    }
}

/// Size of a smallest `(A, B)`-separator disjoint from the independent set
/// `i`.
pub fn mu_bar(g: &Graph, i: &VSet, a: &VSet, b: &VSet) -> Result<usize> {
    if !g.is_independent(i) {
        return Err(Error::Invalid("μ̄ requires an independent set".into()));
    }
    if !a.is_subset(i) || !b.is_subset(i) || !a.is_disjoint(b) {
        return Err(Error::Invalid("μ̄ requires disjoint A, B inside I".into()));
    }
    min_vertex_cut(g, a, b, i, g.n(), CutSide::Closest)
        .map(|f| f.value)
        .ok_or_else(|| Error::Internal("μ̄ unbounded on an independent set".into()))
}

/// All important `(A, B)`-separators of size at most `k`, sorted. Separators
/// may contain vertices of `A` and `B`.
pub fn important_separators(g: &Graph, a: &VSet, b: &VSet, k: usize) -> Vec<VSet> {
    important_separators_avoiding(g, a, b, &VSet::new(), k)
}

/// Important `(A, B)`-separators of size at most `k` within the family of
/// separators disjoint from `avoid`.
pub fn important_separators_avoiding(g: &Graph, a: &VSet, b: &VSet, avoid: &VSet, k: usize) -> Vec<VSet> {
    let mut cands: BTreeSet<VSet> = BTreeSet::new();
    branch(g, a, b, avoid, &VSet::new(), k, &mut cands);
    let reach = |s: &VSet| -> VSet {
        let start: VSet = a.difference(s).copied().collect();
        g.reach(&start, s)
    };
    let with_reach: Vec<(VSet, VSet)> = cands.into_iter().map(|s| {
        let r = reach(&s);
        (s, r)
    }).collect();
    with_reach
        .iter()
        .filter(|(s, r)| {
            !with_reach.iter().any(|(s2, r2)| s2.len() <= s.len() && r2.len() > r.len() && r.is_subset(r2))
        })
        .map(|(s, _)| s.clone())
        .collect()
}

fn branch(g: &Graph, a: &VSet, b: &VSet, locked: &VSet, deleted: &VSet, k: usize, out: &mut BTreeSet<VSet>) {
    let f = match min_vertex_cut(g, a, b, locked, k, CutSide::Furthest) {
        Some(f) => f,
        None => return,
    };
    if f.value == 0 {
        out.insert(deleted.clone());
        return;
    }
    let v = *f.separator.iter().next().expect("non-empty cut");
    let mut g1 = g.clone();
    g1.remove_vertex(v);
    let mut d1 = deleted.clone();
    d1.insert(v);
    let a1: VSet = a.iter().filter(|&&u| u != v).copied().collect();
    let b1: VSet = b.iter().filter(|&&u| u != v).copied().collect();
    branch(&g1, &a1, &b1, locked, &d1, k - 1, out);
    let mut a2 = a.clone();
    a2.insert(v);
    let mut l2 = locked.clone();
    l2.insert(v);
    branch(g, &a2, b, &l2, deleted, k, out);
}

/// Pairwise non-touching connected sets `C_t`, one per `t ∈ T'`, with
/// `C_t ∩ T' = {t}`, `N(C_t) ∩ T = ∅` and `|N(C_t)| = μ̄(t, T' − t)`.
pub fn isolating_cuts(g: &Graph, t: &VSet, tp: &VSet) -> Result<BTreeMap<Vertex, VSet>> {
    if !g.is_independent(t) {
        return Err(Error::Invalid("terminals must be independent".into()));
    }
    if tp.is_empty() || !tp.is_subset(t) {
        return Err(Error::Invalid("T' must be a non-empty subset of T".into()));
    }
    let ts: Vec<Vertex> = tp.iter().copied().collect();
    if ts.len() == 1 {
        let c = g.reach(&VSet::from([ts[0]]), &VSet::new());
        return Ok(BTreeMap::from([(ts[0], c)]));
    }
    let bits = usize::BITS - (ts.len() - 1).leading_zeros();
    let mut w = VSet::new();
    for bit in 0..bits {
        let a: VSet = ts.iter().enumerate().filter(|(i, _)| i >> bit & 1 == 1).map(|(_, &v)| v).collect();
        let b: VSet = ts.iter().enumerate().filter(|(i, _)| i >> bit & 1 == 0).map(|(_, &v)| v).collect();
        let f = min_vertex_cut(g, &a, &b, t, g.n(), CutSide::Closest)
            .ok_or_else(|| Error::Internal("unbounded cut between independent terminals".into()))?;
        w.extend(f.separator);
    }
    let mut out = BTreeMap::new();
    for &v in &ts {
        let u = g.reach(&VSet::from([v]), &w);
        let boundary = g.open_nbhd(&u);
        let local: VSet = u.union(&boundary).copied().collect();
        let h = g.induced(&local);
        let f = min_vertex_cut(&h, &VSet::from([v]), &boundary, t, h.n(), CutSide::Furthest)
            .ok_or_else(|| Error::Internal("unbounded isolating cut".into()))?;
        out.insert(v, f.source_side);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::vset;

    #[test]
    fn menger_examples() {
        let p = Graph::with_n(3, &[(0, 1), (1, 2)]);
        let f = min_vertex_cut(&p, &vset([0]), &vset([2]), &vset([]), 1, CutSide::Closest).unwrap();
        assert_eq!(f.value, 1);
        let f = min_vertex_cut(&p, &vset([0]), &vset([2]), &vset([0, 2]), 1, CutSide::Closest).unwrap();
        assert_eq!(f.separator, vset([1]));
        assert_eq!(f.paths, vec![vec![0, 1, 2]]);
        let f = min_vertex_cut(&p, &vset([0, 1]), &vset([1]), &vset([]), 3, CutSide::Closest).unwrap();
        assert_eq!(f.separator, vset([1]));
        let c4 = Graph::with_n(4, &[(0, 1), (1, 3), (0, 2), (2, 3)]);
        assert!(min_vertex_cut(&c4, &vset([0]), &vset([3]), &vset([0, 3]), 1, CutSide::Closest).is_none());
        let f = min_vertex_cut(&c4, &vset([0]), &vset([3]), &vset([0, 3]), 2, CutSide::Closest).unwrap();
        assert_eq!(f.paths.len(), 2);
    }

    #[test]
    fn cut_sides() {
        // s − a − b − t: closest cut {a} or the source itself, furthest near t.
        let g = Graph::with_n(4, &[(0, 1), (1, 2), (2, 3)]);
        let lock = vset([0, 3]);
        let c = min_vertex_cut(&g, &vset([0]), &vset([3]), &lock, 3, CutSide::Closest).unwrap();
        let f = min_vertex_cut(&g, &vset([0]), &vset([3]), &lock, 3, CutSide::Furthest).unwrap();
        assert_eq!(c.separator, vset([1]));
        assert_eq!(f.separator, vset([2]));
        assert_eq!(f.source_side, vset([0, 1]));
    }

    #[test]
    fn well_linked_examples() {
        let k3 = Graph::with_n(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(is_well_linked(&k3, &vset([0, 1, 2])).unwrap(), WellLinked::WellLinked);
        let p = Graph::with_n(3, &[(0, 1), (1, 2)]);
        assert_eq!(is_well_linked(&p, &vset([0, 2])).unwrap(), WellLinked::WellLinked);
        match is_well_linked(&p, &vset([0, 1, 2])).unwrap() {
            WellLinked::Counterexample(s) => assert_eq!(s.order(), 1),
            other => panic!("{other:?}"),
        }
        let two = Graph::with_n(4, &[(0, 1), (2, 3)]);
        match is_well_linked(&two, &vset([0, 2])).unwrap() {
            WellLinked::Counterexample(s) => {
                assert_eq!(s.order(), 0);
                assert!(crate::graph::is_separation(&two, &s));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn mu_bar_examples() {
        let g = Graph::with_n(3, &[(0, 1), (1, 2)]);
        assert_eq!(mu_bar(&g, &vset([0, 2]), &vset([2]), &vset([0])).unwrap(), 1);
        assert_eq!(mu_bar(&g, &vset([0, 2]), &vset([]), &vset([0])).unwrap(), 0);
        assert!(mu_bar(&g, &vset([0, 1]), &vset([0]), &vset([1])).is_err());
    }

    #[test]
    fn important_examples() {
        let p = Graph::with_n(3, &[(0, 1), (1, 2)]);
        let ends = vset([0, 2]);
        assert_eq!(important_separators_avoiding(&p, &vset([0]), &vset([2]), &ends, 1), vec![vset([1])]);
        assert_eq!(important_separators(&p, &vset([0]), &vset([2]), 1), vec![vset([2])]);
        let c4 = Graph::with_n(4, &[(0, 1), (1, 3), (0, 2), (2, 3)]);
        let ends = vset([0, 3]);
        assert!(important_separators_avoiding(&c4, &vset([0]), &vset([3]), &ends, 1).is_empty());
        assert_eq!(important_separators_avoiding(&c4, &vset([0]), &vset([3]), &ends, 2), vec![vset([1, 2])]);
        assert_eq!(important_separators(&c4, &vset([0]), &vset([3]), 2), vec![vset([3])]);
    }

    #[test]
    fn isolating_examples() {
        let star = Graph::with_n(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        let t = vset([1, 2, 3, 4]);
        let c = isolating_cuts(&star, &t, &t).unwrap();
        for v in 1..5 {
            assert_eq!(c[&v], vset([v]));
        }
        let g = Graph::with_n(2, &[(0, 1)]);
        assert_eq!(isolating_cuts(&g, &vset([0]), &vset([0])).unwrap()[&0], vset([0, 1]));
        // z=0, a=1, t1=2, t2=3
        let h = Graph::with_n(4, &[(0, 1), (1, 2), (1, 3)]);
        let c = isolating_cuts(&h, &vset([0, 2, 3]), &vset([2, 3])).unwrap();
        assert_eq!(c[&2], vset([2]));
        assert_eq!(c[&3], vset([3]));
    }
}
