//! Folios and model-folios.
//!
//! A folio is closed under deleting pattern edges, so each vertex signature
//! is stored as the antichain of its edge-maximal members. Two folios are
//! equal exactly when these antichains agree.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::graph::{VSet, Vertex};
use crate::pattern::{canonicalize, edge_dominated, pair_bit, MinorModel, RootedGraph, Signature};
use crate::{Error, Result};

/// Set of canonical rooted graphs over roots `X` with detail at most `δ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Folio {
    pub roots: VSet,
    pub delta: usize,
    classes: BTreeMap<Signature, Vec<u128>>,
}

/// A folio together with one witnessing model per maximal member.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModelFolio {
    pub roots: VSet,
    pub delta: usize,
    classes: BTreeMap<Signature, Vec<(u128, MinorModel)>>,
}

impl PartialEq for ModelFolio {
    fn eq(&self, other: &Self) -> bool {
        self.folio() == other.folio()
    }
}

fn expand(sig: &Signature, maxima: &[u128], limit: usize, out: &mut BTreeSet<RootedGraph>) -> Result<()> {
    let n = sig.n();
    for &q in maxima {
        let bits: Vec<u128> = (0..128).map(|b| 1u128 << b).filter(|b| q & b != 0).collect();
        if bits.len() > 24 {
            return Err(Error::Resource("member expansion too large".into()));
        }
        let roots: Vec<Vec<Vertex>> = RootedGraph::from_parts(sig, 0).roots().to_vec();
        for mask in 0u64..(1u64 << bits.len()) {
            let mut w = 0u128;
            for (i, b) in bits.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    w |= b;
                }
            }
            let adj = crate::pattern::unpack(w, n);
            out.insert(canonicalize(roots.clone(), &adj).0);
            if out.len() > limit {
                return Err(Error::Resource(format!("folio has more than {limit} members")));
            }
        }
    }
    Ok(())
}

impl Folio {
    pub fn signatures(&self) -> impl Iterator<Item = &Signature> {
        self.classes.keys()
    }

    /// Edge-maximal members.
    pub fn maximal(&self) -> Vec<RootedGraph> {
        self.classes
            .iter()
            .flat_map(|(s, v)| v.iter().map(move |&w| RootedGraph::from_parts(s, w)))
            .collect()
    }

    pub fn contains(&self, p: &RootedGraph) -> bool {
        let sig = p.signature();
        self.classes
            .get(&sig)
            .is_some_and(|v| v.iter().any(|&q| edge_dominated(p.edge_word(), q, &sig)))
    }

    /// All members, expanded. Fails beyond `limit` members.
    pub fn members(&self, limit: usize) -> Result<BTreeSet<RootedGraph>> {
        let mut out = BTreeSet::new();
        for (sig, v) in &self.classes {
            expand(sig, v, limit, &mut out)?;
        }
        Ok(out)
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

impl ModelFolio {
    pub fn new(roots: VSet, delta: usize) -> Self {
        ModelFolio { roots, delta, classes: BTreeMap::new() }
    }

    pub fn folio(&self) -> Folio {
        Folio {
            roots: self.roots.clone(),
            delta: self.delta,
            classes: self
                .classes
                .iter()
                .map(|(s, v)| (s.clone(), v.iter().map(|(w, _)| *w).collect()))
                .collect(),
        }
    }

    pub fn classes(&self) -> impl Iterator<Item = (&Signature, &Vec<(u128, MinorModel)>)> {
        self.classes.iter()
    }

    pub fn maximal_count(&self) -> usize {
        self.classes.values().map(|v| v.len()).sum()
    }

    /// Edge-maximal members with their witnesses.
    pub fn entries(&self) -> Vec<(RootedGraph, &MinorModel)> {
        self.classes
            .iter()
            .flat_map(|(s, v)| v.iter().map(move |(w, m)| (RootedGraph::from_parts(s, *w), m)))
            .collect()
    }

    /// Insert a canonical pattern with its model; dominated entries are
    /// dropped. Returns whether the pattern was new.
    pub fn insert(&mut self, p: RootedGraph, model: MinorModel) -> bool {
        let sig = p.signature();
        let w = p.edge_word();
        let list = self.classes.entry(sig.clone()).or_default();
        if list.iter().any(|(q, _)| edge_dominated(w, *q, &sig)) {
            return false;
        }
        list.retain(|(q, _)| !edge_dominated(*q, w, &sig));
        let pos = list.partition_point(|(q, _)| *q < w);
        list.insert(pos, (w, model));
        true
    }

    /// Insert a pattern given with arbitrary vertex labels.
    pub fn insert_raw(&mut self, roots: Vec<Vec<Vertex>>, adj: &[u32], branch: Vec<VSet>) -> bool {
        let (p, order) = canonicalize(roots, adj);
        let model = MinorModel::new(branch).reorder(&order);
        self.insert(p, model)
    }

    pub fn contains(&self, p: &RootedGraph) -> bool {
        self.witness(p).is_some()
    }

    /// Whether a stored entry dominates the canonical pattern `p`.
    pub fn covers(&self, p: &RootedGraph) -> bool {
        let sig = p.signature();
        let w = p.edge_word();
        self.classes.get(&sig).is_some_and(|list| list.iter().any(|(q, _)| edge_dominated(w, *q, &sig)))
    }

    /// A model for any member, derived from a dominating maximal entry.
    pub fn witness(&self, p: &RootedGraph) -> Option<MinorModel> {
        let sig = p.signature();
        let list = self.classes.get(&sig)?;
        for (q, m) in list {
            if let Some(map) = dominating_map(p.edge_word(), *q, &sig) {
                return Some(MinorModel::new(map.iter().map(|&j| m.branch[j].clone()).collect()));
            }
        }
        None
    }

    /// Keep members with detail at most `delta`.
    pub fn restrict_detail(&self, delta: usize) -> ModelFolio {
        ModelFolio {
            roots: self.roots.clone(),
            delta,
            classes: self.classes.iter().filter(|(s, _)| s.unrooted <= delta).map(|(s, v)| (s.clone(), v.clone())).collect(),
        }
    }

    /// Re-root onto `x ⊆ roots`: each root set is intersected with `x` and
    /// members whose detail then exceeds `delta` are dropped.
    pub fn restrict_roots(&self, x: &VSet, delta: usize) -> ModelFolio {
        let mut out = ModelFolio::new(x.clone(), delta);
        for (sig, list) in &self.classes {
            let n = sig.n();
            let mut roots: Vec<Vec<Vertex>> =
                sig.rooted.iter().map(|r| r.iter().filter(|v| x.contains(v)).copied().collect()).collect();
            roots.extend(std::iter::repeat_n(Vec::new(), sig.unrooted));
            if roots.iter().filter(|r| r.is_empty()).count() > delta {
                continue;
            }
            for (w, m) in list {
                let adj = crate::pattern::unpack(*w, n);
                out.insert_raw(roots.clone(), &adj, m.branch.clone());
            }
        }
        out
    }

    pub fn map_models<F: FnMut(&RootedGraph, &MinorModel) -> Result<MinorModel>>(&self, mut f: F) -> Result<ModelFolio> {
        let mut classes = BTreeMap::new();
        for (sig, list) in &self.classes {
            let mut nl = Vec::with_capacity(list.len());
            for (w, m) in list {
                let p = RootedGraph::from_parts(sig, *w);
                nl.push((*w, f(&p, m)?));
            }
            classes.insert(sig.clone(), nl);
        }
        Ok(ModelFolio { roots: self.roots.clone(), delta: self.delta, classes })
    }
}

/// For `p` dominated by `q`, a map from vertices of `p` to vertices of `q`
/// carrying every edge of `p` onto an edge of `q`.
pub fn dominating_map(p: u128, q: u128, sig: &Signature) -> Option<Vec<usize>> {
    let n = sig.n();
    if p & !q == 0 {
        return Some((0..n).collect());
    }
    if !edge_dominated(p, q, sig) {
        return None;
    }
    let r = sig.rooted.len();
    let pa = crate::pattern::unpack(p, n);
    let qa = crate::pattern::unpack(q, n);
    let mut map: Vec<usize> = (0..r).collect();
    map.resize(n, usize::MAX);
    fn go(pa: &[u32], qa: &[u32], r: usize, v: usize, map: &mut Vec<usize>, used: &mut u32) -> bool {
        let n = pa.len();
        if v == n {
            return true;
        }
        for c in r..n {
            if *used & (1 << c) != 0 {
                continue;
            }
            if (0..v).all(|u| pa[v] & (1 << u) == 0 || qa[c] & (1 << map[u]) != 0) {
                map[v] = c;
                *used |= 1 << c;
                if go(pa, qa, r, v + 1, map, used) {
                    return true;
                }
                *used &= !(1 << c);
            }
        }
        false
    }
    let mut used = 0u32;
    if go(&pa, &qa, r, r, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

/// The complete edge word on `n` vertices.
pub fn complete_word(n: usize) -> u128 {
    let mut w = 0u128;
    for j in 1..n {
        for i in 0..j {
            w |= pair_bit(i, j);
        }
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::vset;

    fn edge(a: Vertex, b: Vertex, with_edge: bool) -> RootedGraph {
        let edges: &[(usize, usize)] = if with_edge { &[(0, 1)] } else { &[] };
        RootedGraph::new(vec![vec![a], vec![b]], edges).unwrap()
    }

    fn singletons(vs: &[Vertex]) -> MinorModel {
        MinorModel::new(vs.iter().map(|&v| vset([v])).collect())
    }

    #[test]
    fn insertion_keeps_only_maximal_members() {
        let mut f = ModelFolio::new(vset([0, 1]), 0);
        assert!(f.insert(edge(0, 1, false), singletons(&[0, 1])));
        assert!(f.insert(edge(0, 1, true), singletons(&[0, 1])));
        assert!(!f.insert(edge(0, 1, false), singletons(&[0, 1])));
        assert_eq!(f.maximal_count(), 1);
        assert!(f.contains(&edge(0, 1, false)));
        assert!(f.covers(&edge(0, 1, false)));
        assert!(!f.covers(&RootedGraph::empty()));
        assert_eq!(f.folio().members(10).unwrap().len(), 2);
    }

    #[test]
    fn witnesses_follow_dominating_entries() {
        let mut f = ModelFolio::new(vset([0, 1]), 0);
        f.insert(edge(0, 1, true), singletons(&[0, 1]));
        let m = f.witness(&edge(0, 1, false)).unwrap();
        assert_eq!(m.branch, vec![vset([0]), vset([1])]);
        assert!(f.witness(&RootedGraph::empty()).is_none());
    }

    #[test]
    fn restricting_roots_turns_dropped_roots_unrooted() {
        let mut f = ModelFolio::new(vset([0, 1]), 1);
        f.insert(edge(0, 1, true), singletons(&[0, 1]));
        let r = f.restrict_roots(&vset([0]), 1);
        let members = r.folio().members(10).unwrap();
        let rooted_edge = RootedGraph::new(vec![vec![0], vec![]], &[(0, 1)]).unwrap();
        assert!(members.contains(&rooted_edge));
        assert!(f.restrict_roots(&vset([0]), 0).folio().is_empty());
        assert!(f.restrict_detail(0).folio().contains(&edge(0, 1, true)));
    }

    #[test]
    fn complete_words_count_pairs() {
        assert_eq!(complete_word(0), 0);
        assert_eq!(complete_word(4).count_ones(), 6);
    }
}
