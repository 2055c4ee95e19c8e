//! Profiles, intrusions, preserver verification and search, replacements
//! with model back-translation, and chip replacement.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::cuts::important_separators_avoiding;
use crate::folio::{Folio, ModelFolio};
use crate::graph::{Graph, VSet, Vertex};
use crate::oracle::{brute_folio, partial_partitions};
use crate::pattern::{canonicalize, MinorModel, MAX_PATTERN};
use crate::{Error, Limits, Result};

/// A graph on a root set joining roots that share a component.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Profile {
    pub vertices: VSet,
    pub edges: BTreeSet<(Vertex, Vertex)>,
}

impl Profile {
    pub fn new(vertices: VSet, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Self {
        let edges = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).filter(|(u, v)| u != v).collect();
        Profile { vertices, edges }
    }

    /// The profile whose components are the given blocks, each a clique.
    pub fn from_blocks(blocks: &[Vec<Vertex>]) -> Self {
        let vertices = blocks.iter().flatten().copied().collect();
        let edges = blocks.iter().flat_map(|b| b.iter().flat_map(move |&u| b.iter().map(move |&v| (u, v))));
        Profile::new(vertices, edges)
    }

    pub fn is_supergraph_of(&self, other: &Profile) -> bool {
        other.edges.is_subset(&self.edges)
    }
}

/// The `X`-profile of `g`.
pub fn profile_of(g: &Graph, x: &VSet) -> Profile {
    let mut edges = Vec::new();
    for comp in g.components() {
        let inside: Vec<Vertex> = comp.intersection(x).copied().collect();
        for (i, &u) in inside.iter().enumerate() {
            for &v in &inside[i + 1..] {
                edges.push((u, v));
            }
        }
    }
    Profile::new(x.iter().filter(|v| g.contains(**v)).copied().collect(), edges)
}

/// Parameters `(X, p, X_I, X_S, 𝒳)` of an intrusion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntrusionQuery {
    pub x: VSet,
    pub p: i64,
    pub xi: VSet,
    pub xs: VSet,
    pub profile: Profile,
}

impl IntrusionQuery {
    fn check(&self) -> Result<()> {
        if !self.xi.is_disjoint(&self.xs) || !self.xi.is_subset(&self.x) || !self.xs.is_subset(&self.x) {
            return Err(Error::Invalid("X_I and X_S must be disjoint subsets of X".into()));
        }
        if self.profile.vertices != self.xi {
            return Err(Error::Invalid("the profile must live on X_I".into()));
        }
        Ok(())
    }
}

/// Whether `c` satisfies every intrusion condition.
pub fn is_intrusion(g: &Graph, query: &IntrusionQuery, c: &VSet) -> bool {
    if query.p < 0 || !c.iter().all(|v| g.contains(*v)) {
        return false;
    }
    let hit: VSet = c.intersection(&query.x).copied().collect();
    if hit != query.xi {
        return false;
    }
    let gc = g.induced(c);
    if !gc.components().iter().all(|comp| !comp.is_disjoint(&query.xi)) {
        return false;
    }
    if !profile_of(&gc, &query.xi).is_supergraph_of(&query.profile) {
        return false;
    }
    (g.open_nbhd(c).difference(&query.xs).count() as i64) <= query.p
}

/// Largest intrusion with its size, or `None` when no intrusion exists.
/// The candidates are the reach sets of important `(X_I, X − X_I − X_S)`
/// separators in `G − X_S` that avoid `X_I`.
pub fn max_intrusion(g: &Graph, query: &IntrusionQuery) -> Result<Option<(usize, VSet)>> {
    query.check()?;
    if query.p < 0 {
        return Ok(None);
    }
    if !query.x.iter().all(|v| g.contains(*v)) {
        return Err(Error::Invalid("X must lie in the graph".into()));
    }
    if query.xi.is_empty() {
        return Ok(Some((0, VSet::new())));
    }
    let h = g.without(&query.xs);
    let xr: VSet = query.x.iter().filter(|v| !query.xi.contains(v) && !query.xs.contains(v)).copied().collect();
    let mut best: Option<(usize, VSet)> = None;
    for s in important_separators_avoiding(&h, &query.xi, &xr, &query.xi, query.p as usize) {
        let c = h.reach(&query.xi, &s);
        if !profile_of(&h.induced(&c), &query.xi).is_supergraph_of(&query.profile) {
            continue;
        }
        if best.as_ref().is_none_or(|(n, _)| c.len() > *n) {
            best = Some((c.len(), c));
        }
    }
    Ok(best)
}

/// Largest `|X|` accepted by intrusion verification.
pub const INTRUSION_ROOT_LIMIT: usize = 6;

fn disjoint_pairs(x: &[Vertex]) -> Vec<(VSet, VSet)> {
    let mut out = Vec::new();
    let mut code = vec![0u8; x.len()];
    loop {
        let xi = x.iter().zip(&code).filter(|(_, &c)| c == 1).map(|(v, _)| *v).collect();
        let xs = x.iter().zip(&code).filter(|(_, &c)| c == 2).map(|(v, _)| *v).collect();
        out.push((xi, xs));
        let mut i = 0;
        loop {
            if i == x.len() {
                return out;
            }
            if code[i] < 2 {
                code[i] += 1;
                break;
            }
            code[i] = 0;
            i += 1;
        }
    }
}

/// Whether `h` never exhibits a larger intrusion than `g` for any
/// `p' ≤ p`. Profiles of induced subgraphs are disjoint unions of cliques,
/// so it suffices to range over the partitions of `X_I`.
pub fn is_intrusion_preserver(g: &Graph, h: &Graph, x: &VSet, p: i64) -> Result<bool> {
    if x.len() > INTRUSION_ROOT_LIMIT {
        return Err(Error::Resource(format!("intrusion check on |X| = {}", x.len())));
    }
    let xs: Vec<Vertex> = x.iter().copied().collect();
    for pp in 0..=p {
        for (xi, xsep) in disjoint_pairs(&xs) {
            let xi_list: Vec<Vertex> = xi.iter().copied().collect();
            for blocks in partial_partitions(&xi_list) {
                if blocks.iter().map(|b| b.len()).sum::<usize>() != xi.len() {
                    continue;
                }
                let query = IntrusionQuery { x: x.clone(), p: pp, xi: xi.clone(), xs: xsep.clone(), profile: Profile::from_blocks(&blocks) };
                let in_h = max_intrusion(h, &query)?;
                if let Some((dh, _)) = in_h {
                    match max_intrusion(g, &query)? {
                        Some((dg, _)) if dg >= dh => {}
                        _ => return Ok(false),
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Whether `h` is an `(X, δ, p)`-preserver of `g` whose `(X, δ)`-folio is
/// `folio_of_g`.
pub fn is_preserver(g: &Graph, h: &Graph, x: &VSet, delta: usize, p: i64, folio_of_g: &Folio, limits: &Limits) -> Result<bool> {
    if !x.iter().all(|v| g.contains(*v) && h.contains(*v)) || !g.same_induced(h, x) {
        return Ok(false);
    }
    if brute_folio(h, x, delta, limits)?.folio() != *folio_of_g {
        return Ok(false);
    }
    is_intrusion_preserver(g, h, x, p)
}

/// Search limits of preserver enumeration.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PreserverSearch {
    /// Largest number of vertices of a candidate.
    pub size_budget: usize,
    /// Largest number of distinct candidates verified.
    pub candidate_cap: usize,
    /// Largest number of edge masks generated per vertex count.
    pub mask_cap: u64,
}

impl PreserverSearch {
    pub fn with_budget(size_budget: usize) -> Self {
        PreserverSearch { size_budget, candidate_cap: 400, mask_cap: 1 << 16 }
    }
}

/// The smallest verified `(X, δ, p)`-preserver of `g` within the search
/// limits, with `X` on its original ids and fresh vertices numbered from
/// `fresh_from`. Candidates come in order of vertex count, edge count and
/// canonical form.
pub fn search_preserver(
    g: &Graph,
    x: &VSet,
    delta: usize,
    p: i64,
    folio_of_g: &Folio,
    search: &PreserverSearch,
    fresh_from: Vertex,
    limits: &Limits,
) -> Result<Option<Graph>> {
    let xs: Vec<Vertex> = x.iter().copied().collect();
    let base = g.induced(x);
    let mut tested = 0usize;
    let max_fresh = search.size_budget.saturating_sub(xs.len()).min(g.n().saturating_sub(xs.len() + 1));
    if g.n() <= xs.len() || xs.len() + max_fresh > MAX_PATTERN {
        return Ok(None);
    }
    for j in 0..=max_fresh {
        let n = xs.len() + j;
        // Free pairs: fresh-fresh and fresh-root.
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for b in xs.len()..n {
            for a in 0..b {
                pairs.push((a, b));
            }
        }
        if pairs.len() > 40 || (1u64 << pairs.len()) > search.mask_cap.max(1) * 64 {
            break;
        }
        let mut by_count: BTreeMap<(u32, u128), u64> = BTreeMap::new();
        let base_adj: Vec<u32> = (0..n)
            .map(|i| {
                if i >= xs.len() {
                    return 0;
                }
                (0..xs.len()).filter(|&k| base.has_edge(xs[i], xs[k])).fold(0u32, |m, k| m | 1 << k)
            })
            .collect();
        for mask in 0u64..(1u64 << pairs.len()) {
            if mask.count_ones() as usize + base.m() > g.m() {
                continue;
            }
            let mut adj = base_adj.clone();
            for (bit, &(a, b)) in pairs.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    adj[a] |= 1 << b;
                    adj[b] |= 1 << a;
                }
            }
            let mut roots: Vec<Vec<Vertex>> = xs.iter().map(|&v| vec![v]).collect();
            roots.extend(std::iter::repeat_n(Vec::new(), j));
            let (canon, _) = canonicalize(roots, &adj);
            by_count.entry((mask.count_ones(), canon.edge_word())).or_insert(mask);
            if by_count.len() as u64 > search.mask_cap {
                break;
            }
        }
        for (_, mask) in by_count {
            let mut h = base.clone();
            h.reserve_ids(fresh_from);
            let fresh: Vec<Vertex> = (0..j).map(|_| h.fresh_vertex()).collect();
            let id = |i: usize| if i < xs.len() { xs[i] } else { fresh[i - xs.len()] };
            for (bit, &(a, b)) in pairs.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    h.add_edge(id(a), id(b));
                }
            }
            tested += 1;
            if tested > search.candidate_cap {
                return Ok(None);
            }
            if is_preserver(g, &h, x, delta, p, folio_of_g, limits)? {
                return Ok(Some(h));
            }
        }
    }
    Ok(None)
}

/// A verified preserver within budget, or `g` itself.
pub fn find_preserver(
    g: &Graph,
    x: &VSet,
    delta: usize,
    p: i64,
    size_budget: usize,
    limits: &Limits,
) -> Result<Graph> {
    let folio = brute_folio(g, x, delta, limits)?.folio();
    let search = PreserverSearch::with_budget(size_budget);
    Ok(search_preserver(g, x, delta, p, &folio, &search, g.next_id(), limits)?.unwrap_or_else(|| g.clone()))
}

/// One replaced component: `C`, its substitute `φ(C)` and `bd(C)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplacementPart {
    pub component: VSet,
    pub graph: Graph,
    pub bd: VSet,
}

/// A `Y`-replacement-map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplacementMap {
    pub y: VSet,
    pub parts: Vec<ReplacementPart>,
}

impl ReplacementMap {
    /// Checks the replacement-map conditions against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let comps: BTreeSet<VSet> = g.without(&self.y).components().into_iter().collect();
        let given: BTreeSet<VSet> = self.parts.iter().map(|p| p.component.clone()).collect();
        if comps != given || given.len() != self.parts.len() {
            return Err(Error::Invalid("parts must be exactly the components of G − Y".into()));
        }
        let mut fresh_seen = VSet::new();
        for part in &self.parts {
            let inside: VSet = part.graph.vertices().filter(|v| g.contains(*v)).collect();
            if inside != part.bd {
                return Err(Error::Invalid("bd(C) must equal V(φ(C)) ∩ V(G)".into()));
            }
            if !g.open_nbhd(&part.component).is_subset(&part.bd) || !part.bd.is_subset(&self.y) {
                return Err(Error::Invalid("N(C) ⊆ bd(C) ⊆ Y violated".into()));
            }
            if !g.same_induced(&part.graph, &part.bd) {
                return Err(Error::Invalid("φ(C)[bd(C)] must equal G[bd(C)]".into()));
            }
            for v in part.graph.vertices().filter(|v| !part.bd.contains(v)) {
                if !fresh_seen.insert(v) {
                    return Err(Error::Invalid(format!("fresh vertex {v} shared between parts")));
                }
            }
        }
        Ok(())
    }
}

/// One replacement with the model-folios needed to translate models back.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReplacementStep {
    pub map: ReplacementMap,
    /// The `(bd(C), δ)`-model-folio of `G[C ∪ bd(C)]`, per part.
    pub folios: Vec<ModelFolio>,
}

/// A chain of replacements; translates models of the final graph back to
/// the original graph.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct ModelMapper {
    pub steps: Vec<ReplacementStep>,
}

impl ModelMapper {
    pub fn is_identity(&self) -> bool {
        self.steps.iter().all(|s| s.map.parts.is_empty())
    }

    pub fn extend(&mut self, other: ModelMapper) {
        self.steps.extend(other.steps);
    }

    /// Translate one model of `p` in the final graph to the original graph.
    pub fn map_model(&self, model: &MinorModel) -> Result<MinorModel> {
        let mut m = model.clone();
        for step in self.steps.iter().rev() {
            m = map_step(step, &m)?;
        }
        Ok(m)
    }

    pub fn map_folio(&self, f: &ModelFolio) -> Result<ModelFolio> {
        if self.is_identity() {
            return Ok(f.clone());
        }
        f.map_models(|_, m| self.map_model(m))
    }
}

fn map_step(step: &ReplacementStep, model: &MinorModel) -> Result<MinorModel> {
    let y = &step.map.y;
    let mut branch: Vec<VSet> = model.branch.iter().map(|b| b.intersection(y).copied().collect()).collect();
    for (part, folio) in step.map.parts.iter().zip(&step.folios) {
        let phi = &part.graph;
        // Components of each branch set inside φ(C), tagged by pattern vertex.
        let mut pieces: Vec<(usize, VSet)> = Vec::new();
        for (v, b) in model.branch.iter().enumerate() {
            let inside: VSet = b.iter().filter(|u| phi.contains(**u)).copied().collect();
            if inside.is_empty() {
                continue;
            }
            for d in phi.induced(&inside).components() {
                pieces.push((v, d));
            }
        }
        if pieces.is_empty() {
            continue;
        }
        if pieces.len() > MAX_PATTERN {
            return Err(Error::Resource("trace pattern exceeds the pattern size limit".into()));
        }
        let roots: Vec<Vec<Vertex>> = pieces.iter().map(|(_, d)| d.intersection(&part.bd).copied().collect()).collect();
        let mut adj = vec![0u32; pieces.len()];
        for i in 0..pieces.len() {
            let nb = phi.open_nbhd(&pieces[i].1);
            for j in 0..pieces.len() {
                if i != j && !nb.is_disjoint(&pieces[j].1) {
                    adj[i] |= 1 << j;
                }
            }
        }
        let (canon, order) = canonicalize(roots, &adj);
        let w = folio.witness(&canon).ok_or_else(|| {
            Error::Internal(format!("trace pattern {} missing from a stored folio", canon.encode()))
        })?;
        for (cpos, &old) in order.iter().enumerate() {
            let v = pieces[old].0;
            branch[v].extend(w.branch[cpos].iter().filter(|u| part.component.contains(u)).copied());
        }
    }
    Ok(MinorModel::new(branch))
}

/// The `(Y, φ, bd)`-replacement of `g` and the step recording it.
pub fn replace(g: &Graph, rmap: &ReplacementMap, stored: Vec<ModelFolio>) -> Result<(Graph, ReplacementStep)> {
    rmap.validate(g)?;
    if stored.len() != rmap.parts.len() {
        return Err(Error::Invalid("one stored folio per part is required".into()));
    }
    let mut h = g.induced(&rmap.y);
    for part in &rmap.parts {
        h = h.union(&part.graph);
    }
    h.reserve_ids(g.next_id());
    Ok((h, ReplacementStep { map: rmap.clone(), folios: stored }))
}

/// Outcome of replacing a family of chips.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct ChipReplacement {
    pub replaced: Vec<VSet>,
    pub kept: Vec<VSet>,
}

/// Replaces every chip `C` whose preserver search succeeds by a small
/// `(N(C), δ, k − 1)`-preserver of `G[N[C]]`; other chips stay in place.
pub fn replace_chips(
    g: &Graph,
    x: &VSet,
    k: usize,
    delta: usize,
    chips: &[VSet],
    chip_folios: &[ModelFolio],
    search: &PreserverSearch,
    limits: &Limits,
) -> Result<(Graph, ModelMapper, ChipReplacement)> {
    if chips.len() != chip_folios.len() {
        return Err(Error::Invalid("one model-folio per chip is required".into()));
    }
    for (i, c) in chips.iter().enumerate() {
        if !crate::carving::is_chip(g, x, k, 1, c) {
            return Err(Error::Invalid(format!("chip {i} is not a valid chip")));
        }
        for d in &chips[i + 1..] {
            if !c.is_disjoint(d) || !g.open_nbhd(c).is_disjoint(d) {
                return Err(Error::Invalid("chips must be pairwise non-touching".into()));
            }
        }
    }
    let mut next = g.next_id();
    let mut parts = Vec::new();
    let mut stored = Vec::new();
    let mut report = ChipReplacement::default();
    for (c, mf) in chips.iter().zip(chip_folios) {
        let bd = g.open_nbhd(c);
        let local = g.induced(&c.union(&bd).copied().collect());
        let found = search_preserver(&local, &bd, delta, k as i64 - 1, &mf.folio(), search, next, limits)?;
        match found {
            Some(hc) => {
                next = next.max(hc.next_id());
                parts.push(ReplacementPart { component: c.clone(), graph: hc, bd });
                stored.push(mf.clone());
                report.replaced.push(c.clone());
            }
            None => report.kept.push(c.clone()),
        }
    }
    if parts.is_empty() {
        return Ok((g.clone(), ModelMapper::default(), report));
    }
    let replaced: VSet = report.replaced.iter().flatten().copied().collect();
    let y: VSet = g.vertices().filter(|v| !replaced.contains(v)).collect();
    let rmap = ReplacementMap { y, parts };
    let (mut h, step) = replace(g, &rmap, stored)?;
    h.reserve_ids(next);
    Ok((h, ModelMapper { steps: vec![step] }, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::vset;
    use crate::pattern::validate_model;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn profiles() {
        let p = Graph::with_n(3, &[(0, 1), (1, 2)]);
        assert_eq!(profile_of(&p, &vset([0, 2])).edges, BTreeSet::from([(0, 2)]));
        let e = Graph::with_n(3, &[]);
        assert!(profile_of(&e, &vset([0, 1, 2])).edges.is_empty());
    }

    #[test]
    fn intrusion_examples() {
        // x=0, a=1, y=2
        let g = Graph::with_n(3, &[(0, 1), (1, 2)]);
        let query = IntrusionQuery { x: vset([0, 2]), p: 1, xi: vset([0]), xs: vset([]), profile: Profile::from_blocks(&[vec![0]]) };
        assert_eq!(max_intrusion(&g, &query).unwrap(), Some((2, vset([0, 1]))));
        let neg = IntrusionQuery { p: -1, ..query.clone() };
        assert_eq!(max_intrusion(&g, &neg).unwrap(), None);
        let empty = IntrusionQuery { xi: vset([]), profile: Profile::from_blocks(&[]), ..query };
        assert_eq!(max_intrusion(&g, &empty).unwrap(), Some((0, vset([]))));
    }

    #[test]
    fn preserver_examples() {
        let g = Graph::with_n(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]);
        let x = vset([0, 3]);
        let f = brute_folio(&g, &x, 1, &lim()).unwrap().folio();
        assert!(is_preserver(&g, &g, &x, 1, 2, &f, &lim()).unwrap());
        let mut h = g.clone();
        h.remove_edge(2, 3);
        assert!(!is_preserver(&g, &h, &x, 1, 2, &f, &lim()).unwrap());
    }

    #[test]
    fn pendant_path_shrinks() {
        let edges: Vec<(u32, u32)> = (0..40).map(|i| (i, i + 1)).collect();
        let g = Graph::with_n(41, &edges);
        let h = find_preserver(&g, &vset([0]), 0, 0, 6, &lim()).unwrap();
        assert_eq!(h.n(), 1);
        let f = brute_folio(&g, &vset([0]), 0, &lim()).unwrap().folio();
        assert!(is_preserver(&g, &h, &vset([0]), 0, 0, &f, &lim()).unwrap());
    }

    #[test]
    fn chip_replacement_round_trip() {
        // X = {0, 1}; a pendant tree hangs off 1 through the cut vertex 2.
        let g = Graph::with_n(9, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (3, 6), (6, 7), (7, 8)]);
        let x = vset([0, 1]);
        let chip = vset([3, 4, 5, 6, 7, 8]);
        let bd = g.open_nbhd(&chip);
        let local = g.induced(&chip.union(&bd).copied().collect());
        let mf = brute_folio(&local, &bd, 1, &lim()).unwrap();
        let (h, mapper, rep) = replace_chips(&g, &x, 2, 1, &[chip], &[mf], &PreserverSearch::with_budget(4), &lim()).unwrap();
        assert_eq!(rep.replaced.len(), 1);
        assert!(h.n() < g.n());
        let fg = brute_folio(&g, &x, 1, &lim()).unwrap();
        let fh = brute_folio(&h, &x, 1, &lim()).unwrap();
        assert_eq!(fg, fh);
        let back = mapper.map_folio(&fh).unwrap();
        for (p, m) in back.entries() {
            assert!(validate_model(&g, &x, &p, m).unwrap(), "{}", p.encode());
        }
    }
}
