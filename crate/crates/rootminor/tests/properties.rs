//! Randomized invariants checked against independent brute-force helpers.

mod common;

use clap::Parser;
use common::*;
use proptest::prelude::*;
use rootminor::cli::{generate, run, Cli, GenKind, GraphFile, ResultDocument};
use rootminor::cuts::{is_well_linked, min_vertex_cut, mu_bar, CutSide, WellLinked};
use rootminor::graph::is_separation;
use rootminor::oracle::brute_folio;
use rootminor::pattern::validate_model;
use rootminor::solver::{solve_folio, SolverConfig};
use rootminor::{Limits, MinorModel, RootedGraph, VSet, Vertex};

fn recursive_config() -> SolverConfig {
    SolverConfig { cutoff: 3, alpha: Some(2), size_budget: Some(4), ..SolverConfig::default() }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn graph_files_round_trip(kind in 0usize..4, size in 2usize..9, seed in any::<u64>()) {
        let kind = [GenKind::Random, GenKind::Grid, GenKind::Clique, GenKind::Chipheavy][kind];
        let file = generate(kind, size, seed);
        let text = file.emit();
        let back = GraphFile::parse(&text).unwrap();
        prop_assert_eq!(&back, &file);
        prop_assert_eq!(back.emit(), text);
    }

    #[test]
    fn solver_matches_oracle(n in 1usize..9, p in 0.2f64..0.8, k in 0usize..4, delta in 0usize..2, seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_graph(n, p, &mut r);
        let verts: Vec<Vertex> = g.vertices().collect();
        let x = random_subset(&verts, k.min(n), &mut r);
        let slow = brute_folio(&g, &x, delta, &Limits::default()).unwrap();
        let fast = solve_folio(&g, &x, delta, &recursive_config()).unwrap();
        prop_assert_eq!(fast.folio(), slow.folio());
        check_witnesses(&g, &x, &fast).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn mu_bar_matches_brute(n in 2usize..9, p in 0.2f64..0.7, seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_graph(n, p, &mut r);
        let i = random_independent(&g, 4, &mut r);
        let items: Vec<Vertex> = i.iter().copied().collect();
        let split = items.len() / 2;
        let a: VSet = items[..split].iter().copied().collect();
        let b: VSet = items[split..].iter().copied().collect();
        let fast = mu_bar(&g, &i, &a, &b).unwrap();
        prop_assert_eq!(Some(fast), brute_mu(&g, &i, &a, &b, n));
    }

    #[test]
    fn cut_value_equals_path_count(n in 2usize..10, p in 0.1f64..0.6, seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_graph(n, p, &mut r);
        let verts: Vec<Vertex> = g.vertices().collect();
        let s = random_subset(&verts, 2.min(n), &mut r);
        let rest: Vec<Vertex> = verts.iter().copied().filter(|v| !s.contains(v)).collect();
        let t = random_subset(&rest, 2.min(rest.len()), &mut r);
        let flow = min_vertex_cut(&g, &s, &t, &VSet::new(), n, CutSide::Closest).unwrap();
        prop_assert_eq!(flow.value, flow.paths.len());
        prop_assert_eq!(flow.value, flow.separator.len());
        prop_assert!(is_ab_separator(&g, &s, &t, &flow.separator));
        let mut used = VSet::new();
        for path in &flow.paths {
            prop_assert!(s.contains(&path[0]) && t.contains(path.last().unwrap()));
            prop_assert!(path.windows(2).all(|w| g.has_edge(w[0], w[1])));
            for v in path {
                prop_assert!(used.insert(*v), "paths share {}", v);
            }
        }
        prop_assert_eq!(Some(flow.value), brute_mu(&g, &VSet::new(), &s, &t, n));
    }

    #[test]
    fn well_linked_answers_are_correct(n in 2usize..8, p in 0.2f64..0.7, k in 2usize..5, seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_graph(n, p, &mut r);
        let verts: Vec<Vertex> = g.vertices().collect();
        let x = random_subset(&verts, k.min(n), &mut r);
        match is_well_linked(&g, &x).unwrap() {
            WellLinked::Counterexample(sep) => {
                prop_assert!(is_separation(&g, &sep));
                let order = sep.order();
                prop_assert!(sep.a.intersection(&x).count() > order);
                prop_assert!(sep.b.intersection(&x).count() > order);
            }
            WellLinked::WellLinked => {
                let mut bad = None;
                separations_up_to(&g, x.len(), |a, b| {
                    let order = a.intersection(b).count();
                    if a.intersection(&x).count() > order && b.intersection(&x).count() > order {
                        bad = Some((a.clone(), b.clone()));
                    }
                });
                prop_assert!(bad.is_none(), "missed separation {:?}", bad);
            }
        }
    }

    #[test]
    fn pattern_encoding_round_trips(n in 1usize..7, k in 0usize..4, delta in 0usize..2, seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_graph(n, 0.5, &mut r);
        let verts: Vec<Vertex> = g.vertices().collect();
        let x = random_subset(&verts, k.min(n), &mut r);
        let folio = brute_folio(&g, &x, delta, &Limits::default()).unwrap();
        for p in folio.folio().maximal() {
            prop_assert_eq!(RootedGraph::decode(&p.encode()).unwrap(), p);
        }
    }
}

fn temp_file(tag: &str, text: &str) -> String {
    let path = std::env::temp_dir().join(format!("rootminor-prop-{}-{tag}.txt", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn folio_documents_round_trip(n in 1usize..7, k in 0usize..4, seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_graph(n, 0.5, &mut r);
        let verts: Vec<Vertex> = g.vertices().collect();
        let x = random_subset(&verts, k.min(n), &mut r);
        let mut file = GraphFile::new(g.clone());
        file.roots = Some(x.clone());
        let path = temp_file(&format!("{seed}"), &file.emit());
        let cli = Cli::parse_from(["folio", "--json", "folio", &path]);
        let out = run(&cli);
        std::fs::remove_file(&path).ok();
        let doc = ResultDocument::from_json(&out.unwrap()).unwrap();
        prop_assert_eq!(&ResultDocument::from_json(&doc.to_json()).unwrap(), &doc);
        let expected = brute_folio(&g, &x, 0, &Limits::default()).unwrap().folio().members(1_000_000).unwrap();
        prop_assert_eq!(doc.members.len(), expected.len());
        for member in &doc.members {
            let p = RootedGraph::decode(&member.pattern).unwrap();
            prop_assert!(expected.contains(&p));
            let model = MinorModel::new(member.branch_sets.iter().map(|b| b.iter().copied().collect()).collect());
            prop_assert_eq!(validate_model(&g, &x, &p, &model), Ok(true));
        }
    }
}
