// Folio-or-clique: the largest edge prefix without a clique minor.
use rootminor::solver::{edge_prefix, folio_or_clique, is_clique_model, FolioOrClique, SolverConfig};
use rootminor::{vset, Graph};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut edges = Vec::new();
    for v in 0..5u32 {
        for u in 0..v {
            edges.push((u, v));
        }
    }
    let g = Graph::with_n(5, &edges);
    match folio_or_clique(&g, &vset([0]), 0, 4, &SolverConfig::default())? {
        FolioOrClique::Folio(f) => println!("no K4: {} maximal members", f.maximal_count()),
        FolioOrClique::Clique { model, index } => {
            let next = edge_prefix(&g, index + 1);
            assert!(is_clique_model(&next, &model));
            println!("first {index} edges stay K4-free; adding one more gives {:?}", model.branch);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap()
}
