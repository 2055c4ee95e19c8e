// Recursive folio computation checked against the exhaustive oracle.
use rootminor::oracle::brute_folio;
use rootminor::solver::{Solver, SolverConfig};
use rootminor::{vset, Graph, Limits};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // A 3 × 4 grid rooted at two opposite corners.
    let mut edges = Vec::new();
    for r in 0..3u32 {
        for c in 0..4u32 {
            let v = r * 4 + c;
            if c < 3 {
                edges.push((v, v + 1));
            }
            if r < 2 {
                edges.push((v, v + 4));
            }
        }
    }
    let g = Graph::with_n(12, &edges);
    let x = vset([0, 11]);
    let cfg = SolverConfig { cutoff: 4, alpha: Some(3), ..SolverConfig::default() };
    let mut solver = Solver::new(cfg);
    let fast = solver.solve_folio(&g, &x, 1)?;
    let slow = brute_folio(&g, &x, 1, &Limits::default())?;
    assert_eq!(fast.folio(), slow.folio());
    println!("{} maximal members; counters {:?}", fast.maximal_count(), solver.stats);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap()
}
