// Vertex-disjoint paths between terminal pairs.
use rootminor::solver::{Solver, SolverConfig};
use rootminor::Graph;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut solver = Solver::new(SolverConfig::default());
    let k4 = Graph::with_n(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    let paths = solver.disjoint_paths(&k4, &[(0, 2), (1, 3)])?.ok_or("K4 is feasible")?;
    println!("K4: {paths:?}");
    let path = Graph::with_n(4, &[(0, 1), (1, 2), (2, 3)]);
    assert!(solver.disjoint_paths(&path, &[(0, 2), (1, 3)])?.is_none());
    println!("crossing pairs on a path: infeasible");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap()
}
