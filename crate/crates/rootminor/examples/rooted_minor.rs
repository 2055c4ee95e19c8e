// Testing whether a pattern is a minor: K5 in the Petersen graph, and a
// rooted path in a cycle.
use rootminor::pattern::validate_model;
use rootminor::solver::{Solver, SolverConfig};
use rootminor::{vset, Graph, RootedGraph, VSet};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let petersen = Graph::with_n(
        10,
        &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9), (5, 7), (7, 9), (6, 9), (6, 8), (5, 8)],
    );
    let k5 = RootedGraph::clique(5)?;
    let mut solver = Solver::new(SolverConfig::default());
    let model = solver.minor(&petersen, &VSet::new(), &k5)?.ok_or("K5 should be present")?;
    assert!(validate_model(&petersen, &VSet::new(), &k5, &model)?);
    println!("K5 in Petersen: {:?}", model.branch);

    // Roots 0 and 2 of a 4-cycle in separate adjacent branch sets.
    let c4 = Graph::with_n(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
    let edge = RootedGraph::new(vec![vec![0], vec![2]], &[(0, 1)])?;
    let m = solver.minor(&c4, &vset([0, 2]), &edge)?.ok_or("rooted edge should be present")?;
    println!("rooted edge in C4: {:?}", m.branch);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap()
}
