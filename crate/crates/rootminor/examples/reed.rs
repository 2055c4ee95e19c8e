// Balanced separations versus well-linked sets.
use rootminor::solver::{reed, ReedOutcome};
use rootminor::Graph;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let path = Graph::with_n(300, &(0..299).map(|i| (i, i + 1)).collect::<Vec<_>>());
    match reed(&path, 1)? {
        ReedOutcome::Separation(s) => println!("path: separation of order {} with sides {} and {}", s.order(), s.a.len(), s.b.len()),
        ReedOutcome::WellLinkedSet(_) => return Err("a path has small balanced separators".into()),
    }
    let mut edges = Vec::new();
    for v in 0..40u32 {
        for u in 0..v {
            edges.push((u, v));
        }
    }
    let clique = Graph::with_n(40, &edges);
    match reed(&clique, 1)? {
        ReedOutcome::Separation(s) => println!("K40: separation of order {}", s.order()),
        ReedOutcome::WellLinkedSet(w) => println!("K40: well-linked set {w:?}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap()
}
