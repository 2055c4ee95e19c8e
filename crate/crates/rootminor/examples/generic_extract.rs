// Turning a large clique model into a generic folio, and the separable case.
use rootminor::oracle::is_generic;
use rootminor::solver::generic_extract;
use rootminor::{vset, Error, Graph, MinorModel, VSet};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut edges = Vec::new();
    for v in 0..7u32 {
        for u in 0..v {
            edges.push((u, v));
        }
    }
    let k7 = Graph::with_n(7, &edges);
    let model = MinorModel::new((0..7).map(|v| vset([v])).collect::<Vec<VSet>>());
    let folio = generic_extract(&k7, &vset([0, 1]), 1, &model)?;
    assert!(is_generic(&folio.folio()));
    println!("K7 rooted at two vertices: generic folio with {} maximal members", folio.maximal_count());

    // Two roots on a pendant path behind the cut vertex 0.
    let mut g = k7.clone();
    g.add_edge(0, 7);
    g.add_edge(7, 8);
    match generic_extract(&g, &vset([7, 8]), 0, &model) {
        Err(Error::Separable { vertex, separation }) => println!("branch set {vertex} is separable: separator {:?}", separation.separator()),
        other => return Err(format!("expected a separable error, got {other:?}").into()),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap()
}
