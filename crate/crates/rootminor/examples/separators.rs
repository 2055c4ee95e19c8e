// Minimum vertex cuts, important separators and the well-linkedness test.
use rootminor::cuts::{important_separators, is_well_linked, min_vertex_cut, CutSide, WellLinked};
use rootminor::graph::is_separation;
use rootminor::{vset, Graph};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // Two triangles joined through the vertex 2.
    let g = Graph::with_n(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]);
    let cut = min_vertex_cut(&g, &vset([0]), &vset([4]), &vset([0, 4]), 3, CutSide::Closest).ok_or("bounded cut")?;
    println!("min cut {:?} with paths {:?}", cut.separator, cut.paths);
    assert_eq!(cut.separator, vset([2]));
    let important = important_separators(&g, &vset([0]), &vset([4]), 2);
    println!("important separators: {important:?}");
    match is_well_linked(&g, &vset([0, 1, 3, 4]))? {
        WellLinked::WellLinked => return Err("expected a counterexample".into()),
        WellLinked::Counterexample(sep) => {
            assert!(is_separation(&g, &sep));
            println!("separation A={:?} B={:?}", sep.a, sep.b);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap()
}
