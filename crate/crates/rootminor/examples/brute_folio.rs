// Exhaustive folio of a triangle rooted at two corners.
use rootminor::oracle::brute_folio;
use rootminor::pattern::validate_model;
use rootminor::{vset, Graph, Limits};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = Graph::with_n(3, &[(0, 1), (1, 2), (0, 2)]);
    let x = vset([0, 1]);
    let folio = brute_folio(&g, &x, 0, &Limits::default())?;
    let members = folio.folio().members(1000)?;
    println!("{} members, {} maximal", members.len(), folio.maximal_count());
    assert_eq!(members.len(), 6);
    for p in &members {
        let m = folio.witness(p).ok_or("member without witness")?;
        assert!(validate_model(&g, &x, p, &m)?);
        println!("  {} => {:?}", p.encode(), m.branch);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap()
}
