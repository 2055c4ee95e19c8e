// Isolating cuts of an independent terminal set and the μ̄ function.
use rootminor::cuts::{isolating_cuts, mu_bar};
use rootminor::{vset, Graph};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // A star: terminals 1..=3 around a hub 0, each with a private leaf.
    let g = Graph::with_n(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]);
    let t = vset([1, 2, 3]);
    let cuts = isolating_cuts(&g, &t, &t)?;
    for (term, c) in &cuts {
        let rest: rootminor::VSet = t.iter().filter(|v| *v != term).copied().collect();
        let mu = mu_bar(&g, &t, &vset([*term]), &rest)?;
        println!("terminal {term}: C = {c:?}, |N(C)| = {}, mu = {mu}", g.open_nbhd(c).len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap()
}
