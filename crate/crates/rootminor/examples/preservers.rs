// Replacing a chip by a small preserver and mapping models back.
use rootminor::carving::find_chips;
use rootminor::oracle::brute_folio;
use rootminor::preservers::{replace_chips, PreserverSearch};
use rootminor::{vset, Graph, Limits, VSet};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // A triangle on 0, 1, 2 with a path of seven vertices hanging from 2.
    let mut edges = vec![(0, 1), (1, 2), (0, 2), (2, 3)];
    edges.extend((3..9).map(|i| (i, i + 1)));
    let g = Graph::with_n(10, &edges);
    let x = vset([0]);
    let (k, delta, limits) = (2, 1, Limits::default());
    let chips = find_chips(&g, &x, k, 4, Default::default())?;
    let folios = chips
        .iter()
        .map(|c| {
            let nc = g.closed_nbhd(c);
            brute_folio(&g.induced(&nc), &g.open_nbhd(c), delta, &limits)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let (h, mapper, outcome) = replace_chips(&g, &x, k, delta, &chips, &folios, &PreserverSearch::with_budget(4), &limits)?;
    println!("replaced {:?}, kept {:?}; {} -> {} vertices", outcome.replaced, outcome.kept, g.n(), h.n());
    let before = brute_folio(&g, &x, delta, &limits)?;
    let after = brute_folio(&h, &x, delta, &limits)?;
    assert_eq!(before.folio(), after.folio());
    let mapped = mapper.map_folio(&after)?;
    for (p, m) in mapped.entries() {
        assert!(rootminor::pattern::validate_model(&g, &x, &p, m)?);
    }
    let _: VSet = h.vertex_set();
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap()
}
