// Chip finding on a generated instance, with terminal carving underneath.
use rootminor::carving::{carvable_stats, find_chips, is_chip, ChipSearch, SplitterMode};
use rootminor::cli::{generate, GenKind};
use rootminor::solver::SolverConfig;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let file = generate(GenKind::Chipheavy, 12, 1);
    let x = file.roots.clone().ok_or("generated roots")?;
    let g = &file.graph;
    let alpha = SolverConfig::default().alpha_for(2, 0);
    for mode in [SplitterMode::CoSmall, SplitterMode::Exhaustive, SplitterMode::Hash] {
        let chips = find_chips(g, &x, 2, alpha, ChipSearch { mode, seed: 5 })?;
        assert!(!chips.is_empty());
        assert!(chips.iter().all(|c| is_chip(g, &x, 2, alpha, c)));
        println!("{mode:?}: {} chips covering {} vertices", chips.len(), chips.iter().map(|c| c.len()).sum::<usize>());
    }
    let (carvable, largest) = carvable_stats(g, &x, 2, alpha);
    println!("carvable vertices {carvable}, largest chip {largest}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap()
}
