// Graph files, generators and result documents.
use rootminor::cli::{generate, run, Cli, GenKind, GraphFile, ResultDocument};
use clap::Parser;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let file = generate(GenKind::Grid, 3, 0);
    let text = file.emit();
    assert_eq!(GraphFile::parse(&text)?, file);
    print!("{text}");
    let dir = std::env::temp_dir().join(format!("rootminor-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("grid.txt");
    std::fs::write(&path, text)?;
    let cli = Cli::try_parse_from(["folio", "folio", path.to_str().ok_or("utf-8 path")?, "--roots", "0,8", "--json"])?;
    let doc = ResultDocument::from_json(&run(&cli)?)?;
    println!("{}: {}", doc.command, doc.verdict);
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap()
}
