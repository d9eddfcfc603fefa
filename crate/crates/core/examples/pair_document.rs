//! Loading a pair from JSON and running a verification suite programmatically.

use clap::Parser;
use cubic_dirac::cli::{run, Cli};
use cubic_dirac::document::PairDocument;
use cubic_dirac::fixtures;

fn main() -> cubic_dirac::Result<()> {
    let doc = PairDocument::from_json(fixtures::text("sl2-cartan"))?;
    let pair = doc.to_pair()?;
    println!("{}: dim g = {}, modules {:?}", doc.name, pair.g().dim(), doc.module_names());

    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/sl2-cartan.json");
    let cli = Cli::parse_from(["cubic-dirac", "verify", path, "--suite", "theorem34"]);
    let (report, code) = run(&cli);
    print!("{report}");
    println!("exit code {code}");
    Ok(())
}
