//! Prints the block table of an ambient group (default `Sp2`).

use blockspace::blocks::block_table;
use blockspace::output::OutputDocument;

fn main() -> blockspace::Result<()> {
    let group = std::env::args().nth(1).unwrap_or_else(|| "Sp2".into());
    let doc = OutputDocument::new(block_table(&group)?, None);
    print!("{}", doc.to_table());
    Ok(())
}
