//! Machine-readable output: JSON document and CSV rows.

use blockspace::blocks::block_table;
use blockspace::ledger::divergences;
use blockspace::output::{OutputDocument, SCHEMA_VERSION};

fn main() -> blockspace::Result<()> {
    let group = std::env::args().nth(1).unwrap_or_else(|| "SU3".into());
    let doc = OutputDocument::new(block_table(&group)?, Some(divergences(Some(&group))?));
    println!("schema {SCHEMA_VERSION}");
    print!("{}", doc.to_json()?);
    print!("{}", doc.to_csv()?);
    Ok(())
}
