//! Values computed here that differ from the published tables.

use blockspace::ledger::divergences;
use blockspace::output::ledger_text;

fn main() -> blockspace::Result<()> {
    let group = std::env::args().nth(1);
    print!("{}", ledger_text(&divergences(group.as_deref())?));
    Ok(())
}
