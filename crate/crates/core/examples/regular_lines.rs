//! Lines in the Lie algebra of the torus meeting every root with one
//! absolute value.

use blockspace::blocks::regular_rank1_check;
use blockspace::weyl::{build_root_datum, RootType};

fn main() -> blockspace::Result<()> {
    for t in RootType::ALL {
        let lines = regular_rank1_check(&build_root_datum(t))?;
        if lines.is_empty() {
            println!("{t}: none");
        }
        for l in lines {
            println!("{t}: {:?} with orbit {:?}", l.direction, l.orbit);
        }
    }
    Ok(())
}
