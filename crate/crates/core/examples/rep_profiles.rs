//! Rational decomposition of every Weyl subgroup acting on `Z^2`, and of a
//! hand-built representation.

use blockspace::lattice::IntMatrix;
use blockspace::oracle::{toral_rep, TORAL_PROFILE_GOLDEN};
use blockspace::rep::{decompose_profile, IntegralRep};

fn main() -> blockspace::Result<()> {
    for (t, h_d, _, _) in TORAL_PROFILE_GOLDEN {
        let (label, rep) = toral_rep(t, h_d)?;
        let p = decompose_profile(&rep)?;
        let parts: Vec<&str> = p.summands.iter().map(|s| s.describe()).collect();
        println!("{t:<6} {label:<6} {:<4} [{}]", p.notation(), parts.join(", "));
    }

    // swap of coordinates: one trivial line, one sign line
    let swap = IntMatrix::from_rows(&[[0, 1], [1, 0]]);
    let p = decompose_profile(&IntegralRep::generated(2, &[swap])?)?;
    println!("coordinate swap: {}", p.notation());
    Ok(())
}
