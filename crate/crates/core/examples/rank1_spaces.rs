//! The four rank-one ambient groups: block counts and singletons.

use blockspace::blocks::block_table;

fn main() -> blockspace::Result<()> {
    for g in ["SO2", "O2", "SO3", "Sp1"] {
        let t = block_table(g)?;
        let points = t.counted_rows().filter(|r| r.dimension() == 0).count();
        println!("{:<6} {} blocks, {points} points", t.display, t.rows.len());
        for r in &t.rows {
            println!("    {:<16} {:<4} W = {}", r.pair(), r.profile.notation(), r.weyl);
        }
    }
    Ok(())
}
