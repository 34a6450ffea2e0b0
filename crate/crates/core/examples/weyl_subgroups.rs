//! Subgroup classes of the three rank-two Weyl groups, with the fixed
//! lattice of each reflection subgroup and the action of `N_W(R)/R` on it.

use blockspace::weyl::{build_root_datum, fixed_sublattice, reflection_subgroup_classes, weyl_group, RootType};

fn main() -> blockspace::Result<()> {
    for t in RootType::ALL {
        let rd = build_root_datum(t);
        let w = weyl_group(&rd)?;
        println!("{t}: |W| = {}", w.order());
        for c in reflection_subgroup_classes(&rd, &w) {
            let fixed = fixed_sublattice(&c.representative, &w)?;
            println!(
                "  {:<6} order {} ({} conjugates){}  fixed rank {}  N/R order {}",
                c.label,
                c.order,
                c.class_size,
                if c.is_reflection_group { ", reflection" } else { "" },
                fixed.rank(),
                fixed.quotient.order(),
            );
        }
    }
    Ok(())
}
