//! Undominated finite subgroups of `Sp(1) × C_2`, counted by brute force.

use blockspace::group::counting::full_counting;

fn main() -> blockspace::Result<()> {
    println!("{:<10} {:>5} {:>6} {:>7} {:<10}", "subgroup", "order", "fused", "onto C2", "Weyl");
    for c in full_counting()? {
        println!(
            "{:<10} {:>5} {:>6} {:>7} {:<10}",
            c.descriptor(),
            c.order,
            c.class_size,
            c.onto_c2,
            c.weyl.name
        );
    }
    Ok(())
}
