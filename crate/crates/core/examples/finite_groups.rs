//! The finite-group engine on its own: permutation groups, subgroup
//! classes, Weyl quotients and index-two subgroups.

use blockspace::group::polyhedral::{binary_octahedral, sl2_f5};
use blockspace::group::{index2_kernels, normalizer_quotient, recognize, subgroup_classes, PermGroup, Permutation};

fn main() -> blockspace::Result<()> {
    let d8 = PermGroup::from_generators(
        4,
        vec![
            Permutation::from_cycles(4, &[&[0, 1, 2, 3]])?,
            Permutation::from_cycles(4, &[&[0, 2]])?,
        ],
    )?;
    println!("D_8 on the square, order {}", d8.order());
    for c in subgroup_classes(d8.table()) {
        let q = normalizer_quotient(d8.table(), &c.representative)?;
        println!("  order {:<2} x{}  N/H = {}", c.representative.len(), c.members.len(), q.name);
    }

    let sl = sl2_f5()?;
    println!("SL(2,5) on F_5^2 minus 0: order {}, index-two subgroups {}", sl.order(), index2_kernels(sl.table()).len());

    let o = binary_octahedral()?;
    let q8 = o.q8_table();
    println!("{}: index-two subgroups {}", recognize(&q8).name, index2_kernels(&q8).len());
    Ok(())
}
