#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::OnceLock;

use rand::Rng;

use blockspace::group::perm::{alternating_group, symmetric_group};
use blockspace::group::polyhedral::binary_octahedral;
use blockspace::group::{CayleyTable, ElemSet};
use blockspace::lattice::IntMatrix;
use blockspace::weyl::{build_root_datum, weyl_group, RootType};

// ------------------------------------------------------------------ groups

pub fn groups() -> &'static [(&'static str, CayleyTable)] {
    static GROUPS: OnceLock<Vec<(&'static str, CayleyTable)>> = OnceLock::new();
    GROUPS.get_or_init(|| {
        let w = |t| weyl_group(&build_root_datum(t)).unwrap().table().clone();
        let o = binary_octahedral().unwrap();
        let two_o = o.group().table().clone();
        let two_t = two_o.subtable(&o.binary_tetrahedral).unwrap().0;
        let q8 = o.q8_table();
        let c2 = CayleyTable::cyclic_group(2);
        vec![
            ("W(A1xA1)", w(RootType::A1xA1)),
            ("W(A2)", w(RootType::A2)),
            ("W(C2)", w(RootType::C2)),
            ("C_6", CayleyTable::cyclic_group(6)),
            ("A_4", alternating_group(4).unwrap().table().clone()),
            ("S_4", symmetric_group(4).unwrap().table().clone()),
            ("Q_8×C_2", q8.direct_product(&c2).unwrap()),
            ("W(C2)×C_2", w(RootType::C2).direct_product(&c2).unwrap()),
            ("Q_8", q8),
            ("2T×C_2", two_t.direct_product(&c2).unwrap()),
            ("2T", two_t),
            ("2O", two_o),
        ]
    })
}

/// Every subgroup: closures of pairs of elements, then joins until nothing new.
pub fn naive_subgroups(t: &CayleyTable) -> BTreeSet<Vec<usize>> {
    let n = t.order();
    let mut found: BTreeSet<ElemSet> = BTreeSet::new();
    for a in 0..n {
        for b in a..n {
            found.insert(t.closure(&[a, b]));
        }
    }
    loop {
        let list: Vec<ElemSet> = found.iter().cloned().collect();
        let mut grew = false;
        for (i, x) in list.iter().enumerate() {
            for y in &list[i + 1..] {
                if found.insert(t.closure_of_set(&x.union(y))) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    found.into_iter().map(|s| s.iter().collect()).collect()
}

pub fn naive_classes(t: &CayleyTable, subgroups: &BTreeSet<Vec<usize>>) -> BTreeSet<BTreeSet<Vec<usize>>> {
    let mut out = BTreeSet::new();
    for s in subgroups {
        let orbit: BTreeSet<Vec<usize>> = (0..t.order())
            .map(|g| {
                let mut c: Vec<usize> = s.iter().map(|&h| t.mul(t.mul(g, h), t.inv(g))).collect();
                c.sort_unstable();
                c
            })
            .collect();
        out.insert(orbit);
    }
    out
}

pub fn random_unimodular(rng: &mut impl Rng) -> IntMatrix {
    let moves = [
        [[1, 1], [0, 1]],
        [[1, -1], [0, 1]],
        [[1, 0], [1, 1]],
        [[1, 0], [-1, 1]],
        [[0, 1], [1, 0]],
        [[-1, 0], [0, 1]],
    ];
    let mut p = IntMatrix::identity(2);
    for _ in 0..rng.gen_range(1..8) {
        p = &p * &IntMatrix::from_rows(&moves[rng.gen_range(0..moves.len())]);
    }
    p
}


/// `(group, H_e, H_d, a+b, W_G(H))` for every maximal-rank row.
pub const MAXIMAL_RANK: [(&str, &str, &str, &str, &str); 33] = [
    ("Sp2", "Sp(2)", "1", "0", "1"),
    ("Sp2", "Sp(1)×Sp(1) (V)", "C_2", "0", "1"),
    ("Sp2", "Sp(1)×Sp(1) (V)", "1", "0", "C_2"),
    ("Sp2", "Sp(1)×Sp(1) (V')", "C_2", "0", "1"),
    ("Sp2", "Sp(1)×Sp(1) (V')", "1", "0", "C_2"),
    ("Sp2", "T×Sp(1)", "C_2", "0+1", "1"),
    ("Sp2", "T×Sp(1)", "1", "1+0", "C_2"),
    ("Sp2", "Sp(1)×T", "C_2", "0+1", "1"),
    ("Sp2", "Sp(1)×T", "1", "1+0", "C_2"),
    ("Sp2", "T^2", "D_8", "0+1", "1"),
    ("Sp2", "T^2", "V", "0+2", "C_2"),
    ("Sp2", "T^2", "C_4", "0+1", "C_2"),
    ("Sp2", "T^2", "V'", "0+2", "C_2"),
    ("Sp2", "T^2", "X", "1+1", "C_2"),
    ("Sp2", "T^2", "C_2", "0+2", "D_4"),
    ("Sp2", "T^2", "X'", "1+1", "C_2"),
    ("Sp2", "T^2", "1", "2+0", "D_8"),
    ("SU3", "SU(3)", "1", "0", "1"),
    ("SU3", "U(2)", "1", "1+0", "1"),
    ("SU3", "T^2", "D_6", "0+1", "1"),
    ("SU3", "T^2", "C_3", "0+1", "D_2"),
    ("SU3", "T^2", "C_2", "1+1", "1"),
    ("SU3", "T^2", "1", "2+0", "D_6"),
    ("SU2xSU2", "SU(2)×SU(2)", "1", "0", "1"),
    ("SU2xSU2", "SU(2)×T", "C_2", "0+1", "1"),
    ("SU2xSU2", "SU(2)×T", "1", "1+0", "C_2"),
    ("SU2xSU2", "T×SU(2)", "C_2", "0+1", "1"),
    ("SU2xSU2", "T×SU(2)", "1", "1+0", "C_2"),
    ("SU2xSU2", "T^2", "D_4", "0+2", "1"),
    ("SU2xSU2", "T^2", "C_2^Δ", "0+2", "C_2"),
    ("SU2xSU2", "T^2", "C_2^x", "1+1", "C_2"),
    ("SU2xSU2", "T^2", "C_2^y", "1+1", "C_2"),
    ("SU2xSU2", "T^2", "1", "2+0", "D_4"),
];
