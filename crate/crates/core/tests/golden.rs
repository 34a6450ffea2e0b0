mod common;

use common::MAXIMAL_RANK;
use blockspace::blocks::{block_table, BlockKind};
use blockspace::group::same_group;
use blockspace::oracle::{rep_decompose, weyl_subgroups, TORAL_PROFILE_GOLDEN};
use blockspace::spectral::count_by_dimension;

#[test]
fn maximal_rank_rows() {
    for (group, h_e, h_d, dim, weyl) in MAXIMAL_RANK {
        let t = block_table(group).unwrap();
        let r = t.find(h_e, h_d).unwrap_or_else(|| panic!("{group} ({h_e}, {h_d}) missing"));
        assert_eq!(r.rank(), 2);
        assert_eq!(r.profile.notation(), dim, "{group} {}", r.pair());
        assert!(same_group(&r.weyl, weyl), "{group} {}: {} vs {weyl}", r.pair(), r.weyl);
    }
    for (group, n) in [("Sp2", 17), ("SU3", 6), ("SU2xSU2", 10)] {
        let t = block_table(group).unwrap();
        assert_eq!(t.rows.iter().filter(|r| r.rank() == 2).count(), n, "{group}");
    }
}

#[test]
fn toral_profiles() {
    for (t, h_d, a, b) in TORAL_PROFILE_GOLDEN {
        let r = rep_decompose(t.label(), h_d).unwrap();
        assert_eq!((r.profile.a, r.profile.b), (a, b), "{t} {h_d}");
    }
}

#[test]
fn weyl_subgroup_counts() {
    for (w, classes, subgroups, refl) in [("D8", 8, 10, 6), ("V4", 5, 5, 4), ("D6", 4, 6, 3)] {
        let r = weyl_subgroups(w).unwrap();
        assert_eq!(r.classes.len(), classes, "{w}");
        assert_eq!(r.subgroup_count(), subgroups, "{w}");
        assert_eq!(r.reflection_classes(), refl, "{w}");
    }
}

#[test]
fn summaries() {
    for (g, line) in [
        ("Sp2", "Rank 2: 2^6 1^6 0^5 (t1 m2 f3); Rank 1: 1^6 0^7"),
        ("SU2xSU2", "Rank 2: 2^5 1^4 0^1 (t1 m2 f2); Rank 1: 1^6 0^10"),
        ("SU3", "Rank 2: 2^2 1^3 0^1 (t1 m1 f0); Rank 1: 1^4 0^1; Rank 0: 0^7"),
    ] {
        assert_eq!(block_table(g).unwrap().summary().line, line);
    }
}

#[test]
fn rank_one_rows() {
    let so3 = block_table("SO3").unwrap();
    let expected = [
        ("SO(3)", "1", "0", "1"),
        ("SO(2)", "C_2", "0+1", "1"),
        ("SO(2)", "1", "1+0", "C_2"),
        ("1", "A_5", "0", "1"),
        ("1", "S_4", "0", "1"),
        ("1", "A_4", "0", "C_2"),
        ("1", "D_4", "0", "D_6"),
    ];
    assert_eq!(so3.rows.len(), expected.len());
    for (r, (h_e, h_d, dim, weyl)) in so3.rows.iter().zip(expected) {
        assert_eq!((r.h_e.name.as_str(), r.h_d.as_str(), r.profile.notation().as_str(), r.weyl.as_str()), (h_e, h_d, dim, weyl));
    }
    let sp2 = block_table("Sp2").unwrap();
    for (h_d, weyl) in [("2A5", "1"), ("2S4", "1"), ("2A4", "C_2"), ("Q8", "D_6")] {
        assert_eq!(sp2.find("Sp(1)×1", h_d).unwrap().weyl, weyl);
    }
}

#[test]
fn family_rows() {
    let t = block_table("Sp2").unwrap();
    for (h_e, h_d, mult, kind) in [
        ("T_long", "F×1", 4, BlockKind::CotoralLine),
        ("T_long", "F^-", 2, BlockKind::WeylFinite),
        ("T_long", "F×C_2", 4, BlockKind::WeylFinite),
        ("T_short", "F×1", 4, BlockKind::CotoralLine),
    ] {
        let r = t.find(h_e, h_d).unwrap();
        assert_eq!((r.multiplicity, r.kind), (mult, kind), "{}", r.pair());
        assert_eq!(r.members.len(), mult);
    }
}

#[test]
fn sp2_abstract_counts() {
    let c = count_by_dimension(&block_table("Sp2").unwrap());
    assert_eq!(c.get(1), 26);
    assert_eq!(c.get(2), 6);
    assert_eq!(c.kind(1, BlockKind::WeylFinite), 16);
    assert_eq!(c.kind(1, BlockKind::CotoralLine), 10);
    assert_eq!(c.infinite(0), 12);
    assert_eq!(block_table("Sp2").unwrap().rows.len(), 31);
}

#[test]
fn su3_finite_rows() {
    let t = block_table("SU3").unwrap();
    let finite: Vec<(&str, usize, &str)> = t
        .rows
        .iter()
        .filter(|r| r.rank() == 0)
        .map(|r| (r.h_d.as_str(), r.h_d_order, r.weyl.as_str()))
        .collect();
    assert_eq!(finite.len(), 7);
    assert!(finite.contains(&("PSL_2(7)", 168, "C_3")));
    assert!(finite.contains(&("A_6", 360, "C_3")));
}
