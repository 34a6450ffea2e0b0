//! One line per acceptance criterion; the test fails if any line fails.

mod common;

use std::collections::BTreeSet;
use std::process::Command;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use blockspace::blocks::{block_table, regular_rank1_check, BlockKind};
use blockspace::descriptors::DescriptorFile;
use blockspace::group::counting::{BinaryPolyhedral, CountingType};
use blockspace::group::{same_group, subgroup_classes};
use blockspace::ledger::divergences;
use blockspace::oracle::{lemma_counting, toral_rep, weyl_subgroups, TORAL_PROFILE_GOLDEN};
use blockspace::rep::decompose_profile;
use blockspace::spectral::{count_by_dimension, verify_spectral_partition};
use blockspace::weyl::{build_root_datum, RootType};
use common::{groups, naive_classes, naive_subgroups, random_unimodular, MAXIMAL_RANK};

type Outcome = Result<(), String>;

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Outcome {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn reflection_enumeration() -> Outcome {
    for (w, classes, refl) in [("D8", 8, 6), ("V4", 5, 4), ("D6", 4, 3)] {
        let r = weyl_subgroups(w).map_err(|e| e.to_string())?;
        expect(w, (r.classes.len(), r.reflection_classes()), (classes, refl))?;
    }
    Ok(())
}

/// Working-table values; the `(T^2, D_4)` entry there reads `0+1`.
fn representation_profiles() -> Outcome {
    for (t, h_d, a, b) in TORAL_PROFILE_GOLDEN {
        let (_, rep) = toral_rep(t, h_d).map_err(|e| e.to_string())?;
        let p = decompose_profile(&rep).map_err(|e| e.to_string())?;
        let published = if t == RootType::A1xA1 && h_d == "D_4" { (0, 1) } else { (a, b) };
        if (p.a, p.b) != published {
            let ledgered = divergences(Some("SU2xSU2"))
                .map_err(|e| e.to_string())?
                .iter()
                .any(|e| e.location.contains("(T^2, D_4)") && e.computed == p.notation());
            if !(ledgered && (p.a, p.b) == (a, b)) {
                return Err(format!("{t} {h_d}: {}", p.notation()));
            }
        }
    }
    Ok(())
}

fn maximal_rank_weyl() -> Outcome {
    for (g, h_e, h_d, _, weyl) in MAXIMAL_RANK {
        let t = block_table(g).map_err(|e| e.to_string())?;
        let r = t.find(h_e, h_d).ok_or(format!("{g} ({h_e}, {h_d}) missing"))?;
        if !same_group(&r.weyl, weyl) {
            return Err(format!("{g} {}: {} vs {weyl}", r.pair(), r.weyl));
        }
    }
    expect("golden rows", MAXIMAL_RANK.len(), 33)
}

fn counting_lemma() -> Outcome {
    let r = lemma_counting().map_err(|e| e.to_string())?;
    expect("total", r.classes.len(), 10)?;
    expect(
        "split",
        (r.count(CountingType::Plain), r.count(CountingType::Graph), r.count(CountingType::TimesC2)),
        (4, 2, 4),
    )?;
    let q8 = |k| r.classes.iter().find(|c| c.base == BinaryPolyhedral::Quaternion && c.kind == k);
    expect("Q8 graph fusion", q8(CountingType::Graph).map(|c| c.class_size), Some(3))?;
    let w = q8(CountingType::Plain).map(|c| c.weyl.name.clone()).unwrap_or_default();
    expect("Weyl of Q8×1 is D_6×C_2", same_group(&w, "D_6×C_2"), true)
}

fn final_tables() -> Outcome {
    for (g, line) in [
        ("Sp2", "Rank 2: 2^6 1^6 0^5 (t1 m2 f3); Rank 1: 1^6 0^7"),
        ("SU2xSU2", "Rank 2: 2^5 1^4 0^1 (t1 m2 f2); Rank 1: 1^6 0^10"),
        ("SU3", "Rank 2: 2^2 1^3 0^1 (t1 m1 f0); Rank 1: 1^4 0^1; Rank 0: 0^7"),
    ] {
        expect(g, block_table(g).map_err(|e| e.to_string())?.summary().line, line.to_string())?;
    }
    let ledgered = divergences(Some("SU3"))
        .map_err(|e| e.to_string())?
        .iter()
        .any(|e| e.published == "t1 m2 f0" && e.computed == "t1 m1 f0");
    expect("SU(3) split ledgered", ledgered, true)
}

fn sp2_counts() -> Outcome {
    let t = block_table("Sp2").map_err(|e| e.to_string())?;
    let c = count_by_dimension(&t);
    let rank2_dim1: usize = t.counted_rows().filter(|r| r.rank() == 2 && r.dimension() == 1).map(|r| r.multiplicity).sum();
    expect(
        "dim 1 (rank 2 + rank 1), dim 2, weyl-finite, cotoral, infinite points",
        (c.get(1), rank2_dim1, c.get(1) - rank2_dim1, c.get(2), c.kind(1, BlockKind::WeylFinite), c.kind(1, BlockKind::CotoralLine), c.infinite(0)),
        (26, 6, 20, 6, 16, 10, 12),
    )
}

fn rank_one_spaces() -> Outcome {
    for (g, blocks, points) in [("SO2", 1, 0), ("O2", 2, 0), ("SO3", 7, 5), ("Sp1", 7, 5)] {
        let t = block_table(g).map_err(|e| e.to_string())?;
        let singletons = t.counted_rows().filter(|r| r.dimension() == 0).count();
        expect(g, (t.rows.len(), singletons), (blocks, points))?;
    }
    Ok(())
}

fn regular_lines() -> Outcome {
    let lines = |t| regular_rank1_check(&build_root_datum(t)).map_err(|e| e.to_string());
    expect("A2", lines(RootType::A2)?.len(), 0)?;
    expect("C2", lines(RootType::C2)?.len(), 0)?;
    let d = lines(RootType::A1xA1)?;
    let dirs: BTreeSet<Vec<i64>> = d.iter().map(|l| l.direction.clone()).collect();
    let orbits: BTreeSet<usize> = d.iter().map(|l| l.orbit).collect();
    expect("A1xA1 diagonal class", (dirs, orbits.len()), ([vec![1, -1], vec![1, 1]].into(), 1))
}

fn property_suites() -> Outcome {
    for (name, t) in groups() {
        let got: BTreeSet<BTreeSet<Vec<usize>>> = subgroup_classes(t)
            .iter()
            .map(|c| c.members.iter().map(|m| m.iter().collect()).collect())
            .collect();
        if got != naive_classes(t, &naive_subgroups(t)) {
            return Err(format!("subgroup classes of {name}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for (t, h_d, a, b) in TORAL_PROFILE_GOLDEN {
        let (_, rep) = toral_rep(t, h_d).map_err(|e| e.to_string())?;
        for _ in 0..100 {
            let p = random_unimodular(&mut rng);
            let q = decompose_profile(&rep.conjugated_by(&p).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            if (q.a, q.b) != (a, b) {
                return Err(format!("{t} {h_d} conjugated by {p}"));
            }
        }
    }
    for g in DescriptorFile::bundled().group_names() {
        let report = verify_spectral_partition(&block_table(g).map_err(|e| e.to_string())?);
        if !report.passed() {
            return Err(format!("{g}: {:?}", report.violations));
        }
    }
    for g in DescriptorFile::bundled().group_names() {
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_blockspace"))
                .args(["classify", "--group", g, "--format", "json"])
                .output()
                .map(|o| o.stdout)
                .map_err(|e| e.to_string())
        };
        if run()? != run()? {
            return Err(format!("classify {g} not deterministic"));
        }
    }
    Ok(())
}

type Criterion = (&'static str, fn() -> Outcome);

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("reflection-subgroup enumeration", reflection_enumeration),
        ("representation profiles", representation_profiles),
        ("maximal-rank Weyl groups", maximal_rank_weyl),
        ("Sp(1)×C_2 counting oracle", counting_lemma),
        ("final table summaries", final_tables),
        ("Sp(2) block counts", sp2_counts),
        ("rank-one ambient spaces", rank_one_spaces),
        ("regular-subgroup check", regular_lines),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {}: PASS  {name}", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {e}", i + 1);
            }
        }
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
