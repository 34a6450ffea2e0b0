use std::collections::{BTreeSet, HashMap};

use proptest::prelude::*;
use proptest::sample::Index;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use blockspace::blocks::{block_table, classify_block_kind, BlockTable};
use blockspace::descriptors::DescriptorFile;
use blockspace::group::perm::minimal_generators;
use blockspace::group::{index2_kernels, normalizer_quotient, subgroup_classes, CayleyTable, ElemSet};
use blockspace::lattice::IntMatrix;
use blockspace::oracle::{toral_rep, TORAL_PROFILE_GOLDEN};
use blockspace::rep::{decompose_profile, IntegralRep, Summand};
use blockspace::spectral::{
    check_skeleton, count_rows, finite_approximation, verify_spectral_partition, BlockShape,
};
use blockspace::weyl::{
    build_root_datum, fixed_sublattice, reflection_subgroup_classes, weyl_group, RootType,
};

mod common;

use common::{groups, naive_classes, naive_subgroups, random_unimodular};

#[test]
fn subgroup_classes_match_naive_oracle() {
    for (name, t) in groups() {
        let naive = naive_subgroups(t);
        let expected = naive_classes(t, &naive);
        let classes = subgroup_classes(t);
        let got: BTreeSet<BTreeSet<Vec<usize>>> = classes
            .iter()
            .map(|c| c.members.iter().map(|m| m.iter().collect()).collect())
            .collect();
        assert_eq!(got, expected, "{name}");
        let total: usize = classes.iter().map(|c| c.members.len()).sum();
        assert_eq!(total, naive.len(), "{name}");
        for c in &classes {
            assert_eq!(c.members.len() * c.normalizer.len(), t.order(), "{name}");
            assert!(c.representative.is_subset(&c.normalizer));
        }
    }
}

/// Homomorphisms to `C_2`, by trying every assignment on a generating set.
fn homs_to_c2(t: &CayleyTable) -> usize {
    let gens = minimal_generators(t, &t.full());
    let mut count = 0;
    for mask in 0..1usize << gens.len() {
        let mut phi: Vec<Option<u8>> = vec![None; t.order()];
        phi[0] = Some(0);
        let mut queue = vec![0];
        while let Some(x) = queue.pop() {
            for (k, &g) in gens.iter().enumerate() {
                let y = t.mul(x, g);
                if phi[y].is_none() {
                    phi[y] = Some(phi[x].unwrap() ^ (mask >> k & 1) as u8);
                    queue.push(y);
                }
            }
        }
        let phi: Vec<u8> = phi.into_iter().map(Option::unwrap).collect();
        let ok = (0..t.order()).all(|a| (0..t.order()).all(|b| phi[t.mul(a, b)] == phi[a] ^ phi[b]));
        count += ok as usize;
    }
    count
}

#[test]
fn index_two_kernels_count() {
    for (name, t) in groups() {
        let kernels = index2_kernels(t);
        assert_eq!(kernels.len() + 1, homs_to_c2(t), "{name}");
        for k in &kernels {
            assert_eq!(2 * k.len(), t.order(), "{name}");
            assert!(t.is_normal_in(k, &t.full()), "{name}");
        }
    }
}

fn random_subgroup(t: &CayleyTable, a: Index, b: Index) -> ElemSet {
    t.closure(&[a.index(t.order()), b.index(t.order())])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normalizer_quotient_order(g in 0usize..12, a in any::<Index>(), b in any::<Index>()) {
        let (_, t) = &groups()[g % groups().len()];
        let h = random_subgroup(t, a, b);
        let q = normalizer_quotient(t, &h).unwrap();
        prop_assert_eq!(q.fingerprint.order * h.len(), t.normalizer(&h).len());
        if h.len() == t.order() {
            prop_assert_eq!(q.name, "1");
        }
    }

    #[test]
    fn spectral_skeletons(n in 1usize..4, a in 0usize..3, b in 0usize..3) {
        prop_assume!(a + b <= 2 && (a + b < 2 || n <= 2));
        let shape = match (a, b) {
            (0, 0) => BlockShape::Point,
            (1, 0) => BlockShape::CotoralLine,
            (0, 1) => BlockShape::FlatLine,
            _ => BlockShape::Dim2 { a, b, kind: blockspace::blocks::BlockKind::Mixed },
        };
        let s = finite_approximation(shape, n);
        prop_assert_eq!(s.len(), (n + 1).pow((a + b) as u32));
        prop_assert!(check_skeleton(shape, &s).is_empty());
    }

    #[test]
    fn counts_are_additive_and_order_free(g in 0usize..7, seed in any::<u64>(), cut in any::<Index>()) {
        let name = DescriptorFile::bundled().group_names()[g];
        let t = block_table(name).unwrap();
        let whole = count_rows(&t.rows);
        let mut rows = t.rows.clone();
        rows.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(&count_rows(&rows), &whole);
        let k = cut.index(rows.len() + 1);
        prop_assert_eq!(count_rows(&rows[..k]) + count_rows(&rows[k..]), whole);
    }
}

// ------------------------------------------------------------------ lattices

fn summand_types(s: &[Summand]) -> Vec<&'static str> {
    s.iter().map(|x| x.describe()).collect()
}

#[test]
fn profiles_are_conjugation_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for (t, h_d, a, b) in TORAL_PROFILE_GOLDEN {
        let (_, rep) = toral_rep(t, h_d).unwrap();
        let base = decompose_profile(&rep).unwrap();
        assert_eq!((base.a, base.b), (a, b));
        for _ in 0..100 {
            let p = random_unimodular(&mut rng);
            let q = decompose_profile(&rep.conjugated_by(&p).unwrap()).unwrap();
            assert_eq!((q.a, q.b), (a, b), "{t} {h_d} conjugated by {p}");
            assert_eq!(summand_types(&q.summands), summand_types(&base.summands));
            assert!(q.a + q.b <= 2);
            assert_eq!(q.a + q.b == 2, !q.summands.contains(&Summand::TwoDimSimple));
        }
    }
}

fn primitive_lines(height: i64) -> Vec<[i64; 2]> {
    let mut out = Vec::new();
    for x in 0..=height {
        for y in -height..=height {
            if (x == 0 && y <= 0) || gcd(x, y.abs()) != 1 {
                continue;
            }
            out.push([x, y]);
        }
    }
    out
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Two independent lines preserved by every element, found by search.
fn splits_by_search(rep: &IntegralRep) -> bool {
    let preserved: Vec<[i64; 2]> = primitive_lines(10)
        .into_iter()
        .filter(|v| {
            rep.group_elements.iter().all(|g| {
                let w = g.apply(v);
                w == v.to_vec() || w == [-v[0], -v[1]]
            })
        })
        .collect();
    preserved
        .iter()
        .any(|u| preserved.iter().any(|v| u[0] * v[1] - u[1] * v[0] != 0))
}

#[test]
fn splitting_agrees_with_search() {
    let mut small = Vec::new();
    for a in -2..=2 {
        for b in -2..=2 {
            for c in -2..=2 {
                for d in -2..=2 {
                    if a * d - b * c == 1 || a * d - b * c == -1 {
                        small.push(IntMatrix::from_rows(&[[a, b], [c, d]]));
                    }
                }
            }
        }
    }
    let mut cases = 0;
    for (t, h_d, _, _) in TORAL_PROFILE_GOLDEN {
        let (_, rep) = toral_rep(t, h_d).unwrap();
        for p in &small {
            let r = rep.conjugated_by(p).unwrap();
            let prof = decompose_profile(&r).unwrap();
            if prof.a > 0 {
                continue;
            }
            cases += 1;
            let split = !prof.summands.contains(&Summand::TwoDimSimple);
            assert_eq!(split, splits_by_search(&r), "{t} {h_d} conjugated by {p}");
        }
    }
    assert!(cases > 0);
}

#[test]
fn fixed_lattices_are_equivariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for t in RootType::ALL {
        let rd = build_root_datum(t);
        let w = weyl_group(&rd).unwrap();
        for _ in 0..20 {
            let p = random_unimodular(&mut rng);
            let wp = w.conjugated_by(&p).unwrap();
            for c in reflection_subgroup_classes(&rd, &w) {
                let before = fixed_sublattice(&c.representative, &w).unwrap();
                let image: ElemSet = {
                    let inv = p.unimodular_inverse().unwrap();
                    let idx: Vec<usize> = c
                        .representative
                        .iter()
                        .map(|g| wp.index_of(&(&(&p * &w.elements[g]) * &inv)).unwrap())
                        .collect();
                    ElemSet::from_indices(wp.order(), idx)
                };
                let after = fixed_sublattice(&image, &wp).unwrap();
                assert_eq!(before.rank(), after.rank(), "{t} {}", c.label);
                if before.rank() == 1 {
                    let moved = p.apply(&before.basis[0]);
                    let neg: Vec<i64> = moved.iter().map(|x| -x).collect();
                    assert!(after.basis[0] == moved || after.basis[0] == neg, "{t} {}", c.label);
                }
                assert_eq!(before.quotient.order(), after.quotient.order());
            }
        }
    }
}

#[test]
fn weyl_subgroups_partition_all_subgroups() {
    for t in RootType::ALL {
        let rd = build_root_datum(t);
        let w = weyl_group(&rd).unwrap();
        let all = naive_subgroups(w.table());
        let classes = reflection_subgroup_classes(&rd, &w);
        let mut covered = BTreeSet::new();
        for c in &classes {
            for m in &c.conjugates {
                assert!(covered.insert(m.iter().collect::<Vec<_>>()), "{t}: subgroup in two classes");
            }
            let refl: Vec<usize> = c.representative.iter().filter(|&g| w.reflection_flags[g]).collect();
            assert_eq!(c.is_reflection_group, w.table().closure(&refl) == c.representative);
            let fixed = fixed_sublattice(&c.representative, &w).unwrap();
            if c.is_reflection_group {
                assert_eq!(fixed.rank() == 2, c.order == 1, "{t} {}", c.label);
            }
        }
        assert_eq!(covered, all, "{t}");
    }
}

/// `N_W(R)/R` acts on the fixed lattice exactly as the normalizer does.
#[test]
fn lattice_action_is_restriction() {
    for t in RootType::ALL {
        let rd = build_root_datum(t);
        let w = weyl_group(&rd).unwrap();
        for c in reflection_subgroup_classes(&rd, &w).iter().filter(|c| c.is_reflection_group) {
            let f = fixed_sublattice(&c.representative, &w).unwrap();
            let k = f.rank();
            for g in f.normalizer.iter() {
                let m = &f.action[f.quotient_map[g]];
                for j in 0..k {
                    let image = w.elements[g].apply(&f.basis[j]);
                    let expected: Vec<i64> = (0..2)
                        .map(|x| (0..k).map(|i| m[(i, j)] * f.basis[i][x]).sum())
                        .collect();
                    assert_eq!(image, expected, "{t} {}", c.label);
                }
            }
            let q = &f.quotient;
            for x in 0..q.order() {
                for y in 0..q.order() {
                    if k > 0 {
                        assert_eq!(&f.action[x] * &f.action[y], f.action[q.mul(x, y)]);
                    }
                }
            }
        }
    }
}

// ------------------------------------------------------------------ tables

fn all_tables() -> Vec<BlockTable> {
    DescriptorFile::bundled().group_names().into_iter().map(|g| block_table(g).unwrap()).collect()
}

#[test]
fn tables_are_consistent() {
    for t in all_tables() {
        let keys: Vec<_> = t.rows.iter().map(|r| r.order_key()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted, "{}", t.group);
        for r in &t.rows {
            assert_eq!(classify_block_kind(&r.profile, &r.h_e).unwrap(), r.kind, "{}", r.pair());
        }
        let report = verify_spectral_partition(&t);
        assert!(report.passed(), "{}: {:?}", t.group, report.violations);
        let by_row: HashMap<String, usize> = t.rows.iter().map(|r| (r.pair(), r.dimension())).collect();
        assert_eq!(by_row.len(), t.rows.len(), "{}", t.group);
    }
}
