//! Small-group recognition by fingerprint.
//!
//! The reference library holds every group of order at most 16, each built
//! concretely and fingerprinted here rather than transcribed. Two library
//! groups that share a fingerprint cannot be told apart by it, so a quotient
//! landing on such a fingerprint is reported as unknown. Larger orders are
//! recognized only as cyclic or dihedral, by structural tests.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Serialize;

use super::perm::alternating_group;
use super::table::CayleyTable;

/// Coarse isomorphism invariants of a finite group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GroupFingerprint {
    pub order: usize,
    pub abelian: bool,
    pub exponent: u32,
    pub order_histogram: BTreeMap<u32, usize>,
    pub derived_order: usize,
}

impl GroupFingerprint {
    pub fn of(table: &CayleyTable) -> Self {
        let n = table.order();
        let mut order_histogram = BTreeMap::new();
        let mut exponent = 1u32;
        for g in 0..n {
            let o = table.elem_order(g);
            *order_histogram.entry(o).or_insert(0) += 1;
            exponent = lcm(exponent, o);
        }
        Self {
            order: n,
            abelian: table.is_abelian(),
            exponent,
            order_histogram,
            derived_order: table.derived_subgroup_of(&table.full()).len(),
        }
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    let mut x = a;
    let mut y = b;
    while y != 0 {
        let t = x % y;
        x = y;
        y = t;
    }
    a / x * b
}

pub const UNKNOWN: &str = "unknown";

/// Result of recognizing a group.
#[derive(Clone, Debug, Serialize)]
pub struct Recognition {
    /// canonical name, or `"unknown"`
    pub name: String,
    pub fingerprint: GroupFingerprint,
    /// library names sharing the fingerprint when it is ambiguous
    pub candidates: Vec<String>,
}

impl Recognition {
    pub fn is_known(&self) -> bool {
        self.name != UNKNOWN
    }

    /// Whether `name` denotes the recognized group, up to aliases.
    pub fn matches(&self, name: &str) -> bool {
        self.is_known() && same_group(&self.name, name)
    }
}

struct NamedGroup {
    name: &'static str,
    fingerprint: GroupFingerprint,
}

/// Alternative spellings of canonical names, in the notation where `D_2n`
/// has order `2n`.
const ALIASES: &[(&str, &[&str])] = &[
    ("1", &["C_1", "D_1"]),
    ("C_2", &["D_2", "1×C_2", "C_2×1"]),
    ("D_4", &["C_2×C_2", "V_4"]),
    ("D_6", &["S_3", "Σ_3"]),
    ("D_12", &["D_6×C_2", "C_2×D_6", "S_3×C_2"]),
    ("C_2^3", &["C_2×C_2×C_2", "D_4×C_2"]),
    ("C_6", &["C_3×C_2", "C_2×C_3"]),
    ("C_6×C_2", &["C_2×C_6"]),
    ("A_4", &["PSL_2(3)"]),
    ("C_4×C_2", &["C_2×C_4"]),
];

/// Canonical spelling of a group name (identity if it has no alias entry).
pub fn canonical_name(name: &str) -> String {
    let trimmed = name.trim();
    for (canon, aliases) in ALIASES {
        if *canon == trimmed || aliases.contains(&trimmed) {
            return canon.to_string();
        }
    }
    trimmed.to_string()
}

/// Equality of group names up to the alias table.
pub fn same_group(a: &str, b: &str) -> bool {
    canonical_name(a) == canonical_name(b)
}

fn dihedral(m: usize) -> CayleyTable {
    // (k, s) = r^k t^s with t r t = r^-1
    let m = m as i64;
    CayleyTable::generate((0i64, 0u8), &[(1, 0), (0, 1)], |&(k1, s1), &(k2, s2)| {
        let k = if s1 == 0 { k1 + k2 } else { k1 - k2 };
        (k.rem_euclid(m), s1 ^ s2)
    })
    .expect("small dihedral")
    .1
}

fn dicyclic(m: usize) -> CayleyTable {
    // a^k x^s with x^2 = a^m, x a x^-1 = a^-1, order 4m
    let n = 2 * m as i64;
    let m = m as i64;
    CayleyTable::generate((0i64, 0u8), &[(1, 0), (0, 1)], |&(k1, s1), &(k2, s2)| match (s1, s2) {
        (0, s) => ((k1 + k2).rem_euclid(n), s),
        (_, 0) => ((k1 - k2).rem_euclid(n), 1),
        _ => ((k1 - k2 + m).rem_euclid(n), 0),
    })
    .expect("small dicyclic")
    .1
}

/// `C_m ⋊ C_n` with the generator of `C_n` acting by `a -> a^r`.
fn metacyclic(m: usize, n: usize, r: usize) -> CayleyTable {
    let (m, n, r) = (m as u64, n as u64, r as u64);
    let pow_r = move |e: u64| (0..e).fold(1u64, |acc, _| acc * r % m);
    CayleyTable::generate((0u64, 0u64), &[(1, 0), (0, 1)], move |&(a1, b1), &(a2, b2)| {
        ((a1 + pow_r(b1) * a2) % m, (b1 + b2) % n)
    })
    .expect("small metacyclic")
    .1
}

/// `(C_2 × C_2) ⋊ C_4`, the generator of `C_4` swapping the two factors.
fn klein_by_c4() -> CayleyTable {
    CayleyTable::generate(
        ([0u8, 0u8], 0u8),
        &[([1, 0], 0), ([0, 0], 1)],
        |&(v1, b1), &(v2, b2)| {
            let w = if b1 % 2 == 1 { [v2[1], v2[0]] } else { v2 };
            ([v1[0] ^ w[0], v1[1] ^ w[1]], (b1 + b2) % 4)
        },
    )
    .expect("order 16")
    .1
}

/// Central product `C_4 ∘ D_8`, realized as the Pauli group `<iI, X, Z>`.
fn pauli() -> CayleyTable {
    // i^k X^a Z^b; Z X = -X Z
    CayleyTable::generate(
        (0u8, 0u8, 0u8),
        &[(1, 0, 0), (0, 1, 0), (0, 0, 1)],
        |&(k1, a1, b1), &(k2, a2, b2)| ((k1 + k2 + 2 * b1 * a2) % 4, a1 ^ a2, b1 ^ b2),
    )
    .expect("order 16")
    .1
}

fn cyc(n: usize) -> CayleyTable {
    CayleyTable::cyclic_group(n)
}

fn prod(a: &CayleyTable, b: &CayleyTable) -> CayleyTable {
    a.direct_product(b).expect("small product")
}

fn library() -> &'static Vec<NamedGroup> {
    static LIB: OnceLock<Vec<NamedGroup>> = OnceLock::new();
    LIB.get_or_init(|| {
        let a4 = alternating_group(4).expect("A_4").table().clone();
        let c2 = cyc(2);
        let entries: Vec<(&'static str, CayleyTable)> = vec![
            ("1", cyc(1)),
            ("C_2", cyc(2)),
            ("C_3", cyc(3)),
            ("C_4", cyc(4)),
            ("D_4", prod(&c2, &c2)),
            ("C_5", cyc(5)),
            ("C_6", cyc(6)),
            ("D_6", dihedral(3)),
            ("C_7", cyc(7)),
            ("C_8", cyc(8)),
            ("C_4×C_2", prod(&cyc(4), &c2)),
            ("C_2^3", prod(&prod(&c2, &c2), &c2)),
            ("D_8", dihedral(4)),
            ("Q_8", dicyclic(2)),
            ("C_9", cyc(9)),
            ("C_3×C_3", prod(&cyc(3), &cyc(3))),
            ("C_10", cyc(10)),
            ("D_10", dihedral(5)),
            ("C_11", cyc(11)),
            ("C_12", cyc(12)),
            ("C_6×C_2", prod(&cyc(6), &c2)),
            ("D_12", dihedral(6)),
            ("A_4", a4),
            ("Dic_12", dicyclic(3)),
            ("C_13", cyc(13)),
            ("C_14", cyc(14)),
            ("D_14", dihedral(7)),
            ("C_15", cyc(15)),
            ("C_16", cyc(16)),
            ("C_8×C_2", prod(&cyc(8), &c2)),
            ("C_4×C_4", prod(&cyc(4), &cyc(4))),
            ("C_4×C_2^2", prod(&prod(&cyc(4), &c2), &c2)),
            ("C_2^4", prod(&prod(&c2, &c2), &prod(&c2, &c2))),
            ("D_16", dihedral(8)),
            ("Q_16", dicyclic(4)),
            ("SD_16", metacyclic(8, 2, 3)),
            ("M_16", metacyclic(8, 2, 5)),
            ("C_4⋊C_4", metacyclic(4, 4, 3)),
            ("C_2^2⋊C_4", klein_by_c4()),
            ("D_8×C_2", prod(&dihedral(4), &c2)),
            ("Q_8×C_2", prod(&dicyclic(2), &c2)),
            ("C_4∘D_8", pauli()),
        ];
        entries
            .into_iter()
            .map(|(name, t)| NamedGroup {
                name,
                fingerprint: GroupFingerprint::of(&t),
            })
            .collect()
    })
}

/// Names of the reference groups, with their orders.
pub fn library_names() -> Vec<(&'static str, usize)> {
    library().iter().map(|g| (g.name, g.fingerprint.order)).collect()
}

/// Groups of the reference library whose fingerprints coincide.
pub fn fingerprint_ties() -> Vec<Vec<&'static str>> {
    let lib = library();
    let mut ties: Vec<Vec<&'static str>> = Vec::new();
    for (i, g) in lib.iter().enumerate() {
        if ties.iter().any(|t| t.contains(&g.name)) {
            continue;
        }
        let same: Vec<&'static str> = lib[i..]
            .iter()
            .filter(|h| h.fingerprint == g.fingerprint)
            .map(|h| h.name)
            .collect();
        if same.len() > 1 {
            ties.push(same);
        }
    }
    ties
}

const LIBRARY_MAX_ORDER: usize = 16;

pub fn recognize(table: &CayleyTable) -> Recognition {
    let fingerprint = GroupFingerprint::of(table);
    let n = fingerprint.order;
    if n <= LIBRARY_MAX_ORDER {
        let hits: Vec<&NamedGroup> = library().iter().filter(|g| g.fingerprint == fingerprint).collect();
        let name = match hits.as_slice() {
            [one] => one.name.to_string(),
            _ => UNKNOWN.to_string(),
        };
        let candidates = if hits.len() > 1 {
            hits.iter().map(|g| g.name.to_string()).collect()
        } else {
            Vec::new()
        };
        return Recognition {
            name,
            fingerprint,
            candidates,
        };
    }
    let name = if fingerprint.order_histogram.contains_key(&(n as u32)) {
        format!("C_{n}")
    } else if is_dihedral(table) {
        format!("D_{n}")
    } else {
        UNKNOWN.to_string()
    };
    Recognition {
        name,
        fingerprint,
        candidates: Vec::new(),
    }
}

/// Dihedral of order `n = 2m`, `m >= 3`: a cyclic subgroup of index two whose
/// complement consists of involutions.
fn is_dihedral(table: &CayleyTable) -> bool {
    let n = table.order();
    if !n.is_multiple_of(2) || n < 6 {
        return false;
    }
    let m = (n / 2) as u32;
    (0..n).find(|&g| table.elem_order(g) == m).is_some_and(|r| {
        let rot = table.cyclic(r);
        (0..n).filter(|&g| !rot.contains(g)).all(|g| table.elem_order(g) == 2)
    })
}
