//! Index-two kernels and the count of undominated finite subgroups of
//! `Sp(1) × C_2`.
//!
//! A finite subgroup `S` of `Sp(1) × C_2` whose projection to `Sp(1)` is a
//! binary polyhedral group `F` lies in `F × C_2`. The oracle enumerates every
//! subgroup of `F × C_2` with full projection and fuses them under
//! conjugation by `N × C_2`, where `N` is the normalizer of `F` in `Sp(1)`:
//! `2I` for `2I`, and `2O` for `2O`, `2T` and `Q_8`.

use std::fmt;

use serde::Serialize;

use super::perm::{PermGroup, Permutation};
use super::polyhedral::{binary_icosahedral, binary_octahedral};
use super::recognize::{recognize, Recognition};
use super::subgroups::{conjugation_orbits, subgroup_classes};
use super::table::{CayleyTable, ElemSet};
use crate::error::{Error, Result};

/// All subgroups of index two, as kernels of the surjections onto `C_2`.
///
/// They are the preimages of the hyperplanes of `G / G^2[G, G]`, an
/// elementary abelian 2-group of rank `r`; there are `2^r - 1` of them.
pub fn index2_kernels(table: &CayleyTable) -> Vec<ElemSet> {
    let n = table.order();
    let mut gens = ElemSet::empty(n);
    for a in 0..n {
        gens.insert(table.mul(a, a));
        for b in 0..n {
            gens.insert(table.commutator(a, b));
        }
    }
    let frattini2 = table.closure_of_set(&gens);
    let (quot, label) = table
        .quotient(&table.full(), &frattini2)
        .expect("squares and commutators generate a normal subgroup");

    // coordinates of each quotient element over a greedy basis
    let m = quot.order();
    let mut coords = vec![u32::MAX; m];
    coords[0] = 0;
    let mut rank = 0;
    for q in 0..m {
        if coords[q] != u32::MAX {
            continue;
        }
        let bit = 1u32 << rank;
        rank += 1;
        let known: Vec<usize> = (0..m).filter(|&x| coords[x] != u32::MAX).collect();
        for x in known {
            coords[quot.mul(x, q)] = coords[x] | bit;
        }
    }

    let mut kernels: Vec<ElemSet> = (1u32..(1 << rank))
        .map(|functional| {
            ElemSet::from_indices(
                n,
                (0..n).filter(|&g| (coords[label[g]] & functional).count_ones() % 2 == 0),
            )
        })
        .collect();
    kernels.sort();
    kernels
}

/// The four binary polyhedral groups relevant to `Sp(1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BinaryPolyhedral {
    Icosahedral,
    Octahedral,
    Tetrahedral,
    Quaternion,
}

impl BinaryPolyhedral {
    pub const ALL: [BinaryPolyhedral; 4] = [
        BinaryPolyhedral::Icosahedral,
        BinaryPolyhedral::Octahedral,
        BinaryPolyhedral::Tetrahedral,
        BinaryPolyhedral::Quaternion,
    ];

    pub fn label(self) -> &'static str {
        match self {
            BinaryPolyhedral::Icosahedral => "2A5",
            BinaryPolyhedral::Octahedral => "2S4",
            BinaryPolyhedral::Tetrahedral => "2A4",
            BinaryPolyhedral::Quaternion => "Q8",
        }
    }

    /// Image in `SO(3)`.
    pub fn rotation_label(self) -> &'static str {
        match self {
            BinaryPolyhedral::Icosahedral => "A5",
            BinaryPolyhedral::Octahedral => "S4",
            BinaryPolyhedral::Tetrahedral => "A4",
            BinaryPolyhedral::Quaternion => "D4",
        }
    }

    pub fn order(self) -> usize {
        match self {
            BinaryPolyhedral::Icosahedral => 120,
            BinaryPolyhedral::Octahedral => 48,
            BinaryPolyhedral::Tetrahedral => 24,
            BinaryPolyhedral::Quaternion => 8,
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "2A5" | "2I" => Ok(BinaryPolyhedral::Icosahedral),
            "2S4" | "2O" => Ok(BinaryPolyhedral::Octahedral),
            "2A4" | "2T" => Ok(BinaryPolyhedral::Tetrahedral),
            "Q8" | "2D4" => Ok(BinaryPolyhedral::Quaternion),
            other => Err(Error::UnknownGroup(other.to_string())),
        }
    }
}

impl fmt::Display for BinaryPolyhedral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A binary polyhedral group `F` inside its `Sp(1)`-normalizer `N`, as
/// subsets of one permutation group.
#[derive(Clone, Debug)]
pub struct NormalizerModel {
    pub base: BinaryPolyhedral,
    pub ambient: PermGroup,
    pub subgroup: ElemSet,
    pub normalizer: ElemSet,
}

impl NormalizerModel {
    pub fn new(base: BinaryPolyhedral) -> Result<Self> {
        match base {
            BinaryPolyhedral::Icosahedral => {
                let g = binary_icosahedral()?;
                let full = g.group.table().full();
                Ok(Self {
                    base,
                    ambient: g.group,
                    subgroup: full.clone(),
                    normalizer: full,
                })
            }
            _ => {
                let o = binary_octahedral()?;
                let full = o.group().table().full();
                let subgroup = match base {
                    BinaryPolyhedral::Octahedral => full.clone(),
                    BinaryPolyhedral::Tetrahedral => o.binary_tetrahedral.clone(),
                    _ => o.q8.clone(),
                };
                Ok(Self {
                    base,
                    ambient: o.quaternions.group,
                    subgroup,
                    normalizer: full,
                })
            }
        }
    }

    /// `N(F) / F`.
    pub fn weyl(&self) -> Result<Recognition> {
        let t = self.ambient.table();
        let n = t.normalizer_in(&self.normalizer, &self.subgroup);
        let (q, _) = t.quotient(&n, &self.subgroup)?;
        Ok(recognize(&q))
    }
}

/// Shape of an undominated subgroup `S <= F × C_2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CountingType {
    /// `F × 1`
    Plain,
    /// graph `{(f, β(f))}` of a surjection `β: F -> C_2`
    Graph,
    /// `F × C_2`
    TimesC2,
}

impl CountingType {
    pub const ALL: [CountingType; 3] = [CountingType::Plain, CountingType::Graph, CountingType::TimesC2];

    pub fn label(self) -> &'static str {
        match self {
            CountingType::Plain => "F×1",
            CountingType::Graph => "F^-",
            CountingType::TimesC2 => "F×C_2",
        }
    }
}

/// One conjugacy class found by the counting oracle.
#[derive(Clone, Debug, Serialize)]
pub struct CountingClass {
    pub base: BinaryPolyhedral,
    pub kind: CountingType,
    pub order: usize,
    /// number of distinct subgroups fused into this class
    pub class_size: usize,
    /// `N_{N × C_2}(S) / S`
    pub weyl: Recognition,
    /// whether `S` maps onto the `C_2` factor
    pub onto_c2: bool,
}

impl CountingClass {
    pub fn descriptor(&self) -> String {
        match self.kind {
            CountingType::Plain => format!("{}×1", self.base),
            CountingType::Graph => format!("{}^-", self.base),
            CountingType::TimesC2 => format!("{}×C_2", self.base),
        }
    }
}

/// `N × C_2` as a permutation group on `deg(N) + 2` points.
struct ProductModel {
    group: PermGroup,
    degree: usize,
    swap: usize,
}

impl ProductModel {
    fn new(model: &NormalizerModel) -> Result<Self> {
        let d = model.ambient.degree();
        let extend = |p: &Permutation| {
            let mut images: Vec<usize> = (0..d).map(|i| p.image(i)).collect();
            images.extend([d, d + 1]);
            Permutation::new(images)
        };
        let mut gens = model
            .ambient
            .generators()
            .iter()
            .map(extend)
            .collect::<Result<Vec<_>>>()?;
        let tau = Permutation::from_cycles(d + 2, &[&[d, d + 1]])?;
        gens.push(tau.clone());
        let group = PermGroup::from_generators(d + 2, gens)?;
        let swap = group.index_of(&tau).expect("generator present");
        Ok(Self {
            group,
            degree: d,
            swap,
        })
    }

    /// `X × 1` for a subset `X` of the normalizer model.
    fn lift(&self, model: &NormalizerModel, s: &ElemSet) -> Result<ElemSet> {
        let d = self.degree;
        let mut out = ElemSet::empty(self.group.order());
        for i in s.iter() {
            let p = model.ambient.element(i);
            let mut images: Vec<usize> = (0..d).map(|k| p.image(k)).collect();
            images.extend([d, d + 1]);
            let idx = self
                .group
                .index_of(&Permutation::new(images)?)
                .ok_or_else(|| Error::Data("lift outside product".into()))?;
            out.insert(idx);
        }
        Ok(out)
    }

    /// Image of `s` under projection to the first factor, as `X × 1`.
    fn project(&self, s: &ElemSet) -> ElemSet {
        let d = self.degree;
        let mut out = ElemSet::empty(self.group.order());
        for i in s.iter() {
            let p = self.group.element(i);
            let mut images: Vec<usize> = (0..d).map(|k| p.image(k)).collect();
            images.extend([d, d + 1]);
            let q = Permutation::new(images).expect("restriction of a product element");
            out.insert(self.group.index_of(&q).expect("projection stays in the product"));
        }
        out
    }
}

/// Conjugacy classes of subgroups of `F × C_2` projecting onto `F`, up to
/// conjugation by `N × C_2`.
pub fn lemma_counting_oracle(base: BinaryPolyhedral) -> Result<Vec<CountingClass>> {
    let model = NormalizerModel::new(base)?;
    let product = ProductModel::new(&model)?;
    let table = product.group.table();

    let f_times_1 = product.lift(&model, &model.subgroup)?;
    let n_times_c2 = {
        let n1 = product.lift(&model, &model.normalizer)?;
        let mut gens: Vec<usize> = n1.iter().collect();
        gens.push(product.swap);
        table.closure(&gens)
    };
    let f_times_c2 = {
        let mut gens: Vec<usize> = f_times_1.iter().collect();
        gens.push(product.swap);
        table.closure(&gens)
    };

    // every subgroup of F × C_2, through its own table
    let (sub_table, embed) = table.subtable(&f_times_c2)?;
    let mut candidates: Vec<ElemSet> = Vec::new();
    for class in subgroup_classes(&sub_table) {
        for member in class.members {
            let s = ElemSet::from_indices(table.order(), member.iter().map(|i| embed[i]));
            if product.project(&s) == f_times_1 {
                candidates.push(s);
            }
        }
    }
    candidates.sort();

    let mut out = Vec::new();
    for orbit in conjugation_orbits(table, &candidates, &n_times_c2) {
        let s = &orbit[0];
        let kind = if s.contains(product.swap) {
            CountingType::TimesC2
        } else if s.is_subset(&f_times_1) {
            CountingType::Plain
        } else {
            CountingType::Graph
        };
        let norm = table.normalizer_in(&n_times_c2, s);
        let (q, _) = table.quotient(&norm, s)?;
        out.push(CountingClass {
            base,
            kind,
            order: s.len(),
            class_size: orbit.len(),
            weyl: recognize(&q),
            onto_c2: !s.is_subset(&f_times_1),
        });
    }
    out.sort_by_key(|c| c.kind);
    Ok(out)
}

/// The oracle over all four bases, in the order `2A5, 2S4, 2A4, Q8`.
pub fn full_counting() -> Result<Vec<CountingClass>> {
    let mut all = Vec::new();
    for base in BinaryPolyhedral::ALL {
        all.extend(lemma_counting_oracle(base)?);
    }
    Ok(all)
}
