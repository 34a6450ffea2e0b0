//! Dominant subgroups and block tables.
//!
//! Maximal-rank rows are computed from the root datum: a reflection subgroup
//! `R` of `W` fixes the identity component, `Ω = N_W(R)/R` is its Weyl group,
//! and each subgroup class `H_d` of `Ω` gives a row with Weyl group
//! `N_Ω(H_d)/H_d` and block dimension read off from `Λ₀ = Z^2^R`.
//! Rows of lower rank are expanded from the curated descriptors.

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::descriptors::{AmbientGroup, ConnectedSubgroupDescriptor, DescriptorFile, WeylOfHe};
use crate::error::{Error, Result};
use crate::group::counting::{full_counting, BinaryPolyhedral, CountingClass, CountingType, NormalizerModel};
use crate::group::polyhedral::{icosahedral_rotations, octahedral_rotations};
use crate::group::subgroups::subgroup_classes;
use crate::group::{weyl_quotient, CayleyTable, ElemSet};
use crate::rep::{decompose_profile, DecompositionProfile, IntegralRep};
use crate::weyl::{
    build_root_datum, fixed_sublattice, reflection_subgroup_classes, weyl_group, RootDatum, Vector,
};

/// Shape class of a block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockKind {
    Discrete,
    CotoralLine,
    WeylFinite,
    Mixed,
    Toral,
}

impl BlockKind {
    pub const ALL: [BlockKind; 5] = [
        BlockKind::Discrete,
        BlockKind::CotoralLine,
        BlockKind::WeylFinite,
        BlockKind::Mixed,
        BlockKind::Toral,
    ];

    pub fn label(self) -> &'static str {
        match self {
            BlockKind::Discrete => "discrete",
            BlockKind::CotoralLine => "cotoral_line",
            BlockKind::WeylFinite => "weyl_finite",
            BlockKind::Mixed => "mixed",
            BlockKind::Toral => "toral",
        }
    }

    /// Pointer to the model that covers blocks of this kind.
    pub fn model_label(self) -> &'static str {
        match self {
            BlockKind::Discrete => "Discrete",
            BlockKind::CotoralLine => "gq1",
            BlockKind::WeylFinite => "gqwf",
            BlockKind::Mixed => "mixed",
            BlockKind::Toral => "gqtoral",
        }
    }
}

impl fmt::Display for BlockKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The identity component `H_e` of a dominant subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityComponent {
    pub name: String,
    pub rank: usize,
    /// dimension as a Lie group
    pub dim: usize,
    pub maximal_torus: bool,
    pub provenance: String,
}

pub fn classify_block_kind(profile: &DecompositionProfile, h_e: &IdentityComponent) -> Result<BlockKind> {
    match (profile.a, profile.b) {
        (0, 0) => Ok(BlockKind::Discrete),
        (1, 0) => Ok(BlockKind::CotoralLine),
        (0, _) => Ok(BlockKind::WeylFinite),
        (_, b) if b > 0 => Ok(BlockKind::Mixed),
        (2, 0) if h_e.maximal_torus => Ok(BlockKind::Toral),
        (a, b) => Err(Error::Classification(format!(
            "profile {a}+{b} on {} (not a maximal torus)",
            h_e.name
        ))),
    }
}

/// One class fused into a family row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyMember {
    pub name: String,
    pub order: usize,
    pub weyl: String,
}

/// One row of a block table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominantRecord {
    pub h_e: IdentityComponent,
    pub h_d: String,
    /// order of `H_d`; the largest member order for family rows
    pub h_d_order: usize,
    /// name of the dominant subgroup itself, where it has a usual one
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dominant: Option<String>,
    pub multiplicity: usize,
    pub weyl: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub members: Vec<FamilyMember>,
    pub profile: DecompositionProfile,
    pub kind: BlockKind,
    pub model_label: String,
    /// stands for an unclassified collection of finite subgroups
    pub placeholder: bool,
}

impl DominantRecord {
    pub fn new(
        h_e: IdentityComponent,
        h_d: impl Into<String>,
        h_d_order: usize,
        weyl: impl Into<String>,
        profile: DecompositionProfile,
    ) -> Result<Self> {
        let kind = classify_block_kind(&profile, &h_e)?;
        Ok(Self {
            h_e,
            h_d: h_d.into(),
            h_d_order,
            dominant: None,
            multiplicity: 1,
            weyl: weyl.into(),
            members: Vec::new(),
            profile,
            kind,
            model_label: kind.model_label().to_string(),
            placeholder: false,
        })
    }

    pub fn rank(&self) -> usize {
        self.h_e.rank
    }

    /// Block dimension `a + b`.
    pub fn dimension(&self) -> usize {
        self.profile.dimension()
    }

    /// Position in the listing order: rank, then dimension of `H`, then
    /// `|H_d|`, all descending.
    pub fn order_key(&self) -> (Reverse<usize>, Reverse<usize>, Reverse<usize>) {
        (Reverse(self.h_e.rank), Reverse(self.h_e.dim), Reverse(self.h_d_order))
    }

    /// `(H_e, H_d)` as displayed.
    pub fn pair(&self) -> String {
        format!("({}, {})", self.h_e.name, self.h_d)
    }
}

// ------------------------------------------------------------------ maximal rank

/// Rows dominated by subgroups containing a maximal torus.
pub fn maximal_rank_blocks(rd: &RootDatum) -> Result<Vec<DominantRecord>> {
    let data = DescriptorFile::bundled();
    let group = data
        .group
        .iter()
        .find(|g| g.root_type.as_deref() == Some(rd.type_label.label()));
    let w = weyl_group(rd)?;
    let classes = reflection_subgroup_classes(rd, &w);
    let mut out = Vec::new();
    // largest R first
    for r in classes.iter().rev().filter(|c| c.is_reflection_group) {
        let name = group
            .and_then(|g| {
                data.maximal
                    .iter()
                    .find(|m| m.group == g.name && m.reflection_class == r.label)
            })
            .map_or_else(|| format!("H_e[{}]", r.label), |m| m.name.clone());
        let provenance = format!("reflection subgroup {}", r.label);
        let h_e = IdentityComponent {
            name,
            rank: 2,
            dim: 2 + r.roots_in(rd, &w).len(),
            maximal_torus: r.order == 1,
            provenance,
        };
        let fixed = fixed_sublattice(&r.representative, &w)?;
        let omega = &fixed.quotient;
        // for R = 1 the quotient is W itself, index for index
        let hd_classes: Vec<(ElemSet, String)> = if r.order == 1 {
            classes.iter().map(|c| (c.representative.clone(), c.label.clone())).collect()
        } else {
            subgroup_classes(omega)
                .into_iter()
                .map(|c| (c.representative, c.label))
                .collect()
        };
        for (hd, label) in hd_classes.iter().rev() {
            let mats = hd.iter().map(|q| fixed.action[q].clone()).collect();
            let rep = IntegralRep::new(fixed.rank(), mats)?;
            let profile = decompose_profile(&rep)?;
            let weyl = weyl_quotient(omega, &omega.full(), hd)?;
            out.push(DominantRecord::new(h_e.clone(), label.clone(), hd.len(), weyl.name, profile)?);
        }
    }
    sort_records(&mut out);
    Ok(out)
}

// ------------------------------------------------------------- lower rank

fn counting_classes() -> Result<&'static [CountingClass]> {
    static CACHE: OnceLock<Result<Vec<CountingClass>>> = OnceLock::new();
    CACHE
        .get_or_init(full_counting)
        .as_ref()
        .map(|v| v.as_slice())
        .map_err(Clone::clone)
}

/// A finite `H_d` in `W_G(H_e)` before its profile is attached.
struct Candidate {
    label: String,
    order: usize,
    weyl: String,
    /// contains elements acting on `Λ₀` by inversion
    inverting: bool,
    members: Vec<FamilyMember>,
    multiplicity: usize,
}

impl Candidate {
    fn single(label: &str, order: usize, weyl: String, inverting: bool) -> Self {
        Self {
            label: label.into(),
            order,
            weyl,
            inverting,
            members: Vec::new(),
            multiplicity: 1,
        }
    }
}

fn candidates(weyl_of_he: WeylOfHe) -> Result<Vec<Candidate>> {
    Ok(match weyl_of_he {
        WeylOfHe::Trivial => vec![Candidate::single("1", 1, "1".into(), false)],
        WeylOfHe::U1 => Vec::new(),
        WeylOfHe::C2 => {
            let c2 = CayleyTable::cyclic_group(2);
            let full = c2.full();
            vec![
                Candidate::single("1", 1, weyl_quotient(&c2, &full, &c2.trivial())?.name, false),
                Candidate::single("C_2", 2, weyl_quotient(&c2, &full, &full)?.name, true),
            ]
        }
        WeylOfHe::Sp1 => BinaryPolyhedral::ALL
            .iter()
            .map(|&b| {
                let m = NormalizerModel::new(b)?;
                Ok(Candidate::single(b.label(), b.order(), m.weyl()?.name, false))
            })
            .collect::<Result<_>>()?,
        WeylOfHe::SO3 => {
            let a5 = icosahedral_rotations()?;
            let o = octahedral_rotations()?;
            let s4 = o.group.table();
            let mut out = vec![Candidate::single(
                "A_5",
                60,
                weyl_quotient(a5.table(), &a5.table().full(), &a5.table().full())?.name,
                false,
            )];
            for (label, set) in [("S_4", s4.full()), ("A_4", o.tetrahedral.clone()), ("D_4", o.klein.clone())] {
                out.push(Candidate::single(label, set.len(), weyl_quotient(s4, &s4.full(), &set)?.name, false));
            }
            out
        }
        WeylOfHe::Sp1xC2 => {
            let classes = counting_classes()?;
            let mut out = Vec::new();
            for kind in CountingType::ALL {
                let fam: Vec<&CountingClass> = classes.iter().filter(|c| c.kind == kind).collect();
                let inverting = fam.first().is_some_and(|c| c.onto_c2);
                if fam.iter().any(|c| c.onto_c2 != inverting) {
                    return Err(Error::Classification(format!(
                        "family {} mixes actions on the circle",
                        kind.label()
                    )));
                }
                let members: Vec<FamilyMember> = fam
                    .iter()
                    .map(|c| FamilyMember {
                        name: c.descriptor(),
                        order: c.order,
                        weyl: c.weyl.name.clone(),
                    })
                    .collect();
                out.push(Candidate {
                    label: kind.label().into(),
                    order: fam.iter().map(|c| c.order).max().unwrap_or(0),
                    weyl: members
                        .iter()
                        .map(|m| m.weyl.as_str())
                        .collect::<Vec<_>>()
                        .join(", "),
                    inverting,
                    multiplicity: fam.len(),
                    members,
                });
            }
            out
        }
    })
}

/// Rows for one curated connected subgroup.
pub fn expand_descriptor(desc: &ConnectedSubgroupDescriptor) -> Result<Vec<DominantRecord>> {
    let h_e = IdentityComponent {
        name: desc.name.clone(),
        rank: desc.rank,
        dim: desc.dim,
        maximal_torus: desc.maximal_torus,
        provenance: desc.provenance.clone(),
    };
    candidates(desc.weyl_of_he)?
        .into_iter()
        .map(|c| {
            let profile = decompose_profile(&desc.lambda0.rep(c.inverting))?;
            let mut rec = DominantRecord::new(h_e.clone(), c.label.clone(), c.order, c.weyl, profile)?;
            rec.multiplicity = c.multiplicity;
            rec.members = c.members;
            rec.dominant = desc.dominant.get(&c.label).cloned();
            Ok(rec)
        })
        .collect()
}

fn connected_blocks(group: &str, rank: usize) -> Result<Vec<DominantRecord>> {
    let data = DescriptorFile::bundled();
    data.ambient(group)?;
    let mut out = Vec::new();
    for d in data.connected.iter().filter(|d| d.group == group && d.rank == rank) {
        out.extend(expand_descriptor(d)?);
    }
    sort_records(&mut out);
    Ok(out)
}

/// Rank-one rows of a rank-two group.
pub fn rank1_blocks(group: &str) -> Result<Vec<DominantRecord>> {
    rank_two_group(group)?;
    connected_blocks(group, 1)
}

fn finite_rows(group: &str) -> Result<Vec<DominantRecord>> {
    let h_e = IdentityComponent {
        name: "1".into(),
        rank: 0,
        dim: 0,
        maximal_torus: false,
        provenance: "finite subgroups".into(),
    };
    let mut out = Vec::new();
    for f in DescriptorFile::bundled().finite.iter().filter(|f| f.group == group) {
        let mut rec = DominantRecord::new(
            IdentityComponent {
                provenance: f.provenance.clone(),
                ..h_e.clone()
            },
            f.name.clone(),
            f.order.unwrap_or(0),
            f.weyl.clone().unwrap_or_else(|| "Various".into()),
            DecompositionProfile::point(),
        )?;
        rec.placeholder = f.placeholder;
        out.push(rec);
    }
    Ok(out)
}

// ------------------------------------------------------------------ tables

/// All rows for one ambient group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockTable {
    pub group: String,
    pub display: String,
    pub ambient_rank: usize,
    pub rows: Vec<DominantRecord>,
}

impl BlockTable {
    pub fn summary(&self) -> Summary {
        summary(self)
    }

    /// Rows other than placeholders.
    pub fn counted_rows(&self) -> impl Iterator<Item = &DominantRecord> {
        self.rows.iter().filter(|r| !r.placeholder)
    }

    pub fn find(&self, h_e: &str, h_d: &str) -> Option<&DominantRecord> {
        self.rows.iter().find(|r| r.h_e.name == h_e && r.h_d == h_d)
    }
}

fn sort_records(rows: &mut [DominantRecord]) {
    rows.sort_by_key(DominantRecord::order_key);
}

fn rank_two_group(group: &str) -> Result<(&'static AmbientGroup, RootDatum)> {
    let g = DescriptorFile::bundled().ambient(group)?;
    match g.root_type()? {
        Some(t) => Ok((g, build_root_datum(t))),
        None => Err(Error::UnknownGroup(format!("{group} (not of rank 2)"))),
    }
}

/// Block table of a rank-two group.
pub fn assemble_table(group: &str) -> Result<BlockTable> {
    let (g, rd) = rank_two_group(group)?;
    let mut rows = maximal_rank_blocks(&rd)?;
    rows.extend(rank1_blocks(group)?);
    rows.extend(finite_rows(group)?);
    sort_records(&mut rows);
    Ok(BlockTable {
        group: g.name.clone(),
        display: g.display.clone(),
        ambient_rank: 2,
        rows,
    })
}

/// Block table of a rank-one group.
pub fn rank1_ambient_table(group: &str) -> Result<BlockTable> {
    let g = DescriptorFile::bundled().ambient(group)?;
    if g.rank != 1 {
        return Err(Error::UnknownGroup(format!("{group} (not of rank 1)")));
    }
    let mut rows = connected_blocks(group, 1)?;
    rows.extend(connected_blocks(group, 0)?);
    rows.extend(finite_rows(group)?);
    sort_records(&mut rows);
    Ok(BlockTable {
        group: g.name.clone(),
        display: g.display.clone(),
        ambient_rank: 1,
        rows,
    })
}

/// Block table of any shipped group.
pub fn block_table(group: &str) -> Result<BlockTable> {
    match DescriptorFile::bundled().ambient(group)?.rank {
        2 => assemble_table(group),
        _ => rank1_ambient_table(group),
    }
}

// ------------------------------------------------------------------ summary

/// Numbers of toral, mixed and flat two-dimensional blocks.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Split {
    pub toral: usize,
    pub mixed: usize,
    pub flat: usize,
}

impl fmt::Display for Split {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{} m{} f{}", self.toral, self.mixed, self.flat)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankStats {
    pub rank: usize,
    /// number of rows of each block dimension
    pub rows_by_dim: BTreeMap<usize, usize>,
    /// the same, weighted by multiplicity
    pub classes_by_dim: BTreeMap<usize, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split: Option<Split>,
}

impl fmt::Display for RankStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rank {}:", self.rank)?;
        for (dim, count) in self.rows_by_dim.iter().rev() {
            write!(f, " {dim}^{count}")?;
        }
        if let Some(s) = &self.split {
            write!(f, " ({s})")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub ranks: Vec<RankStats>,
    pub line: String,
}

pub fn summary(table: &BlockTable) -> Summary {
    let mut ranks = Vec::new();
    for rank in (0..=table.ambient_rank).rev() {
        let rows: Vec<&DominantRecord> = table.counted_rows().filter(|r| r.rank() == rank).collect();
        if rows.is_empty() {
            continue;
        }
        let mut rows_by_dim = BTreeMap::new();
        let mut classes_by_dim = BTreeMap::new();
        let mut split = Split::default();
        for r in &rows {
            *rows_by_dim.entry(r.dimension()).or_insert(0) += 1;
            *classes_by_dim.entry(r.dimension()).or_insert(0) += r.multiplicity;
            if r.dimension() == 2 {
                match r.kind {
                    BlockKind::Toral => split.toral += 1,
                    BlockKind::Mixed => split.mixed += 1,
                    _ => split.flat += 1,
                }
            }
        }
        ranks.push(RankStats {
            rank,
            rows_by_dim,
            classes_by_dim,
            split: (table.ambient_rank == 2 && rank == 2).then_some(split),
        });
    }
    let line = ranks.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ");
    Summary { ranks, line }
}

// ------------------------------------------------------------------ regular lines

/// A line through the origin all of whose root restrictions are `0` or
/// `±c`, and that is perpendicular to no root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularLine {
    pub direction: Vector,
    /// index of its orbit under the Weyl group
    pub orbit: usize,
}

pub const REGULAR_SEARCH_HEIGHT: i64 = 4;

/// Regular rank-one candidates among primitive directions of height at most
/// [`REGULAR_SEARCH_HEIGHT`].
pub fn regular_rank1_check(rd: &RootDatum) -> Result<Vec<RegularLine>> {
    let w = weyl_group(rd)?;
    let h = REGULAR_SEARCH_HEIGHT;
    let mut lines: Vec<Vector> = Vec::new();
    for x in -h..=h {
        for y in -h..=h {
            let v = crate::lattice::primitive(&[x, y]);
            if (x, y) == (0, 0) || v != [x, y] || lines.contains(&v) {
                continue;
            }
            let pairings: Vec<i64> = rd.roots.iter().map(|a| rd.pairing(a, &v).abs()).collect();
            let regular = pairings.iter().all(|&p| p != 0);
            let values: std::collections::BTreeSet<i64> = pairings.into_iter().collect();
            if regular && values.len() == 1 {
                lines.push(v);
            }
        }
    }
    let mut orbit_of: Vec<usize> = Vec::new();
    let mut reps: Vec<Vector> = Vec::new();
    for v in &lines {
        let orbit = reps.iter().position(|r| {
            w.elements
                .iter()
                .any(|g| crate::lattice::primitive(&g.apply(r)) == *v)
        });
        orbit_of.push(orbit.unwrap_or_else(|| {
            reps.push(v.clone());
            reps.len() - 1
        }));
    }
    Ok(lines
        .into_iter()
        .zip(orbit_of)
        .map(|(direction, orbit)| RegularLine { direction, orbit })
        .collect())
}
