//! Block shapes and finite poset models of them.
//!
//! A block is modelled by its shape only. The finite approximation keeps `n`
//! minimal points of each line together with its generic or limit point, and
//! the specialization order is the cotoral order: a point lies below another
//! when the first subgroup is normal in the second with torus quotient.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Add;

use serde::Serialize;

use crate::blocks::{classify_block_kind, BlockKind, BlockTable, DominantRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum BlockShape {
    Point,
    /// homeomorphic to `spec(Z)`: closed points under one generic point
    CotoralLine,
    /// one point compactification of a discrete set, with no inclusions
    FlatLine,
    Dim2 { a: usize, b: usize, kind: BlockKind },
}

impl BlockShape {
    pub fn dimension(self) -> usize {
        match self {
            BlockShape::Point => 0,
            BlockShape::CotoralLine | BlockShape::FlatLine => 1,
            BlockShape::Dim2 { a, b, .. } => a + b,
        }
    }

    /// `(cotoral, flat)` line factors.
    fn factors(self) -> (usize, usize) {
        match self {
            BlockShape::Point => (0, 0),
            BlockShape::CotoralLine => (1, 0),
            BlockShape::FlatLine => (0, 1),
            BlockShape::Dim2 { a, b, .. } => (a, b),
        }
    }
}

impl fmt::Display for BlockShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockShape::Point => f.write_str("point"),
            BlockShape::CotoralLine => f.write_str("cotoral line"),
            BlockShape::FlatLine => f.write_str("flat line"),
            BlockShape::Dim2 { a, b, kind } => write!(f, "{kind} surface {a}+{b}"),
        }
    }
}

/// Shape of a row, or `None` if its profile has no shape.
pub fn shape_of(record: &DominantRecord) -> Option<BlockShape> {
    match (record.profile.a, record.profile.b) {
        (0, 0) => Some(BlockShape::Point),
        (1, 0) => Some(BlockShape::CotoralLine),
        (0, 1) => Some(BlockShape::FlatLine),
        (a, b) if a + b == 2 => Some(BlockShape::Dim2 { a, b, kind: record.kind }),
        _ => None,
    }
}

/// A finite poset standing in for a block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteSpectralApprox {
    pub points: Vec<String>,
    /// covering pairs `(lower, upper)` of the specialization order
    pub relation: Vec<(usize, usize)>,
    pub limit_point: Option<usize>,
}

impl FiniteSpectralApprox {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `le[i][j]` iff point `i` lies below point `j`.
    pub fn order(&self) -> Vec<Vec<bool>> {
        let n = self.len();
        let mut le = vec![vec![false; n]; n];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(i, j) in &self.relation {
            le[i][j] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if le[i][k] {
                    for j in 0..n {
                        if le[k][j] {
                            le[i][j] = true;
                        }
                    }
                }
            }
        }
        le
    }

    /// Smallest down-closed set containing `set` (bit `i` for point `i`).
    pub fn down_closure(&self, set: u64, le: &[Vec<bool>]) -> u64 {
        let mut out = set;
        for j in 0..self.len() {
            if set >> j & 1 == 1 {
                continue;
            }
            if (0..self.len()).any(|i| set >> i & 1 == 1 && le[j][i]) {
                out |= 1 << j;
            }
        }
        out
    }
}

/// Largest poset for which every subset is checked.
pub const MAX_CHECKED_POINTS: usize = 9;

fn line(cotoral: bool, n: usize) -> FiniteSpectralApprox {
    let mut points: Vec<String> = (1..=n).map(|i| format!("p{i}")).collect();
    if cotoral {
        points.push("generic".into());
        FiniteSpectralApprox {
            relation: (0..n).map(|i| (i, n)).collect(),
            points,
            limit_point: None,
        }
    } else {
        points.push("limit".into());
        FiniteSpectralApprox {
            points,
            relation: Vec::new(),
            limit_point: Some(n),
        }
    }
}

fn product(x: &FiniteSpectralApprox, y: &FiniteSpectralApprox) -> FiniteSpectralApprox {
    let m = y.len();
    let mut points = Vec::with_capacity(x.len() * m);
    for p in &x.points {
        for q in &y.points {
            points.push(format!("{p}×{q}"));
        }
    }
    let mut relation = Vec::new();
    for &(i, j) in &x.relation {
        for k in 0..m {
            relation.push((i * m + k, j * m + k));
        }
    }
    for i in 0..x.len() {
        for &(k, l) in &y.relation {
            relation.push((i * m + k, i * m + l));
        }
    }
    relation.sort_unstable();
    let limit_point = match (x.limit_point, y.limit_point) {
        (None, None) => None,
        (a, b) => {
            let top = |s: &FiniteSpectralApprox, l: Option<usize>| l.unwrap_or(s.len() - 1);
            Some(top(x, a) * m + top(y, b))
        }
    };
    FiniteSpectralApprox {
        points,
        relation,
        limit_point,
    }
}

/// Skeleton with `n` minimal points per line factor.
pub fn finite_approximation(shape: BlockShape, n: usize) -> FiniteSpectralApprox {
    let n = n.max(1);
    let (a, b) = shape.factors();
    let mut out = FiniteSpectralApprox {
        points: vec!["*".into()],
        relation: Vec::new(),
        limit_point: None,
    };
    for cotoral in std::iter::repeat_n(true, a).chain(std::iter::repeat_n(false, b)) {
        out = product(&out, &line(cotoral, n));
    }
    if a + b > 0 {
        out.points = out.points.into_iter().map(|p| p.trim_start_matches("*×").to_string()).collect();
    }
    out
}

// ------------------------------------------------------------------ counts

/// Multiplicity-weighted block counts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DimensionCounts {
    pub by_dim: BTreeMap<usize, usize>,
    pub by_kind: BTreeMap<usize, BTreeMap<BlockKind, usize>>,
    /// blocks whose dominant subgroup has positive dimension
    pub infinite_dominated: BTreeMap<usize, usize>,
}

impl DimensionCounts {
    pub fn get(&self, dim: usize) -> usize {
        self.by_dim.get(&dim).copied().unwrap_or(0)
    }

    pub fn kind(&self, dim: usize, kind: BlockKind) -> usize {
        self.by_kind.get(&dim).and_then(|m| m.get(&kind)).copied().unwrap_or(0)
    }

    pub fn infinite(&self, dim: usize) -> usize {
        self.infinite_dominated.get(&dim).copied().unwrap_or(0)
    }

    fn record(&mut self, r: &DominantRecord) {
        let d = r.dimension();
        *self.by_dim.entry(d).or_insert(0) += r.multiplicity;
        *self.by_kind.entry(d).or_default().entry(r.kind).or_insert(0) += r.multiplicity;
        if r.h_e.dim > 0 {
            *self.infinite_dominated.entry(d).or_insert(0) += r.multiplicity;
        }
    }
}

impl Add for DimensionCounts {
    type Output = DimensionCounts;
    fn add(mut self, other: DimensionCounts) -> DimensionCounts {
        for (d, c) in other.by_dim {
            *self.by_dim.entry(d).or_insert(0) += c;
        }
        for (d, m) in other.by_kind {
            let mine = self.by_kind.entry(d).or_default();
            for (k, c) in m {
                *mine.entry(k).or_insert(0) += c;
            }
        }
        for (d, c) in other.infinite_dominated {
            *self.infinite_dominated.entry(d).or_insert(0) += c;
        }
        self
    }
}

pub fn count_rows<'a>(rows: impl IntoIterator<Item = &'a DominantRecord>) -> DimensionCounts {
    let mut out = DimensionCounts::default();
    for r in rows.into_iter().filter(|r| !r.placeholder) {
        out.record(r);
    }
    out
}

pub fn count_by_dimension(table: &BlockTable) -> DimensionCounts {
    count_rows(&table.rows)
}

// ------------------------------------------------------------------ verification

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    MissingShape,
    DimensionMismatch,
    KindMismatch,
    ModelMismatch,
    NotPartialOrder,
    ClosureNotIdempotent,
    NotTopology,
    LineStructure,
    OverlappingBlocks,
    HistogramMismatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// row index, when the violation concerns one row
    pub row: Option<usize>,
    pub kind: ViolationKind,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralReport {
    pub group: String,
    pub blocks: usize,
    pub counts: DimensionCounts,
    pub violations: Vec<Violation>,
}

impl SpectralReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Minimal points kept per line when checking a table.
pub const CHECK_POINTS: usize = 3;

/// Points per line for `shape`, small enough for every subset to be checked.
pub fn check_points(shape: BlockShape) -> usize {
    (1..=CHECK_POINTS)
        .rev()
        .find(|n| (n + 1).pow(shape.dimension() as u32) <= MAX_CHECKED_POINTS)
        .unwrap_or(1)
}

pub fn verify_spectral_partition(table: &BlockTable) -> SpectralReport {
    let mut violations = Vec::new();
    let mut push = |row: Option<usize>, kind, detail: String| violations.push(Violation { row, kind, detail });
    let mut shapes = BTreeSet::new();
    let mut labels = BTreeSet::new();

    for (i, r) in table.rows.iter().enumerate() {
        let Some(shape) = shape_of(r) else {
            push(Some(i), ViolationKind::MissingShape, format!("{} has profile {}", r.pair(), r.profile.notation()));
            continue;
        };
        shapes.insert(shape);
        if shape.dimension() != r.profile.a + r.profile.b {
            push(Some(i), ViolationKind::DimensionMismatch, format!("{} is a {shape}", r.pair()));
        }
        match classify_block_kind(&r.profile, &r.h_e) {
            Ok(k) if k == r.kind => {}
            Ok(k) => push(Some(i), ViolationKind::KindMismatch, format!("{}: {} recorded, {k} computed", r.pair(), r.kind)),
            Err(e) => push(Some(i), ViolationKind::KindMismatch, format!("{}: {e}", r.pair())),
        }
        if r.model_label != r.kind.model_label() {
            push(
                Some(i),
                ViolationKind::ModelMismatch,
                format!("{}: model {} for a {} block", r.pair(), r.model_label, r.kind),
            );
        }
        for p in finite_approximation(shape, check_points(shape)).points {
            if !labels.insert(format!("{}#{p}", r.pair())) {
                push(Some(i), ViolationKind::OverlappingBlocks, format!("{} listed twice", r.pair()));
                break;
            }
        }
    }

    for shape in shapes {
        for (kind, detail) in check_skeleton(shape, &finite_approximation(shape, check_points(shape))) {
            push(None, kind, format!("{shape}: {detail}"));
        }
    }

    let counts = count_by_dimension(table);
    let mut from_summary = BTreeMap::new();
    for stats in table.summary().ranks {
        for (d, c) in stats.classes_by_dim {
            *from_summary.entry(d).or_insert(0) += c;
        }
    }
    if from_summary != counts.by_dim {
        push(
            None,
            ViolationKind::HistogramMismatch,
            format!("summary {from_summary:?}, blocks {:?}", counts.by_dim),
        );
    }

    SpectralReport {
        group: table.group.clone(),
        blocks: table.counted_rows().map(|r| r.multiplicity).sum(),
        counts,
        violations,
    }
}

/// Order axioms, closure and line structure of one skeleton.
pub fn check_skeleton(shape: BlockShape, s: &FiniteSpectralApprox) -> Vec<(ViolationKind, String)> {
    let mut out = Vec::new();
    let n = s.len();
    let le = s.order();
    for i in 0..n {
        for j in 0..n {
            if i != j && le[i][j] && le[j][i] {
                out.push((ViolationKind::NotPartialOrder, format!("{} and {} are equivalent", s.points[i], s.points[j])));
            }
        }
    }

    if n <= MAX_CHECKED_POINTS {
        let full: u64 = (1u64 << n) - 1;
        let mut closed = Vec::new();
        for set in 0..=full {
            let c = s.down_closure(set, &le);
            if s.down_closure(c, &le) != c {
                out.push((ViolationKind::ClosureNotIdempotent, format!("closure of {set:#b}")));
                break;
            }
            if c == set {
                closed.push(set);
            }
        }
        let is_closed = |x: u64| s.down_closure(x, &le) == x;
        if !is_closed(0) || !is_closed(full) {
            out.push((ViolationKind::NotTopology, "empty or full set not closed".into()));
        }
        'pairs: for &x in &closed {
            for &y in &closed {
                if !is_closed(x | y) || !is_closed(x & y) {
                    out.push((ViolationKind::NotTopology, format!("{x:#b} and {y:#b}")));
                    break 'pairs;
                }
            }
        }
    }

    match shape {
        BlockShape::CotoralLine => {
            let generic = n - 1;
            if !(0..generic).all(|i| le[i][generic]) || s.limit_point.is_some() {
                out.push((ViolationKind::LineStructure, "closed points not below the generic point".into()));
            }
        }
        BlockShape::FlatLine if !s.relation.is_empty() || s.limit_point.is_none() => {
            out.push((ViolationKind::LineStructure, "flat line with cotoral inclusions".into()));
        }
        _ => {}
    }
    let (a, b) = shape.factors();
    if a + b > 0 {
        // graded layers: the height of a point is its number of generic coordinates
        let max_height = (0..n).map(|j| (0..n).filter(|&i| i != j && le[i][j]).count()).max().unwrap_or(0);
        if (max_height > 0) != (a > 0) {
            out.push((ViolationKind::LineStructure, format!("height {max_height} with {a} cotoral factors")));
        }
    }
    out
}
