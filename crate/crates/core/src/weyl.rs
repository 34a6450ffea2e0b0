//! Integral root data of rank two and the subgroup classes of their Weyl
//! groups.
//!
//! All three types are realized on `Z^2` with an integral invariant form so
//! that every reflection is an integer matrix:
//!
//! | type    | roots                              | form                |
//! |---------|------------------------------------|---------------------|
//! | `A1xA1` | `±e1, ±e2`                         | `I`                 |
//! | `A2`    | `±e1, ±e2, ±(e1+e2)`               | `[[2,-1],[-1,2]]`   |
//! | `C2`    | long `±2e1, ±2e2`, short `±e1±e2`  | `I`                 |

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::subgroups::subgroup_classes;
use crate::group::{recognize, CayleyTable, ElemSet};
use crate::lattice::{fixed_lattice, IntMatrix};

/// The three rank-two root system types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RootType {
    A1xA1,
    A2,
    C2,
}

impl RootType {
    pub const ALL: [RootType; 3] = [RootType::A1xA1, RootType::A2, RootType::C2];

    pub fn label(self) -> &'static str {
        match self {
            RootType::A1xA1 => "A1xA1",
            RootType::A2 => "A2",
            RootType::C2 => "C2",
        }
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for RootType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A1xA1" | "A1×A1" | "D2" => Ok(RootType::A1xA1),
            "A2" => Ok(RootType::A2),
            "C2" | "B2" => Ok(RootType::C2),
            other => Err(Error::UnknownTypeLabel(other.to_string())),
        }
    }
}

pub type Vector = Vec<i64>;

/// Roots on the lattice `Z^2` with an invariant form.
#[derive(Clone, Debug, Serialize)]
pub struct RootDatum {
    pub type_label: RootType,
    pub lattice_rank: usize,
    pub roots: Vec<Vector>,
    pub positive_roots: Vec<Vector>,
    pub simple_roots: Vec<Vector>,
    pub invariant_form: IntMatrix,
}

pub fn build_root_datum(type_label: RootType) -> RootDatum {
    let (positive, simple, form): (Vec<Vector>, Vec<Vector>, IntMatrix) = match type_label {
        RootType::A1xA1 => (
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![1, 0], vec![0, 1]],
            IntMatrix::identity(2),
        ),
        RootType::A2 => (
            vec![vec![1, 0], vec![0, 1], vec![1, 1]],
            vec![vec![1, 0], vec![0, 1]],
            IntMatrix::from_rows(&[[2, -1], [-1, 2]]),
        ),
        RootType::C2 => (
            vec![vec![1, -1], vec![1, 1], vec![2, 0], vec![0, 2]],
            vec![vec![1, -1], vec![0, 2]],
            IntMatrix::identity(2),
        ),
    };
    let mut roots = Vec::new();
    for r in &positive {
        roots.push(r.clone());
        roots.push(r.iter().map(|x| -x).collect());
    }
    RootDatum {
        type_label,
        lattice_rank: 2,
        roots,
        positive_roots: positive,
        simple_roots: simple,
        invariant_form: form,
    }
}

/// Parses the label first; unknown labels are rejected.
pub fn root_datum(label: &str) -> Result<RootDatum> {
    Ok(build_root_datum(label.parse()?))
}

impl RootDatum {
    pub fn pairing(&self, u: &[i64], v: &[i64]) -> i64 {
        let bv = self.invariant_form.apply(v);
        u.iter().zip(&bv).map(|(a, b)| a * b).sum()
    }

    /// `s_α(v) = v - (2 B(α, v) / B(α, α)) α`, as an integer matrix.
    pub fn reflection(&self, alpha: &[i64]) -> Result<IntMatrix> {
        let n = self.lattice_rank;
        let aa = self.pairing(alpha, alpha);
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut e = vec![0; n];
            e[j] = 1;
            let num = 2 * self.pairing(alpha, &e);
            if num % aa != 0 {
                return Err(Error::Data(format!("reflection in {alpha:?} is not integral")));
            }
            let k = num / aa;
            cols.push(e.iter().zip(alpha).map(|(x, a)| x - k * a).collect());
        }
        Ok(IntMatrix::from_columns(n, &cols))
    }

    /// Squared length of the longest root.
    fn long_length(&self) -> i64 {
        self.roots.iter().map(|r| self.pairing(r, r)).max().unwrap_or(0)
    }

    pub fn is_long(&self, root: &[i64]) -> bool {
        self.pairing(root, root) == self.long_length()
    }

    /// Positive root whose reflection is `m`, if any.
    pub fn root_of_reflection(&self, m: &IntMatrix) -> Option<&Vector> {
        self.positive_roots
            .iter()
            .find(|a| self.reflection(a).is_ok_and(|s| s == *m))
    }
}

/// A finite group of integer matrices with its Cayley table.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    pub elements: Vec<IntMatrix>,
    pub generators: Vec<IntMatrix>,
    pub reflection_flags: Vec<bool>,
    table: CayleyTable,
}

impl MatrixGroup {
    pub fn from_generators(dim: usize, generators: Vec<IntMatrix>) -> Result<Self> {
        let (elements, table) = CayleyTable::generate(IntMatrix::identity(dim), &generators, |a, b| a * b)?;
        let reflection_flags = elements.iter().map(is_reflection).collect();
        Ok(Self {
            elements,
            generators,
            reflection_flags,
            table,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.elements[0].rows()
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn index_of(&self, m: &IntMatrix) -> Option<usize> {
        self.elements.iter().position(|x| x == m)
    }

    pub fn reflections(&self) -> ElemSet {
        ElemSet::from_indices(
            self.order(),
            (0..self.order()).filter(|&i| self.reflection_flags[i]),
        )
    }

    pub fn matrices(&self, s: &ElemSet) -> Vec<IntMatrix> {
        s.iter().map(|i| self.elements[i].clone()).collect()
    }

    /// `P g P^-1` for every element; `p` must be unimodular.
    pub fn conjugated_by(&self, p: &IntMatrix) -> Result<Self> {
        let inv = p
            .unimodular_inverse()
            .ok_or_else(|| Error::Data("conjugating matrix is not unimodular".into()))?;
        let conj = |g: &IntMatrix| &(p * g) * &inv;
        Ok(Self {
            elements: self.elements.iter().map(conj).collect(),
            generators: self.generators.iter().map(conj).collect(),
            reflection_flags: self.reflection_flags.clone(),
            table: self.table.clone(),
        })
    }
}

/// Determinant `-1` and order two: a reflection in a line.
pub fn is_reflection(m: &IntMatrix) -> bool {
    m.det() == -1 && (m * m).is_identity()
}

/// The group generated by the simple reflections.
pub fn weyl_group(rd: &RootDatum) -> Result<MatrixGroup> {
    let gens = rd
        .simple_roots
        .iter()
        .map(|a| rd.reflection(a))
        .collect::<Result<Vec<_>>>()?;
    MatrixGroup::from_generators(rd.lattice_rank, gens)
}

/// A conjugacy class of subgroups of a Weyl group.
#[derive(Clone, Debug, Serialize)]
pub struct WeylSubgroupClass {
    #[serde(skip)]
    pub representative: ElemSet,
    #[serde(skip)]
    pub conjugates: Vec<ElemSet>,
    pub order: usize,
    pub class_size: usize,
    pub is_reflection_group: bool,
    pub label: String,
}

impl WeylSubgroupClass {
    /// Roots `α` (positive and negative) with `s_α` in the representative.
    pub fn roots_in(&self, rd: &RootDatum, w: &MatrixGroup) -> Vec<Vector> {
        rd.roots
            .iter()
            .filter(|a| {
                rd.reflection(a)
                    .ok()
                    .and_then(|s| w.index_of(&s))
                    .is_some_and(|i| self.representative.contains(i))
            })
            .cloned()
            .collect()
    }
}

/// Every conjugacy class of subgroups of `w`, flagged and labelled, sorted by
/// `(order, label)`.
pub fn reflection_subgroup_classes(rd: &RootDatum, w: &MatrixGroup) -> Vec<WeylSubgroupClass> {
    let table = w.table();
    let refl = w.reflections();
    let mut out: Vec<WeylSubgroupClass> = subgroup_classes(table)
        .into_iter()
        .map(|c| {
            let gens = c.representative.intersection(&refl);
            let generated = table.closure(&gens.iter().collect::<Vec<_>>());
            let label = class_label(rd, w, &c.representative);
            WeylSubgroupClass {
                order: c.representative.len(),
                class_size: c.members.len(),
                is_reflection_group: generated == c.representative,
                conjugates: c.members,
                representative: c.representative,
                label,
            }
        })
        .collect();
    out.sort_by(|a, b| (a.order, &a.label).cmp(&(b.order, &b.label)));
    out
}

/// Canonical label of a subgroup of the Weyl group, fixed by which roots
/// generate it.
fn class_label(rd: &RootDatum, w: &MatrixGroup, s: &ElemSet) -> String {
    let n = s.len();
    if n == 1 {
        return "1".into();
    }
    let refl_roots: Vec<&Vector> = s
        .iter()
        .filter(|&i| w.reflection_flags[i])
        .filter_map(|i| rd.root_of_reflection(&w.elements[i]))
        .collect();
    let recognized = || {
        w.table()
            .subtable(s)
            .map(|(t, _)| recognize(&t).name)
            .unwrap_or_else(|_| crate::group::recognize::UNKNOWN.to_string())
    };
    if n == w.order() {
        return recognized();
    }
    match rd.type_label {
        RootType::C2 => {
            let prime = |r: &Vector| if rd.is_long(r) { "" } else { "'" };
            match (n, refl_roots.as_slice()) {
                (2, [r]) => format!("X{}", prime(r)),
                (2, []) => "C_2".into(),
                (4, [r, ..]) => format!("V{}", prime(r)),
                (4, []) => "C_4".into(),
                _ => recognized(),
            }
        }
        RootType::A1xA1 => match (n, refl_roots.as_slice()) {
            (2, [r]) if r[0] != 0 => "C_2^x".into(),
            (2, [_]) => "C_2^y".into(),
            (2, []) => "C_2^Δ".into(),
            _ => recognized(),
        },
        RootType::A2 => recognized(),
    }
}

/// The sublattice fixed by a subgroup `R`, with the action of `N_W(R)/R`.
#[derive(Clone, Debug)]
pub struct FixedLattice {
    /// saturated basis, as vectors of `Z^2`
    pub basis: Vec<Vector>,
    pub normalizer: ElemSet,
    /// `N_W(R)/R`
    pub quotient: CayleyTable,
    /// quotient index of each element of the normalizer (`usize::MAX` outside)
    pub quotient_map: Vec<usize>,
    /// action of each quotient element on `basis`
    pub action: Vec<IntMatrix>,
}

impl FixedLattice {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}

pub fn fixed_sublattice(r: &ElemSet, w: &MatrixGroup) -> Result<FixedLattice> {
    let table = w.table();
    let dim = w.dim();
    let (basis, completion) = fixed_lattice(&w.matrices(r), dim);
    let k = basis.len();
    let normalizer = table.normalizer(r);
    let (quotient, labels) = table.quotient(&normalizer, r)?;
    let mut action: Vec<Option<IntMatrix>> = vec![None; quotient.order()];
    let back = completion
        .unimodular_inverse()
        .expect("completion is unimodular");
    for g in normalizer.iter() {
        let q = labels[g];
        if action[q].is_some() {
            continue;
        }
        // coordinates of g(b_j) in the completed basis; the first k rows
        // describe the action on the fixed lattice
        let cols: Vec<Vector> = basis
            .iter()
            .map(|b| back.apply(&w.elements[g].apply(b))[..k].to_vec())
            .collect();
        action[q] = Some(if k == 0 {
            IntMatrix::zero(0, 0)
        } else {
            IntMatrix::from_columns(k, &cols)
        });
    }
    Ok(FixedLattice {
        basis,
        normalizer,
        quotient,
        quotient_map: labels,
        action: action.into_iter().map(|m| m.expect("every coset has a representative")).collect(),
    })
}
