//! Rational decomposition of small integral representations.
//!
//! A finite group acting on `Z^d` (`d <= 2`) splits over `Q` into `a` trivial
//! summands and `b` nontrivial simple summands. The block attached to the
//! representation has dimension `a + b`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::CayleyTable;
use crate::lattice::{fixed_lattice, integer_kernel, IntMatrix};

pub const MAX_DIM: usize = 2;

/// A finite group of `dim × dim` integer matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegralRep {
    pub dim: usize,
    pub group_elements: Vec<IntMatrix>,
}

impl IntegralRep {
    /// Validates closure and determinants; the identity is added if missing.
    pub fn new(dim: usize, mut group_elements: Vec<IntMatrix>) -> Result<Self> {
        let id = IntMatrix::identity(dim);
        if !group_elements.contains(&id) {
            group_elements.insert(0, id);
        }
        for g in &group_elements {
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::Data(format!("matrix {g} is not {dim}×{dim}")));
            }
            if dim > 0 && g.det().abs() != 1 {
                return Err(Error::Data(format!("matrix {g} is not invertible over Z")));
            }
        }
        for g in &group_elements {
            for h in &group_elements {
                if !group_elements.contains(&(g * h)) {
                    return Err(Error::Data("matrices are not closed under product".into()));
                }
            }
        }
        Ok(Self { dim, group_elements })
    }

    /// Group generated by `gens`.
    pub fn generated(dim: usize, gens: &[IntMatrix]) -> Result<Self> {
        let (elements, _) = CayleyTable::generate(IntMatrix::identity(dim), gens, |a, b| a * b)?;
        Ok(Self {
            dim,
            group_elements: elements,
        })
    }

    pub fn trivial(dim: usize) -> Self {
        Self {
            dim,
            group_elements: vec![IntMatrix::identity(dim)],
        }
    }

    pub fn order(&self) -> usize {
        self.group_elements.len()
    }

    /// `P g P^-1` for each element.
    pub fn conjugated_by(&self, p: &IntMatrix) -> Result<Self> {
        let inv = p
            .unimodular_inverse()
            .ok_or_else(|| Error::Data("conjugating matrix is not unimodular".into()))?;
        Ok(Self {
            dim: self.dim,
            group_elements: self.group_elements.iter().map(|g| &(p * g) * &inv).collect(),
        })
    }
}

/// One rational simple summand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Summand {
    Trivial,
    /// a nontrivial character, with its value on each group element
    SignCharacter { values: Vec<i64> },
    /// two-dimensional, irreducible over `Q`
    TwoDimSimple,
}

impl Summand {
    pub fn dim(&self) -> usize {
        match self {
            Summand::Trivial | Summand::SignCharacter { .. } => 1,
            Summand::TwoDimSimple => 2,
        }
    }

    pub fn describe(&self) -> &'static str {
        match self {
            Summand::Trivial => "trivial",
            Summand::SignCharacter { .. } => "sign character",
            Summand::TwoDimSimple => "2-dim simple",
        }
    }
}

/// `a` trivial summands and `b` nontrivial simple summands, counted with
/// multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionProfile {
    pub a: usize,
    pub b: usize,
    pub summands: Vec<Summand>,
}

impl DecompositionProfile {
    pub fn point() -> Self {
        Self {
            a: 0,
            b: 0,
            summands: Vec::new(),
        }
    }

    pub fn from_pair(a: usize, b: usize) -> Self {
        let mut summands = vec![Summand::Trivial; a];
        summands.extend(std::iter::repeat_n(Summand::SignCharacter { values: Vec::new() }, b));
        Self { a, b, summands }
    }

    pub fn dimension(&self) -> usize {
        self.a + self.b
    }

    /// `"a+b"`, or `"0"` for a point.
    pub fn notation(&self) -> String {
        if self.a == 0 && self.b == 0 {
            "0".into()
        } else {
            format!("{}+{}", self.a, self.b)
        }
    }
}

/// Rank of the common fixed lattice, with a saturated basis of it.
pub fn fixed_dim(rep: &IntegralRep) -> (usize, Vec<Vec<i64>>) {
    if rep.dim == 0 {
        return (0, Vec::new());
    }
    let (basis, _) = fixed_lattice(&rep.group_elements, rep.dim);
    (basis.len(), basis)
}

pub fn decompose_profile(rep: &IntegralRep) -> Result<DecompositionProfile> {
    if rep.dim > MAX_DIM {
        return Err(Error::UnsupportedRank(rep.dim));
    }
    let (a, _) = fixed_dim(rep);
    let mut summands = vec![Summand::Trivial; a];
    match rep.dim - a {
        0 => {}
        // the complement is a line, and det is its character
        1 => summands.push(Summand::SignCharacter {
            values: rep.group_elements.iter().map(IntMatrix::det).collect(),
        }),
        _ => match common_eigenlines(rep) {
            Some(lines) => {
                for v in lines {
                    summands.push(Summand::SignCharacter {
                        values: rep.group_elements.iter().map(|g| eigenvalue(g, &v)).collect(),
                    });
                }
            }
            None => summands.push(Summand::TwoDimSimple),
        },
    }
    let b = summands.len() - a;
    Ok(DecompositionProfile { a, b, summands })
}

pub fn block_dimension(profile: &DecompositionProfile) -> (usize, usize) {
    (profile.a, profile.b)
}

/// For a two-dimensional action with no fixed vector: two independent lines
/// preserved by every element, if they exist.
///
/// A non-scalar element of finite order with a rational eigenvalue has
/// eigenvalues `1` and `-1`, so any common invariant line is one of its two
/// eigenlines.
fn common_eigenlines(rep: &IntegralRep) -> Option<[Vec<i64>; 2]> {
    let id = IntMatrix::identity(2);
    let Some(g) = rep
        .group_elements
        .iter()
        .find(|g| **g != id && **g != id.scale(-1))
    else {
        // only ±I
        return Some([vec![1, 0], vec![0, 1]]);
    };
    let plus = eigenline(g, 1)?;
    let minus = eigenline(g, -1)?;
    let preserved = |v: &Vec<i64>| rep.group_elements.iter().all(|h| is_eigenvector(h, v));
    (preserved(&plus) && preserved(&minus)).then_some([plus, minus])
}

fn eigenline(g: &IntMatrix, lambda: i64) -> Option<Vec<i64>> {
    let (k, _) = integer_kernel(&g.sub(&IntMatrix::identity(g.rows()).scale(lambda)));
    k.into_iter().next()
}

fn is_eigenvector(g: &IntMatrix, v: &[i64]) -> bool {
    let w = g.apply(v);
    w == v || w.iter().zip(v).all(|(x, y)| *x == -y)
}

fn eigenvalue(g: &IntMatrix, v: &[i64]) -> i64 {
    if g.apply(v) == v {
        1
    } else {
        -1
    }
}
