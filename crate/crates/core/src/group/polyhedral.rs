//! Finite subgroups of `Sp(1)` and `SO(3)` as exact permutation models.
//!
//! The binary polyhedral groups are generated from unit quaternions whose
//! coordinates involve `1/2`, `1/sqrt 2` and the golden ratio. Those numbers
//! are reduced into a prime field where the needed square root exists
//! (`sqrt 2 = 3` in `F_7`, `sqrt 5 = 4` in `F_11`). The coordinates of the
//! 48 (resp. 120) elements stay pairwise distinct after reduction, so the
//! reduction is faithful; the tests check the resulting orders.
//!
//! The rotation groups `A_4 < S_4` and `A_5` are used through their
//! permutation actions on the four body diagonals of the cube and on the
//! five cubes inscribed in the dodecahedron.

use super::perm::{alternating_group, symmetric_group, PermGroup, Permutation};
use super::table::{CayleyTable, ElemSet};
use crate::error::Result;

/// Quaternion `w + x i + y j + z k` with coordinates in `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Quat {
    c: [u32; 4],
    p: u32,
}

impl Quat {
    pub fn new(p: u32, c: [i64; 4]) -> Self {
        let m = p as i64;
        Self {
            c: c.map(|v| v.rem_euclid(m) as u32),
            p,
        }
    }

    pub fn one(p: u32) -> Self {
        Self::new(p, [1, 0, 0, 0])
    }

    pub fn mul(&self, o: &Self) -> Self {
        let [a1, b1, c1, d1] = self.c.map(|v| v as i64);
        let [a2, b2, c2, d2] = o.c.map(|v| v as i64);
        Self::new(
            self.p,
            [
                a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
            ],
        )
    }

    pub fn norm(&self) -> u32 {
        let s: u64 = self.c.iter().map(|&v| v as u64 * v as u64).sum();
        (s % self.p as u64) as u32
    }
}

/// A finite quaternion group with its regular permutation model.
#[derive(Clone, Debug)]
pub struct QuaternionGroup {
    pub group: PermGroup,
    table: CayleyTable,
    quats: Vec<Quat>,
    /// permutation-group index of each table index
    to_group: Vec<usize>,
}

impl QuaternionGroup {
    fn generate(name: &str, p: u32, gens: &[[i64; 4]]) -> Result<Self> {
        let gens: Vec<Quat> = gens.iter().map(|&c| Quat::new(p, c)).collect();
        let (quats, table) = CayleyTable::generate(Quat::one(p), &gens, |a, b| a.mul(b))?;
        let group = PermGroup::regular(&table)?.with_name(name);
        let n = table.order();
        let to_group = (0..n)
            .map(|g| {
                let perm = Permutation::new((0..n).map(|x| table.mul(g, x)).collect())?;
                Ok(group.index_of(&perm).expect("left translation lies in the regular group"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            group,
            table,
            quats,
            to_group,
        })
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn quaternions(&self) -> &[Quat] {
        &self.quats
    }

    /// Subgroup generated by the given quaternions (coordinates as in the
    /// constructor's field), in permutation-group indices.
    pub fn subgroup(&self, gens: &[[i64; 4]]) -> ElemSet {
        let p = self.quats[0].p;
        let idx: Vec<usize> = gens
            .iter()
            .map(|&c| {
                let q = Quat::new(p, c);
                let t = self.quats.iter().position(|x| *x == q).expect("generator in group");
                self.to_group[t]
            })
            .collect();
        self.group.table().closure(&idx)
    }

    /// Table of the subgroup generated by `gens`, as an abstract group.
    pub fn subgroup_table(&self, gens: &[[i64; 4]]) -> CayleyTable {
        let s = self.subgroup(gens);
        self.group.table().subtable(&s).expect("closure is a subgroup").0
    }

    pub fn quaternion_table(&self) -> &CayleyTable {
        &self.table
    }
}

const P_OCT: u32 = 7;
// 1/2 = 4 and 1/sqrt 2 = 5 in F_7
const OCT_ROOT: [i64; 4] = [5, 5, 0, 0]; // (1 + i)/sqrt 2
const HURWITZ: [i64; 4] = [4, 4, 4, 4]; // (1 + i + j + k)/2
const I: [i64; 4] = [0, 1, 0, 0];
const J: [i64; 4] = [0, 0, 1, 0];

/// The binary octahedral group `2O` (order 48) with its subgroups `2T` and
/// `Q_8`.
#[derive(Clone, Debug)]
pub struct BinaryOctahedral {
    pub quaternions: QuaternionGroup,
    pub binary_tetrahedral: ElemSet,
    pub q8: ElemSet,
}

impl BinaryOctahedral {
    pub fn group(&self) -> &PermGroup {
        &self.quaternions.group
    }

    pub fn q8_table(&self) -> CayleyTable {
        self.quaternions.subgroup_table(&[I, J])
    }
}

pub fn binary_octahedral() -> Result<BinaryOctahedral> {
    let quaternions = QuaternionGroup::generate("2O", P_OCT, &[OCT_ROOT, HURWITZ])?;
    let binary_tetrahedral = quaternions.subgroup(&[I, HURWITZ]);
    let q8 = quaternions.subgroup(&[I, J]);
    Ok(BinaryOctahedral {
        quaternions,
        binary_tetrahedral,
        q8,
    })
}

const P_ICO: u32 = 11;
// 1/2 = 6, phi = 8, phi^-1 = 7 in F_11; phi/2 = 4, phi^-1/2 = 9
const ICOSIAN: [i64; 4] = [4, 9, 6, 0]; // (phi + phi^-1 i + j)/2
const HURWITZ_11: [i64; 4] = [6, 6, 6, 6];

/// The binary icosahedral group `2I` (order 120).
pub fn binary_icosahedral() -> Result<QuaternionGroup> {
    QuaternionGroup::generate("2I", P_ICO, &[HURWITZ_11, ICOSIAN])
}

/// Rotation group of the cube as `S_4` on the body diagonals, with `A_4`
/// and the normal Klein four-group (the rotations by pi about coordinate
/// axes).
#[derive(Clone, Debug)]
pub struct Octahedral {
    pub group: PermGroup,
    pub tetrahedral: ElemSet,
    pub klein: ElemSet,
}

pub fn octahedral_rotations() -> Result<Octahedral> {
    let group = symmetric_group(4)?.with_name("S_4");
    let tetrahedral = group.embed(&alternating_group(4)?)?;
    let klein = group.subgroup_generated(&[
        Permutation::from_cycles(4, &[&[0, 1], &[2, 3]])?,
        Permutation::from_cycles(4, &[&[0, 2], &[1, 3]])?,
    ])?;
    Ok(Octahedral {
        group,
        tetrahedral,
        klein,
    })
}

/// Rotation group of the icosahedron as `A_5`.
pub fn icosahedral_rotations() -> Result<PermGroup> {
    Ok(alternating_group(5)?.with_name("A_5"))
}

/// `SL(2,5)` acting on the 24 nonzero vectors of `F_5^2`.
pub fn sl2_f5() -> Result<PermGroup> {
    let vectors: Vec<[i64; 2]> = (0..25).map(|i| [i / 5, i % 5]).filter(|v| *v != [0, 0]).collect();
    let act = |m: [[i64; 2]; 2]| {
        let images = vectors
            .iter()
            .map(|v| {
                let w = [0, 1].map(|r| (m[r][0] * v[0] + m[r][1] * v[1]).rem_euclid(5));
                vectors.iter().position(|u| *u == w).expect("nonzero vector")
            })
            .collect();
        Permutation::new(images)
    };
    let gens = vec![act([[1, 1], [0, 1]])?, act([[0, 4], [1, 0]])?];
    Ok(PermGroup::from_generators(24, gens)?.with_name("SL(2,5)"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_octahedral_orders() {
        let o = binary_octahedral().unwrap();
        assert_eq!(o.group().order(), 48);
        assert_eq!(o.binary_tetrahedral.len(), 24);
        assert_eq!(o.q8.len(), 8);
        assert!(o.quaternions.quaternions().iter().all(|q| q.norm() == 1));
    }

    #[test]
    fn binary_icosahedral_order() {
        let g = binary_icosahedral().unwrap();
        assert_eq!(g.order(), 120);
        assert!(g.quaternions().iter().all(|q| q.norm() == 1));
        // unique involution: the central -1
        let t = g.quaternion_table();
        assert_eq!((0..120).filter(|&x| t.elem_order(x) == 2).count(), 1);
    }

    #[test]
    fn klein_is_normal_in_s4() {
        let o = octahedral_rotations().unwrap();
        let t = o.group.table();
        assert_eq!(o.klein.len(), 4);
        assert!(t.is_normal_in(&o.klein, &t.full()));
        assert_eq!(o.tetrahedral.len(), 12);
    }

    #[test]
    fn sl2_f5_is_perfect_of_order_120() {
        let g = sl2_f5().unwrap();
        assert_eq!(g.order(), 120);
        assert_eq!(g.table().derived_subgroup_of(&g.table().full()).len(), 120);
        assert!(crate::group::index2_kernels(g.table()).is_empty());
    }
}
