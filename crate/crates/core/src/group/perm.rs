//! Permutations and materialized permutation groups.

use std::collections::HashMap;
use std::fmt;

use super::table::{CayleyTable, ElemSet};
use crate::error::{Error, Result};

/// A bijection of `{0, .., n-1}`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n as u16).collect(),
        }
    }

    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[i] = true;
        }
        Ok(Self {
            images: images.into_iter().map(|i| i as u16).collect(),
        })
    }

    /// Builds a permutation of degree `n` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= n {
                    return Err(Error::InvalidPermutation(format!("point {a} out of range")));
                }
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// `self` followed by `other` (act with `self` first).
    pub fn then(&self, other: &Self) -> Self {
        Self {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u16; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u16;
        }
        Self { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// Restriction to the first `k` points; `None` if they are not preserved.
    pub fn restrict(&self, k: usize) -> Option<Self> {
        let images = self.images[..k].to_vec();
        images.iter().all(|&j| (j as usize) < k).then_some(Self { images })
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut any = false;
        for start in 0..self.degree() {
            if seen[start] || self.image(start) == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{i}")?;
                first = false;
                i = self.image(i);
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// A permutation group with all of its elements materialized.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    table: CayleyTable,
    pub name_hint: Option<String>,
}

impl PermGroup {
    /// Closes the generators. Fails with a capacity error past
    /// [`MAX_ORDER`](super::table::MAX_ORDER) elements.
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::InvalidPermutation(format!(
                "generator of degree {} in a group of degree {degree}",
                g.degree()
            )));
        }
        let (elements, table) =
            CayleyTable::generate(Permutation::identity(degree), &generators, |a, b| a.then(b))?;
        let index = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Ok(Self {
            degree,
            generators,
            elements,
            index,
            table,
            name_hint: None,
        })
    }

    /// Left-regular action of an abstract group on its own elements.
    pub fn regular(table: &CayleyTable) -> Result<Self> {
        let n = table.order();
        let perm = |g: usize| Permutation::new((0..n).map(|x| table.mul(g, x)).collect());
        let perms = minimal_generators(table, &table.full())
            .into_iter()
            .map(perm)
            .collect::<Result<Vec<_>>>()?;
        Self::from_generators(n, perms)
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name_hint = Some(name.to_string());
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    /// Subgroup generated by the given permutations, as a subset of `self`.
    pub fn subgroup_generated(&self, gens: &[Permutation]) -> Result<ElemSet> {
        let idx = gens
            .iter()
            .map(|p| {
                self.index_of(p)
                    .ok_or_else(|| Error::InvalidPermutation(format!("{p:?} is not in the group")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.table.closure(&idx))
    }

    /// The subgroup `s` as a permutation group in its own right.
    pub fn subgroup_as_group(&self, s: &ElemSet) -> Result<PermGroup> {
        let gens = minimal_generators(&self.table, s)
            .into_iter()
            .map(|i| self.elements[i].clone())
            .collect();
        PermGroup::from_generators(self.degree, gens)
    }

    /// Indices in `self` of the elements of a group on the same points.
    pub fn embed(&self, sub: &PermGroup) -> Result<ElemSet> {
        let mut s = ElemSet::empty(self.order());
        for p in sub.elements() {
            let i = self
                .index_of(p)
                .ok_or_else(|| Error::InvalidPermutation(format!("{p:?} is not in the group")))?;
            s.insert(i);
        }
        Ok(s)
    }
}

/// A greedy generating set for the subgroup `s`.
pub fn minimal_generators(table: &CayleyTable, s: &ElemSet) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = table.trivial();
    // prefer high-order elements so few generators are needed
    let mut elems: Vec<usize> = s.iter().collect();
    elems.sort_by_key(|&g| (std::cmp::Reverse(table.elem_order(g)), g));
    for g in elems {
        if !span.contains(g) {
            gens.push(g);
            span = table.closure(&gens);
        }
    }
    gens
}

/// Symmetric group on `n` points.
pub fn symmetric_group(n: usize) -> Result<PermGroup> {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::from_cycles(n, &[&[0, 1]])?);
    }
    if n >= 3 {
        let cycle: Vec<usize> = (0..n).collect();
        gens.push(Permutation::from_cycles(n, &[&cycle])?);
    }
    Ok(PermGroup::from_generators(n, gens)?.with_name(&format!("S_{n}")))
}

/// Alternating group on `n >= 3` points.
pub fn alternating_group(n: usize) -> Result<PermGroup> {
    let gens = (2..n)
        .map(|k| Permutation::from_cycles(n, &[&[0, 1, k]]))
        .collect::<Result<Vec<_>>>()?;
    Ok(PermGroup::from_generators(n, gens)?.with_name(&format!("A_{n}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn composition_order() {
        let a = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.then(&b).image(0), 2);
        assert!(a.then(&a.inverse()).is_identity());
    }

    #[test]
    fn small_symmetric_and_alternating() {
        assert_eq!(symmetric_group(4).unwrap().order(), 24);
        assert_eq!(alternating_group(4).unwrap().order(), 12);
        assert_eq!(alternating_group(5).unwrap().order(), 60);
    }

    #[test]
    fn regular_representation_of_q8() {
        let q8 = super::super::polyhedral::binary_octahedral().unwrap().q8_table();
        let g = PermGroup::regular(&q8).unwrap();
        assert_eq!(g.degree(), 8);
        assert_eq!(g.order(), 8);
    }

    #[test]
    fn capacity_error_for_s6() {
        assert!(matches!(symmetric_group(6), Err(Error::Capacity { .. })));
    }
}
