//! Finite groups as materialized multiplication tables.
//!
//! Every concrete group in the crate (permutation groups, integral matrix
//! groups, quotients) is reduced to a [`CayleyTable`] whose elements are the
//! indices `0..order` with `0` the identity. Subsets are [`ElemSet`] bitsets
//! over those indices.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Result};

/// Largest group order the engine materializes.
pub const MAX_ORDER: usize = 240;

/// Bitset over the element indices of one group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet {
    words: Vec<u64>,
    universe: usize,
}

impl ElemSet {
    pub fn empty(universe: usize) -> Self {
        Self {
            words: vec![0; universe.div_ceil(64)],
            universe,
        }
    }

    pub fn from_indices(universe: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(universe);
        for i in idx {
            s.insert(i);
        }
        s
    }

    pub fn full(universe: usize) -> Self {
        Self::from_indices(universe, 0..universe)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, i: usize) -> bool {
        let (w, b) = (i / 64, i % 64);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !was
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe).filter(move |&i| self.contains(i))
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
            universe: self.universe,
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        Self {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
            universe: self.universe,
        }
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Multiplication table of a finite group. Element `0` is the identity.
#[derive(Clone, PartialEq, Eq)]
pub struct CayleyTable {
    n: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    orders: Vec<u32>,
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CayleyTable(order {})", self.n)
    }
}

impl CayleyTable {
    /// Closes `generators` under `op` starting from `identity`, returning the
    /// element list (identity first) and the table over it.
    pub fn generate<T, F>(identity: T, generators: &[T], op: F) -> Result<(Vec<T>, CayleyTable)>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut elems = vec![identity.clone()];
        let mut index: HashMap<T, usize> = HashMap::from([(identity, 0)]);
        let mut cursor = 0;
        while cursor < elems.len() {
            for g in generators {
                let p = op(&elems[cursor], g);
                if !index.contains_key(&p) {
                    if elems.len() == MAX_ORDER {
                        return Err(Error::Capacity {
                            bound: MAX_ORDER,
                        });
                    }
                    index.insert(p.clone(), elems.len());
                    elems.push(p);
                }
            }
            cursor += 1;
        }
        let n = elems.len();
        let mut mul = vec![0u16; n * n];
        for i in 0..n {
            for j in 0..n {
                let p = op(&elems[i], &elems[j]);
                let k = *index
                    .get(&p)
                    .ok_or_else(|| Error::Data("generated set is not closed under the product".into()))?;
                mul[i * n + j] = k as u16;
            }
        }
        Ok((elems, Self::from_mul(n, mul)?))
    }

    /// Builds a table from a raw product array, checking the group axioms.
    pub fn from_mul(n: usize, mul: Vec<u16>) -> Result<Self> {
        if n == 0 || mul.len() != n * n {
            return Err(Error::Data("malformed multiplication table".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::Capacity { bound: MAX_ORDER });
        }
        for i in 0..n {
            if mul[i] as usize != i || mul[i * n] as usize != i {
                return Err(Error::Data("element 0 is not the identity".into()));
            }
        }
        let mut inv = vec![u16::MAX; n];
        for i in 0..n {
            for j in 0..n {
                if mul[i * n + j] == 0 {
                    inv[i] = j as u16;
                    break;
                }
            }
            if inv[i] == u16::MAX {
                return Err(Error::Data(format!("element {i} has no inverse")));
            }
        }
        let mut t = Self {
            n,
            mul,
            inv,
            orders: vec![0; n],
        };
        for i in 0..n {
            let mut k = 1;
            let mut x = i;
            while x != 0 {
                x = t.mul(x, i);
                k += 1;
                if k as usize > n {
                    return Err(Error::Data("element of unbounded order".into()));
                }
            }
            t.orders[i] = k;
        }
        Ok(t)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn elem_order(&self, a: usize) -> u32 {
        self.orders[a]
    }

    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn full(&self) -> ElemSet {
        ElemSet::full(self.n)
    }

    pub fn trivial(&self) -> ElemSet {
        ElemSet::from_indices(self.n, [0])
    }

    /// Subgroup generated by the given elements.
    pub fn closure(&self, gens: &[usize]) -> ElemSet {
        let mut set = self.trivial();
        let mut list = vec![0usize];
        let mut cursor = 0;
        while cursor < list.len() {
            let x = list[cursor];
            for &g in gens {
                let p = self.mul(x, g);
                if set.insert(p) {
                    list.push(p);
                }
            }
            cursor += 1;
        }
        set
    }

    pub fn closure_of_set(&self, s: &ElemSet) -> ElemSet {
        let gens: Vec<usize> = s.iter().collect();
        self.closure(&gens)
    }

    pub fn cyclic(&self, g: usize) -> ElemSet {
        self.closure(&[g])
    }

    pub fn is_subgroup(&self, s: &ElemSet) -> bool {
        s.contains(0)
            && s.iter()
                .all(|a| s.iter().all(|b| s.contains(self.mul(a, self.inv(b)))))
    }

    pub fn conjugate(&self, s: &ElemSet, g: usize) -> ElemSet {
        ElemSet::from_indices(self.n, s.iter().map(|h| self.conj(g, h)))
    }

    /// Elements of `within` normalizing `s`.
    pub fn normalizer_in(&self, within: &ElemSet, s: &ElemSet) -> ElemSet {
        ElemSet::from_indices(
            self.n,
            within.iter().filter(|&g| s.iter().all(|h| s.contains(self.conj(g, h)))),
        )
    }

    pub fn normalizer(&self, s: &ElemSet) -> ElemSet {
        self.normalizer_in(&self.full(), s)
    }

    pub fn is_normal_in(&self, s: &ElemSet, within: &ElemSet) -> bool {
        within.iter().all(|g| s.iter().all(|h| s.contains(self.conj(g, h))))
    }

    /// Subgroup generated by all commutators of elements of `s`.
    pub fn derived_subgroup_of(&self, s: &ElemSet) -> ElemSet {
        let elems: Vec<usize> = s.iter().collect();
        let mut comms = ElemSet::empty(self.n);
        for &a in &elems {
            for &b in &elems {
                comms.insert(self.commutator(a, b));
            }
        }
        self.closure_of_set(&comms)
    }

    /// Left-coset labelling: returns `coset[g]` for `g` in `within` (others
    /// `usize::MAX`) and one representative per coset.
    fn cosets(&self, within: &ElemSet, h: &ElemSet) -> (Vec<usize>, Vec<usize>) {
        let mut label = vec![usize::MAX; self.n];
        let mut reps = Vec::new();
        for g in within.iter() {
            if label[g] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            for x in h.iter() {
                label[self.mul(g, x)] = id;
            }
        }
        (label, reps)
    }

    /// The quotient `within / h` for `h` normal in `within`, as a new table.
    /// Also returns the projection from elements of `within` to quotient
    /// indices.
    pub fn quotient(&self, within: &ElemSet, h: &ElemSet) -> Result<(CayleyTable, Vec<usize>)> {
        if !h.is_subset(within) || !self.is_normal_in(h, within) {
            return Err(Error::Data("quotient by a non-normal subgroup".into()));
        }
        let (label, reps) = self.cosets(within, h);
        // coset of the identity must get label 0
        debug_assert_eq!(label[0], 0);
        let m = reps.len();
        let mut mul = vec![0u16; m * m];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                mul[i * m + j] = label[self.mul(a, b)] as u16;
            }
        }
        Ok((CayleyTable::from_mul(m, mul)?, label))
    }

    /// Restriction of the table to a subgroup, with the embedding map from
    /// new indices to old ones.
    pub fn subtable(&self, s: &ElemSet) -> Result<(CayleyTable, Vec<usize>)> {
        if !self.is_subgroup(s) {
            return Err(Error::Data("subtable of a non-subgroup".into()));
        }
        let map: Vec<usize> = s.iter().collect();
        let mut back = vec![usize::MAX; self.n];
        for (i, &g) in map.iter().enumerate() {
            back[g] = i;
        }
        let m = map.len();
        let mut mul = vec![0u16; m * m];
        for i in 0..m {
            for j in 0..m {
                mul[i * m + j] = back[self.mul(map[i], map[j])] as u16;
            }
        }
        Ok((CayleyTable::from_mul(m, mul)?, map))
    }

    /// Direct product; element `(a, b)` has index `a * |other| + b`.
    pub fn direct_product(&self, other: &CayleyTable) -> Result<CayleyTable> {
        let (n1, n2) = (self.n, other.n);
        let n = n1 * n2;
        if n > MAX_ORDER {
            return Err(Error::Capacity { bound: MAX_ORDER });
        }
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                let (a1, a2) = (a / n2, a % n2);
                let (b1, b2) = (b / n2, b % n2);
                mul[a * n + b] = (self.mul(a1, b1) * n2 + other.mul(a2, b2)) as u16;
            }
        }
        CayleyTable::from_mul(n, mul)
    }

    /// Cyclic group of order `n` on indices `0..n` (index = exponent).
    pub fn cyclic_group(n: usize) -> CayleyTable {
        let mul = (0..n * n).map(|k| ((k / n + k % n) % n) as u16).collect();
        CayleyTable::from_mul(n, mul).expect("cyclic table is a group")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_product_orders() {
        let c2 = CayleyTable::cyclic_group(2);
        let c3 = CayleyTable::cyclic_group(3);
        let c6 = c2.direct_product(&c3).unwrap();
        assert_eq!(c6.order(), 6);
        assert!(c6.is_abelian());
        assert_eq!((0..6).filter(|&g| c6.elem_order(g) == 6).count(), 2);
    }

    #[test]
    fn quotient_of_cyclic() {
        let c6 = CayleyTable::cyclic_group(6);
        let h = c6.cyclic(3);
        assert_eq!(h.len(), 2);
        let (q, _) = c6.quotient(&c6.full(), &h).unwrap();
        assert_eq!(q.order(), 3);
    }

    #[test]
    fn capacity_is_enforced() {
        let r = CayleyTable::generate(0u32, &[1u32], |a, b| (a + b) % 1000);
        assert!(matches!(r, Err(Error::Capacity { .. })));
    }

    #[test]
    fn elemset_ops() {
        let a = ElemSet::from_indices(70, [0, 3, 65]);
        let b = ElemSet::from_indices(70, [0, 65]);
        assert!(b.is_subset(&a));
        assert_eq!(a.intersection(&b).len(), 2);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 3, 65]);
    }
}
