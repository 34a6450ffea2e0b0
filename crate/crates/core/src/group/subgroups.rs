//! Conjugacy classes of subgroups by cyclic extension.
//!
//! Layer 1 holds the cyclic subgroups. Layer k+1 is obtained by joining a
//! representative of each class on layer k with every cyclic subgroup of the
//! whole group. Since every subgroup is a join of cyclic subgroups, and a
//! conjugate of a join is the join of the conjugates, keeping one
//! representative per class suffices.

use std::collections::HashMap;

use super::recognize::recognize;
use super::table::{CayleyTable, ElemSet};

/// One conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub representative: ElemSet,
    /// every subgroup in the class, representative included
    pub members: Vec<ElemSet>,
    pub normalizer: ElemSet,
    /// recognized isomorphism type of the representative
    pub label: String,
}

impl SubgroupClass {
    pub fn order(&self) -> usize {
        self.representative.len()
    }

    pub fn class_size(&self) -> usize {
        self.members.len()
    }
}

struct Found {
    rep: ElemSet,
    gens: Vec<usize>,
    members: Vec<ElemSet>,
}

/// All conjugacy classes of subgroups of the group, sorted by
/// `(order, class size, smallest member)`.
pub fn subgroup_classes(table: &CayleyTable) -> Vec<SubgroupClass> {
    subgroup_classes_under(table, &table.full())
}

/// Classes of subgroups of the whole group, up to conjugation by the
/// subgroup `conjugators` only.
pub fn subgroup_classes_under(table: &CayleyTable, conjugators: &ElemSet) -> Vec<SubgroupClass> {
    let n = table.order();
    let conj: Vec<usize> = conjugators.iter().collect();

    // distinct cyclic subgroups, each with one generator
    let mut cyclics: Vec<(ElemSet, usize)> = Vec::new();
    let mut cyc_seen: HashMap<ElemSet, ()> = HashMap::new();
    for g in 1..n {
        let c = table.cyclic(g);
        if cyc_seen.insert(c.clone(), ()).is_none() {
            cyclics.push((c, g));
        }
    }

    let mut seen: HashMap<ElemSet, usize> = HashMap::new();
    let mut found: Vec<Found> = Vec::new();
    let mut add = |set: ElemSet, gens: Vec<usize>, found: &mut Vec<Found>| -> Option<usize> {
        if seen.contains_key(&set) {
            return None;
        }
        let mut members = vec![set.clone()];
        for &g in &conj {
            let c = table.conjugate(&set, g);
            if !members.contains(&c) {
                members.push(c);
            }
        }
        let id = found.len();
        for m in &members {
            seen.insert(m.clone(), id);
        }
        found.push(Found {
            rep: set,
            gens,
            members,
        });
        Some(id)
    };

    add(table.trivial(), Vec::new(), &mut found);
    let mut layer: Vec<usize> = Vec::new();
    for (c, g) in &cyclics {
        if let Some(id) = add(c.clone(), vec![*g], &mut found) {
            layer.push(id);
        }
    }
    while !layer.is_empty() {
        let mut next = Vec::new();
        for &id in &layer {
            for (c, g) in &cyclics {
                if c.is_subset(&found[id].rep) {
                    continue;
                }
                let mut gens = found[id].gens.clone();
                gens.push(*g);
                let joined = table.closure(&gens);
                if let Some(new_id) = add(joined, gens, &mut found) {
                    next.push(new_id);
                }
            }
        }
        layer = next;
    }

    let mut classes: Vec<SubgroupClass> = found
        .into_iter()
        .map(|f| {
            let mut members = f.members;
            members.sort();
            let normalizer = table.normalizer_in(conjugators, &f.rep);
            let label = table
                .subtable(&f.rep)
                .map(|(t, _)| recognize(&t).name)
                .unwrap_or_else(|_| "unknown".into());
            SubgroupClass {
                representative: f.rep,
                members,
                normalizer,
                label,
            }
        })
        .collect();
    classes.sort_by(|a, b| {
        (a.order(), a.class_size(), &a.members[0]).cmp(&(b.order(), b.class_size(), &b.members[0]))
    });
    classes
}

/// Every subgroup of the group, flattened from the class list.
pub fn all_subgroups(table: &CayleyTable) -> Vec<ElemSet> {
    let mut all: Vec<ElemSet> = subgroup_classes(table)
        .into_iter()
        .flat_map(|c| c.members)
        .collect();
    all.sort();
    all
}

/// Partition a family of subgroups into orbits under conjugation by
/// `conjugators`. Orbits keep the input order of their first member.
pub fn conjugation_orbits(
    table: &CayleyTable,
    subgroups: &[ElemSet],
    conjugators: &ElemSet,
) -> Vec<Vec<ElemSet>> {
    let mut orbit_of: HashMap<ElemSet, usize> = HashMap::new();
    let mut orbits: Vec<Vec<ElemSet>> = Vec::new();
    for s in subgroups {
        if orbit_of.contains_key(s) {
            continue;
        }
        let id = orbits.len();
        let mut orbit = Vec::new();
        for g in conjugators.iter() {
            let c = table.conjugate(s, g);
            if !orbit_of.contains_key(&c) {
                orbit_of.insert(c.clone(), id);
                if subgroups.contains(&c) {
                    orbit.push(c);
                }
            }
        }
        orbits.push(orbit);
    }
    orbits
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::perm::{alternating_group, symmetric_group};

    #[test]
    fn s4_has_eleven_classes() {
        let s4 = symmetric_group(4).unwrap();
        let classes = subgroup_classes(s4.table());
        assert_eq!(classes.len(), 11);
        assert_eq!(classes.iter().map(|c| c.class_size()).sum::<usize>(), 30);
    }

    #[test]
    fn a5_has_nine_classes() {
        let a5 = alternating_group(5).unwrap();
        let classes = subgroup_classes(a5.table());
        assert_eq!(classes.len(), 9);
        assert_eq!(classes.iter().map(|c| c.class_size()).sum::<usize>(), 59);
    }

    #[test]
    fn class_size_is_index_of_normalizer() {
        let s4 = symmetric_group(4).unwrap();
        for c in subgroup_classes(s4.table()) {
            assert_eq!(c.class_size() * c.normalizer.len(), 24);
            assert!(c.representative.is_subset(&c.normalizer));
        }
    }
}
