//! Exact finite-group engine over Cayley tables.

pub mod counting;
pub mod perm;
pub mod polyhedral;
pub mod recognize;
pub mod subgroups;
pub mod table;

pub use counting::{index2_kernels, lemma_counting_oracle, BinaryPolyhedral, CountingClass, CountingType};
pub use perm::{PermGroup, Permutation};
pub use recognize::{canonical_name, recognize, same_group, GroupFingerprint, Recognition};
pub use subgroups::{all_subgroups, subgroup_classes, SubgroupClass};
pub use table::{CayleyTable, ElemSet, MAX_ORDER};

use crate::error::Result;

/// `N_G(h) / h`, recognized.
pub fn normalizer_quotient(table: &CayleyTable, h: &ElemSet) -> Result<Recognition> {
    weyl_quotient(table, &table.full(), h)
}

/// `N_within(h) / h`, recognized.
pub fn weyl_quotient(table: &CayleyTable, within: &ElemSet, h: &ElemSet) -> Result<Recognition> {
    let n = table.normalizer_in(within, h);
    let (q, _) = table.quotient(&n, h)?;
    Ok(recognize(&q))
}
