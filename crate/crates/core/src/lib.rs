//! Exact block decomposition of the space of conjugacy classes of closed
//! subgroups of small compact Lie groups.
//!
//! Start with [`blocks::block_table`] for the full table of an ambient group,
//! or with [`weyl`], [`rep`] and [`group`] for the underlying computations.

pub mod blocks;
pub mod descriptors;
pub mod error;
pub mod group;
pub mod lattice;
pub mod ledger;
pub mod oracle;
pub mod output;
pub mod rep;
pub mod spectral;
pub mod weyl;

pub use error::{Error, Result};
