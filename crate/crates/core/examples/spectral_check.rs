//! Finite poset models of the block shapes, and the partition check on
//! every shipped table.

use blockspace::blocks::{block_table, BlockKind};
use blockspace::descriptors::DescriptorFile;
use blockspace::spectral::{count_by_dimension, finite_approximation, verify_spectral_partition, BlockShape};

fn main() -> blockspace::Result<()> {
    for shape in [BlockShape::Point, BlockShape::CotoralLine, BlockShape::FlatLine] {
        let s = finite_approximation(shape, 3);
        println!("{shape}: {} points, relation {:?}, limit {:?}", s.len(), s.relation, s.limit_point);
    }

    for g in DescriptorFile::bundled().group_names() {
        let table = block_table(g)?;
        let report = verify_spectral_partition(&table);
        let c = count_by_dimension(&table);
        println!(
            "{g:<8} {} blocks {:?}  cotoral {} weyl-finite {}  {}",
            report.blocks,
            c.by_dim,
            c.kind(1, BlockKind::CotoralLine),
            c.kind(1, BlockKind::WeylFinite),
            if report.passed() { "ok" } else { "FAILED" }
        );
        for v in &report.violations {
            println!("  {:?}: {}", v.kind, v.detail);
        }
    }
    Ok(())
}
