//! Published values that disagree with the computation.
//!
//! Each claim stores the published value and recomputes its counterpart, so
//! an entry disappears by itself if the engine ever agrees.

use serde::Serialize;

use crate::blocks::block_table;
use crate::error::Result;
use crate::group::counting::{lemma_counting_oracle, BinaryPolyhedral, CountingType};
use crate::group::same_group;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LedgerEntry {
    /// ambient group the entry concerns
    pub group: String,
    pub location: String,
    pub published: String,
    pub computed: String,
    pub note: String,
}

/// Groups whose tables use the `Sp(1) × C_2` count.
const COUNTING_USERS: [&str; 2] = ["SU2xSU2", "Sp2"];

enum Check {
    Profile { h_e: &'static str, h_d: &'static str },
    Weyl { h_e: &'static str, h_d: &'static str },
    Model { h_e: &'static str, h_d: &'static str },
    Split,
    GraphWeyls,
    FamilyWeylColumn,
    Q8Graphs,
}

struct Claim {
    group: &'static str,
    location: &'static str,
    published: &'static str,
    check: Check,
    note: &'static str,
}

const CLAIMS: &[Claim] = &[
    Claim {
        group: "SU2xSU2",
        location: "A1×A1 maximal-rank working table, row (T^2, D_4)",
        published: "0+1",
        check: Check::Profile { h_e: "T^2", h_d: "D_4" },
        note: "two distinct nontrivial characters; the final SU(2)×SU(2) table agrees with 0+2",
    },
    Claim {
        group: "SU3",
        location: "SU(3) summary statistics, rank 2 split",
        published: "t1 m2 f0",
        check: Check::Split,
        note: "the table has one toral and one mixed two-dimensional row; the published split does not sum to 2",
    },
    Claim {
        group: "Sp2",
        location: "Sp(2) summary table, row (T_long, 1×F)",
        published: "gqwf",
        check: Check::Model { h_e: "T_long", h_d: "F×1" },
        note: "the row's own dimension 1+0 is a cotoral line; the T_short row points to gq1",
    },
    Claim {
        group: "Sp2",
        location: "Sp(2) introduction, count of two-dimensional blocks",
        published: "t1 m2 f4",
        check: Check::Split,
        note: "one toral, two mixed and four Weyl-finite make seven, against six two-dimensional blocks",
    },
    Claim {
        group: "SU2xSU2",
        location: "SU(2)×SU(2) summary table, row (1×SU(2), 2A4)",
        published: "1",
        check: Check::Weyl { h_e: "1×SU(2)", h_d: "2A4" },
        note: "N(2A4)/2A4 in Sp(1); the Sp(2) table gives C_2 for the same subgroup",
    },
    Claim {
        group: "SU2xSU2",
        location: "SU(2)×SU(2) summary table, row (1×SU(2), Q8)",
        published: "1",
        check: Check::Weyl { h_e: "1×SU(2)", h_d: "Q8" },
        note: "N(Q8)/Q8 in Sp(1); the Sp(2) table gives D_6 for the same subgroup",
    },
    Claim {
        group: "SU2xSU2",
        location: "SU(2)×SU(2) summary table, row (SU(2)×1, 2A4)",
        published: "1",
        check: Check::Weyl { h_e: "SU(2)×1", h_d: "2A4" },
        note: "N(2A4)/2A4 in Sp(1); the Sp(2) table gives C_2 for the same subgroup",
    },
    Claim {
        group: "SU2xSU2",
        location: "SU(2)×SU(2) summary table, row (SU(2)×1, Q8)",
        published: "1",
        check: Check::Weyl { h_e: "SU(2)×1", h_d: "Q8" },
        note: "N(Q8)/Q8 in Sp(1); the Sp(2) table gives D_6 for the same subgroup",
    },
    Claim {
        group: "Sp(1)×C_2",
        location: "counting lemma, Weyl groups of the graph subgroups of 2S4 and Q8",
        published: "1, D_6",
        check: Check::GraphWeyls,
        note: "the central C_2 factor normalizes a graph subgroup without lying in it, so its Weyl group is nontrivial",
    },
    Claim {
        group: "Sp(1)×C_2",
        location: "circle-family rows of the SU(2)×SU(2) and Sp(2) summary tables, Weyl column",
        published: "reference to the counting lemma",
        check: Check::FamilyWeylColumn,
        note: "the engine lists the Weyl group of every class in the family",
    },
    Claim {
        group: "Sp(1)×C_2",
        location: "counting lemma proof, the three maps from Q8 to C_2",
        published: "give the same image",
        check: Check::Q8Graphs,
        note: "the three graph subgroups are distinct and conjugate under 2O × C_2",
    },
];

fn relevant(claim: &Claim, group: Option<&str>) -> bool {
    match group {
        None => true,
        Some(g) if claim.group == "Sp(1)×C_2" => COUNTING_USERS.contains(&g),
        Some(g) => claim.group == g,
    }
}

fn graph_weyls() -> Result<String> {
    let mut out = Vec::new();
    for base in [BinaryPolyhedral::Octahedral, BinaryPolyhedral::Quaternion] {
        for c in lemma_counting_oracle(base)? {
            if c.kind == CountingType::Graph {
                out.push(c.weyl.name);
            }
        }
    }
    Ok(out.join(", "))
}

/// Evaluates one claim: `Some(computed)` when it disagrees.
fn evaluate(claim: &Claim) -> Result<Option<String>> {
    let table = || block_table(claim.group);
    let computed = match &claim.check {
        Check::Profile { h_e, h_d } => table()?.find(h_e, h_d).map(|r| r.profile.notation()),
        Check::Weyl { h_e, h_d } => {
            let w = table()?.find(h_e, h_d).map(|r| r.weyl.clone());
            return Ok(w.filter(|w| !same_group(w, claim.published)));
        }
        Check::Model { h_e, h_d } => table()?.find(h_e, h_d).map(|r| r.model_label.clone()),
        Check::Split => table()?
            .summary()
            .ranks
            .iter()
            .find_map(|r| r.split)
            .map(|s| s.to_string()),
        Check::GraphWeyls => {
            let w = graph_weyls()?;
            let agree = w
                .split(", ")
                .zip(claim.published.split(", "))
                .all(|(a, b)| same_group(a, b));
            return Ok((!agree).then_some(w));
        }
        Check::FamilyWeylColumn => {
            let mut seen = Vec::new();
            for r in block_table("Sp2")?.rows.iter().filter(|r| !r.members.is_empty()) {
                let entry = format!("{}: {}", r.h_d, r.weyl);
                if !seen.contains(&entry) {
                    seen.push(entry);
                }
            }
            Some(seen.join("; "))
        }
        Check::Q8Graphs => lemma_counting_oracle(BinaryPolyhedral::Quaternion)?
            .iter()
            .find(|c| c.kind == CountingType::Graph)
            .map(|c| format!("{} distinct subgroups in one conjugacy class", c.class_size)),
    };
    Ok(computed.filter(|c| c != claim.published))
}

/// Every recorded divergence, optionally restricted to one ambient group.
pub fn divergences(group: Option<&str>) -> Result<Vec<LedgerEntry>> {
    let mut out = Vec::new();
    for claim in CLAIMS.iter().filter(|c| relevant(c, group)) {
        if let Some(computed) = evaluate(claim)? {
            out.push(LedgerEntry {
                group: claim.group.to_string(),
                location: claim.location.to_string(),
                published: claim.published.to_string(),
                computed,
                note: claim.note.to_string(),
            });
        }
    }
    Ok(out)
}
