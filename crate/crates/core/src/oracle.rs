//! Brute-force cross-checks with embedded expected values.

use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::counting::{full_counting, BinaryPolyhedral, CountingClass, CountingType};
use crate::group::{canonical_name, same_group};
use crate::rep::{decompose_profile, DecompositionProfile, IntegralRep};
use crate::weyl::{build_root_datum, reflection_subgroup_classes, weyl_group, RootType, WeylSubgroupClass};

/// One expected value and what was computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoldenCheck {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

impl GoldenCheck {
    fn new(name: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Self {
            name: name.into(),
            ok: expected == actual,
            expected,
            actual,
        }
    }
}

impl fmt::Display for GoldenCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.ok { "ok" } else { "MISMATCH" };
        write!(f, "{mark:<8} {}: expected {}, got {}", self.name, self.expected, self.actual)
    }
}

pub fn all_ok(checks: &[GoldenCheck]) -> bool {
    checks.iter().all(|c| c.ok)
}

/// Weyl group names accepted on the command line.
pub fn parse_weyl(name: &str) -> Result<RootType> {
    match name {
        "D8" | "D_8" => Ok(RootType::C2),
        "D6" | "D_6" | "S3" | "S_3" => Ok(RootType::A2),
        "D4" | "D_4" | "V4" | "V_4" | "C2xC2" | "C_2×C_2" => Ok(RootType::A1xA1),
        other => other.parse(),
    }
}

/// `(type, subgroup classes, reflection classes)`.
pub const WEYL_SUBGROUP_GOLDEN: [(RootType, usize, usize); 3] =
    [(RootType::C2, 8, 6), (RootType::A1xA1, 5, 4), (RootType::A2, 4, 3)];

/// `(type, H_d, a, b)` for `Λ₀ = Z^2` with `H_d` acting through the Weyl group.
pub const TORAL_PROFILE_GOLDEN: [(RootType, &str, usize, usize); 17] = [
    (RootType::A1xA1, "1", 2, 0),
    (RootType::A1xA1, "C_2^x", 1, 1),
    (RootType::A1xA1, "C_2^y", 1, 1),
    (RootType::A1xA1, "C_2^Δ", 0, 2),
    (RootType::A1xA1, "D_4", 0, 2),
    (RootType::A2, "1", 2, 0),
    (RootType::A2, "C_2", 1, 1),
    (RootType::A2, "C_3", 0, 1),
    (RootType::A2, "D_6", 0, 1),
    (RootType::C2, "1", 2, 0),
    (RootType::C2, "C_2", 0, 2),
    (RootType::C2, "X", 1, 1),
    (RootType::C2, "X'", 1, 1),
    (RootType::C2, "C_4", 0, 1),
    (RootType::C2, "V", 0, 2),
    (RootType::C2, "V'", 0, 2),
    (RootType::C2, "D_8", 0, 1),
];

#[derive(Clone, Debug, Serialize)]
pub struct WeylSubgroupReport {
    pub root_type: RootType,
    pub weyl_order: usize,
    pub classes: Vec<WeylSubgroupClass>,
    pub checks: Vec<GoldenCheck>,
}

impl WeylSubgroupReport {
    pub fn subgroup_count(&self) -> usize {
        self.classes.iter().map(|c| c.class_size).sum()
    }

    pub fn reflection_classes(&self) -> usize {
        self.classes.iter().filter(|c| c.is_reflection_group).count()
    }

    pub fn render(&self) -> String {
        let mut out = format!("Weyl group of {} (order {})\n", self.root_type, self.weyl_order);
        let _ = writeln!(out, "{:<8} {:>5} {:>9} {:>10}", "class", "order", "conjugates", "reflection");
        for c in &self.classes {
            let _ = writeln!(
                out,
                "{:<8} {:>5} {:>9} {:>10}",
                c.label,
                c.order,
                c.class_size,
                if c.is_reflection_group { "yes" } else { "no" }
            );
        }
        let _ = writeln!(
            out,
            "{} classes, {} subgroups, {} reflection classes",
            self.classes.len(),
            self.subgroup_count(),
            self.reflection_classes()
        );
        for c in &self.checks {
            let _ = writeln!(out, "{c}");
        }
        out
    }
}

pub fn weyl_subgroups(name: &str) -> Result<WeylSubgroupReport> {
    let t = parse_weyl(name)?;
    let rd = build_root_datum(t);
    let w = weyl_group(&rd)?;
    let classes = reflection_subgroup_classes(&rd, &w);
    let mut report = WeylSubgroupReport {
        root_type: t,
        weyl_order: w.order(),
        classes,
        checks: Vec::new(),
    };
    if let Some(&(_, total, refl)) = WEYL_SUBGROUP_GOLDEN.iter().find(|g| g.0 == t) {
        report.checks = vec![
            GoldenCheck::new("subgroup classes", total, report.classes.len()),
            GoldenCheck::new("reflection classes", refl, report.reflection_classes()),
        ];
    }
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
pub struct RepReport {
    pub root_type: RootType,
    pub h_d: String,
    pub profile: DecompositionProfile,
    pub checks: Vec<GoldenCheck>,
}

impl RepReport {
    pub fn render(&self) -> String {
        let p = &self.profile;
        let mut out = format!("{} acting on the lattice of {}: ({}, {})\n", self.h_d, self.root_type, p.a, p.b);
        for s in &p.summands {
            let _ = writeln!(out, "  {}", s.describe());
        }
        for c in &self.checks {
            let _ = writeln!(out, "{c}");
        }
        out
    }
}

/// The integral representation of a subgroup class of the Weyl group on `Z^2`.
pub fn toral_rep(t: RootType, h_d: &str) -> Result<(String, IntegralRep)> {
    let rd = build_root_datum(t);
    let w = weyl_group(&rd)?;
    let classes = reflection_subgroup_classes(&rd, &w);
    let wanted = canonical_name(&h_d.replace("C2", "C_2").replace("C4", "C_4").replace("C3", "C_3"));
    let class = classes
        .iter()
        .find(|c| c.label == h_d)
        .or_else(|| classes.iter().find(|c| c.label == wanted))
        .or_else(|| classes.iter().find(|c| same_group(&c.label, &wanted)))
        .ok_or_else(|| {
            let names: Vec<&str> = classes.iter().map(|c| c.label.as_str()).collect();
            Error::UnknownGroup(format!("{h_d} (subgroups of W({t}): {})", names.join(", ")))
        })?;
    let rep = IntegralRep::new(2, w.matrices(&class.representative))?;
    Ok((class.label.clone(), rep))
}

pub fn rep_decompose(weyl: &str, h_d: &str) -> Result<RepReport> {
    let t = parse_weyl(weyl)?;
    let (label, rep) = toral_rep(t, h_d)?;
    let profile = decompose_profile(&rep)?;
    let checks = TORAL_PROFILE_GOLDEN
        .iter()
        .filter(|g| g.0 == t && g.1 == label)
        .map(|&(_, _, a, b)| {
            GoldenCheck::new("profile", format!("({a}, {b})"), format!("({}, {})", profile.a, profile.b))
        })
        .collect();
    Ok(RepReport {
        root_type: t,
        h_d: label,
        profile,
        checks,
    })
}

/// Classes per base, in the order of [`BinaryPolyhedral::ALL`].
pub const COUNTING_TOTALS: [(BinaryPolyhedral, usize); 4] = [
    (BinaryPolyhedral::Icosahedral, 2),
    (BinaryPolyhedral::Octahedral, 3),
    (BinaryPolyhedral::Tetrahedral, 2),
    (BinaryPolyhedral::Quaternion, 3),
];

#[derive(Clone, Debug, Serialize)]
pub struct CountingReport {
    pub classes: Vec<CountingClass>,
    pub checks: Vec<GoldenCheck>,
}

impl CountingReport {
    pub fn count(&self, kind: CountingType) -> usize {
        self.classes.iter().filter(|c| c.kind == kind).count()
    }

    pub fn render(&self) -> String {
        let mut out = format!("{:<10} {:>5} {:>6} {:>8}  {}\n", "subgroup", "order", "fused", "onto C_2", "Weyl");
        for c in &self.classes {
            let _ = writeln!(
                out,
                "{:<10} {:>5} {:>6} {:>8}  {}",
                c.descriptor(),
                c.order,
                c.class_size,
                if c.onto_c2 { "yes" } else { "no" },
                c.weyl.name
            );
        }
        let _ = writeln!(
            out,
            "total {}: {} F×1, {} graph, {} F×C_2",
            self.classes.len(),
            self.count(CountingType::Plain),
            self.count(CountingType::Graph),
            self.count(CountingType::TimesC2)
        );
        for c in &self.checks {
            let _ = writeln!(out, "{c}");
        }
        out
    }
}

pub fn lemma_counting() -> Result<CountingReport> {
    let classes = full_counting()?;
    let mut report = CountingReport {
        classes,
        checks: Vec::new(),
    };
    let mut checks = vec![
        GoldenCheck::new("total", 10, report.classes.len()),
        GoldenCheck::new(
            "split F×1 / graph / F×C_2",
            "4/2/4",
            format!(
                "{}/{}/{}",
                report.count(CountingType::Plain),
                report.count(CountingType::Graph),
                report.count(CountingType::TimesC2)
            ),
        ),
    ];
    for (base, n) in COUNTING_TOTALS {
        let got = report.classes.iter().filter(|c| c.base == base).count();
        checks.push(GoldenCheck::new(format!("classes over {base}"), n, got));
    }
    let q8 = |kind| {
        report
            .classes
            .iter()
            .find(|c| c.base == BinaryPolyhedral::Quaternion && c.kind == kind)
    };
    checks.push(GoldenCheck::new(
        "Q8 graph subgroups fused into one class",
        3,
        q8(CountingType::Graph).map_or(0, |c| c.class_size),
    ));
    let weyl = q8(CountingType::Plain).map_or_else(String::new, |c| c.weyl.name.clone());
    checks.push(GoldenCheck::new(
        "Weyl group of Q8×1",
        "D_6×C_2",
        if same_group(&weyl, "D_6×C_2") { "D_6×C_2".to_string() } else { weyl },
    ));
    report.checks = checks;
    Ok(report)
}
