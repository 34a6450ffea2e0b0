//! Serialized block tables: JSON, CSV and aligned text.
//!
//! The JSON form is described by `schema/output.schema.json`.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::blocks::{BlockTable, DominantRecord, Summary};
use crate::error::{Error, Result};
use crate::ledger::LedgerEntry;

pub const SCHEMA_VERSION: &str = "1.0.0";

pub const SCHEMA: &str = include_str!("../schema/output.schema.json");

#[derive(Clone, Debug, Serialize)]
pub struct OutputDocument {
    pub schema_version: String,
    pub group: String,
    pub display: String,
    pub ambient_rank: usize,
    pub rows: Vec<DominantRecord>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ledger: Option<Vec<LedgerEntry>>,
}

impl OutputDocument {
    pub fn new(table: BlockTable, ledger: Option<Vec<LedgerEntry>>) -> Self {
        let summary = table.summary();
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            group: table.group,
            display: table.display,
            ambient_rank: table.ambient_rank,
            rows: table.rows,
            summary,
            ledger,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self).map_err(|e| Error::Data(e.to_string()))?;
        s.push('\n');
        Ok(s)
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let err = |e: csv::Error| Error::Data(e.to_string());
        w.write_record(CSV_HEADER).map_err(err)?;
        for r in &self.rows {
            w.write_record(csv_row(r)).map_err(err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Data(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Data(e.to_string()))
    }

    pub fn to_table(&self) -> String {
        let header: Vec<String> = ["rk", "(H_e, H_d)", "mult", "dim", "W_G(H)", "kind", "model"]
            .map(String::from)
            .to_vec();
        let mut lines = vec![header];
        for r in &self.rows {
            lines.push(vec![
                r.rank().to_string(),
                r.pair(),
                if r.multiplicity > 1 { format!("[{}]", r.multiplicity) } else { String::new() },
                r.profile.notation(),
                r.weyl.clone(),
                r.kind.to_string(),
                r.model_label.clone(),
            ]);
        }
        let cols = lines[0].len();
        let widths: Vec<usize> = (0..cols)
            .map(|c| lines.iter().map(|l| l[c].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = format!("{}\n", self.display);
        for (i, l) in lines.iter().enumerate() {
            let cells: Vec<String> = l
                .iter()
                .zip(&widths)
                .map(|(cell, &w)| format!("{cell}{}", " ".repeat(w - cell.chars().count())))
                .collect();
            let _ = writeln!(out, "{}", cells.join("  ").trim_end());
            if i == 0 {
                let _ = writeln!(out, "{}", "-".repeat(widths.iter().sum::<usize>() + 2 * (cols - 1)));
            }
        }
        let _ = writeln!(out, "\nSummary: {}", self.summary.line);
        if let Some(ledger) = &self.ledger {
            out.push('\n');
            out.push_str(&ledger_text(ledger));
        }
        out
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Table => Ok(self.to_table()),
        }
    }
}

pub const CSV_HEADER: [&str; 14] = [
    "rank",
    "h_e",
    "h_e_dim",
    "h_d",
    "h_d_order",
    "multiplicity",
    "a",
    "b",
    "dimension",
    "weyl",
    "kind",
    "model_label",
    "dominant",
    "placeholder",
];

fn csv_row(r: &DominantRecord) -> Vec<String> {
    vec![
        r.rank().to_string(),
        r.h_e.name.clone(),
        r.h_e.dim.to_string(),
        r.h_d.clone(),
        r.h_d_order.to_string(),
        r.multiplicity.to_string(),
        r.profile.a.to_string(),
        r.profile.b.to_string(),
        r.dimension().to_string(),
        r.weyl.clone(),
        r.kind.to_string(),
        r.model_label.clone(),
        r.dominant.clone().unwrap_or_default(),
        r.placeholder.to_string(),
    ]
}

pub const LEDGER_HEADER: &str = "Recorded divergences from published values";

pub fn ledger_text(entries: &[LedgerEntry]) -> String {
    let mut out = format!("{LEDGER_HEADER} ({})\n", entries.len());
    for e in entries {
        let _ = writeln!(out, "- [{}] {}", e.group, e.location);
        let _ = writeln!(out, "    published: {}", e.published);
        let _ = writeln!(out, "    computed:  {}", e.computed);
        let _ = writeln!(out, "    note:      {}", e.note);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::Data(format!("unknown format `{other}`"))),
        }
    }
}
