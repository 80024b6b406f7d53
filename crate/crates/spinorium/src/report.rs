//! Report documents for the verification sweep: a schema-stable JSON
//! summary and a flat CSV of per-case rows for spreadsheet diffing.

use std::collections::BTreeMap;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::relations::{RelationEntry, RelationKind, VariantTag};
use crate::verify::{CaseStatus, SweepConfig, VerificationResult};

pub const REPORT_SCHEMA: &str = "spinorium/report/v1";
pub const CATALOG_SCHEMA: &str = "spinorium/catalog/v1";

/// Per-relation aggregate over all swept cases.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RelationSummary {
    pub id: String,
    pub kind: RelationKind,
    pub cases: usize,
    pub max_residual: f64,
    pub pass: bool,
}

/// One failing (or inapplicable) case, spelled out.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CaseRow {
    pub id: String,
    pub variant: VariantTag,
    pub kappa: i32,
    pub mu_times_2: i32,
    pub profile: String,
    pub r: f64,
    pub residual: f64,
    pub status: CaseStatus,
}

/// The full report document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema: String,
    pub tool_version: String,
    pub config: SweepConfig,
    pub summary: Vec<RelationSummary>,
    pub failures: Vec<CaseRow>,
    pub wall_clock_seconds: f64,
}

/// Aggregate sweep results into a report. Summary rows follow catalog order
/// and cover every swept relation.
pub fn build_report(
    entries: &[RelationEntry],
    config: &SweepConfig,
    results: &[VerificationResult],
    wall_clock_seconds: f64,
) -> ReportDocument {
    let mut by_id: BTreeMap<&str, RelationSummary> = BTreeMap::new();
    for entry in entries {
        let selected = match &config.relations {
            Some(ids) => ids.iter().any(|id| id == entry.id),
            None => true,
        };
        if selected {
            by_id.insert(
                entry.id,
                RelationSummary {
                    id: entry.id.to_string(),
                    kind: entry.kind,
                    cases: 0,
                    max_residual: 0.0,
                    pass: true,
                },
            );
        }
    }

    let mut failures = Vec::new();
    for r in results {
        let summary = by_id
            .get_mut(r.relation_id.as_str())
            .expect("result ids come from the catalog");
        summary.cases += 1;
        if r.status == CaseStatus::Verified {
            summary.max_residual = summary.max_residual.max(r.residual);
        }
        if !r.pass {
            summary.pass = false;
            failures.push(CaseRow {
                id: r.relation_id.clone(),
                variant: r.variant,
                kappa: r.kappa,
                mu_times_2: r.mu.twice(),
                profile: r.profile.to_string(),
                r: r.r,
                residual: r.residual,
                status: r.status,
            });
        }
    }

    // keep summary in catalog order, not BTreeMap's lexicographic order
    let summary = entries.iter().filter_map(|e| by_id.remove(e.id)).collect();

    ReportDocument {
        schema: REPORT_SCHEMA.to_string(),
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        config: config.clone(),
        summary,
        failures,
        wall_clock_seconds,
    }
}

/// Flat per-case CSV: `relation_id,variant,kappa,mu_times_2,profile,r,residual,pass`.
pub fn write_csv<W: Write>(mut out: W, results: &[VerificationResult]) -> std::io::Result<()> {
    writeln!(
        out,
        "relation_id,variant,kappa,mu_times_2,profile,r,residual,pass"
    )?;
    for r in results {
        writeln!(
            out,
            "{},{},{},{},{},{},{:e},{}",
            r.relation_id,
            r.variant,
            r.kappa,
            r.mu.twice(),
            r.profile,
            r.r,
            r.residual,
            r.pass
        )?;
    }
    Ok(())
}

/// Catalog export wrapper.
#[derive(Debug, Serialize, Deserialize)]
pub struct CatalogDocument {
    pub schema: String,
    pub entries: Vec<CatalogEntryView>,
}

/// One catalog entry with its LHS rendered as an s-expression string.
#[derive(Debug, Serialize, Deserialize)]
pub struct CatalogEntryView {
    pub id: String,
    pub kind: RelationKind,
    pub variants: Vec<CatalogVariantView>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CatalogVariantView {
    pub variant: VariantTag,
    pub lhs: String,
    pub terms: Vec<serde_json::Value>,
}

pub fn catalog_document(entries: &[RelationEntry]) -> CatalogDocument {
    let entries = entries
        .iter()
        .map(|e| CatalogEntryView {
            id: e.id.to_string(),
            kind: e.kind,
            variants: e
                .variants
                .iter()
                .map(|v| CatalogVariantView {
                    variant: v.tag,
                    lhs: v.lhs.to_string(),
                    terms: v
                        .terms
                        .iter()
                        .map(|t| serde_json::to_value(t).expect("terms serialize"))
                        .collect(),
                })
                .collect(),
        })
        .collect();
    CatalogDocument {
        schema: CATALOG_SCHEMA.to_string(),
        entries,
    }
}

/// Markdown table of the catalog: one row per entry.
pub fn catalog_markdown(entries: &[RelationEntry]) -> String {
    let mut out = String::from("| id | kind | variants | lhs | terms |\n|---|---|---|---|---|\n");
    for e in entries {
        let kind = match e.kind {
            RelationKind::Algebraic => "algebraic",
            RelationKind::FirstKind => "first_kind",
            RelationKind::SecondKind => "second_kind",
        };
        let variants = e
            .variants
            .iter()
            .map(|v| v.tag.to_string())
            .collect::<Vec<_>>()
            .join("/");
        let lhs = e.variants[0].lhs.to_string();
        let terms = e.variants[0].terms.len();
        out.push_str(&format!(
            "| {} | {} | {} | `{}` | {} |\n",
            e.id, kind, variants, lhs, terms
        ));
    }
    out
}
