//! Run the full relation verification sweep programmatically and summarize
//! residuals by section.
//!
//! ```bash
//! cargo run --release --example relation_sweep
//! ```

use std::time::Instant;

use spinorium::relations::{catalog, RelationKind};
use spinorium::verify::{verify_all, SweepConfig};

fn main() {
    let entries = catalog();
    let config = SweepConfig::default();

    let start = Instant::now();
    let results = verify_all(&entries, &config);
    let elapsed = start.elapsed();

    let mut per_kind = std::collections::BTreeMap::new();
    for entry in &entries {
        for r in results.iter().filter(|r| r.relation_id == entry.id) {
            let row = per_kind
                .entry(format!("{:?}", entry.kind))
                .or_insert((0usize, 0.0f64, 0usize));
            row.0 += 1;
            row.1 = row.1.max(r.residual);
            if !r.pass {
                row.2 += 1;
            }
        }
    }

    println!(
        "swept {} cases over {} relations in {:.2?} (tolerance {:.0e})",
        results.len(),
        entries.len(),
        elapsed,
        config.tolerance
    );
    for (kind, (cases, max_residual, failures)) in &per_kind {
        println!(
            "  {kind:<12} {cases:6} cases, max residual {max_residual:.2e}, {failures} failures"
        );
    }

    let algebraic = entries
        .iter()
        .filter(|e| e.kind == RelationKind::Algebraic)
        .count();
    let first = entries
        .iter()
        .filter(|e| e.kind == RelationKind::FirstKind)
        .count();
    let second = entries
        .iter()
        .filter(|e| e.kind == RelationKind::SecondKind)
        .count();
    println!("catalog sections: {algebraic} algebraic, {first} first kind, {second} second kind");

    std::process::exit(if results.iter().all(|r| r.pass) { 0 } else { 1 });
}
