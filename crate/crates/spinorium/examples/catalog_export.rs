//! Walk the relation catalog as data: closed-form coefficients, target
//! maps, radial sub-operators, and the JSON export document.
//!
//! ```bash
//! cargo run --example catalog_export
//! ```

use spinorium::indices::HalfInt;
use spinorium::relations::{catalog, find_entry, rhs_coefficient};
use spinorium::report::catalog_document;

fn main() {
    let entries = catalog();
    println!("catalog: {} entries", entries.len());

    // a three-term recurrence, coefficient by coefficient
    let entry = find_entry(&entries, "3.1.1").expect("id exists");
    let variant = &entry.variants[0];
    println!("\n{} — lhs {}", entry.id, variant.lhs);
    for kappa in [1i32, -1, 3] {
        let mu = HalfInt::HALF;
        print!("  (kappa={kappa:+}, mu=1/2):");
        for (i, term) in variant.terms.iter().enumerate() {
            let coeff = rhs_coefficient(variant, i, kappa, mu);
            let (kt, mt) = term.target(kappa, mu);
            print!(
                "  [{:?} -> kappa'={kt}, mu'={mt}] {:+.4}",
                term.kappa_map, coeff.re
            );
        }
        println!();
    }

    // sign-paired rows carry two variants under one id
    let pm = find_entry(&entries, "3.3.4").expect("id exists");
    println!("\n{} has {} variants:", pm.id, pm.variants.len());
    for v in &pm.variants {
        println!("  [{}] {} with {} terms", v.tag, v.lhs, v.terms.len());
    }

    // the export document used by `spinorium catalog --json`
    let doc = catalog_document(&entries);
    let text = serde_json::to_string_pretty(&doc).expect("serializes");
    println!("\nJSON export: {} bytes, schema {}", text.len(), doc.schema);
    let first = &doc.entries[0];
    println!(
        "first entry: {} ({} variant(s), {} terms)",
        first.id,
        first.variants.len(),
        first.variants[0].terms.len()
    );
}
