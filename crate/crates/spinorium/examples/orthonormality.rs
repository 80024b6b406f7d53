//! Check spinor orthonormality: the Gram matrix of all spinors with
//! |κ| ≤ κ_max against the identity, via band-exact sphere quadrature.
//!
//! ```bash
//! cargo run --release --example orthonormality
//! ```

use std::time::Instant;

use spinorium::verify::orthonormality_check;

fn main() {
    for kappa_max in [1u32, 2, 4, 6, 12, 24] {
        let spinors: u32 = (1..=kappa_max).map(|k| 2 * 2 * k).sum();
        let start = Instant::now();
        let deviation = orthonormality_check(kappa_max);
        println!(
            "kappa_max {kappa_max:3}: {spinors:5} spinors, max |Gram - I| = {deviation:.2e}  ({:.2?})",
            start.elapsed()
        );
    }
}
