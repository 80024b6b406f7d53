//! Cross-check the spectral gradient against central finite differences of
//! the pointwise field, and show a radial profile flowing through a
//! relation.
//!
//! ```bash
//! cargo run --example gradient_oracle
//! ```

use spinorium::relations::{catalog, eval_rhs, find_entry};
use spinorium::verify::{gradient_fd_residual, seeded_rng, RadialProfile};
use spinorium::{HalfInt, RadialJet, SpectralField, SpinorIndex};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = seeded_rng();
    let residual = gradient_fd_residual(50, &mut rng);
    println!("gradient vs 3-D finite differences over 50 random points: {residual:.2e}");

    // the same jet drives both sides of a gradient relation: here σ·∇ F Ω_κμ
    let entries = catalog();
    let entry = find_entry(&entries, "3.3.5").expect("catalog id exists");
    let index = SpinorIndex::new(-2, HalfInt::HALF)?;
    let profile = RadialProfile::RSquaredExp;
    println!("\nsigma·nabla on F(r) {index} with F = r^2 e^(-r):");
    for r in [0.5, 1.0, 2.0] {
        let jet = profile.jet(r, index.l());
        let lhs = entry.variants[0]
            .lhs
            .apply(&SpectralField::from_spinor(index, jet))?;
        let rhs = eval_rhs(&entry.variants[0], index.kappa(), index.mu(), &jet);
        println!(
            "  r = {r:3}: residual {:.2e} over {} spectral terms",
            lhs.max_difference(&rhs),
            lhs.len()
        );
    }

    // jets carry exactly two derivative orders
    let jet = RadialJet::new(
        1.0,
        0.36787944117144233,
        0.36787944117144233,
        -0.36787944117144233,
    )?;
    println!(
        "\njet at r=1: F = {:.6}, F' = {:.6}, F'' = {:.6}",
        jet.f, jet.f1, jet.f2
    );

    Ok(())
}
