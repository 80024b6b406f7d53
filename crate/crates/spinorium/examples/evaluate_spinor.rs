//! Evaluate spherical spinors and inspect their product-basis structure.
//!
//! ```bash
//! cargo run --example evaluate_spinor
//! ```

use spinorium::spinors::{coupling_coeffs, eval_spinor, spinor_to_product_basis};
use spinorium::{Direction, HalfInt, SpinorIndex};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Ω_(κ=-1, μ=+1/2) is the simplest spinor: a pure Y_00 in the upper
    // component, constant over the whole sphere.
    let ground = SpinorIndex::new(-1, HalfInt::HALF)?;
    let dir = Direction::new(1.0, 0.3)?;
    let value = eval_spinor(ground, dir);
    println!("{ground} at (theta=1.0, phi=0.3):");
    println!("  up   = {:.10}", value.up);
    println!("  down = {:.10}", value.down);

    // A κ > 0 spinor couples two harmonics; the radicals are Clebsch-Gordan
    // factors and the 2x2 coupling block is orthogonal.
    let p_half = SpinorIndex::new(1, HalfInt::HALF)?;
    let c = coupling_coeffs(p_half);
    println!(
        "\n{p_half} coupling: c_up = {:+.6}, c_down = {:+.6}",
        c.c_up, c.c_down
    );
    println!(
        "  normalization: c_up^2 + c_down^2 = {}",
        c.c_up * c.c_up + c.c_down * c.c_down
    );

    println!("\nproduct-basis expansion of {p_half}:");
    for (spin, harmonic, coeff) in spinor_to_product_basis(p_half) {
        println!(
            "  {spin:?}  Y(l={}, m={})  coefficient {coeff:+.6}",
            harmonic.l(),
            harmonic.m()
        );
    }

    // index dictionary: κ encodes both j and l
    for kappa in [-3, -2, -1, 1, 2, 3] {
        let idx = SpinorIndex::new(kappa, HalfInt::HALF)?;
        println!("kappa = {kappa:+}: l = {}, j = {}", idx.l(), idx.j());
    }

    Ok(())
}
