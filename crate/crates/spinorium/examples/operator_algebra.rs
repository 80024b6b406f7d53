//! Build operator expressions and apply them to spinor fields with the
//! spectral engine.
//!
//! ```bash
//! cargo run --example operator_algebra
//! ```

use spinorium::spectral::{OperatorExpr, VectorExpr, VectorOp};
use spinorium::{HalfInt, RadialJet, SpectralField, SpinorIndex};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let atom = VectorExpr::atom;
    let cross = VectorExpr::cross;
    let dot = OperatorExpr::dot;

    let index = SpinorIndex::new(2, HalfInt::HALF)?;
    let field = SpectralField::from_spinor(index, RadialJet::unit(1.0));

    // σ·L has the eigenvalue -(κ+1) on spinor fields
    let sigma_dot_l = dot(atom(VectorOp::Sigma), atom(VectorOp::Orbital));
    let out = sigma_dot_l.apply(&field)?;
    println!("sigma·L on {index}:");
    for term in out.terms() {
        println!(
            "  {:?} Y(l={}, m={}) -> {:+.6}",
            term.spin,
            term.harmonic.l(),
            term.harmonic.m(),
            term.amplitude
        );
    }
    println!(
        "  (expected: -(kappa+1) = {} times the source field)\n",
        -(index.kappa() + 1)
    );

    // operator order is observable: n·(σ×L) and (σ×L)·n differ because the
    // rightmost factor acts on the field first
    let sigma_cross_l = cross(atom(VectorOp::Sigma), atom(VectorOp::Orbital));
    let n_last = dot(atom(VectorOp::Direction), sigma_cross_l.clone());
    let n_first = dot(sigma_cross_l, atom(VectorOp::Direction));
    let image = SpectralField::from_spinor(
        SpinorIndex::new(-index.kappa(), index.mu())?,
        RadialJet::unit(1.0),
    );
    let reference = image.terms().next().expect("image field is nonempty");
    for (label, expr, expected) in [
        ("n·(sigma×L)", &n_last, index.kappa() + 1),
        ("(sigma×L)·n", &n_first, index.kappa() - 1),
    ] {
        let out = expr.apply(&field)?;
        let ratio = out.amplitude(reference.spin, reference.harmonic) / reference.amplitude;
        println!("{label} {expr}: i*{expected} expected, engine gives {ratio:+.6}");
    }

    // the gradient consumes radial derivative orders; a third application
    // exhausts the jet and errors instead of fabricating data
    let f = SpectralField::from_spinor(index, RadialJet::new(1.0, 1.0, 0.5, 0.25)?);
    let laplacian = dot(atom(VectorOp::Nabla), atom(VectorOp::Nabla));
    let lap = laplacian.apply(&f)?;
    println!(
        "\nLaplacian of F(r) {index} has {} spectral terms",
        lap.len()
    );
    let third = dot(atom(VectorOp::Nabla), atom(VectorOp::Nabla)).apply(&lap);
    println!("applying two more gradients: {:?}", third.err());

    Ok(())
}
