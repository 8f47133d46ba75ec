//! Seeded random states: Haar pure states, biseparable states and mixtures.

use gme_bounds::concurrence::c_gme_pure;
use gme_bounds::hilbert::{Bipartition, Dims};
use gme_bounds::oracle::{SeededGenerator, ALGORITHM};

fn main() -> gme_bounds::Result<()> {
    let dims = Dims::new(vec![2, 3, 2])?;
    let mut g = SeededGenerator::new(7);
    println!("{ALGORITHM}, seed {}", g.seed());
    let phi = g.random_pure(&dims);
    println!("Haar:        C_GME = {:.6}", c_gme_pure(&phi)?.value);
    let cut = Bipartition::new(&[1], 3)?;
    let sep = g.random_biseparable(&dims, &cut)?;
    println!("product {cut}: C_GME² = {:.2e}", c_gme_pure(&sep)?.squared);
    let (rho, parts) = g.random_mixture(&dims, 3)?;
    println!("mixture of {}: purity {:.4}", parts.len(), rho.purity());
    Ok(())
}
