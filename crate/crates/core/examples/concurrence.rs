//! Pure-state GME concurrence and the observable B_γ on a W state.

use gme_bounds::concurrence::{build_observable_b, c_gamma_squared, c_gme_pure};
use gme_bounds::hilbert::enumerate_bipartitions;
use gme_bounds::states::NamedState;

fn main() -> gme_bounds::Result<()> {
    let phi = NamedState::W { n: 3 }.build()?;
    let c = c_gme_pure(&phi)?;
    println!("W3: C_GME = {:.6}  (minimizing cut {})", c.value, c.cut);
    for gamma in enumerate_bipartitions(3)? {
        let b = build_observable_b(&gamma, phi.dims())?;
        println!("  cut {gamma}: C² = {:.6}, <B> = {:.6}", c_gamma_squared(&phi, &gamma)?, b.expectation(&phi)?);
    }
    Ok(())
}
