//! Bound 1 on a noisy W state: fixed family, searched family, both constants.

use gme_bounds::bounds::{bound1_expr, bound1_f, search_family, ConstantMode, ProductFamily};
use gme_bounds::states::{white_noise_mix, NamedState};

fn main() -> gme_bounds::Result<()> {
    let phi = NamedState::W { n: 3 }.build()?;
    let rho = white_noise_mix(&phi, 0.9)?;
    let fam = ProductFamily::parse(phi.dims(), "000")?;
    println!("F = {}", bound1_expr(&fam)?);
    let f = bound1_f(&rho, &fam)?;
    println!("F(ρ) = {f:.6}");
    for mode in [ConstantMode::Stated, ConstantMode::Proof] {
        println!("  {mode:?}: C_GME >= {:.6}", f.max(0.0) / mode.bound1_constant(3));
    }
    let (best, value) = search_family(&rho, None)?;
    println!("best family {best}: F = {value:.6}");
    Ok(())
}
