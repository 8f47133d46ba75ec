//! Bound 2 per-site terms on the four-qubit Dicke state with noise.

use gme_bounds::bounds::{bound2_gme_lower, bound2_l, bound2_total, ProductFamily};
use gme_bounds::states::{white_noise_mix, NamedState};

fn main() -> gme_bounds::Result<()> {
    let phi = NamedState::Dicke { n: 4, k: 2 }.build()?;
    let fam = ProductFamily::parse(phi.dims(), "0000")?;
    for a in [0.5, 0.7, 1.0] {
        let rho = white_noise_mix(&phi, a)?;
        let l: Vec<String> = (0..4).map(|i| bound2_l(&rho, &fam, i).map(|x| format!("{x:.4}"))).collect::<Result<_, _>>()?;
        println!("a = {a}: L = [{}], total = {:.4}, C_GME >= {:.4}", l.join(", "), bound2_total(&rho, &fam)?, bound2_gme_lower(&rho, &fam)?);
    }
    Ok(())
}
