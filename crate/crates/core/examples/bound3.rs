//! Bound 3 on vertex sets: graph structure, expression and noisy evaluation.

use gme_bounds::bounds::{bound3_constant, bound3_expr, bound3_t, SwapSite, VertexSet};
use gme_bounds::states::{white_noise_mix, NamedState};

fn main() -> gme_bounds::Result<()> {
    let phi = NamedState::Example3.build()?;
    let v = VertexSet::parse(phi.dims(), "0011,0101,0110,1010")?;
    println!("s = {}, s0 = {}, constant = {:.4}", v.s(), v.s0(), bound3_constant(&v));
    println!("T = {}", bound3_expr(&v, SwapSite::First)?);
    for a in [0.6, 0.8, 1.0] {
        println!("a = {a}: T = {:.6}", bound3_t(&white_noise_mix(&phi, a)?, &v)?);
    }
    Ok(())
}
