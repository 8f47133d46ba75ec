//! White-noise detection threshold by bisection.

use gme_bounds::bounds::{BoundSpec, VertexSet};
use gme_bounds::scan::{noise_threshold, Threshold, THRESHOLD_TOL};
use gme_bounds::states::NamedState;

fn main() -> gme_bounds::Result<()> {
    let phi = NamedState::Example5.build()?;
    let spec = BoundSpec::Bound3(VertexSet::parse(phi.dims(), "1100,1001,1010,0110")?);
    match noise_threshold(&phi, &spec, 0.0, 1.0, THRESHOLD_TOL)? {
        Threshold::Found { critical, bracket } => println!("a* = {critical:.12} in [{:.12}, {:.12}]", bracket.0, bracket.1),
        Threshold::None { .. } => println!("no threshold on [0, 1]"),
    }
    Ok(())
}
