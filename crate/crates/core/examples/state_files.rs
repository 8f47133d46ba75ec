//! Writing and reading state files, pure and mixed.

use gme_bounds::states::{load_state, save_state, white_noise_mix, NamedState, StateFile};

fn main() -> gme_bounds::Result<()> {
    let dir = std::env::temp_dir();
    let phi = NamedState::Ghz { n: 3, d: 3 }.build()?;
    let rho = white_noise_mix(&phi, 0.75)?;
    for (name, file) in [("ghz.json", StateFile::from(phi)), ("ghz_noisy.json", StateFile::from(rho))] {
        let path = dir.join(name);
        save_state(&path, &file)?;
        let back = load_state(&path)?;
        println!("{}: dims {}, exact round trip: {}", path.display(), back.dims(), back == file);
    }
    Ok(())
}
