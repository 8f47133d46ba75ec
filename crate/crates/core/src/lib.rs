//! Genuine multipartite entanglement (GME) concurrence toolkit.
//!
//! The crate covers four layers:
//!
//! - [`hilbert`]: mixed-radix indexing over `H_1 ⊗ … ⊗ H_N`, pure states and
//!   density matrices, partial traces, two-copy swap operators and the
//!   enumeration of bipartitions.
//! - [`concurrence`]: exact pure-state GME-concurrence, the coefficient
//!   (2×2-minor) form of the bipartite concurrences and the two-copy
//!   observable `B_γ` with `⟨φ⊗φ|B_γ|φ⊗φ⟩ = 1 − Tr ρ_γ²`.
//! - [`bounds`]: the three analytic lower bounds `F`, `L`, `T` for mixed
//!   states, each evaluated from density-matrix elements and from two-copy
//!   swap expectations.
//! - [`states`], [`oracle`], [`scan`], [`verify`]: named states and noise
//!   mixtures, seeded random generators, threshold bisection and region
//!   scans, and the reproduction manifest used by the `gme` binary.
//!
//! Site indices are 0-based in the API and 1-based in every human-facing
//! label (`{1,3}`, `ρ[10,11]`).

pub mod bounds;
pub mod concurrence;
mod error;
pub mod hilbert;
pub mod oracle;
pub mod report;
pub mod scan;
pub mod states;
pub mod verify;

pub use error::{Error, Result};

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;

/// Formats a float with 17 significant digits in exponent form (lossless, JSON- and CSV-safe).
pub fn fmt_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        x.to_string()
    }
}
