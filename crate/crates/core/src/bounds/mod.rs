//! Analytic lower bounds on the GME-concurrence of mixed states.
//!
//! Every bound is available as an [`ElementExpr`] over density-matrix
//! elements (so it can be printed and compared term by term) and as a
//! direct evaluation from two-copy swap expectations. A strictly positive
//! value certifies genuine multipartite entanglement.

mod bound1;
mod bound2;
mod expr;
mod family;
mod huber;
mod vertex;

use std::fmt;
use std::str::FromStr;

pub use bound1::{bound1_expr, bound1_f, bound1_f_twocopy};
pub use bound2::{
    bound2_constant, bound2_expr, bound2_gme_lower, bound2_l, bound2_l_twocopy, bound2_total,
    bound2_total_expr,
};
pub use expr::{ElementExpr, Term};
pub use family::{search_family, ProductFamily};
pub use huber::{huber_eq3_example2, huber_ex2_expr, WDirection};
pub use vertex::{
    bound3_constant, bound3_expr, bound3_gme_lower, bound3_swap_pair, bound3_t, bound3_t_twocopy,
    S0Policy, SwapSite, VertexSet,
};

use crate::error::{Error, Result};
use crate::hilbert::DensityMatrix;

/// Margin above zero required to report detection, absorbing rounding at exact thresholds.
pub const DETECTION_TOL: f64 = 1e-12;

/// Strict detection: `value > 0` up to [`DETECTION_TOL`].
pub fn detected(value: f64) -> bool {
    value > DETECTION_TOL
}

/// Normalization constant for Bound 1.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ConstantMode {
    /// `√2 (N−1)`, as in the statement of the bound.
    Stated,
    /// `2 √(N−1)`, as reached by the pure-state argument; equal to `Stated` at `N = 3`.
    #[default]
    Proof,
}

impl ConstantMode {
    pub fn bound1_constant(self, n: usize) -> f64 {
        let n = n as f64;
        match self {
            ConstantMode::Stated => std::f64::consts::SQRT_2 * (n - 1.0),
            ConstantMode::Proof => 2.0 * (n - 1.0).sqrt(),
        }
    }
}

impl FromStr for ConstantMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "stated" => Ok(ConstantMode::Stated),
            "proof" => Ok(ConstantMode::Proof),
            other => Err(Error::Parse {
                location: "constant".into(),
                message: format!("expected stated or proof, found {other:?}"),
            }),
        }
    }
}

/// `max(0, F / k)` for a precomputed `F` on `n` parties.
pub fn bound1_lower_from_value(f: f64, n: usize, mode: ConstantMode) -> f64 {
    (f / mode.bound1_constant(n)).max(0.0)
}

/// Lower bound on `C_GME(ρ)` from Bound 1.
pub fn bound1_gme_lower(rho: &DensityMatrix, fam: &ProductFamily, mode: ConstantMode) -> Result<f64> {
    let f = bound1_f(rho, fam)?;
    Ok(bound1_lower_from_value(f, fam.parties(), mode))
}

/// A bound together with the structure it is evaluated on.
#[derive(Clone, Debug)]
pub enum BoundSpec {
    Bound1(ProductFamily),
    /// Total `Σ_i L(ρ, ψ_i)`.
    Bound2(ProductFamily),
    Bound3(VertexSet),
    HuberEx2(WDirection),
}

impl BoundSpec {
    /// Raw bound value; positive means GME is detected.
    pub fn evaluate(&self, rho: &DensityMatrix) -> Result<f64> {
        match self {
            BoundSpec::Bound1(fam) => bound1_f(rho, fam),
            BoundSpec::Bound2(fam) => bound2_total(rho, fam),
            BoundSpec::Bound3(v) => bound3_t(rho, v),
            BoundSpec::HuberEx2(dir) => huber_eq3_example2(rho, *dir),
        }
    }

    pub fn expression(&self) -> Result<ElementExpr> {
        match self {
            BoundSpec::Bound1(fam) => bound1_expr(fam),
            BoundSpec::Bound2(fam) => bound2_total_expr(fam),
            BoundSpec::Bound3(v) => bound3_expr(v, SwapSite::First),
            BoundSpec::HuberEx2(dir) => Ok(huber_ex2_expr(*dir)),
        }
    }

    /// Constant `k` in `value ≤ k · C_GME(ρ)`.
    pub fn constant(&self, mode: ConstantMode) -> f64 {
        match self {
            BoundSpec::Bound1(fam) => mode.bound1_constant(fam.parties()),
            BoundSpec::Bound2(fam) => bound2_constant(fam.parties()),
            BoundSpec::Bound3(v) => bound3_constant(v),
            BoundSpec::HuberEx2(_) => mode.bound1_constant(5),
        }
    }

    /// `max(0, value / k)`.
    pub fn gme_lower(&self, rho: &DensityMatrix, mode: ConstantMode) -> Result<f64> {
        Ok((self.evaluate(rho)? / self.constant(mode)).max(0.0))
    }
}

impl fmt::Display for BoundSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundSpec::Bound1(fam) => write!(f, "bound1 family {fam}"),
            BoundSpec::Bound2(fam) => write!(f, "bound2 family {fam}"),
            BoundSpec::Bound3(v) => write!(f, "bound3 vertices {v}"),
            BoundSpec::HuberEx2(d) => write!(f, "huber-ex2 direction {d}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn constants() {
        let s = ConstantMode::Stated.bound1_constant(3);
        let p = ConstantMode::Proof.bound1_constant(3);
        assert_abs_diff_eq!(s, 2.0 * std::f64::consts::SQRT_2, epsilon = 1e-15);
        assert_abs_diff_eq!(p, 2.0 * std::f64::consts::SQRT_2, epsilon = 1e-15);
        assert_abs_diff_eq!(bound1_lower_from_value(4.0, 5, ConstantMode::Stated), 0.5f64.sqrt(), epsilon = 1e-15);
        assert_abs_diff_eq!(bound1_lower_from_value(4.0, 5, ConstantMode::Proof), 1.0, epsilon = 1e-15);
        assert_eq!(bound1_lower_from_value(-0.3, 4, ConstantMode::Proof), 0.0);
    }
}
