//! Human-readable evaluation report for a single bound.

use std::fmt;

use crate::bounds::{detected, BoundSpec, ConstantMode, ElementExpr};
use crate::error::Result;
use crate::fmt_f64;
use crate::hilbert::DensityMatrix;

#[derive(Clone, Debug)]
pub struct EvaluationReport {
    pub bound: String,
    pub value: f64,
    pub lower_stated: f64,
    pub lower_proof: f64,
    pub expression: ElementExpr,
}

impl EvaluationReport {
    /// GME is certified only for a strictly positive value.
    pub fn detected(&self) -> bool {
        detected(self.value)
    }
}

pub fn evaluate_report(rho: &DensityMatrix, bound: &BoundSpec) -> Result<EvaluationReport> {
    let value = bound.evaluate(rho)?;
    let lower = |mode| (value / bound.constant(mode)).max(0.0);
    Ok(EvaluationReport {
        bound: bound.to_string(),
        value,
        lower_stated: lower(ConstantMode::Stated),
        lower_proof: lower(ConstantMode::Proof),
        expression: bound.expression()?,
    })
}

impl fmt::Display for EvaluationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "bound: {}", self.bound)?;
        writeln!(f, "expression: {}", self.expression)?;
        writeln!(f, "value: {}", fmt_f64(self.value))?;
        writeln!(f, "C_GME lower bound (stated constant): {}", fmt_f64(self.lower_stated))?;
        writeln!(f, "C_GME lower bound (proof constant): {}", fmt_f64(self.lower_proof))?;
        write!(f, "verdict: {}", if self.detected() { "GME detected" } else { "not detected" })
    }
}
