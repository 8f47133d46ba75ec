use super::expr::{ElementExpr, Term};
use super::family::ProductFamily;
use crate::error::{domain, Result};
use crate::hilbert::{DensityMatrix, TwoCopySwap};

fn require_three(fam: &ProductFamily) -> Result<usize> {
    let n = fam.parties();
    if n < 3 {
        return domain(format!("Bound 1 needs at least three parties, got {n}"));
    }
    Ok(n)
}

/// Matrix-element form of `F(ρ, ψ)`:
/// `Σ_(i≠j) |ρ[c_i,c_j]| − Σ_(i≠j) √(ρ[c₀,c₀] ρ[c_ij,c_ij]) − (N−2) Σ_i ρ[c_i,c_i]`.
pub fn bound1_expr(fam: &ProductFamily) -> Result<ElementExpr> {
    let n = require_three(fam)?;
    let c0 = fam.index(&[]);
    let mut e = ElementExpr::new();
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            e.add(Term::abs(fam.index(&[i]), fam.index(&[j])), 1.0);
            e.add(Term::sqrt_diag(c0, fam.index(&[i, j])), -1.0);
        }
        e.add(Term::Diag(fam.index(&[i])), -((n - 2) as f64));
    }
    Ok(e)
}

/// `F(ρ, ψ)` from density-matrix elements. Positive values certify GME.
pub fn bound1_f(rho: &DensityMatrix, fam: &ProductFamily) -> Result<f64> {
    fam.check_state(rho)?;
    Ok(bound1_expr(fam)?.evaluate(rho))
}

/// `F(ρ, ψ)` from two-copy expectations with `Ψ_ij = |c_i⟩|c_j⟩`:
/// `√⟨Ψ_ij|ρ⊗²Π|Ψ_ij⟩`, `√⟨Ψ_ij|P_i†ρ⊗²P_i|Ψ_ij⟩` and `√⟨Ψ_ii|P_i†ρ⊗²P_i|Ψ_ii⟩`.
pub fn bound1_f_twocopy(rho: &DensityMatrix, fam: &ProductFamily) -> Result<f64> {
    fam.check_state(rho)?;
    let n = require_three(fam)?;
    let dims = fam.dims();
    let full = TwoCopySwap::full(dims);
    let mut value = 0.0;
    for i in 0..n {
        let p_i = TwoCopySwap::site(dims, i)?;
        let ci = fam.index(&[i]);
        for j in (0..n).filter(|&j| j != i) {
            let cj = fam.index(&[j]);
            value += full.expect_right(rho, ci, cj).re.max(0.0).sqrt();
            value -= p_i.expect_conjugated(rho, ci, cj).re.max(0.0).sqrt();
        }
        value -= (n - 2) as f64 * p_i.expect_conjugated(rho, ci, ci).re.max(0.0).sqrt();
    }
    Ok(value)
}
