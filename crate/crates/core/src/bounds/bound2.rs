use super::expr::{ElementExpr, Term};
use super::family::ProductFamily;
use crate::error::{domain, Result};
use crate::hilbert::{DensityMatrix, TwoCopySwap};

fn require_four(fam: &ProductFamily, site: Option<usize>) -> Result<usize> {
    let n = fam.parties();
    if n < 4 {
        return domain(format!("Bound 2 needs at least four parties, got {n}"));
    }
    if let Some(i) = site {
        if i >= n {
            return domain(format!("site {} out of range for {n} parties", i + 1));
        }
    }
    Ok(n)
}

/// Matrix-element form of `L(ρ, ψ_i)` for the family rooted at `c_i`:
/// `Σ_(j≠k; j,k≠i) (|ρ[c_ij,c_ik]| − √(ρ[c_i,c_i] ρ[c_ijk,c_ijk])) − (N−3) Σ_(j≠i) ρ[c_ij,c_ij]`.
pub fn bound2_expr(fam: &ProductFamily, site: usize) -> Result<ElementExpr> {
    let n = require_four(fam, Some(site))?;
    let ci = fam.index(&[site]);
    let others: Vec<usize> = (0..n).filter(|&j| j != site).collect();
    let mut e = ElementExpr::new();
    for &j in &others {
        for &k in others.iter().filter(|&&k| k != j) {
            e.add(Term::abs(fam.index(&[site, j]), fam.index(&[site, k])), 1.0);
            e.add(Term::sqrt_diag(ci, fam.index(&[site, j, k])), -1.0);
        }
        e.add(Term::Diag(fam.index(&[site, j])), -((n - 3) as f64));
    }
    Ok(e)
}

/// Matrix-element form of `Σ_i L(ρ, ψ_i)`.
pub fn bound2_total_expr(fam: &ProductFamily) -> Result<ElementExpr> {
    let n = require_four(fam, None)?;
    let mut total = ElementExpr::new();
    for i in 0..n {
        for (t, c) in bound2_expr(fam, i)?.terms() {
            total.add(t, c);
        }
    }
    Ok(total)
}

/// `L(ρ, ψ_i)` from density-matrix elements.
pub fn bound2_l(rho: &DensityMatrix, fam: &ProductFamily, site: usize) -> Result<f64> {
    fam.check_state(rho)?;
    Ok(bound2_expr(fam, site)?.evaluate(rho))
}

/// `L(ρ, ψ_i)` from two-copy expectations with `Ψ_(i_l i_m) = |c_il⟩|c_im⟩`.
pub fn bound2_l_twocopy(rho: &DensityMatrix, fam: &ProductFamily, site: usize) -> Result<f64> {
    fam.check_state(rho)?;
    let n = require_four(fam, Some(site))?;
    let dims = fam.dims();
    let full = TwoCopySwap::full(dims);
    let mut value = 0.0;
    for l in (0..n).filter(|&l| l != site) {
        let p_l = TwoCopySwap::site(dims, l)?;
        let cil = fam.index(&[site, l]);
        for m in (0..n).filter(|&m| m != site && m != l) {
            let cim = fam.index(&[site, m]);
            value += full.expect_right(rho, cil, cim).re.max(0.0).sqrt();
            value -= p_l.expect_conjugated(rho, cil, cim).re.max(0.0).sqrt();
        }
        value -= (n - 3) as f64 * p_l.expect_conjugated(rho, cil, cil).re.max(0.0).sqrt();
    }
    Ok(value)
}

/// `Σ_i L(ρ, ψ_i)`.
pub fn bound2_total(rho: &DensityMatrix, fam: &ProductFamily) -> Result<f64> {
    let n = require_four(fam, None)?;
    (0..n).map(|i| bound2_l(rho, fam, i)).sum()
}

/// `max(0, Σ_i L / (2√(N−2)))`.
pub fn bound2_gme_lower(rho: &DensityMatrix, fam: &ProductFamily) -> Result<f64> {
    let total = bound2_total(rho, fam)?;
    Ok((total / bound2_constant(fam.parties())).max(0.0))
}

/// `2√(N−2)`.
pub fn bound2_constant(n: usize) -> f64 {
    2.0 * ((n as f64) - 2.0).sqrt()
}
