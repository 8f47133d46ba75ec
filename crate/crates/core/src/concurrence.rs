//! Pure-state GME-concurrence and the two-copy observable `B_γ`.
//!
//! For a pure state `φ` and a cut `γ|γ'`, `C_γ²(φ) = 1 − Tr ρ_γ²`, and
//! `C_GME(φ) = √(min_γ C_γ²(φ))`. The same quantity is available in three
//! independent forms: the reduced-matrix purity, the sum of squared 2×2
//! minors of the coefficient tensor, and the expectation of `B_γ` on the
//! doubled state `|φ⟩⊗|φ⟩`.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};
use crate::hilbert::{
    enumerate_bipartitions, purity, BasisString, Bipartition, Dims, PureState, TwoCopySwap,
    MATERIALIZE_LIMIT,
};
use crate::C64;

/// `C_γ²(φ) = 1 − Tr ρ_γ²`.
pub fn c_gamma_squared(phi: &PureState, gamma: &Bipartition) -> Result<f64> {
    let reduced = phi.reduced(gamma)?;
    Ok(1.0 - purity(&reduced)?)
}

/// Value of `C_GME` for a pure state together with the minimizing cut.
#[derive(Clone, Debug, PartialEq)]
pub struct GmeConcurrence {
    pub value: f64,
    pub squared: f64,
    /// First minimizing cut in [`enumerate_bipartitions`] order.
    pub cut: Bipartition,
}

/// `C_GME(φ) = √(min_γ C_γ²(φ))` by exhaustive minimization over all cuts.
pub fn c_gme_pure(phi: &PureState) -> Result<GmeConcurrence> {
    let cuts = enumerate_bipartitions(phi.dims().parties())?;
    let mut best: Option<(f64, Bipartition)> = None;
    for cut in cuts {
        let c2 = c_gamma_squared(phi, &cut)?;
        if best.as_ref().is_none_or(|(b, _)| c2 < *b) {
            best = Some((c2, cut));
        }
    }
    let (squared, cut) = best.expect("at least one bipartition");
    // rounding can push 1 − Tr ρ² slightly below zero for product states
    let squared = squared.max(0.0);
    Ok(GmeConcurrence {
        value: squared.sqrt(),
        squared,
        cut,
    })
}

/// Exchanges the digits inside `γ` between `I` and `J'`, returning `(I', J)`.
pub fn swap_index_pair(
    i: &BasisString,
    j_prime: &BasisString,
    gamma: &Bipartition,
) -> (BasisString, BasisString) {
    let mut i_prime = i.clone();
    let mut j = j_prime.clone();
    for &s in gamma.sites() {
        i_prime = i_prime.with(s, j_prime.digits()[s]);
        j = j.with(s, i.digits()[s]);
    }
    (i_prime, j)
}

/// `C_γ²` from the coefficient form `½ Σ_(I,J') |φ_I φ_J' − φ_I' φ_J|²`.
///
/// The sum runs over all ordered pairs `(I, J')`; each unordered minor
/// appears four times in it, so half of it equals `2 Σ_minors |·|²`.
pub fn c_gamma_squared_coeff(phi: &PureState, gamma: &Bipartition) -> Result<f64> {
    let dims = phi.dims();
    check_cut(gamma, dims)?;
    let d = dims.total();
    let swap = TwoCopySwap::sites(dims, gamma.sites())?;
    let mut sum = 0.0;
    for i in 0..d {
        let a = phi.amplitude(i);
        for jp in 0..d {
            let (ip, j) = swap.apply_basis(i, jp);
            sum += (a * phi.amplitude(jp) - phi.amplitude(ip) * phi.amplitude(j)).norm_sqr();
        }
    }
    Ok(0.5 * sum)
}

fn check_cut(gamma: &Bipartition, dims: &Dims) -> Result<()> {
    if gamma.parties() != dims.parties() {
        return Err(Error::DimensionMismatch {
            expected: format!("bipartition of {} parties", dims.parties()),
            found: format!("bipartition of {} parties", gamma.parties()),
        });
    }
    Ok(())
}

/// Two-copy observable with `⟨φ⊗φ| B_γ |φ⊗φ⟩ = C_γ²(φ)` for normalized `φ`.
#[derive(Clone, Debug)]
pub struct ObservableB {
    gamma: Bipartition,
    dims: Dims,
    matrix: DMatrix<C64>,
}

/// Materializes `B_γ = Σ_(I,J') |I J'⟩⟨I J'| − Σ_(I,J') |I' J⟩⟨I J'|` on `H ⊗ H`.
///
/// Refused when `D² > 4096`; use [`c_gamma_squared_coeff`] there.
pub fn build_observable_b(gamma: &Bipartition, dims: &Dims) -> Result<ObservableB> {
    check_cut(gamma, dims)?;
    let d = dims.total();
    let dd = d * d;
    if dd > MATERIALIZE_LIMIT {
        return Err(Error::TooLarge {
            dim: dd,
            limit: MATERIALIZE_LIMIT,
        });
    }
    let mut matrix = DMatrix::<C64>::identity(dd, dd);
    for i in 0..d {
        let si = dims.decode_digits(i);
        for jp in 0..d {
            let sj = dims.decode_digits(jp);
            let (mut ip, mut j) = (si.clone(), sj.clone());
            for &s in gamma.sites() {
                ip[s] = sj[s];
                j[s] = si[s];
            }
            let row = dims.encode_digits(&ip) * d + dims.encode_digits(&j);
            matrix[(row, i * d + jp)] -= C64::new(1.0, 0.0);
        }
    }
    Ok(ObservableB {
        gamma: gamma.clone(),
        dims: dims.clone(),
        matrix,
    })
}

impl ObservableB {
    pub fn gamma(&self) -> &Bipartition {
        &self.gamma
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.matrix
    }

    /// `⟨φ⊗φ| B_γ |φ⊗φ⟩`.
    pub fn expectation(&self, phi: &PureState) -> Result<f64> {
        if phi.dims() != &self.dims {
            return Err(Error::DimensionMismatch {
                expected: self.dims.to_string(),
                found: phi.dims().to_string(),
            });
        }
        let doubled = phi.amplitudes().kronecker(phi.amplitudes());
        Ok(doubled.dotc(&(&self.matrix * &doubled)).re)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        hermitian_within(&self.matrix, tol)
    }

    /// Smallest eigenvalue (dense Hermitian eigendecomposition).
    pub fn min_eigenvalue(&self) -> f64 {
        SymmetricEigen::new(self.matrix.clone())
            .eigenvalues
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }
}

fn hermitian_within(m: &DMatrix<C64>, tol: f64) -> bool {
    let n = m.nrows();
    (0..n).all(|r| (r..n).all(|c| (m[(r, c)] - m[(c, r)].conj()).norm() <= tol))
}
