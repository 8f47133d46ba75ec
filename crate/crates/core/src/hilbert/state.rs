use nalgebra::{DMatrix, DVector, SymmetricEigen};

use super::{Bipartition, Dims, EIGEN_FLOOR, STATE_TOL};
use crate::error::{domain, Error, Result};
use crate::C64;

/// Normalized pure state over a [`Dims`] profile.
#[derive(Clone, Debug, PartialEq)]
pub struct PureState {
    dims: Dims,
    amps: DVector<C64>,
}

impl PureState {
    /// Wraps amplitudes; the squared norm must be 1 within `1e-10`.
    pub fn new(dims: Dims, amps: DVector<C64>) -> Result<Self> {
        Self::with_tolerance(dims, amps, STATE_TOL)
    }

    pub(crate) fn with_tolerance(dims: Dims, amps: DVector<C64>, tol: f64) -> Result<Self> {
        if amps.len() != dims.total() {
            return Err(Error::DimensionMismatch {
                expected: format!("{} amplitudes", dims.total()),
                found: format!("{}", amps.len()),
            });
        }
        let norm2 = amps.norm_squared();
        if (norm2 - 1.0).abs() > tol {
            return domain(format!("squared norm {norm2} differs from 1"));
        }
        Ok(Self { dims, amps })
    }

    /// Normalizes `amps` before wrapping.
    pub fn normalized(dims: Dims, amps: DVector<C64>) -> Result<Self> {
        let norm = amps.norm();
        if norm == 0.0 || !norm.is_finite() {
            return domain("cannot normalize a zero or non-finite vector");
        }
        Self::new(dims, amps / C64::new(norm, 0.0))
    }

    /// Computational basis state `|s⟩`.
    pub fn basis(dims: Dims, s: &super::BasisString) -> Result<Self> {
        let k = dims.encode(s)?;
        let mut amps = DVector::zeros(dims.total());
        amps[k] = C64::new(1.0, 0.0);
        Ok(Self { dims, amps })
    }

    pub fn dims(&self) -> &Dims {
        &self.dims
    }

    pub fn amplitudes(&self) -> &DVector<C64> {
        &self.amps
    }

    pub fn amplitude(&self, k: usize) -> C64 {
        self.amps[k]
    }

    /// `|φ⟩⟨φ|`.
    pub fn to_density(&self) -> DensityMatrix {
        DensityMatrix {
            dims: self.dims.clone(),
            mat: &self.amps * self.amps.adjoint(),
        }
    }

    /// `|φ⟩ ⊗ |σ⟩` on the concatenated profile.
    pub fn tensor(&self, other: &PureState) -> Result<PureState> {
        let dims = Dims::new([self.dims.as_slice(), other.dims.as_slice()].concat())?;
        let amps = self.amps.kronecker(&other.amps);
        Ok(Self { dims, amps })
    }

    /// Coefficient matrix `M[a, b] = φ_(a on keep, b on the rest)`.
    fn coefficient_matrix(&self, keep: &[bool]) -> DMatrix<C64> {
        let rows: usize = (0..self.dims.parties())
            .filter(|&s| keep[s])
            .map(|s| self.dims.local(s))
            .product();
        let cols = self.dims.total() / rows;
        let mut m = DMatrix::zeros(rows, cols);
        for (k, amp) in self.amps.iter().enumerate() {
            let (a, b) = self.dims.split_index(k, keep);
            m[(a, b)] = *amp;
        }
        m
    }

    /// Reduced density matrix `ρ_γ = M M†` on the sites of `gamma`.
    pub fn reduced(&self, gamma: &Bipartition) -> Result<DMatrix<C64>> {
        if gamma.parties() != self.dims.parties() {
            return Err(mismatched_cut(gamma, &self.dims));
        }
        let m = self.coefficient_matrix(&gamma.mask());
        Ok(&m * m.adjoint())
    }

    /// Applies one unitary per site, `(U_1 ⊗ … ⊗ U_N)|φ⟩`.
    pub fn apply_local(&self, unitaries: &[DMatrix<C64>]) -> Result<PureState> {
        if unitaries.len() != self.dims.parties() {
            return Err(Error::DimensionMismatch {
                expected: format!("{} local operators", self.dims.parties()),
                found: format!("{}", unitaries.len()),
            });
        }
        let mut op = DMatrix::from_element(1, 1, C64::new(1.0, 0.0));
        for (site, u) in unitaries.iter().enumerate() {
            let d = self.dims.local(site);
            if u.nrows() != d || u.ncols() != d {
                return Err(Error::DimensionMismatch {
                    expected: format!("{d}x{d} operator at site {}", site + 1),
                    found: format!("{}x{}", u.nrows(), u.ncols()),
                });
            }
            op = op.kronecker(u);
        }
        Ok(Self {
            dims: self.dims.clone(),
            amps: op * &self.amps,
        })
    }
}

/// Hermitian, unit-trace density matrix over a [`Dims`] profile.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    dims: Dims,
    mat: DMatrix<C64>,
}

impl DensityMatrix {
    /// Checks shape, Hermiticity and unit trace (tolerance `1e-10`).
    /// Positivity is not checked here; see [`DensityMatrix::validate_positive`].
    pub fn new(dims: Dims, mat: DMatrix<C64>) -> Result<Self> {
        Self::with_tolerance(dims, mat, STATE_TOL)
    }

    pub(crate) fn with_tolerance(dims: Dims, mat: DMatrix<C64>, tol: f64) -> Result<Self> {
        let d = dims.total();
        if mat.nrows() != d || mat.ncols() != d {
            return Err(Error::DimensionMismatch {
                expected: format!("{d}x{d}"),
                found: format!("{}x{}", mat.nrows(), mat.ncols()),
            });
        }
        let herm = hermiticity_defect(&mat);
        if herm > tol {
            return domain(format!("matrix is not Hermitian (max defect {herm:e})"));
        }
        let tr = mat.trace();
        if (tr.re - 1.0).abs() > tol || tr.im.abs() > tol {
            return domain(format!("trace {tr} differs from 1"));
        }
        Ok(Self { dims, mat })
    }

    /// `I / D`.
    pub fn maximally_mixed(dims: Dims) -> Self {
        let d = dims.total();
        let mat = DMatrix::from_diagonal_element(d, d, C64::new(1.0 / d as f64, 0.0));
        Self { dims, mat }
    }

    pub fn dims(&self) -> &Dims {
        &self.dims
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.mat
    }

    /// Matrix element `ρ[r, c]` (0-based flat indices).
    pub fn element(&self, r: usize, c: usize) -> C64 {
        self.mat[(r, c)]
    }

    /// Real part of the diagonal element `ρ[k, k]`.
    pub fn diagonal(&self, k: usize) -> f64 {
        self.mat[(k, k)].re
    }

    /// Convex combination `Σ w_i ρ_i`; the weights must sum to 1.
    pub fn mixture(parts: &[(f64, &DensityMatrix)]) -> Result<Self> {
        let Some((_, first)) = parts.first() else {
            return domain("empty mixture");
        };
        let d = first.dims.total();
        let mut mat = DMatrix::zeros(d, d);
        for (w, rho) in parts {
            if rho.dims != first.dims {
                return Err(Error::DimensionMismatch {
                    expected: first.dims.to_string(),
                    found: rho.dims.to_string(),
                });
            }
            if *w < 0.0 {
                return domain(format!("negative mixture weight {w}"));
            }
            mat += &rho.mat * C64::new(*w, 0.0);
        }
        Self::new(first.dims.clone(), mat)
    }

    /// Opt-in positivity check: smallest eigenvalue `>= -1e-8`.
    pub fn validate_positive(&self) -> Result<()> {
        let min = self.min_eigenvalue();
        if min < EIGEN_FLOOR {
            return domain(format!("matrix is not positive semidefinite (eigenvalue {min:e})"));
        }
        Ok(())
    }

    pub fn min_eigenvalue(&self) -> f64 {
        SymmetricEigen::new(self.mat.clone())
            .eigenvalues
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }

    /// Reduced matrix on the sites in `keep` (0-based); the other sites are traced out.
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DMatrix<C64>> {
        let n = self.dims.parties();
        let mut mask = vec![false; n];
        for &s in keep {
            if s >= n {
                return domain(format!("site {} out of range for {n} parties", s + 1));
            }
            mask[s] = true;
        }
        let kept = mask.iter().filter(|&&m| m).count();
        if kept == 0 || kept == n {
            return domain("partial trace needs a nonempty proper subset of sites");
        }
        let dk: usize = (0..n).filter(|&s| mask[s]).map(|s| self.dims.local(s)).product();
        let dt = self.dims.total() / dk;
        // full[a * dt + t] = flat index of (kept digits a, traced digits t)
        let mut full = vec![0usize; self.dims.total()];
        for k in 0..self.dims.total() {
            let (a, t) = self.dims.split_index(k, &mask);
            full[a * dt + t] = k;
        }
        let mut out = DMatrix::zeros(dk, dk);
        for a in 0..dk {
            for b in 0..dk {
                out[(a, b)] = (0..dt)
                    .map(|t| self.mat[(full[a * dt + t], full[b * dt + t])])
                    .sum();
            }
        }
        Ok(out)
    }

    /// Reduced matrix on the canonical side of `gamma`.
    pub fn reduce(&self, gamma: &Bipartition) -> Result<DMatrix<C64>> {
        if gamma.parties() != self.dims.parties() {
            return Err(mismatched_cut(gamma, &self.dims));
        }
        self.partial_trace(gamma.sites())
    }

    /// `Tr ρ²`.
    pub fn purity(&self) -> f64 {
        frobenius_squared(&self.mat)
    }
}

fn mismatched_cut(gamma: &Bipartition, dims: &Dims) -> Error {
    Error::DimensionMismatch {
        expected: format!("bipartition of {} parties", dims.parties()),
        found: format!("bipartition of {} parties", gamma.parties()),
    }
}

pub(crate) fn hermiticity_defect(m: &DMatrix<C64>) -> f64 {
    let n = m.nrows();
    let mut worst = 0.0f64;
    for r in 0..n {
        for c in r..n {
            worst = worst.max((m[(r, c)] - m[(c, r)].conj()).norm());
        }
    }
    worst
}

fn frobenius_squared(m: &DMatrix<C64>) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum()
}

/// `Tr m²` of a Hermitian matrix, computed as its squared Frobenius norm.
pub fn purity(m: &DMatrix<C64>) -> Result<f64> {
    if m.nrows() != m.ncols() {
        return domain(format!("purity of a non-square {}x{} matrix", m.nrows(), m.ncols()));
    }
    Ok(frobenius_squared(m))
}
