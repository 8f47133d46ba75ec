use nalgebra::{DMatrix, DVector};

use super::{DensityMatrix, Dims};
use crate::error::{domain, Error, Result};
use crate::C64;

/// Largest two-copy dimension `D²` for which operators are materialized.
pub const MATERIALIZE_LIMIT: usize = 4096;

/// Permutation of `H ⊗ H` exchanging a subset of sites between the two copies.
///
/// `TwoCopySwap::full` is `Π = P_1 ∘ … ∘ P_N`; `TwoCopySwap::site(i)` is `P_i`.
/// The swaps act on basis pairs by index permutation; a dense matrix is only
/// built on request and only up to [`MATERIALIZE_LIMIT`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCopySwap {
    dims: Dims,
    swapped: Vec<bool>,
}

impl TwoCopySwap {
    pub fn full(dims: &Dims) -> Self {
        Self {
            dims: dims.clone(),
            swapped: vec![true; dims.parties()],
        }
    }

    pub fn site(dims: &Dims, site: usize) -> Result<Self> {
        Self::sites(dims, &[site])
    }

    /// Product of `P_i` over `sites`.
    pub fn sites(dims: &Dims, sites: &[usize]) -> Result<Self> {
        let mut swapped = vec![false; dims.parties()];
        for &s in sites {
            if s >= dims.parties() {
                return domain(format!("site {} out of range for {} parties", s + 1, dims.parties()));
            }
            swapped[s] = true;
        }
        Ok(Self {
            dims: dims.clone(),
            swapped,
        })
    }

    pub fn identity(dims: &Dims) -> Self {
        Self {
            dims: dims.clone(),
            swapped: vec![false; dims.parties()],
        }
    }

    pub fn dims(&self) -> &Dims {
        &self.dims
    }

    pub fn swapped_sites(&self) -> Vec<usize> {
        (0..self.swapped.len()).filter(|&s| self.swapped[s]).collect()
    }

    /// `self ∘ other`. Site swaps commute and are involutions, so this is a symmetric difference.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.dims != other.dims {
            return Err(Error::DimensionMismatch {
                expected: self.dims.to_string(),
                found: other.dims.to_string(),
            });
        }
        let swapped = self.swapped.iter().zip(&other.swapped).map(|(a, b)| a ^ b).collect();
        Ok(Self {
            dims: self.dims.clone(),
            swapped,
        })
    }

    /// Image of the basis pair `|u⟩|v⟩` (flat indices).
    pub fn apply_basis(&self, u: usize, v: usize) -> (usize, usize) {
        let mut a = self.dims.decode_digits(u);
        let mut b = self.dims.decode_digits(v);
        for (s, &sw) in self.swapped.iter().enumerate() {
            if sw {
                std::mem::swap(&mut a[s], &mut b[s]);
            }
        }
        (self.dims.encode_digits(&a), self.dims.encode_digits(&b))
    }

    /// Applies the permutation to a two-copy vector indexed `u * D + v`.
    pub fn apply_vector(&self, x: &DVector<C64>) -> Result<DVector<C64>> {
        let d = self.dims.total();
        if x.len() != d * d {
            return Err(Error::DimensionMismatch {
                expected: format!("two-copy vector of length {}", d * d),
                found: x.len().to_string(),
            });
        }
        let mut out = DVector::zeros(d * d);
        for u in 0..d {
            for v in 0..d {
                let (p, q) = self.apply_basis(u, v);
                out[p * d + q] = x[u * d + v];
            }
        }
        Ok(out)
    }

    /// Dense permutation matrix on `H ⊗ H`; refused above [`MATERIALIZE_LIMIT`].
    pub fn to_matrix(&self) -> Result<DMatrix<C64>> {
        let d = self.dims.total();
        let dd = d * d;
        if dd > MATERIALIZE_LIMIT {
            return Err(Error::TooLarge {
                dim: dd,
                limit: MATERIALIZE_LIMIT,
            });
        }
        let mut m = DMatrix::zeros(dd, dd);
        for u in 0..d {
            for v in 0..d {
                let (p, q) = self.apply_basis(u, v);
                m[(p * d + q, u * d + v)] = C64::new(1.0, 0.0);
            }
        }
        Ok(m)
    }

    /// `⟨u v| ρ⊗ρ S |u v⟩` for this swap `S`.
    pub fn expect_right(&self, rho: &DensityMatrix, u: usize, v: usize) -> C64 {
        let (p, q) = self.apply_basis(u, v);
        two_copy_element(rho, (u, v), (p, q))
    }

    /// `⟨u v| S† ρ⊗ρ S |u v⟩` for this swap `S`.
    pub fn expect_conjugated(&self, rho: &DensityMatrix, u: usize, v: usize) -> C64 {
        let (p, q) = self.apply_basis(u, v);
        two_copy_element(rho, (p, q), (p, q))
    }
}

/// `⟨a b| ρ⊗ρ |c d⟩ = ρ[a,c] ρ[b,d]`.
pub fn two_copy_element(rho: &DensityMatrix, bra: (usize, usize), ket: (usize, usize)) -> C64 {
    rho.element(bra.0, ket.0) * rho.element(bra.1, ket.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::BasisString;

    fn q(n: usize) -> Dims {
        Dims::qubits(n).unwrap()
    }

    fn idx(d: &Dims, s: &str) -> usize {
        d.encode(&s.parse::<BasisString>().unwrap()).unwrap()
    }

    #[test]
    fn full_swap_exchanges_copies() {
        let d = q(2);
        let pi = TwoCopySwap::full(&d);
        let (p, r) = pi.apply_basis(idx(&d, "01"), idx(&d, "10"));
        assert_eq!((p, r), (idx(&d, "10"), idx(&d, "01")));
        let u = idx(&d, "11");
        assert_eq!(pi.apply_basis(u, u), (u, u));
    }

    #[test]
    fn site_swap_moves_one_digit() {
        let d = q(2);
        let p1 = TwoCopySwap::site(&d, 0).unwrap();
        assert_eq!(p1.apply_basis(idx(&d, "10"), idx(&d, "00")), (idx(&d, "00"), idx(&d, "10")));
        assert!(TwoCopySwap::site(&d, 2).is_err());
    }

    #[test]
    fn composition_of_sites_is_full_swap() {
        let d = Dims::new(vec![2, 3, 2]).unwrap();
        let mut acc = TwoCopySwap::identity(&d);
        for s in 0..3 {
            acc = acc.compose(&TwoCopySwap::site(&d, s).unwrap()).unwrap();
        }
        assert_eq!(acc, TwoCopySwap::full(&d));
        let full = TwoCopySwap::full(&d).to_matrix().unwrap();
        let mut prod = DMatrix::identity(144, 144);
        for s in 0..3 {
            prod *= TwoCopySwap::site(&d, s).unwrap().to_matrix().unwrap();
        }
        assert_eq!(prod, full);
    }

    #[test]
    fn involution_and_commutation() {
        let d = Dims::new(vec![2, 2]).unwrap();
        let id = DMatrix::<C64>::identity(16, 16);
        let ops: Vec<_> = (0..2)
            .map(|s| TwoCopySwap::site(&d, s).unwrap().to_matrix().unwrap())
            .chain(std::iter::once(TwoCopySwap::full(&d).to_matrix().unwrap()))
            .collect();
        for m in &ops {
            assert_eq!(m * m, id);
            assert_eq!(m.adjoint(), *m);
        }
        assert_eq!(&ops[0] * &ops[1], &ops[1] * &ops[0]);
    }

    #[test]
    fn materialization_limit() {
        let d = Dims::qubits(7).unwrap();
        assert!(matches!(TwoCopySwap::full(&d).to_matrix(), Err(Error::TooLarge { .. })));
        assert!(TwoCopySwap::full(&Dims::qubits(6).unwrap()).to_matrix().is_ok());
    }

    #[test]
    fn swap_trace_identity() {
        // Tr(Π (A ⊗ B)) = Tr(AB)
        let d = q(2);
        let a = DMatrix::from_fn(4, 4, |r, c| C64::new((r + 2 * c) as f64 * 0.1, (r as f64) - 0.3 * c as f64));
        let b = DMatrix::from_fn(4, 4, |r, c| C64::new(0.7 - (r * c) as f64 * 0.05, 0.2 * (r + c) as f64));
        let pi = TwoCopySwap::full(&d).to_matrix().unwrap();
        let lhs = (pi * a.kronecker(&b)).trace();
        let rhs = (&a * &b).trace();
        assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn apply_vector_matches_matrix() {
        let d = Dims::new(vec![3, 2]).unwrap();
        let x = DVector::from_fn(36, |k, _| C64::new(k as f64, -(k as f64) * 0.5));
        let s = TwoCopySwap::site(&d, 1).unwrap();
        assert_eq!(s.apply_vector(&x).unwrap(), s.to_matrix().unwrap() * &x);
    }
}
