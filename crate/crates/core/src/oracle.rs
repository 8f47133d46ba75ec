//! Seeded random generators feeding the property and dominance suites.
//!
//! The stream is ChaCha8 seeded from a `u64`, so equal seeds reproduce equal
//! sequences on every platform. Unitaries come from a Gram–Schmidt (QR)
//! orthonormalization of a complex Gaussian matrix: approximately Haar,
//! which is enough for invariance tests.

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};

use crate::bounds::ProductFamily;
use crate::error::{domain, Result};
use crate::hilbert::{BasisString, Bipartition, DensityMatrix, Dims, PureState};
use crate::C64;

/// Name of the pseudo-random stream.
pub const ALGORITHM: &str = "ChaCha8";

/// Deterministic generator; one instance per test, never shared.
#[derive(Clone, Debug)]
pub struct SeededGenerator {
    seed: u64,
    rng: ChaCha8Rng,
}

impl SeededGenerator {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    fn normal(&mut self) -> f64 {
        StandardNormal.sample(&mut self.rng)
    }

    fn complex_normal(&mut self) -> C64 {
        C64::new(self.normal(), self.normal())
    }

    /// Uniform on the unit sphere of `C^D`.
    pub fn random_pure(&mut self, dims: &Dims) -> PureState {
        let amps = DVector::from_fn(dims.total(), |_, _| self.complex_normal());
        PureState::normalized(dims.clone(), amps).expect("Gaussian vector is nonzero almost surely")
    }

    /// Random pure state with complex Gaussian amplitudes on `support` only.
    pub fn random_pure_on(&mut self, dims: &Dims, support: &[usize]) -> Result<PureState> {
        let mut amps = DVector::zeros(dims.total());
        for &k in support {
            if k >= dims.total() {
                return domain(format!("support index {k} outside dimension {}", dims.total()));
            }
            amps[k] = self.complex_normal();
        }
        PureState::normalized(dims.clone(), amps)
    }

    /// `|φ_γ⟩ ⊗ |φ_γ'⟩` reassembled in the original site order.
    pub fn random_biseparable(&mut self, dims: &Dims, gamma: &Bipartition) -> Result<PureState> {
        if gamma.parties() != dims.parties() {
            return domain(format!("bipartition of {} parties for {} sites", gamma.parties(), dims.parties()));
        }
        let mask = gamma.mask();
        let da = dims.sub_total(gamma.sites());
        let db = dims.sub_total(&gamma.complement());
        let a = DVector::from_fn(da, |_, _| self.complex_normal());
        let b = DVector::from_fn(db, |_, _| self.complex_normal());
        let amps = DVector::from_fn(dims.total(), |k, _| {
            let (ia, ib) = dims.split_index(k, &mask);
            a[ia] * b[ib]
        });
        PureState::normalized(dims.clone(), amps)
    }

    /// Uniform point on the probability simplex with `k` vertices.
    pub fn random_simplex(&mut self, k: usize) -> Vec<f64> {
        let raw: Vec<f64> = (0..k).map(|_| Exp1.sample(&mut self.rng)).collect();
        let total: f64 = raw.iter().sum();
        raw.into_iter().map(|x| x / total).collect()
    }

    /// `ρ = Σ p_i |φ_i⟩⟨φ_i|` together with its generating decomposition.
    pub fn random_mixture(
        &mut self,
        dims: &Dims,
        components: usize,
    ) -> Result<(DensityMatrix, Vec<(f64, PureState)>)> {
        if components == 0 {
            return domain("a mixture needs at least one component");
        }
        let weights = self.random_simplex(components);
        let parts: Vec<(f64, PureState)> = weights.into_iter().map(|w| (w, self.random_pure(dims))).collect();
        let d = dims.total();
        let mut mat = DMatrix::<C64>::zeros(d, d);
        for (w, phi) in &parts {
            let v = phi.amplitudes();
            mat += v * v.adjoint() * C64::new(*w, 0.0);
        }
        Ok((DensityMatrix::new(dims.clone(), mat)?, parts))
    }

    /// One random `d × d` unitary.
    pub fn random_unitary(&mut self, d: usize) -> DMatrix<C64> {
        let g = DMatrix::from_fn(d, d, |_, _| self.complex_normal());
        g.qr().q()
    }

    /// One unitary per site.
    pub fn random_local_unitary(&mut self, dims: &Dims) -> Vec<DMatrix<C64>> {
        (0..dims.parties()).map(|s| self.random_unitary(dims.local(s))).collect()
    }

    /// Random base string with uniformly chosen replacement symbols.
    pub fn random_family(&mut self, dims: &Dims) -> ProductFamily {
        let base: Vec<usize> = (0..dims.parties()).map(|s| self.rng.random_range(0..dims.local(s))).collect();
        let replacement = base
            .iter()
            .enumerate()
            .map(|(s, &x)| (x + self.rng.random_range(1..dims.local(s))) % dims.local(s))
            .collect();
        ProductFamily::new(dims.clone(), BasisString::new(base), replacement)
            .expect("replacement differs from the base symbol by construction")
    }

    pub fn uniform(&mut self) -> f64 {
        self.rng.random()
    }
}
