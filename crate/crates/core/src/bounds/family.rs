use std::fmt;

use itertools::Itertools;

use crate::error::{domain, Error, Result};
use crate::hilbert::{BasisString, DensityMatrix, Dims, PureState};

/// Base product string `c₀ = x₁…x_N` with one replacement symbol `x_i' ≠ x_i` per site.
///
/// `c_i`, `c_ij`, `c_ijk` replace the symbols at one, two or three distinct sites.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductFamily {
    dims: Dims,
    base: BasisString,
    replacement: Vec<usize>,
}

impl ProductFamily {
    pub fn new(dims: Dims, base: BasisString, replacement: Vec<usize>) -> Result<Self> {
        dims.check(&base)?;
        if replacement.len() != dims.parties() {
            return Err(Error::DimensionMismatch {
                expected: format!("{} replacement symbols", dims.parties()),
                found: replacement.len().to_string(),
            });
        }
        for (site, (&x, &y)) in base.digits().iter().zip(&replacement).enumerate() {
            if y >= dims.local(site) {
                return domain(format!("replacement {y} at site {} exceeds radix {}", site + 1, dims.local(site)));
            }
            if x == y {
                return domain(format!("replacement at site {} equals the base symbol {x}", site + 1));
            }
        }
        Ok(Self {
            dims,
            base,
            replacement,
        })
    }

    /// Replacement `x_i' = x_i + 1 (mod d_i)`; bit flips on qubits.
    pub fn shifted(dims: Dims, base: BasisString) -> Result<Self> {
        dims.check(&base)?;
        let replacement = base
            .digits()
            .iter()
            .enumerate()
            .map(|(s, &x)| (x + 1) % dims.local(s))
            .collect();
        Self::new(dims, base, replacement)
    }

    /// Parses `"DIGITS/REPLACEMENTS"` (e.g. `"011/122"`) or `"DIGITS"` (shifted replacements).
    pub fn parse(dims: &Dims, spec: &str) -> Result<Self> {
        match spec.split_once('/') {
            Some((base, rep)) => {
                let base: BasisString = base.parse()?;
                let rep: BasisString = rep.parse()?;
                Self::new(dims.clone(), base, rep.digits().to_vec())
            }
            None => Self::shifted(dims.clone(), spec.parse()?),
        }
    }

    pub fn dims(&self) -> &Dims {
        &self.dims
    }

    pub fn parties(&self) -> usize {
        self.dims.parties()
    }

    pub fn base(&self) -> &BasisString {
        &self.base
    }

    pub fn replacement(&self) -> &[usize] {
        &self.replacement
    }

    /// String with the symbols at `sites` replaced.
    pub fn string(&self, sites: &[usize]) -> BasisString {
        sites
            .iter()
            .fold(self.base.clone(), |s, &site| s.with(site, self.replacement[site]))
    }

    /// Flat index of [`ProductFamily::string`].
    pub fn index(&self, sites: &[usize]) -> usize {
        self.dims.encode_digits(self.string(sites).digits())
    }

    pub(crate) fn check_state(&self, rho: &DensityMatrix) -> Result<()> {
        if rho.dims() != &self.dims {
            return Err(Error::DimensionMismatch {
                expected: self.dims.to_string(),
                found: rho.dims().to_string(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for ProductFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.base, BasisString::new(self.replacement.clone()))
    }
}

/// Exhaustive search for the family maximizing Bound 1 on `rho`.
///
/// Candidates are every base string (restricted, when `support` is given, to
/// strings at Hamming distance 1 from a basis string in the support of that
/// pure state) combined with every admissible replacement assignment. Ties
/// keep the first candidate in lexicographic order.
pub fn search_family(
    rho: &DensityMatrix,
    support: Option<&PureState>,
) -> Result<(ProductFamily, f64)> {
    let dims = rho.dims().clone();
    let support_strings: Option<Vec<BasisString>> = support.map(|phi| {
        (0..dims.total())
            .filter(|&k| phi.amplitude(k).norm() > 1e-12)
            .map(|k| BasisString::new(dims.decode_digits(k)))
            .collect()
    });
    let mut best: Option<(ProductFamily, f64)> = None;
    for k in 0..dims.total() {
        let base = BasisString::new(dims.decode_digits(k));
        if let Some(sup) = &support_strings {
            if !sup.iter().any(|s| s.hamming(&base) == 1) {
                continue;
            }
        }
        let choices = (0..dims.parties())
            .map(|s| (0..dims.local(s)).filter(|&y| y != base.digits()[s]).collect::<Vec<_>>())
            .multi_cartesian_product();
        for replacement in choices {
            let fam = ProductFamily::new(dims.clone(), base.clone(), replacement)?;
            let value = super::bound1_f(rho, &fam)?;
            if best.as_ref().is_none_or(|(_, b)| value > *b) {
                best = Some((fam, value));
            }
        }
    }
    best.ok_or_else(|| Error::Domain("no candidate base string near the support".into()))
}
