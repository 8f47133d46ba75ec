//! Multipartite Hilbert spaces: indexing, states, partial traces, swap
//! operators and bipartitions.

mod state;
mod swap;

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{domain, Error, Result};

pub use state::{purity, DensityMatrix, PureState};
pub use swap::{two_copy_element, TwoCopySwap, MATERIALIZE_LIMIT};

/// Absolute tolerance for normalization and Hermiticity checks.
pub const STATE_TOL: f64 = 1e-10;
/// Smallest eigenvalue accepted by the opt-in positivity check.
pub const EIGEN_FLOOR: f64 = -1e-8;

/// Local dimensions `d_1..d_N` of a tensor-product space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dims(Vec<usize>);

impl Dims {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.len() < 2 {
            return domain(format!("need at least two subsystems, got {}", dims.len()));
        }
        if let Some(d) = dims.iter().find(|&&d| d < 2) {
            return domain(format!("local dimension {d} < 2"));
        }
        if dims.iter().try_fold(1usize, |acc, &d| acc.checked_mul(d)).is_none() {
            return domain("total dimension overflows");
        }
        Ok(Self(dims))
    }

    /// `n` parties of equal local dimension `d`.
    pub fn uniform(n: usize, d: usize) -> Result<Self> {
        Self::new(vec![d; n])
    }

    pub fn qubits(n: usize) -> Result<Self> {
        Self::uniform(n, 2)
    }

    /// Number of subsystems `N`.
    pub fn parties(&self) -> usize {
        self.0.len()
    }

    pub fn local(&self, site: usize) -> usize {
        self.0[site]
    }

    /// Total dimension `D = Π d_i`.
    pub fn total(&self) -> usize {
        self.0.iter().product()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Product of the local dimensions over `sites`.
    pub fn sub_total(&self, sites: &[usize]) -> usize {
        sites.iter().map(|&s| self.0[s]).product()
    }

    /// Flat 0-based index of a basis string, most significant digit first.
    pub fn encode(&self, s: &BasisString) -> Result<usize> {
        self.check(s)?;
        Ok(self.encode_digits(s.digits()))
    }

    /// Inverse of [`Dims::encode`].
    pub fn decode(&self, k: usize) -> Result<BasisString> {
        if k >= self.total() {
            return domain(format!("index {k} out of range for dimension {}", self.total()));
        }
        Ok(BasisString(self.decode_digits(k)))
    }

    /// Validates a basis string against these dimensions.
    pub fn check(&self, s: &BasisString) -> Result<()> {
        if s.len() != self.parties() {
            return Err(Error::DimensionMismatch {
                expected: format!("{} digits", self.parties()),
                found: format!("{} digits", s.len()),
            });
        }
        for (site, (&x, &d)) in s.digits().iter().zip(&self.0).enumerate() {
            if x >= d {
                return domain(format!("digit {x} at site {} exceeds radix {d}", site + 1));
            }
        }
        Ok(())
    }

    pub(crate) fn encode_digits(&self, digits: &[usize]) -> usize {
        digits.iter().zip(&self.0).fold(0, |acc, (&x, &d)| acc * d + x)
    }

    pub(crate) fn decode_digits(&self, mut k: usize) -> Vec<usize> {
        let mut digits = vec![0; self.parties()];
        for (slot, &d) in digits.iter_mut().zip(&self.0).rev() {
            *slot = k % d;
            k /= d;
        }
        digits
    }

    /// Splits a flat index into (index over `keep`, index over the remaining sites),
    /// each in mixed radix with the original site order.
    pub(crate) fn split_index(&self, k: usize, keep: &[bool]) -> (usize, usize) {
        let digits = self.decode_digits(k);
        let (mut a, mut b) = (0, 0);
        for ((&x, &d), &kept) in digits.iter().zip(&self.0).zip(keep) {
            if kept {
                a = a * d + x;
            } else {
                b = b * d + x;
            }
        }
        (a, b)
    }
}

impl fmt::Display for Dims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// 0-based flat index of `s` (free-function form of [`Dims::encode`]).
pub fn encode_index(s: &BasisString, dims: &Dims) -> Result<usize> {
    dims.encode(s)
}

/// Basis string of a flat index (free-function form of [`Dims::decode`]).
pub fn decode_index(k: usize, dims: &Dims) -> Result<BasisString> {
    dims.decode(k)
}

/// A computational basis string `|i_1 i_2 … i_N⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisString(Vec<usize>);

impl BasisString {
    pub fn new(digits: Vec<usize>) -> Self {
        Self(digits)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn digits(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Copy with the digit at `site` replaced.
    pub fn with(&self, site: usize, digit: usize) -> Self {
        let mut out = self.clone();
        out.0[site] = digit;
        out
    }

    /// Number of sites at which the strings differ.
    pub fn hamming(&self, other: &Self) -> usize {
        self.0.iter().zip(&other.0).filter(|(a, b)| a != b).count()
    }

    /// Sites (0-based, increasing) at which the strings differ.
    pub fn differing_sites(&self, other: &Self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] != other.0[i]).collect()
    }
}

impl FromStr for BasisString {
    type Err = Error;

    /// Parses one decimal digit per site, e.g. `"0110"`.
    fn from_str(s: &str) -> Result<Self> {
        let digits = s
            .trim()
            .chars()
            .enumerate()
            .map(|(pos, c)| {
                c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse {
                    location: format!("character {}", pos + 1),
                    message: format!("expected a digit in basis string {s:?}, found {c:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if digits.is_empty() {
            return Err(Error::Parse {
                location: "basis string".into(),
                message: "empty basis string".into(),
            });
        }
        Ok(Self(digits))
    }
}

impl fmt::Display for BasisString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&d| d < 10) {
            write!(f, "{}", self.0.iter().join(""))
        } else {
            write!(f, "({})", self.0.iter().join(","))
        }
    }
}

/// A bipartition `γ|γ'`, stored as its canonical side.
///
/// The canonical side is the smaller one; when both sides have `N/2` sites it
/// is the side containing the first subsystem. Sites are 0-based and sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bipartition {
    sites: Vec<usize>,
    parties: usize,
}

impl Bipartition {
    /// Canonicalizes `sites` (0-based) as one side of a bipartition of `parties` subsystems.
    pub fn new(sites: &[usize], parties: usize) -> Result<Self> {
        let mut side: Vec<usize> = sites.to_vec();
        side.sort_unstable();
        side.dedup();
        if side.is_empty() {
            return domain("bipartition side is empty");
        }
        if let Some(&s) = side.iter().find(|&&s| s >= parties) {
            return domain(format!("site {} out of range for {parties} parties", s + 1));
        }
        if side.len() == parties {
            return domain("bipartition side contains every subsystem");
        }
        let complement: Vec<usize> = (0..parties).filter(|s| !side.contains(s)).collect();
        let take_complement = complement.len() < side.len()
            || (complement.len() == side.len() && complement[0] == 0);
        let sites = if take_complement { complement } else { side };
        Ok(Self { sites, parties })
    }

    /// Same as [`Bipartition::new`] with 1-based site labels.
    pub fn from_labels(labels: &[usize], parties: usize) -> Result<Self> {
        if labels.contains(&0) {
            return domain("site labels are 1-based");
        }
        let sites: Vec<usize> = labels.iter().map(|l| l - 1).collect();
        Self::new(&sites, parties)
    }

    /// Canonical side, 0-based.
    pub fn sites(&self) -> &[usize] {
        &self.sites
    }

    pub fn parties(&self) -> usize {
        self.parties
    }

    pub fn complement(&self) -> Vec<usize> {
        (0..self.parties).filter(|s| !self.sites.contains(s)).collect()
    }

    pub fn contains(&self, site: usize) -> bool {
        self.sites.contains(&site)
    }

    /// Membership mask over all sites.
    pub fn mask(&self) -> Vec<bool> {
        (0..self.parties).map(|s| self.contains(s)).collect()
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.sites.iter().map(|s| s + 1).join(","))
    }
}

/// All `2^(N-1) - 1` bipartitions of `n` subsystems, ordered by side size and
/// then lexicographically (`{1},{2},…,{1,2},{1,3},…`).
pub fn enumerate_bipartitions(n: usize) -> Result<Vec<Bipartition>> {
    if n < 2 {
        return domain(format!("need at least two subsystems, got {n}"));
    }
    let mut out = Vec::with_capacity((1 << (n - 1)) - 1);
    for k in 1..=n / 2 {
        for combo in (0..n).combinations(k) {
            if 2 * k == n && combo[0] != 0 {
                continue;
            }
            out.push(Bipartition { sites: combo, parties: n });
        }
    }
    Ok(out)
}
