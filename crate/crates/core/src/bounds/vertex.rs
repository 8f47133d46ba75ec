use std::fmt;

use itertools::Itertools;

use super::expr::{ElementExpr, Term};
use crate::error::{domain, Error, Result};
use crate::hilbert::{BasisString, DensityMatrix, Dims, TwoCopySwap};

/// How `s₀` is read off the per-site neighbor counts `s_(α,i)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum S0Policy {
    /// Minimum over vertices with neighbors and over sites with `s_(α,i) > 0`.
    #[default]
    MinPositive,
    /// Minimum over vertices with neighbors and over all sites, zeros included.
    MinIncludingZero,
}

/// Which of the two differing sites `Π_αβ` exchanges.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SwapSite {
    #[default]
    First,
    Second,
}

/// Vertex set `V` of basis strings with the Hamming-distance-2 neighbor structure.
#[derive(Clone, Debug, PartialEq)]
pub struct VertexSet {
    dims: Dims,
    vertices: Vec<BasisString>,
    neighbors: Vec<Vec<usize>>,
    site_counts: Vec<Vec<usize>>,
    s: usize,
    s0: usize,
    policy: S0Policy,
}

impl VertexSet {
    pub fn new(dims: Dims, vertices: Vec<BasisString>) -> Result<Self> {
        Self::with_policy(dims, vertices, S0Policy::default())
    }

    pub fn with_policy(dims: Dims, vertices: Vec<BasisString>, policy: S0Policy) -> Result<Self> {
        for v in &vertices {
            dims.check(v)?;
        }
        if let Some(dup) = vertices.iter().duplicates().next() {
            return domain(format!("duplicate vertex {dup}"));
        }
        let n = dims.parties();
        let neighbors: Vec<Vec<usize>> = vertices
            .iter()
            .map(|a| {
                (0..vertices.len())
                    .filter(|&b| a.hamming(&vertices[b]) == 2)
                    .collect()
            })
            .collect();
        let site_counts: Vec<Vec<usize>> = vertices
            .iter()
            .zip(&neighbors)
            .map(|(a, nb)| {
                (0..n)
                    .map(|i| nb.iter().filter(|&&b| vertices[b].digits()[i] != a.digits()[i]).count())
                    .collect()
            })
            .collect();
        let s = neighbors.iter().map(Vec::len).max().unwrap_or(0);
        let s0 = neighbors
            .iter()
            .zip(&site_counts)
            .filter(|(nb, _)| !nb.is_empty())
            .flat_map(|(_, counts)| counts.iter().copied())
            .filter(|&c| policy == S0Policy::MinIncludingZero || c > 0)
            .min()
            .unwrap_or(0);
        Ok(Self {
            dims,
            vertices,
            neighbors,
            site_counts,
            s,
            s0,
            policy,
        })
    }

    /// Parses a comma-separated list such as `"0011,0101,1010"`.
    pub fn parse(dims: &Dims, list: &str) -> Result<Self> {
        let vertices = list
            .split(',')
            .map(|v| v.trim().parse())
            .collect::<Result<Vec<BasisString>>>()?;
        Self::new(dims.clone(), vertices)
    }

    pub fn dims(&self) -> &Dims {
        &self.dims
    }

    pub fn vertices(&self) -> &[BasisString] {
        &self.vertices
    }

    /// `K_α` as indices into [`VertexSet::vertices`].
    pub fn neighbors(&self, alpha: usize) -> &[usize] {
        &self.neighbors[alpha]
    }

    /// `s_(α,i)`.
    pub fn site_count(&self, alpha: usize, site: usize) -> usize {
        self.site_counts[alpha][site]
    }

    /// `s = max_α |K_α|`.
    pub fn s(&self) -> usize {
        self.s
    }

    pub fn s0(&self) -> usize {
        self.s0
    }

    pub fn policy(&self) -> S0Policy {
        self.policy
    }

    /// Weight `s − s₀` of the diagonal penalty.
    pub fn diagonal_coefficient(&self) -> usize {
        self.s - self.s0
    }

    fn require_neighbors(&self) -> Result<()> {
        if self.s == 0 {
            return domain("vertex set has no pair at Hamming distance 2 (s = 0)");
        }
        Ok(())
    }

    fn check_state(&self, rho: &DensityMatrix) -> Result<()> {
        if rho.dims() != &self.dims {
            return Err(Error::DimensionMismatch {
                expected: self.dims.to_string(),
                found: rho.dims().to_string(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.vertices.iter().join(","))
    }
}

/// Strings `(μ, ν)` obtained by exchanging one differing site between `χ_α` and `χ_β`.
///
/// The pair must differ in exactly two sites `p < q`; `which` picks `p` or `q`.
/// Swapping `q` instead of `p` yields `(ν, μ)`.
pub fn bound3_swap_pair(
    alpha: &BasisString,
    beta: &BasisString,
    which: SwapSite,
) -> Result<(BasisString, BasisString)> {
    if alpha.len() != beta.len() {
        return domain("vertex strings of different length");
    }
    let diff = alpha.differing_sites(beta);
    if diff.len() != 2 {
        return domain(format!("{alpha} and {beta} differ in {} sites, need exactly 2", diff.len()));
    }
    let p = match which {
        SwapSite::First => diff[0],
        SwapSite::Second => diff[1],
    };
    Ok((
        alpha.with(p, beta.digits()[p]),
        beta.with(p, alpha.digits()[p]),
    ))
}

/// Matrix-element form of `T(ρ, χ)` over ordered neighbor pairs `(α, β ∈ K_α)`.
pub fn bound3_expr(v: &VertexSet, which: SwapSite) -> Result<ElementExpr> {
    v.require_neighbors()?;
    let dims = &v.dims;
    let idx = |s: &BasisString| dims.encode_digits(s.digits());
    let mut e = ElementExpr::new();
    for (a, chi_a) in v.vertices.iter().enumerate() {
        for &b in &v.neighbors[a] {
            let chi_b = &v.vertices[b];
            let (mu, nu) = bound3_swap_pair(chi_a, chi_b, which)?;
            e.add(Term::abs(idx(chi_a), idx(chi_b)), 1.0);
            e.add(Term::sqrt_diag(idx(&mu), idx(&nu)), -1.0);
        }
        e.add(Term::Diag(idx(chi_a)), -(v.diagonal_coefficient() as f64));
    }
    Ok(e)
}

/// `T(ρ, χ)` from density-matrix elements.
pub fn bound3_t(rho: &DensityMatrix, v: &VertexSet) -> Result<f64> {
    v.check_state(rho)?;
    Ok(bound3_expr(v, SwapSite::First)?.evaluate(rho))
}

/// `T(ρ, χ)` from two-copy expectations `⟨χ_α χ_β|Π_αβ ρ⊗² Π_αβ|χ_α χ_β⟩`.
pub fn bound3_t_twocopy(rho: &DensityMatrix, v: &VertexSet, which: SwapSite) -> Result<f64> {
    v.check_state(rho)?;
    v.require_neighbors()?;
    let dims = &v.dims;
    let idx = |s: &BasisString| dims.encode_digits(s.digits());
    let coeff = v.diagonal_coefficient() as f64;
    let mut value = 0.0;
    for (a, chi_a) in v.vertices.iter().enumerate() {
        for &b in &v.neighbors[a] {
            let chi_b = &v.vertices[b];
            let diff = chi_a.differing_sites(chi_b);
            let p = if which == SwapSite::First { diff[0] } else { diff[1] };
            let swap = TwoCopySwap::site(dims, p)?;
            value += rho.element(idx(chi_a), idx(chi_b)).norm();
            value -= swap.expect_conjugated(rho, idx(chi_a), idx(chi_b)).re.max(0.0).sqrt();
        }
        value -= coeff * rho.diagonal(idx(chi_a));
    }
    Ok(value)
}

/// `√2 · s`.
pub fn bound3_constant(v: &VertexSet) -> f64 {
    std::f64::consts::SQRT_2 * v.s as f64
}

/// `max(0, T / (√2 s))`.
pub fn bound3_gme_lower(rho: &DensityMatrix, v: &VertexSet) -> Result<f64> {
    let t = bound3_t(rho, v)?;
    Ok((t / bound3_constant(v)).max(0.0))
}
