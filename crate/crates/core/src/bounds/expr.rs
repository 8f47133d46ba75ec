use std::collections::BTreeMap;
use std::fmt;

use crate::hilbert::DensityMatrix;

/// One matrix-element term of a bound. Indices are 0-based flat indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    /// `|ρ[r, c]|`, stored with `r < c`.
    Abs(usize, usize),
    /// `√(ρ[r, r] ρ[c, c])`, stored with `r <= c`.
    SqrtDiag(usize, usize),
    /// `ρ[k, k]`.
    Diag(usize),
}

impl Term {
    pub fn abs(r: usize, c: usize) -> Self {
        Term::Abs(r.min(c), r.max(c))
    }

    pub fn sqrt_diag(r: usize, c: usize) -> Self {
        Term::SqrtDiag(r.min(c), r.max(c))
    }

    pub fn evaluate(&self, rho: &DensityMatrix) -> f64 {
        match *self {
            Term::Abs(r, c) => rho.element(r, c).norm(),
            Term::SqrtDiag(r, c) => (rho.diagonal(r) * rho.diagonal(c)).max(0.0).sqrt(),
            Term::Diag(k) => rho.diagonal(k),
        }
    }
}

impl fmt::Display for Term {
    /// 1-based labels, e.g. `|ρ[10,11]|`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Term::Abs(r, c) => write!(f, "|ρ[{},{}]|", r + 1, c + 1),
            Term::SqrtDiag(r, c) => write!(f, "√(ρ[{0},{0}]ρ[{1},{1}])", r + 1, c + 1),
            Term::Diag(k) => write!(f, "ρ[{0},{0}]", k + 1),
        }
    }
}

/// Linear combination of matrix-element terms, with like terms merged.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ElementExpr {
    terms: BTreeMap<Term, f64>,
}

impl ElementExpr {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, term: Term, coeff: f64) {
        let slot = self.terms.entry(term).or_insert(0.0);
        *slot += coeff;
        if *slot == 0.0 {
            self.terms.remove(&term);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (Term, f64)> + '_ {
        self.terms.iter().map(|(t, c)| (*t, *c))
    }

    pub fn coefficient(&self, term: &Term) -> f64 {
        self.terms.get(term).copied().unwrap_or(0.0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn evaluate(&self, rho: &DensityMatrix) -> f64 {
        self.terms.iter().map(|(t, c)| c * t.evaluate(rho)).sum()
    }

    /// Sorted flat indices of every basis string the expression reads.
    pub fn support(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = self
            .terms
            .keys()
            .flat_map(|t| match *t {
                Term::Abs(r, c) | Term::SqrtDiag(r, c) => vec![r, c],
                Term::Diag(k) => vec![k],
            })
            .collect();
        idx.sort_unstable();
        idx.dedup();
        idx
    }

    /// Terms of `self - other` with nonzero coefficients.
    pub fn difference(&self, other: &ElementExpr) -> ElementExpr {
        let mut out = self.clone();
        for (t, c) in other.terms() {
            out.add(t, -c);
        }
        out
    }
}

impl fmt::Display for ElementExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (t, c)) in self.terms.iter().enumerate() {
            let sign = if *c < 0.0 { "-" } else if i > 0 { "+" } else { "" };
            if i > 0 {
                write!(f, " ")?;
            }
            let mag = c.abs();
            if mag == 1.0 {
                write!(f, "{sign}{t}")?;
            } else {
                write!(f, "{sign}{mag}{t}")?;
            }
        }
        Ok(())
    }
}
