//! Comparator criterion for the five-qubit W/anti-W mixture, evaluated in the
//! closed form it takes for that family:
//! `2 Σ_(i<j) |ρ[c_i,c_j]| − 3 (2 Σ_(i<j) √(ρ[c₀,c₀] ρ[c_ij,c_ij]) + Σ_i ρ[c_i,c_i])`
//! with `c₀ = 00000` (W direction) or `c₀ = 11111` (anti-W direction) and bit flips.

use std::fmt;
use std::str::FromStr;

use super::expr::{ElementExpr, Term};
use super::family::ProductFamily;
use crate::error::{Error, Result};
use crate::hilbert::{BasisString, DensityMatrix, Dims};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WDirection {
    /// Base `00000`; probes the W component.
    W,
    /// Base `11111`; probes the anti-W component.
    AntiW,
}

impl WDirection {
    /// Bit-flip family rooted at `00000` or `11111`.
    pub fn family(self) -> ProductFamily {
        let digit = match self {
            WDirection::W => 0,
            WDirection::AntiW => 1,
        };
        ProductFamily::shifted(five_qubits(), BasisString::new(vec![digit; 5]))
            .expect("valid five-qubit family")
    }
}

impl FromStr for WDirection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "w" => Ok(WDirection::W),
            "anti-w" | "anti_w" | "antiw" => Ok(WDirection::AntiW),
            other => Err(Error::Parse {
                location: "direction".into(),
                message: format!("expected w or anti-w, found {other:?}"),
            }),
        }
    }
}

impl fmt::Display for WDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WDirection::W => "w",
            WDirection::AntiW => "anti-w",
        })
    }
}

fn five_qubits() -> Dims {
    Dims::qubits(5).expect("five qubits")
}

pub fn huber_ex2_expr(direction: WDirection) -> ElementExpr {
    let fam = direction.family();
    let c0 = fam.index(&[]);
    let mut e = ElementExpr::new();
    for i in 0..5 {
        for j in i + 1..5 {
            e.add(Term::abs(fam.index(&[i]), fam.index(&[j])), 2.0);
            e.add(Term::sqrt_diag(c0, fam.index(&[i, j])), -6.0);
        }
        e.add(Term::Diag(fam.index(&[i])), -3.0);
    }
    e
}

/// Evaluates the comparator on a five-qubit density matrix.
pub fn huber_eq3_example2(rho: &DensityMatrix, direction: WDirection) -> Result<f64> {
    if rho.dims() != &five_qubits() {
        return Err(Error::DimensionMismatch {
            expected: "five qubits (2,2,2,2,2)".into(),
            found: rho.dims().to_string(),
        });
    }
    Ok(huber_ex2_expr(direction).evaluate(rho))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_other_dims() {
        let rho = DensityMatrix::maximally_mixed(Dims::qubits(4).unwrap());
        assert!(huber_eq3_example2(&rho, WDirection::W).is_err());
    }

    #[test]
    fn maximally_mixed_negative() {
        let rho = DensityMatrix::maximally_mixed(five_qubits());
        assert!(huber_eq3_example2(&rho, WDirection::W).unwrap() < 0.0);
        assert!(huber_eq3_example2(&rho, WDirection::AntiW).unwrap() < 0.0);
    }

    #[test]
    fn parse_direction() {
        assert_eq!("anti-w".parse::<WDirection>().unwrap(), WDirection::AntiW);
        assert!("x".parse::<WDirection>().is_err());
    }
}
