//! Named states, white-noise mixtures and the state file format.

mod io;

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use nalgebra::{DMatrix, DVector};

use crate::error::{domain, Error, Result};
use crate::hilbert::{DensityMatrix, Dims, PureState};
use crate::C64;

pub use io::{load_state, parse_state, save_state, StateFile};

/// Identifier of a built-in pure state.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedState {
    /// Equal superposition of the weight-1 strings on `n` qubits.
    W { n: usize },
    /// Equal superposition of the weight-(n−1) strings on `n` qubits.
    AntiW { n: usize },
    /// `Σ_x |x…x⟩ / √d` on `n` qudits.
    Ghz { n: usize, d: usize },
    /// Equal superposition of the weight-`k` strings on `n` qubits.
    Dicke { n: usize, k: usize },
    /// `(|0011⟩+|0101⟩+|0110⟩+|1010⟩)/2`.
    Example3,
    /// `(|012⟩+|021⟩+|111⟩)/√3` on three qutrits.
    Example4Qutrit,
    /// `(|0000⟩+|1100⟩+|1001⟩+|1010⟩)/2`.
    Example4Qubit,
    /// `(|0000⟩+|1100⟩+|1001⟩+|1010⟩+|0110⟩)/√5`.
    Example5,
}

impl NamedState {
    pub fn build(&self) -> Result<PureState> {
        match *self {
            NamedState::W { n } => weight_superposition(n, 1),
            NamedState::AntiW { n } => {
                if n < 2 {
                    return domain("anti-W needs at least two qubits");
                }
                weight_superposition(n, n - 1)
            }
            NamedState::Dicke { n, k } => weight_superposition(n, k),
            NamedState::Ghz { n, d } => {
                let dims = Dims::uniform(n, d)?;
                let amps = DVector::from_fn(dims.total(), |k, _| {
                    let digits = dims.decode_digits(k);
                    if digits.iter().all_equal() {
                        C64::new(1.0, 0.0)
                    } else {
                        C64::new(0.0, 0.0)
                    }
                });
                PureState::normalized(dims, amps)
            }
            NamedState::Example3 => superposition(Dims::qubits(4)?, &["0011", "0101", "0110", "1010"]),
            NamedState::Example4Qutrit => superposition(Dims::uniform(3, 3)?, &["012", "021", "111"]),
            NamedState::Example4Qubit => superposition(Dims::qubits(4)?, &["0000", "1100", "1001", "1010"]),
            NamedState::Example5 => {
                superposition(Dims::qubits(4)?, &["0000", "1100", "1001", "1010", "0110"])
            }
        }
    }
}

impl FromStr for NamedState {
    type Err = Error;

    /// Accepts `w:N`, `anti_w:N`, `ghz:N:D`, `dicke:N:K`, `example3`,
    /// `example4_qutrit`, `example4_qubit`, `example5`.
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.trim().split(':');
        let name = parts.next().unwrap_or_default().to_ascii_lowercase();
        let args: Vec<usize> = parts
            .map(|p| {
                p.parse().map_err(|_| Error::Parse {
                    location: "state name".into(),
                    message: format!("invalid integer parameter {p:?} in {s:?}"),
                })
            })
            .collect::<Result<_>>()?;
        let arity = |want: usize| -> Result<()> {
            if args.len() == want {
                Ok(())
            } else {
                Err(Error::Parse {
                    location: "state name".into(),
                    message: format!("{name} takes {want} parameter(s), got {}", args.len()),
                })
            }
        };
        match name.as_str() {
            "w" => arity(1).map(|_| NamedState::W { n: args[0] }),
            "anti_w" | "anti-w" => arity(1).map(|_| NamedState::AntiW { n: args[0] }),
            "ghz" => arity(2).map(|_| NamedState::Ghz { n: args[0], d: args[1] }),
            "dicke" => arity(2).map(|_| NamedState::Dicke { n: args[0], k: args[1] }),
            "example3" => arity(0).map(|_| NamedState::Example3),
            "example4_qutrit" => arity(0).map(|_| NamedState::Example4Qutrit),
            "example4_qubit" => arity(0).map(|_| NamedState::Example4Qubit),
            "example5" => arity(0).map(|_| NamedState::Example5),
            other => Err(Error::Parse {
                location: "state name".into(),
                message: format!("unknown state {other:?}"),
            }),
        }
    }
}

impl fmt::Display for NamedState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedState::W { n } => write!(f, "w:{n}"),
            NamedState::AntiW { n } => write!(f, "anti_w:{n}"),
            NamedState::Ghz { n, d } => write!(f, "ghz:{n}:{d}"),
            NamedState::Dicke { n, k } => write!(f, "dicke:{n}:{k}"),
            NamedState::Example3 => f.write_str("example3"),
            NamedState::Example4Qutrit => f.write_str("example4_qutrit"),
            NamedState::Example4Qubit => f.write_str("example4_qubit"),
            NamedState::Example5 => f.write_str("example5"),
        }
    }
}

/// Builds a named state.
pub fn build_named(spec: NamedState) -> Result<PureState> {
    spec.build()
}

fn weight_superposition(n: usize, k: usize) -> Result<PureState> {
    if k > n {
        return domain(format!("excitation count {k} exceeds party count {n}"));
    }
    let dims = Dims::qubits(n)?;
    let amps = DVector::from_fn(dims.total(), |idx, _| {
        if idx.count_ones() as usize == k {
            C64::new(1.0, 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    });
    PureState::normalized(dims, amps)
}

fn superposition(dims: Dims, terms: &[&str]) -> Result<PureState> {
    let mut amps = DVector::zeros(dims.total());
    for t in terms {
        amps[dims.encode(&t.parse()?)?] = C64::new(1.0, 0.0);
    }
    PureState::normalized(dims, amps)
}

/// `(1−a)/D · I + a |φ⟩⟨φ|`.
pub fn white_noise_mix(phi: &PureState, a: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&a) {
        return domain(format!("mixing parameter {a} outside [0, 1]"));
    }
    let d = phi.dims().total();
    let noise = DMatrix::from_diagonal_element(d, d, C64::new((1.0 - a) / d as f64, 0.0));
    let signal = phi.to_density().matrix() * C64::new(a, 0.0);
    DensityMatrix::new(phi.dims().clone(), noise + signal)
}

/// Rounding allowance on `a + b <= 1` for grid points such as `0.3 + 0.7`.
pub const SIMPLEX_SLACK: f64 = 1e-12;

/// `(1−a−b)/32 · I + a |W̃⟩⟨W̃| + b |W⟩⟨W|` on five qubits.
pub fn two_param_mix(a: f64, b: f64) -> Result<DensityMatrix> {
    if a < 0.0 || b < 0.0 || a + b > 1.0 + SIMPLEX_SLACK {
        return domain(format!("(a, b) = ({a}, {b}) outside the simplex a, b >= 0, a + b <= 1"));
    }
    let w = NamedState::W { n: 5 }.build()?;
    let anti = NamedState::AntiW { n: 5 }.build()?;
    let noise = DMatrix::from_diagonal_element(32, 32, C64::new((1.0 - a - b).max(0.0) / 32.0, 0.0));
    let mat = noise
        + anti.to_density().matrix() * C64::new(a, 0.0)
        + w.to_density().matrix() * C64::new(b, 0.0);
    DensityMatrix::new(w.dims().clone(), mat)
}
