//! `{"kind": "pure"|"density", "dims": [..], "payload": [[re, im], ..]}`.
//!
//! Pure payloads hold `D` amplitudes; density payloads hold `D²` entries in
//! row-major order. Floats are written with 17 significant digits so a round
//! trip is bit-exact.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use nalgebra::{DMatrix, DVector};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::hilbert::{DensityMatrix, Dims, PureState};
use crate::{fmt_f64, C64};

/// Load-time tolerance on norm, trace and Hermiticity.
const LOAD_TOL: f64 = 1e-8;

/// Contents of a state file.
#[derive(Clone, Debug, PartialEq)]
pub enum StateFile {
    Pure(PureState),
    Density(DensityMatrix),
}

impl StateFile {
    pub fn dims(&self) -> &Dims {
        match self {
            StateFile::Pure(p) => p.dims(),
            StateFile::Density(r) => r.dims(),
        }
    }

    /// The density matrix, projecting pure states to `|φ⟩⟨φ|`.
    pub fn to_density(&self) -> DensityMatrix {
        match self {
            StateFile::Pure(p) => p.to_density(),
            StateFile::Density(r) => r.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        let (kind, entries): (&str, Vec<C64>) = match self {
            StateFile::Pure(p) => ("pure", p.amplitudes().iter().copied().collect()),
            StateFile::Density(r) => {
                let m = r.matrix();
                let entries = (0..m.nrows())
                    .flat_map(|i| (0..m.ncols()).map(move |j| m[(i, j)]))
                    .collect();
                ("density", entries)
            }
        };
        let dims = self.dims().as_slice().iter().map(|d| d.to_string()).collect::<Vec<_>>();
        let mut out = format!("{{\n  \"kind\": \"{kind}\",\n  \"dims\": [{}],\n  \"payload\": [\n", dims.join(", "));
        for (i, z) in entries.iter().enumerate() {
            let sep = if i + 1 < entries.len() { "," } else { "" };
            let _ = writeln!(out, "    [{}, {}]{sep}", fmt_f64(z.re), fmt_f64(z.im));
        }
        out.push_str("  ]\n}\n");
        out
    }
}

impl From<PureState> for StateFile {
    fn from(p: PureState) -> Self {
        StateFile::Pure(p)
    }
}

impl From<DensityMatrix> for StateFile {
    fn from(r: DensityMatrix) -> Self {
        StateFile::Density(r)
    }
}

fn perr(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        location: location.into(),
        message: message.into(),
    }
}

/// Parses a state document; `origin` prefixes error locations.
pub fn parse_state(text: &str, origin: &str) -> Result<StateFile> {
    let doc: Value = serde_json::from_str(text)
        .map_err(|e| perr(format!("{origin}:{}:{}", e.line(), e.column()), e.to_string()))?;
    let obj = doc.as_object().ok_or_else(|| perr(origin, "top level must be an object"))?;
    let field = |name: &str| {
        obj.get(name)
            .ok_or_else(|| perr(format!("{origin}: {name}"), "missing field"))
    };

    let kind = field("kind")?
        .as_str()
        .ok_or_else(|| perr(format!("{origin}: kind"), "expected a string"))?;

    let dims_val = field("dims")?
        .as_array()
        .ok_or_else(|| perr(format!("{origin}: dims"), "expected an integer list"))?;
    let dims_vec = dims_val
        .iter()
        .enumerate()
        .map(|(i, v)| {
            v.as_u64()
                .map(|d| d as usize)
                .ok_or_else(|| perr(format!("{origin}: dims[{i}]"), "expected a positive integer"))
        })
        .collect::<Result<Vec<_>>>()?;
    let dims = Dims::new(dims_vec).map_err(|e| perr(format!("{origin}: dims"), e.to_string()))?;

    let payload = field("payload")?
        .as_array()
        .ok_or_else(|| perr(format!("{origin}: payload"), "expected a list of [re, im] pairs"))?;
    let entries = payload
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let loc = || format!("{origin}: payload[{i}]");
            let pair = v.as_array().filter(|p| p.len() == 2).ok_or_else(|| perr(loc(), "expected [re, im]"))?;
            let re = pair[0].as_f64().ok_or_else(|| perr(loc(), "real part is not a number"))?;
            let im = pair[1].as_f64().ok_or_else(|| perr(loc(), "imaginary part is not a number"))?;
            Ok(C64::new(re, im))
        })
        .collect::<Result<Vec<_>>>()?;

    let d = dims.total();
    match kind {
        "pure" => {
            if entries.len() != d {
                return Err(perr(format!("{origin}: payload"), format!("expected {d} amplitudes for dims {dims}, found {}", entries.len())));
            }
            PureState::with_tolerance(dims, DVector::from_vec(entries), LOAD_TOL)
                .map(StateFile::Pure)
                .map_err(|e| perr(format!("{origin}: payload"), e.to_string()))
        }
        "density" => {
            if entries.len() != d * d {
                return Err(perr(format!("{origin}: payload"), format!("expected {} entries for dims {dims}, found {}", d * d, entries.len())));
            }
            let mat = DMatrix::from_row_slice(d, d, &entries);
            DensityMatrix::with_tolerance(dims, mat, LOAD_TOL)
                .map(StateFile::Density)
                .map_err(|e| perr(format!("{origin}: payload"), e.to_string()))
        }
        other => Err(perr(format!("{origin}: kind"), format!("expected \"pure\" or \"density\", found {other:?}"))),
    }
}

pub fn load_state(path: impl AsRef<Path>) -> Result<StateFile> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)?;
    parse_state(&text, &path.display().to_string())
}

pub fn save_state(path: impl AsRef<Path>, state: &StateFile) -> Result<()> {
    fs::write(path, state.to_json())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{white_noise_mix, NamedState};

    #[test]
    fn pure_round_trip_is_bit_exact() {
        let amps = DVector::from_fn(27, |k, _| C64::new((k as f64 * 0.37).sin(), (k as f64 * 1.3).cos() / 3.0));
        let p = PureState::normalized(Dims::uniform(3, 3).unwrap(), amps).unwrap();
        let back = parse_state(&StateFile::Pure(p.clone()).to_json(), "mem").unwrap();
        assert_eq!(back, StateFile::Pure(p));
    }

    #[test]
    fn density_round_trip_is_bit_exact() {
        let phi = NamedState::Example3.build().unwrap();
        let rho = white_noise_mix(&phi, 0.3).unwrap();
        let back = parse_state(&StateFile::Density(rho.clone()).to_json(), "mem").unwrap();
        assert_eq!(back, StateFile::Density(rho));
    }

    fn doc(kind: &str, dims: &str, entries: &[(f64, f64)]) -> String {
        let payload: Vec<String> = entries.iter().map(|(r, i)| format!("[{r},{i}]")).collect();
        format!(r#"{{"kind":"{kind}","dims":[{dims}],"payload":[{}]}}"#, payload.join(","))
    }

    fn diag4(d: [f64; 4]) -> Vec<(f64, f64)> {
        (0..16).map(|k| if k % 5 == 0 { (d[k / 5], 0.0) } else { (0.0, 0.0) }).collect()
    }

    #[test]
    fn bad_trace_rejected() {
        let text = doc("density", "2,2", &diag4([0.3, 0.2, 0.2, 0.2]));
        let err = parse_state(&text, "t.json").unwrap_err();
        assert!(matches!(err, Error::Parse { ref location, .. } if location.contains("payload")), "{err}");
        assert!(parse_state(&doc("density", "2,2", &diag4([0.4, 0.2, 0.2, 0.2])), "t").is_ok());
    }

    #[test]
    fn malformed_inputs_report_locations() {
        let basis = [(1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0)];
        let cases = [
            (doc("pure", "2,2", &basis[..3]), "payload"),
            (doc("pure", "2,0", &[]), "dims"),
            (doc("pure", "2", &basis[..2]), "dims"),
            (doc("mixed", "2,2", &basis), "kind"),
            (r#"{"kind":"pure","dims":[2,2],"payload":[[1,0],[0],[0,0],[0,0]]}"#.to_string(), "payload[1]"),
            (r#"{"dims":[2,2],"payload":[]}"#.to_string(), "kind"),
            (doc("pure", "2,2", &[(0.9, 0.0), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0)]), "payload"),
            ("{".to_string(), "t.json:1"),
        ];
        for (text, loc) in cases {
            match parse_state(&text, "t.json") {
                Err(Error::Parse { location, .. }) => assert!(location.contains(loc), "{location} vs {loc}"),
                other => panic!("expected parse error for {text}, got {other:?}"),
            }
        }
    }

    #[test]
    fn non_hermitian_rejected() {
        let mut entries = diag4([0.25; 4]);
        entries[1] = (0.1, 0.0);
        assert!(parse_state(&doc("density", "2,2", &entries), "t").is_err());
    }
}
