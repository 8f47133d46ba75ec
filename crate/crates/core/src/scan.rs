//! Threshold bisection and the two-parameter region scan.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::bounds::{bound1_f, detected, huber_eq3_example2, BoundSpec, WDirection};
use crate::error::{Error, Result};
use crate::fmt_f64;
use crate::hilbert::PureState;
use crate::states::{two_param_mix, white_noise_mix, SIMPLEX_SLACK};

/// Default bisection tolerance on the parameter.
pub const THRESHOLD_TOL: f64 = 1e-10;

/// Points sampled to assert monotonicity before bisecting.
const MONOTONE_SAMPLES: usize = 33;

/// Result of a threshold search on `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Threshold {
    /// Detection holds strictly on one side of `critical`; `bracket` encloses the root.
    Found { critical: f64, bracket: (f64, f64) },
    /// The value keeps one sign over the interval.
    None { value_lo: f64, value_hi: f64 },
}

impl Threshold {
    pub fn critical(&self) -> Option<f64> {
        match self {
            Threshold::Found { critical, .. } => Some(*critical),
            Threshold::None { .. } => None,
        }
    }
}

/// Locates the sign change of a monotone `f` on `[lo, hi]` to within `tol`.
///
/// Monotonicity is asserted on an evenly spaced sample; a violation beyond
/// rounding is reported as [`Error::NonMonotone`].
pub fn scan_threshold<F>(f: F, lo: f64, hi: f64, tol: f64) -> Result<Threshold>
where
    F: Fn(f64) -> Result<f64>,
{
    if !(lo < hi) || !(tol > 0.0) {
        return Err(Error::Domain(format!("invalid scan interval [{lo}, {hi}] or tolerance {tol}")));
    }
    let samples = (0..MONOTONE_SAMPLES)
        .map(|k| f(lo + (hi - lo) * k as f64 / (MONOTONE_SAMPLES - 1) as f64))
        .collect::<Result<Vec<f64>>>()?;
    let scale = samples.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let slack = 1e-12 * scale;
    let increasing = samples.windows(2).all(|w| w[1] >= w[0] - slack);
    let decreasing = samples.windows(2).all(|w| w[1] <= w[0] + slack);
    if !increasing && !decreasing {
        return Err(Error::NonMonotone { lo, hi });
    }

    let (value_lo, value_hi) = (samples[0], samples[MONOTONE_SAMPLES - 1]);
    if (value_lo > 0.0) == (value_hi > 0.0) {
        return Ok(Threshold::None { value_lo, value_hi });
    }
    // invariant: detection status differs at a and b
    let detected_lo = value_lo > 0.0;
    let (mut a, mut b) = (lo, hi);
    while b - a > tol {
        let mid = 0.5 * (a + b);
        if (f(mid)? > 0.0) == detected_lo {
            a = mid;
        } else {
            b = mid;
        }
    }
    Ok(Threshold::Found {
        critical: 0.5 * (a + b),
        bracket: (a, b),
    })
}

/// Threshold in `a` for `bound` on the white-noise mixture of `phi`.
pub fn noise_threshold(phi: &PureState, bound: &BoundSpec, lo: f64, hi: f64, tol: f64) -> Result<Threshold> {
    scan_threshold(|a| bound.evaluate(&white_noise_mix(phi, a)?), lo, hi, tol)
}

/// One grid point of the W/anti-W region scan.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RegionPoint {
    pub a: f64,
    pub b: f64,
    /// `None` when `a + b > 1` (not evaluated).
    pub values: Option<RegionValues>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RegionValues {
    pub f_anti_w: f64,
    pub f_w: f64,
    pub huber_anti_w: f64,
    pub huber_w: f64,
}

impl RegionValues {
    pub fn detected_bound1(&self) -> bool {
        detected(self.f_anti_w) || detected(self.f_w)
    }

    pub fn detected_huber(&self) -> bool {
        detected(self.huber_anti_w) || detected(self.huber_w)
    }
}

/// Rectangular `(a, b)` grid over `[0,1]²`, rows ordered by `a` then `b`.
#[derive(Clone, Debug, PartialEq)]
pub struct ScanResult {
    pub na: usize,
    pub nb: usize,
    pub points: Vec<RegionPoint>,
}

pub const CSV_HEADER: &str = "a,b,F_antiW,F_W,huber_antiW,huber_W,detected_bound1,detected_huber,valid";

impl ScanResult {
    pub fn point(&self, i: usize, j: usize) -> &RegionPoint {
        &self.points[i * self.nb + j]
    }

    /// Grid spacing `(Δa, Δb)`.
    pub fn spacing(&self) -> (f64, f64) {
        (1.0 / (self.na - 1) as f64, 1.0 / (self.nb - 1) as f64)
    }

    /// CSV with header; invalid points leave the value columns empty.
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(self.points.len() * 160);
        out.push_str(CSV_HEADER);
        out.push('\n');
        for p in &self.points {
            let _ = write!(out, "{},{},", fmt_f64(p.a), fmt_f64(p.b));
            match p.values {
                Some(v) => {
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{},{},true",
                        fmt_f64(v.f_anti_w),
                        fmt_f64(v.f_w),
                        fmt_f64(v.huber_anti_w),
                        fmt_f64(v.huber_w),
                        v.detected_bound1(),
                        v.detected_huber()
                    );
                }
                None => out.push_str(",,,,,,false\n"),
            }
        }
        out
    }
}

/// Evaluates Bound 1 and the comparator on both W directions of the five-qubit mixture.
pub fn region_point(a: f64, b: f64) -> Result<RegionPoint> {
    if a + b > 1.0 + SIMPLEX_SLACK {
        return Ok(RegionPoint { a, b, values: None });
    }
    let rho = two_param_mix(a, b)?;
    let values = RegionValues {
        f_anti_w: bound1_f(&rho, &WDirection::AntiW.family())?,
        f_w: bound1_f(&rho, &WDirection::W.family())?,
        huber_anti_w: huber_eq3_example2(&rho, WDirection::AntiW)?,
        huber_w: huber_eq3_example2(&rho, WDirection::W)?,
    };
    Ok(RegionPoint {
        a,
        b,
        values: Some(values),
    })
}

/// Scans `a = i/(na−1)`, `b = j/(nb−1)` in parallel; output order is fixed row-major.
pub fn region_scan(na: usize, nb: usize) -> Result<ScanResult> {
    if na < 2 || nb < 2 {
        return Err(Error::Domain(format!("grid {na}×{nb} needs at least 2 points per axis")));
    }
    let points = (0..na * nb)
        .into_par_iter()
        .map(|k| {
            let (i, j) = (k / nb, k % nb);
            region_point(i as f64 / (na - 1) as f64, j as f64 / (nb - 1) as f64)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ScanResult { na, nb, points })
}
