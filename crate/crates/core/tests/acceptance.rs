//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
//!
//! Oracles here are written independently of `gme_bounds::verify`: cuts are
//! enumerated as bitmasks, C_GME goes through the density-matrix partial
//! trace, two-copy expectations use explicitly built permutation matrices,
//! fixtures are literal term lists, and thresholds come from the `gme` binary.

use std::process::{Command, ExitCode};
use std::time::Instant;

use gme_bounds::bounds::{
    bound1_expr, bound1_f, bound2_expr, bound2_l, bound2_total, bound3_constant,
    bound3_expr, bound3_t, huber_ex2_expr, BoundSpec, ConstantMode, ElementExpr, ProductFamily,
    SwapSite, Term, VertexSet, WDirection,
};
use gme_bounds::concurrence::build_observable_b;
use gme_bounds::hilbert::{Bipartition, DensityMatrix, Dims, PureState};
use gme_bounds::oracle::SeededGenerator;
use gme_bounds::scan::region_scan;
use gme_bounds::C64;
use nalgebra::DMatrix;

type Check = Result<String, String>;

// ---------------------------------------------------------------- oracles

fn dims(d: &[usize]) -> Dims {
    Dims::new(d.to_vec()).unwrap()
}

/// Cuts as site lists: every subset containing site 0 except the full set.
fn cuts(n: usize) -> Vec<Vec<usize>> {
    (1u32..(1 << n) - 1)
        .filter(|m| m & 1 == 1)
        .map(|m| (0..n).filter(|s| m >> s & 1 == 1).collect())
        .collect()
}

fn trace_sq(m: &DMatrix<C64>) -> f64 {
    (m * m).trace().re
}

fn c_squared(phi: &PureState, keep: &[usize]) -> f64 {
    1.0 - trace_sq(&phi.to_density().partial_trace(keep).unwrap())
}

fn c_gme(phi: &PureState) -> f64 {
    cuts(phi.dims().parties())
        .iter()
        .map(|c| c_squared(phi, c))
        .fold(f64::INFINITY, f64::min)
        .max(0.0)
        .sqrt()
}

fn digits(mut k: usize, d: &[usize]) -> Vec<usize> {
    let mut out = vec![0; d.len()];
    for s in (0..d.len()).rev() {
        out[s] = k % d[s];
        k /= d[s];
    }
    out
}

fn index(x: &[usize], d: &[usize]) -> usize {
    x.iter().zip(d).fold(0, |acc, (&v, &r)| acc * r + v)
}

/// Permutation matrix on `H ⊗ H` exchanging the digits at `sites` between the copies.
fn swap_matrix(d: &[usize], sites: &[usize]) -> DMatrix<C64> {
    let total: usize = d.iter().product();
    let mut m = DMatrix::zeros(total * total, total * total);
    for u in 0..total {
        for v in 0..total {
            let (mut a, mut b) = (digits(u, d), digits(v, d));
            for &s in sites {
                std::mem::swap(&mut a[s], &mut b[s]);
            }
            m[(index(&a, d) * total + index(&b, d), u * total + v)] = C64::new(1.0, 0.0);
        }
    }
    m
}

/// `⟨x| M |x⟩` for a two-copy basis vector `x = u ⊗ v`.
fn two_copy_expect(rho2: &DMatrix<C64>, swap: &DMatrix<C64>, conjugate: bool, u: usize, v: usize, total: usize) -> f64 {
    let x = u * total + v;
    if conjugate {
        // ⟨x|S† ρ⊗² S|x⟩ = (S x)† ρ⊗² (S x)
        let sx = swap.column(x).into_owned();
        sx.dotc(&(rho2 * &sx)).re
    } else {
        // ⟨x| ρ⊗² S |x⟩
        let sx = swap.column(x).into_owned();
        (rho2.row(x) * &sx)[(0, 0)].norm()
    }
}

fn family_index(fam: &ProductFamily, sites: &[usize]) -> usize {
    index(fam.string(sites).digits(), fam.dims().as_slice())
}

// ------------------------------------------------------------------- criteria

fn criterion1() -> Check {
    let mut g = SeededGenerator::new(101);
    let mut worst = 0.0f64;
    for profile in [&[2, 2, 2][..], &[2, 2, 2, 2], &[3, 3, 3]] {
        let d = dims(profile);
        for cut in cuts(d.parties()) {
            let b = build_observable_b(&Bipartition::new(&cut, d.parties()).unwrap(), &d).unwrap();
            let mut g2 = SeededGenerator::new(g.seed() ^ cut.len() as u64);
            for _ in 0..100 {
                let phi = g2.random_pure(&d);
                worst = worst.max((b.expectation(&phi).unwrap() - c_squared(&phi, &cut)).abs());
            }
        }
        g = SeededGenerator::new(g.seed() + 1);
    }
    if worst <= 1e-10 {
        Ok(format!("max |<B> − (1 − Tr ρ_γ²)| = {worst:.2e}"))
    } else {
        Err(format!("deviation {worst:.2e} > 1e-10"))
    }
}

fn scan_cli(state: &str, extra: &[&str]) -> Result<f64, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_gme"))
        .args(["scan-threshold", "--state", state])
        .args(extra)
        .output()
        .map_err(|e| e.to_string())?;
    let text = String::from_utf8_lossy(&out.stdout);
    text.lines()
        .find_map(|l| l.strip_prefix("critical a* = "))
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| format!("{state}: no threshold in output {text:?} (stderr {:?})", String::from_utf8_lossy(&out.stderr)))
}

fn criterion2() -> Check {
    let cases: [(&str, &[&str], f64); 7] = [
        ("example3", &["--bound", "3", "--vertices", "0011,0101,1010"], 7.0 / 11.0),
        ("example3", &["--bound", "2", "--family", "0000"], 9.0 / 11.0),
        ("example4_qutrit", &["--bound", "1", "--family", "011/122"], 1.0 / 4.0),
        ("example4_qubit", &["--bound", "1", "--family", "1000"], 5.0 / 9.0),
        ("example5", &["--bound", "1", "--family", "1000"], 25.0 / 41.0),
        ("example5", &["--bound", "3", "--vertices", "1100,1001,1010,0110"], 45.0 / 61.0),
        ("dicke:4:2", &["--bound", "2", "--family", "0000"], 9.0 / 17.0),
    ];
    let mut worst = 0.0f64;
    for (state, args, expected) in cases {
        let got = scan_cli(state, args)?;
        let err = (got - expected).abs();
        if err > 1e-6 {
            return Err(format!("{state} {args:?}: a* = {got}, expected {expected}"));
        }
        worst = worst.max(err);
    }
    Ok(format!("7 thresholds, max |a* − reference| = {worst:.2e}"))
}

fn criterion3() -> Check {
    let scan = region_scan(201, 201).map_err(|e| e.to_string())?;
    let h = 1.0 / 200.0;
    let cell = h * 2f64.sqrt();
    let dist = |a: f64, b: f64, p: f64, q: f64, r: f64| {
        let n = (p * p + q * q).sqrt();
        ((p * a + q * b - r).abs() / n).min((p * b + q * a - r).abs() / n)
    };
    let (mut bound1_only, mut closed_form_err) = (0usize, 0.0f64);
    for p in &scan.points {
        let (a, b) = (p.a, p.b);
        let valid = a + b <= 1.0 + 1e-12;
        let Some(v) = p.values else {
            if valid {
                return Err(format!("valid point ({a}, {b}) not evaluated"));
            }
            continue;
        };
        if !valid {
            return Err(format!("invalid point ({a}, {b}) evaluated"));
        }
        closed_form_err = closed_form_err
            .max((v.f_w - (67.0 * b + 35.0 * a - 35.0) / 32.0).abs())
            .max((v.f_anti_w - (67.0 * a + 35.0 * b - 35.0) / 32.0).abs());
        let line1 = (67.0 * b + 35.0 * a - 35.0).max(67.0 * a + 35.0 * b - 35.0) > 0.0;
        let line2 = (75.0 * a + 107.0 * b - 75.0).max(75.0 * b + 107.0 * a - 75.0) > 0.0;
        if v.detected_bound1() != line1 && dist(a, b, 35.0, 67.0, 35.0) > cell {
            return Err(format!("bound 1 disagrees with its frontier at ({a}, {b})"));
        }
        if v.detected_huber() != line2 && dist(a, b, 75.0, 107.0, 75.0) > cell {
            return Err(format!("comparator disagrees with its frontier at ({a}, {b})"));
        }
        if v.detected_huber() && !v.detected_bound1() {
            return Err(format!("comparator detects ({a}, {b}) but bound 1 does not"));
        }
        bound1_only += usize::from(v.detected_bound1() && !v.detected_huber());
    }
    if bound1_only == 0 {
        return Err("bound-1 region does not strictly contain the comparator region".into());
    }
    Ok(format!(
        "201×201 grid: both frontiers reproduced, {bound1_only} points detected only by bound 1, \
         closed-form deviation {closed_form_err:.1e}"
    ))
}

fn criterion4() -> Check {
    let mut g = SeededGenerator::new(404);
    let q4 = dims(&[2, 2, 2, 2]);
    let mut specs: Vec<(BoundSpec, f64)> = Vec::new();
    for profile in [&[2, 2, 2][..], &[2, 2, 2, 2], &[3, 3, 3], &[2, 2, 3], &[2, 2, 2, 2, 2]] {
        let d = dims(profile);
        let fam = g.random_family(&d);
        specs.push((BoundSpec::Bound1(fam), 2.0 * (d.parties() as f64 - 1.0).sqrt()));
    }
    for profile in [&[2, 2, 2, 2][..], &[2, 2, 3, 2], &[2, 2, 2, 2, 2]] {
        let d = dims(profile);
        let fam = g.random_family(&d);
        specs.push((BoundSpec::Bound2(fam), 2.0 * (d.parties() as f64 - 2.0).sqrt()));
    }
    for list in ["0011,0101,0110,1010", "0011,0101,1010", "1100,1001,1010,0110", "0000,0011,0101,1001,1111"] {
        let v = VertexSet::parse(&q4, list).unwrap();
        let k = 2f64.sqrt() * v.s() as f64;
        specs.push((BoundSpec::Bound3(v), k));
    }
    let (mut samples, mut positive, mut worst) = (0, 0, f64::NEG_INFINITY);
    for (spec, k) in &specs {
        let d = match spec {
            BoundSpec::Bound1(f) | BoundSpec::Bound2(f) => f.dims().clone(),
            BoundSpec::Bound3(v) => v.dims().clone(),
            BoundSpec::HuberEx2(_) => unreachable!(),
        };
        let support = spec.expression().unwrap().support();
        for trial in 0..1000 {
            // first 500 uniform, next 500 on the strings the bound reads
            let phi = if trial < 500 { g.random_pure(&d) } else { g.random_pure_on(&d, &support).unwrap() };
            let value = spec.evaluate(&phi.to_density()).unwrap();
            let margin = value - k * c_gme(&phi);
            if margin > 1e-9 {
                return Err(format!("{spec}: value {value} exceeds {k}·C_GME by {margin:.3e}"));
            }
            worst = worst.max(margin);
            positive += usize::from(value > 0.0);
            samples += 1;
        }
    }
    Ok(format!("{samples} states over {} configurations ({positive} with positive value), worst margin {worst:.3e}", specs.len()))
}

fn criterion5() -> Check {
    let mut g = SeededGenerator::new(505);
    let mut worst = f64::NEG_INFINITY;
    let mut count = 0;
    for n in [3usize, 4] {
        let d = Dims::qubits(n).unwrap();
        let v = if n == 3 {
            VertexSet::parse(&d, "011,101,110").unwrap()
        } else {
            VertexSet::parse(&d, "0011,0101,0110,1010").unwrap()
        };
        for cut in cuts(n) {
            let gamma = Bipartition::new(&cut, n).unwrap();
            for _ in 0..200 {
                let phi = g.random_biseparable(&d, &gamma).unwrap();
                if c_squared(&phi, &cut).abs() > 1e-10 {
                    return Err(format!("sample not product across {gamma}"));
                }
                let rho = phi.to_density();
                let fam = g.random_family(&d);
                let mut vals = vec![bound1_f(&rho, &fam).unwrap(), bound3_t(&rho, &v).unwrap()];
                if n == 4 {
                    vals.push(bound2_total(&rho, &fam).unwrap());
                }
                for x in vals {
                    if x > 1e-8 {
                        return Err(format!("biseparable across {gamma} detected with value {x}"));
                    }
                    worst = worst.max(x);
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} biseparable states, max bound value {worst:.3e}"))
}

fn criterion6() -> Check {
    let mut g = SeededGenerator::new(606);
    let mut worst = 0.0f64;
    for profile in [&[2, 2, 2][..], &[2, 2, 2, 2], &[2, 3, 2]] {
        let d = dims(profile);
        let n = d.parties();
        let total = d.total();
        let full = swap_matrix(profile, &(0..n).collect::<Vec<_>>());
        let site: Vec<DMatrix<C64>> = (0..n).map(|s| swap_matrix(profile, &[s])).collect();
        for trial in 0..100 {
            let (rho, _) = g.random_mixture(&d, 1 + trial % 4).unwrap();
            let rho2 = rho.matrix().kronecker(rho.matrix());
            let fam = g.random_family(&d);
            let diag = |k: usize| rho.diagonal(k);

            let mut f = 0.0;
            for i in 0..n {
                for j in (0..n).filter(|&j| j != i) {
                    let (ci, cj) = (family_index(&fam, &[i]), family_index(&fam, &[j]));
                    f += two_copy_expect(&rho2, &full, false, ci, cj, total).sqrt();
                    f -= two_copy_expect(&rho2, &site[i], true, ci, cj, total).max(0.0).sqrt();
                }
                f -= (n as f64 - 2.0) * diag(family_index(&fam, &[i]));
            }
            worst = worst.max((f - bound1_f(&rho, &fam).unwrap()).abs());

            if n >= 4 {
                for i in 0..n {
                    let mut l = 0.0;
                    for j in (0..n).filter(|&j| j != i) {
                        for k in (0..n).filter(|&k| k != i && k != j) {
                            let (cij, cik) = (family_index(&fam, &[i, j]), family_index(&fam, &[i, k]));
                            l += two_copy_expect(&rho2, &full, false, cij, cik, total).sqrt();
                            l -= two_copy_expect(&rho2, &site[j], true, cij, cik, total).max(0.0).sqrt();
                        }
                        l -= (n as f64 - 3.0) * diag(family_index(&fam, &[i, j]));
                    }
                    worst = worst.max((l - bound2_l(&rho, &fam, i).unwrap()).abs());
                }
            }
        }
    }
    if worst <= 1e-12 {
        Ok(format!("300 mixed states, max |two-copy − matrix-element| = {worst:.2e}"))
    } else {
        Err(format!("deviation {worst:.2e} > 1e-12"))
    }
}

/// `(abs pairs, sqrt pairs, diagonal labels, (c_abs, c_sqrt, c_diag))`, 1-based.
fn literal(abs: &[(usize, usize)], sqrt: &[(usize, usize)], diag: &[usize], c: (f64, f64, f64)) -> ElementExpr {
    let mut e = ElementExpr::new();
    abs.iter().for_each(|&(r, s)| e.add(Term::abs(r - 1, s - 1), c.0));
    sqrt.iter().for_each(|&(r, s)| e.add(Term::sqrt_diag(r - 1, s - 1), c.1));
    diag.iter().for_each(|&k| e.add(Term::Diag(k - 1), c.2));
    e
}

fn same(label: &str, got: &ElementExpr, want: &ElementExpr) -> Result<(), String> {
    let diff = got.difference(want);
    if diff.is_empty() {
        Ok(())
    } else {
        Err(format!("{label}: generated − reference = {diff}"))
    }
}

fn criterion7() -> Check {
    let q3 = Dims::qubits(3).unwrap();
    let q4 = Dims::qubits(4).unwrap();
    let two = (2.0, -2.0, -1.0);

    same(
        "three-qubit bound 1",
        &bound1_expr(&ProductFamily::parse(&q3, "001").unwrap()).unwrap(),
        &literal(&[(4, 6), (1, 4), (1, 6)], &[(2, 8), (2, 3), (2, 5)], &[1, 4, 6], two),
    )?;

    let fam = ProductFamily::parse(&q4, "0000").unwrap();
    let l_refs = [
        literal(&[(10, 11), (10, 13), (11, 13)], &[(9, 12), (9, 14), (9, 15)], &[10, 11, 13], two),
        literal(&[(6, 7), (6, 13), (7, 13)], &[(5, 8), (5, 14), (5, 15)], &[6, 7, 13], two),
        literal(&[(4, 7), (4, 11), (7, 11)], &[(3, 8), (3, 12), (3, 15)], &[4, 7, 11], two),
        literal(&[(4, 6), (4, 10), (6, 10)], &[(2, 8), (2, 12), (2, 14)], &[4, 6, 10], two),
    ];
    for (i, r) in l_refs.iter().enumerate() {
        same(&format!("L(ρ, ψ{})", i + 1), &bound2_expr(&fam, i).unwrap(), r)?;
    }

    let v4 = VertexSet::parse(&q4, "0011,0101,0110,1010").unwrap();
    if (v4.s(), v4.diagonal_coefficient()) != (3, 2) {
        return Err(format!("four-vertex set: s = {}, s − s0 = {}", v4.s(), v4.diagonal_coefficient()));
    }
    let published = literal(
        &[(4, 6), (4, 7), (4, 11), (6, 7), (7, 11)],
        &[(2, 8), (8, 5), (3, 5), (3, 12), (3, 15)],
        &[4, 6, 7, 11],
        (2.0, -2.0, -2.0),
    );
    // documented erratum: √(ρ33 ρ55) should read √(ρ33 ρ88)
    let mut corrected = published.clone();
    corrected.add(Term::sqrt_diag(2, 4), 2.0);
    corrected.add(Term::sqrt_diag(2, 7), -2.0);
    same("four-vertex bound 3", &bound3_expr(&v4, SwapSite::First).unwrap(), &corrected)?;
    same("four-vertex bound 3 (second site)", &bound3_expr(&v4, SwapSite::Second).unwrap(), &corrected)?;
    let k4 = bound3_constant(&v4);
    if (k4 - 3.0 * 2f64.sqrt()).abs() > 1e-15 {
        return Err(format!("four-vertex constant {k4}"));
    }

    let v3 = VertexSet::parse(&q4, "0011,0101,1010").unwrap();
    if v3.diagonal_coefficient() != 1 {
        return Err(format!("three-vertex s − s0 = {}", v3.diagonal_coefficient()));
    }
    same(
        "three-vertex bound 3",
        &bound3_expr(&v3, SwapSite::First).unwrap(),
        &literal(&[(4, 6), (4, 11)], &[(2, 8), (3, 12)], &[4, 6, 11], two),
    )?;

    let w_abs = [(2, 3), (2, 5), (2, 9), (2, 17), (3, 5), (3, 9), (3, 17), (5, 9), (5, 17), (9, 17)];
    let w_sqrt = [(1, 4), (1, 6), (1, 10), (1, 18), (1, 7), (1, 11), (1, 19), (1, 13), (1, 21), (1, 25)];
    let w_diag = [2, 3, 5, 9, 17];
    let a_abs = [(16, 24), (16, 28), (16, 30), (16, 31), (24, 28), (24, 30), (24, 31), (28, 30), (28, 31), (30, 31)];
    let a_sqrt = [(32, 8), (32, 12), (32, 14), (32, 15), (32, 20), (32, 22), (32, 23), (32, 26), (32, 27), (32, 29)];
    let a_diag = [16, 24, 28, 30, 31];
    let b1 = (2.0, -2.0, -3.0);
    let hub = (2.0, -6.0, -3.0);
    same("five-qubit bound 1 (W)", &bound1_expr(&WDirection::W.family()).unwrap(), &literal(&w_abs, &w_sqrt, &w_diag, b1))?;
    same("five-qubit bound 1 (anti-W)", &bound1_expr(&WDirection::AntiW.family()).unwrap(), &literal(&a_abs, &a_sqrt, &a_diag, b1))?;
    same("comparator (W)", &huber_ex2_expr(WDirection::W), &literal(&w_abs, &w_sqrt, &w_diag, hub))?;
    same("comparator (anti-W)", &huber_ex2_expr(WDirection::AntiW), &literal(&a_abs, &a_sqrt, &a_diag, hub))?;

    Ok("11 displayed expressions reproduced term for term (four-vertex bound 3 up to the √(ρ33ρ55) erratum)".into())
}

fn criterion8() -> Check {
    let mut g = SeededGenerator::new(808);
    let mut worst = 0.0f64;
    for n in [3, 4] {
        let d = Dims::qubits(n).unwrap();
        for _ in 0..100 {
            let phi = g.random_pure(&d);
            let u = g.random_local_unitary(&d);
            worst = worst.max((c_gme(&phi.apply_local(&u).unwrap()) - c_gme(&phi)).abs());
        }
    }
    if worst <= 1e-9 {
        Ok(format!("200 trials, max |ΔC_GME| = {worst:.2e}"))
    } else {
        Err(format!("C_GME changed by {worst:.2e}"))
    }
}

fn criterion9() -> Check {
    let mut g = SeededGenerator::new(909);
    let (mut positive, mut worst) = (0, f64::NEG_INFINITY);
    let mut count = 0;
    for profile in [&[2, 2, 2][..], &[2, 2, 2, 2], &[3, 3, 3]] {
        let d = dims(profile);
        let k = ConstantMode::Proof.bound1_constant(d.parties());
        for trial in 0..200 {
            let fam = g.random_family(&d);
            let m = 1 + trial % 5;
            let parts: Vec<(f64, PureState)> = if trial % 2 == 0 {
                g.random_mixture(&d, m).unwrap().1
            } else {
                let support = bound1_expr(&fam).unwrap().support();
                g.random_simplex(m).into_iter().map(|w| (w, g.random_pure_on(&d, &support).unwrap())).collect()
            };
            let dens: Vec<(f64, DensityMatrix)> = parts.iter().map(|(w, p)| (*w, p.to_density())).collect();
            let refs: Vec<(f64, &DensityMatrix)> = dens.iter().map(|(w, r)| (*w, r)).collect();
            let rho = DensityMatrix::mixture(&refs).unwrap();
            let f = bound1_f(&rho, &fam).unwrap();
            let rhs: f64 = parts.iter().map(|(w, p)| w * k * c_gme(p)).sum();
            if f > rhs + 1e-9 {
                return Err(format!("F = {f} exceeds Σ p_i k C_GME = {rhs}"));
            }
            worst = worst.max(f - rhs);
            positive += usize::from(f > 0.0);
            count += 1;
        }
    }
    Ok(format!("{count} mixtures ({positive} with F > 0), worst F − bound = {worst:.3e}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 9] = [
        ("observable identity", criterion1),
        ("threshold regressions", criterion2),
        ("two-parameter region", criterion3),
        ("dominance", criterion4),
        ("biseparable non-detection", criterion5),
        ("two-copy equivalence", criterion6),
        ("fixture regressions", criterion7),
        ("local-unitary invariance", criterion8),
        ("convexity dominance", criterion9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {} PASS  {name} — {detail} ({secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL  {name} — {detail} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
