//! Reference matrix-element structures, written with 1-based labels.

use crate::bounds::{ElementExpr, Term};

/// Builds `ca Σ|ρ[r,c]| + cs Σ√(ρ[r,r]ρ[c,c]) + cd Σρ[k,k]` from 1-based labels.
fn labelled(
    abs: &[(usize, usize)],
    sqrt: &[(usize, usize)],
    diag: &[usize],
    (ca, cs, cd): (f64, f64, f64),
) -> ElementExpr {
    let mut e = ElementExpr::new();
    for &(r, c) in abs {
        e.add(Term::abs(r - 1, c - 1), ca);
    }
    for &(r, c) in sqrt {
        e.add(Term::sqrt_diag(r - 1, c - 1), cs);
    }
    for &k in diag {
        e.add(Term::Diag(k - 1), cd);
    }
    e
}

/// Three-qubit Bound 1 for the bit-flip family of `001`.
///
/// The published display drops the minus between the last two square roots;
/// the reference reads it as `−√(ρ22ρ33) − √(ρ22ρ55)`.
pub fn three_qubit_bound1() -> ElementExpr {
    labelled(
        &[(4, 6), (1, 4), (1, 6)],
        &[(2, 8), (2, 3), (2, 5)],
        &[1, 4, 6],
        (2.0, -2.0, -1.0),
    )
}

/// Four-qubit `L(ρ, ψ_i)` for the bit-flip family of `0000`, `i = 1..4`.
pub fn four_qubit_bound2() -> [ElementExpr; 4] {
    let w = (2.0, -2.0, -1.0);
    [
        labelled(&[(10, 11), (10, 13), (11, 13)], &[(9, 12), (9, 14), (9, 15)], &[10, 11, 13], w),
        labelled(&[(6, 7), (6, 13), (7, 13)], &[(5, 8), (5, 14), (5, 15)], &[6, 7, 13], w),
        labelled(&[(4, 7), (4, 11), (7, 11)], &[(3, 8), (3, 12), (3, 15)], &[4, 7, 11], w),
        labelled(&[(4, 6), (4, 10), (6, 10)], &[(2, 8), (2, 12), (2, 14)], &[4, 6, 10], w),
    ]
}

/// Bound 3 for `V = {0011, 0101, 0110, 1010}` exactly as published.
pub fn four_vertex_bound3_published() -> ElementExpr {
    labelled(
        &[(4, 6), (4, 7), (4, 11), (6, 7), (7, 11)],
        &[(2, 8), (8, 5), (3, 5), (3, 12), (3, 15)],
        &[4, 6, 7, 11],
        (2.0, -2.0, -2.0),
    )
}

/// Generated minus published for [`four_vertex_bound3_published`].
///
/// The pair `0011, 0110` exchanges to `0111, 0010`, i.e. `√(ρ33ρ88)`; the
/// published `√(ρ33ρ55)` pairs `0010` with `0100`, which no neighbor pair yields.
pub fn four_vertex_bound3_erratum() -> ElementExpr {
    let mut e = ElementExpr::new();
    e.add(Term::sqrt_diag(2, 7), -2.0);
    e.add(Term::sqrt_diag(2, 4), 2.0);
    e
}

/// Bound 3 for `V = {0011, 0101, 1010}`.
pub fn three_vertex_bound3() -> ElementExpr {
    labelled(&[(4, 6), (4, 11)], &[(2, 8), (3, 12)], &[4, 6, 11], (2.0, -2.0, -1.0))
}

const W_ABS: [(usize, usize); 10] = [
    (2, 3), (2, 5), (2, 9), (2, 17), (3, 5), (3, 9), (3, 17), (5, 9), (5, 17), (9, 17),
];
const W_SQRT: [(usize, usize); 10] = [
    (1, 4), (1, 6), (1, 10), (1, 18), (1, 7), (1, 11), (1, 19), (1, 13), (1, 21), (1, 25),
];
const W_DIAG: [usize; 5] = [2, 3, 5, 9, 17];
const ANTI_ABS: [(usize, usize); 10] = [
    (16, 24), (16, 28), (16, 30), (16, 31), (24, 28), (24, 30), (24, 31), (28, 30), (28, 31), (30, 31),
];
const ANTI_SQRT: [(usize, usize); 10] = [
    (32, 8), (32, 12), (32, 14), (32, 15), (32, 20), (32, 22), (32, 23), (32, 26), (32, 27), (32, 29),
];
const ANTI_DIAG: [usize; 5] = [16, 24, 28, 30, 31];

/// Five-qubit Bound 1, bit-flip families of `00000` and `11111`.
pub fn five_qubit_bound1() -> (ElementExpr, ElementExpr) {
    let w = (2.0, -2.0, -3.0);
    (
        labelled(&W_ABS, &W_SQRT, &W_DIAG, w),
        labelled(&ANTI_ABS, &ANTI_SQRT, &ANTI_DIAG, w),
    )
}

/// Five-qubit comparator, same two families.
pub fn five_qubit_comparator() -> (ElementExpr, ElementExpr) {
    let w = (2.0, -6.0, -3.0);
    (
        labelled(&W_ABS, &W_SQRT, &W_DIAG, w),
        labelled(&ANTI_ABS, &ANTI_SQRT, &ANTI_DIAG, w),
    )
}
