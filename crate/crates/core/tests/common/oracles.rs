//! Independent reference computations used to check the library.

#![allow(dead_code)]

use std::f64::consts::PI;

use tenfold_core::linalg::pauli;
use tenfold_core::models::BlochModel;
use tenfold_core::rep::{GeneratorSet, IntMatrix};

fn unit_d(model: &BlochModel, k1: f64, k2: f64) -> [f64; 3] {
    let h = model.hamiltonian_reduced(k1, k2);
    let mut d = [0.0; 3];
    for (i, slot) in d.iter_mut().enumerate() {
        *slot = (&h * pauli(i + 1)).trace().re / 2.0;
    }
    let norm = (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt();
    [d[0] / norm, d[1] / norm, d[2] / norm]
}

fn triple(a: [f64; 3], b: [f64; 3], c: [f64; 3]) -> f64 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0])
}

fn dot3(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Signed solid angle of the spherical triangle `(a, b, c)`.
fn solid_angle(a: [f64; 3], b: [f64; 3], c: [f64; 3]) -> f64 {
    let num = triple(a, b, c);
    let den = 1.0 + dot3(a, b) + dot3(b, c) + dot3(c, a);
    2.0 * num.atan2(den)
}

/// Degree of `k ↦ d̂(k)` for a two-band model, by summing signed solid angles
/// over an `m × m` triangulation of the zone traversed right-handed in
/// `(k1, k2)`.
pub fn solid_angle_degree(model: &BlochModel, m: usize) -> f64 {
    let mf = m as f64;
    let d: Vec<Vec<[f64; 3]>> =
        (0..=m).map(|i| (0..=m).map(|j| unit_d(model, i as f64 / mf, j as f64 / mf)).collect()).collect();
    let mut total = 0.0;
    for i in 0..m {
        for j in 0..m {
            let (p00, p10, p11, p01) = (d[i][j], d[i + 1][j], d[i + 1][j + 1], d[i][j + 1]);
            total += solid_angle(p00, p10, p11) + solid_angle(p00, p11, p01);
        }
    }
    total / (4.0 * PI)
}

/// `dim_R` of the commutant from characters: the generators span a finite
/// group `{±e_S}` and `dim End_G(V) = (1/2^n) Σ_S tr(e_S)²`.
pub fn commutant_by_characters(gens: &GeneratorSet) -> usize {
    let n = gens.matrices.len();
    let mut sum: i128 = 0;
    for mask in 0u32..(1 << n) {
        let mut prod = IntMatrix::identity(gens.dimension);
        for (i, g) in gens.matrices.iter().enumerate() {
            if mask & (1 << i) != 0 {
                prod = prod.mul(g);
            }
        }
        let tr: i128 = (0..gens.dimension).map(|i| i128::from(prod[(i, i)])).sum();
        sum += tr * tr;
    }
    let denom = 1i128 << n;
    assert_eq!(sum % denom, 0, "character sum must be divisible");
    (sum / denom) as usize
}
