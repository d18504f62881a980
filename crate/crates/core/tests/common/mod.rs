//! Floating-point root oracle, independent of the exact machinery: Aberth
//! iteration on the complex roots, Newton inclusion radii `n |f(z) / f'(z)|`
//! (some root of a degree-n polynomial always lies that close to `z`), and a
//! plain integer division test for cyclotomic factors.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;

/// An approximate root with a radius guaranteed to contain some true root.
#[derive(Clone, Copy, Debug)]
pub struct RootDisk {
    pub z: Complex64,
    pub radius: f64,
}

fn horner(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// All complex roots of a polynomial (ascending coefficients, nonzero
/// leading term).
pub fn roots(coeffs: &[f64]) -> Vec<RootDisk> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let c: Vec<f64> = coeffs.iter().map(|a| a / lead).collect();
    let bound = 1.0 + c[..n].iter().fold(0.0f64, |m, a| m.max(a.abs()));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(bound * 0.7, 0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64))
        .collect();
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (p, dp) = horner(&c, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j]))
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                moved = moved.max(step.norm());
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z.into_iter()
        .map(|zi| {
            let (p, dp) = horner(&c, zi);
            let radius = if p.norm() == 0.0 { 0.0 } else { n as f64 * (p / dp).norm() };
            RootDisk { z: zi, radius }
        })
        .collect()
}

pub fn to_f64(coeffs: &[BigInt]) -> Vec<f64> {
    coeffs.iter().map(|c| c.to_f64().expect("finite coefficient")).collect()
}

/// Exact remainder of `f` by the monic `d` (ascending integer coefficients).
fn rem_monic(f: &[i128], d: &[i128]) -> Vec<i128> {
    let mut r = f.to_vec();
    let dd = d.len() - 1;
    while r.len() > dd {
        let top = *r.last().unwrap();
        let shift = r.len() - 1 - dd;
        for (i, &x) in d.iter().enumerate() {
            r[shift + i] -= top * x;
        }
        r.pop();
    }
    r
}

/// `Φ_1 … Φ_limit`, each as `x^n - 1` divided exactly by the earlier `Φ_d`,
/// `d | n`.
pub fn cyclotomic_table(limit: usize) -> Vec<Vec<i128>> {
    let mut table: Vec<Vec<i128>> = vec![Vec::new()];
    for n in 1..=limit {
        let mut f = vec![0i128; n + 1];
        f[0] = -1;
        f[n] = 1;
        for d in (1..n).filter(|d| n % d == 0) {
            let g = &table[d];
            let mut rem = f.clone();
            let mut q = vec![0i128; f.len() - g.len() + 1];
            for k in (0..q.len()).rev() {
                let coef = rem[k + g.len() - 1];
                q[k] = coef;
                for (i, &x) in g.iter().enumerate() {
                    rem[k + i] -= coef * x;
                }
            }
            assert!(rem.iter().all(|&x| x == 0));
            f = q;
        }
        table.push(f);
    }
    table
}

const MAX_DEGREE: usize = 12;

fn table() -> &'static [Vec<i128>] {
    use std::sync::OnceLock;
    static TABLE: OnceLock<Vec<Vec<i128>>> = OnceLock::new();
    TABLE.get_or_init(|| cyclotomic_table(2 * MAX_DEGREE * MAX_DEGREE))
}

/// Whether some `Φ_n` of degree at most `deg f` divides `f` (`φ(n) <= d`
/// forces `n <= 2 d^2`).
pub fn has_cyclotomic_factor(f: &[i128]) -> bool {
    let deg = f.len() - 1;
    assert!(deg <= MAX_DEGREE, "oracle table covers degree <= {MAX_DEGREE}");
    table()[1..]
        .iter()
        .any(|phi| phi.len() - 1 <= deg && rem_monic(f, phi).iter().all(|&x| x == 0))
}

/// Numeric Salem verdict for a monic reciprocal polynomial of degree `>= 4`;
/// Roots within `1e-12` of the circle count as on it; `None` when a disk
/// straddles the circle while its centre is farther away than that.
pub fn numeric_is_salem(f: &[i64]) -> Option<bool> {
    let wide: Vec<i128> = f.iter().map(|&x| x as i128).collect();
    if has_cyclotomic_factor(&wide) {
        return Some(false);
    }
    let disks = roots(&f.iter().map(|&x| x as f64).collect::<Vec<_>>());
    let (mut outside, mut inside, mut on) = (Vec::new(), 0, 0);
    for d in &disks {
        let m = d.z.norm();
        if (m - 1.0).abs() <= 1e-12 {
            on += 1;
        } else if m - d.radius > 1.0 {
            outside.push(d.z);
        } else if m + d.radius < 1.0 {
            inside += 1;
        } else {
            return None;
        }
    }
    Some(outside.len() == 1 && inside == 1 && outside[0].re > 1.0 && on == f.len() - 3)
}

/// `f` with every cyclotomic factor divided out (with multiplicity), so that
/// the remaining roots are well separated from one another near the circle.
pub fn strip_cyclotomic(f: &[BigInt]) -> Vec<i128> {
    let mut f: Vec<i128> = f.iter().map(|c| c.to_i128().expect("coefficient fits i128")).collect();
    assert!(f.len() - 1 <= MAX_DEGREE, "oracle table covers degree <= {MAX_DEGREE}");
    for phi in &table()[1..] {
        while phi.len() <= f.len() && rem_monic(&f, phi).iter().all(|&x| x == 0) {
            f = quotient_monic(&f, phi);
        }
    }
    f
}

fn quotient_monic(f: &[i128], d: &[i128]) -> Vec<i128> {
    let mut r = f.to_vec();
    let mut q = vec![0i128; f.len() - d.len() + 1];
    for k in (0..q.len()).rev() {
        let coef = r[k + d.len() - 1];
        q[k] = coef;
        for (i, &x) in d.iter().enumerate() {
            r[k + i] -= coef * x;
        }
    }
    q
}

fn noncyclotomic_roots(coeffs: &[BigInt]) -> Vec<RootDisk> {
    let rest = strip_cyclotomic(coeffs);
    if rest.len() <= 1 {
        return Vec::new();
    }
    roots(&rest.iter().map(|&x| x as f64).collect::<Vec<_>>())
}

/// Number of roots (with multiplicity) of modulus above `1 + 1e-6`.
pub fn numeric_outside_count(coeffs: &[BigInt]) -> usize {
    noncyclotomic_roots(coeffs).iter().filter(|d| d.z.norm() > 1.0 + 1e-6).count()
}

/// `log` of the largest root modulus.
pub fn numeric_log_radius(coeffs: &[BigInt]) -> f64 {
    noncyclotomic_roots(coeffs).iter().map(|d| d.z.norm()).fold(1.0f64, f64::max).ln()
}
