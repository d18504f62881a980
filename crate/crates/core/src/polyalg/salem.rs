//! Salem polynomials: classification with certified Salem-number enclosures,
//! bounded-trace enumeration, and bounded power products.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::factor::is_irreducible_over_integers;
use super::sturm::{bisect_sign_change, cauchy_bound, count_roots_between, Bound};
use super::IntPolynomial;
use crate::arith::{binomial, int, rat, rat_int, rat_to_string, RationalInterval};
use crate::error::{Error, Result};
use crate::linalg::ZMatrix;

/// Largest degree accepted by [`enumerate_salem`].
pub const ENUMERATION_DEGREE_BOUND: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SalemCertificate {
    pub polynomial: IntPolynomial,
    pub degree: usize,
    /// Sum of the roots, `-a_{d-1}`.
    pub trace: BigInt,
    pub salem_number_interval: RationalInterval,
    pub unit_circle_root_pairs: usize,
    pub is_quadratic: bool,
}

impl SalemCertificate {
    pub fn salem_lo(&self) -> &BigRational {
        &self.salem_number_interval.lo
    }

    pub fn salem_hi(&self) -> &BigRational {
        &self.salem_number_interval.hi
    }

    /// Re-encloses the Salem number to width below `precision`.
    pub fn refine(&self, precision: &BigRational) -> Result<RationalInterval> {
        salem_root_enclosure(&self.polynomial, &self.salem_number_interval, precision)
    }

    /// Enclosure of `1/α`, the unique root in `(0, 1)`.
    pub fn inverse_root_enclosure(&self, precision: &BigRational) -> Result<RationalInterval> {
        bisect_sign_change(&self.polynomial, &BigRational::zero(), &BigRational::one(), precision)
    }
}

impl Serialize for SalemCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SalemCertificate", 6)?;
        st.serialize_field("polynomial", &self.polynomial)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("trace", &self.trace.to_string())?;
        st.serialize_field("salem_lo", &rat_to_string(self.salem_lo()))?;
        st.serialize_field("salem_hi", &rat_to_string(self.salem_hi()))?;
        st.serialize_field("quadratic", &self.is_quadratic)?;
        st.end()
    }
}

/// Which defining clause of a Salem polynomial fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SalemRejection {
    NotReciprocal,
    Reducible,
    RootLayout {
        /// Distinct trace-polynomial roots in `(2, ∞)`.
        above_two: usize,
        /// Distinct trace-polynomial roots in `(-2, 2)`.
        inside: usize,
    },
}

impl SalemRejection {
    pub fn reason(&self) -> &'static str {
        match self {
            SalemRejection::NotReciprocal => "not reciprocal",
            SalemRejection::Reducible => "reducible",
            SalemRejection::RootLayout { .. } => "root layout",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SalemVerdict {
    Salem(SalemCertificate),
    Rejected(SalemRejection),
}

impl SalemVerdict {
    pub fn is_salem(&self) -> bool {
        matches!(self, SalemVerdict::Salem(_))
    }

    pub fn certificate(&self) -> Option<&SalemCertificate> {
        match self {
            SalemVerdict::Salem(c) => Some(c),
            SalemVerdict::Rejected(_) => None,
        }
    }
}

/// Palindromic coefficient list.
pub fn is_reciprocal(p: &IntPolynomial) -> bool {
    p.is_reciprocal()
}

/// The `q` of degree `n` with `p(x) = x^n q(x + 1/x)` for reciprocal `p` of
/// degree `2n`.
pub fn trace_polynomial(p: &IntPolynomial) -> Result<IntPolynomial> {
    let d = p.degree();
    if d % 2 == 1 {
        return Err(Error::OddDegree(d));
    }
    if !p.is_reciprocal() {
        return Err(Error::NotReciprocal);
    }
    let n = d / 2;
    // x^k + x^-k = D_k(y) with D_0 = 2, D_1 = y, D_k = y D_{k-1} - D_{k-2}
    let y = IntPolynomial::monomial(1);
    let mut dickson = vec![IntPolynomial::constant(int(2)), y.clone()];
    for k in 2..=n {
        let next = y.mul(&dickson[k - 1]).sub(&dickson[k - 2]);
        dickson.push(next);
    }
    let mut q = IntPolynomial::constant(p.coeff(n));
    for k in 1..=n {
        q = q.add(&dickson[k].scale(&p.coeff(n + k)));
    }
    Ok(q)
}

/// Inverse of [`trace_polynomial`]: `x^n q(x + 1/x)`.
pub fn from_trace_polynomial(q: &IntPolynomial) -> IntPolynomial {
    let n = q.degree();
    let x2p1 = IntPolynomial::from_i64(&[1, 0, 1]);
    let mut out = IntPolynomial::zero();
    for (k, c) in q.coeffs().iter().enumerate() {
        let term = x2p1
            .pow(k)
            .mul(&IntPolynomial::monomial(n - k))
            .scale(c);
        out = out.add(&term);
    }
    out
}

/// Distinct real roots of `q` in `(2, ∞)` and in `(-2, 2)`; `q(±2) ≠ 0`.
fn trace_root_layout(q: &IntPolynomial) -> Result<(usize, usize)> {
    let two = Bound::At(rat(2, 1));
    let m_two = Bound::At(rat(-2, 1));
    let above = count_roots_between(q, &two, &Bound::PosInf)?;
    let inside = count_roots_between(q, &m_two, &two)?;
    Ok((above, inside))
}

/// Bisection for the unique root of a Salem polynomial in `(1, ∞)` inside a
/// starting bracket, until the width drops below `precision`.
fn salem_root_enclosure(
    p: &IntPolynomial,
    start: &RationalInterval,
    precision: &BigRational,
) -> Result<RationalInterval> {
    let one = BigRational::one();
    let mut enc = start.clone();
    if enc.lo == enc.hi && enc.lo > one {
        return Ok(enc);
    }
    if enc.width() >= *precision || enc.lo <= one {
        enc = bisect_sign_change(p, &enc.lo, &enc.hi, precision)?;
    }
    // keep the lower end strictly above 1
    let mut eps = precision.clone();
    while enc.lo <= one {
        eps /= rat(2, 1);
        enc = bisect_sign_change(p, &enc.lo, &enc.hi, &eps)?;
    }
    Ok(enc)
}

/// Classifies a monic polynomial as Salem (with a certified enclosure of the
/// Salem number of width below `precision`) or names the failing clause.
pub fn classify_salem(p: &IntPolynomial, precision: &BigRational) -> Result<SalemVerdict> {
    if !p.is_monic() || p.degree() < 2 {
        return Err(Error::Precondition("monic polynomial of degree >= 2 required".into()));
    }
    if !precision.is_positive() {
        return Err(Error::Precondition("precision must be positive".into()));
    }
    if !p.is_reciprocal() {
        return Ok(SalemVerdict::Rejected(SalemRejection::NotReciprocal));
    }
    let d = p.degree();
    // odd reciprocal polynomials vanish at -1; repeated roots mean a square factor
    if d % 2 == 1 || !p.is_squarefree() {
        return Ok(SalemVerdict::Rejected(SalemRejection::Reducible));
    }
    let q = trace_polynomial(p)?;
    // p squarefree, so q(±2) ≠ 0 and q is squarefree
    let (above, inside) = trace_root_layout(&q)?;
    let n = q.degree();
    if above != 1 || inside != n - 1 {
        return Ok(SalemVerdict::Rejected(SalemRejection::RootLayout {
            above_two: above,
            inside,
        }));
    }
    if !is_irreducible_over_integers(p)? {
        return Ok(SalemVerdict::Rejected(SalemRejection::Reducible));
    }
    // p(1) = q(2) < 0 and p(B) > 0: α is the only root in (1, B)
    let b = rat_int(&cauchy_bound(p));
    let start = RationalInterval::new(BigRational::one(), b)?;
    let enclosure = salem_root_enclosure(p, &start, precision)?;
    Ok(SalemVerdict::Salem(SalemCertificate {
        polynomial: p.clone(),
        degree: d,
        trace: -p.coeff(d - 1),
        salem_number_interval: enclosure,
        unit_circle_root_pairs: (d - 2) / 2,
        is_quadratic: d == 2,
    }))
}

/// Coefficient box for the trace polynomial `y^m - e1 y^{m-1} + e2 y^{m-2} - ...`
/// of a Salem polynomial with largest trace root below `y_max` and the other
/// `m - 1` roots in `(-2, 2)`: `|e_k| <= C(m-1,k-1) y_max 2^{k-1} + C(m-1,k) 2^k`.
pub fn elementary_bounds(m: usize, y_max: i64) -> Vec<i128> {
    let m1 = (m - 1) as u64;
    (0..=m as u64)
        .map(|k| {
            if k == 0 {
                return 1;
            }
            let a = binomial(m1, k - 1).to_i128().unwrap_or(i128::MAX / 4);
            let b = if k <= m1 {
                binomial(m1, k).to_i128().unwrap_or(i128::MAX / 4)
            } else {
                0
            };
            a * y_max as i128 * (1i128 << (k - 1)) + b * (1i128 << k)
        })
        .collect()
}

/// Newton's inequality `E_k^2 >= E_{k-1} E_{k+1}` (with `E_k = e_k / C(m,k)`),
/// necessary for a real-rooted polynomial.
fn newton_ok(e: &[i128], k: usize, m: usize) -> bool {
    let c = |j: usize| binomial(m as u64, j as u64).to_i128().unwrap();
    let lhs = e[k] * e[k] * c(k - 1) * c(k + 1);
    let rhs = e[k - 1] * e[k + 1] * c(k) * c(k);
    lhs >= rhs
}

fn trace_poly_from_elementary(e: &[i128]) -> IntPolynomial {
    let m = e.len() - 1;
    let mut coeffs = vec![BigInt::zero(); m + 1];
    for (k, ek) in e.iter().enumerate() {
        let v = BigInt::from(*ek);
        coeffs[m - k] = if k % 2 == 1 { -v } else { v };
    }
    IntPolynomial::new(coeffs)
}

/// Power sums `p_0 … p_{2m}` of the roots of a monic `q`.
fn power_sums(q: &IntPolynomial) -> Vec<BigInt> {
    let m = q.degree();
    // e_k = (-1)^k q_{m-k}
    let e: Vec<BigInt> = (0..=m)
        .map(|k| if k % 2 == 1 { -q.coeff(m - k) } else { q.coeff(m - k) })
        .collect();
    let mut p = vec![BigInt::from(m)];
    for k in 1..=2 * m {
        let mut acc = BigInt::zero();
        for i in 1..k.min(m + 1) {
            let t = &e[i] * &p[k - i];
            if i % 2 == 1 {
                acc += t;
            } else {
                acc -= t;
            }
        }
        if k <= m {
            let t = &e[k] * BigInt::from(k);
            if k % 2 == 1 {
                acc += t;
            } else {
                acc -= t;
            }
        }
        p.push(acc);
    }
    p
}

/// Necessary condition for a Salem trace polynomial, by Hermite's criterion:
/// the Hankel form of power sums is positive definite (all roots real and
/// simple), and its `4 - y²` twist has negative determinant (an odd number of
/// roots outside `[-2, 2]`).
fn hermite_layout_possible(q: &IntPolynomial) -> bool {
    let m = q.degree();
    let p = power_sums(q);
    let hankel = ZMatrix::from_flat(m, m, (0..m * m).map(|k| p[k / m + k % m].clone()).collect());
    // Bareiss without pivoting: the k-th pivot is the k-th leading minor
    let mut a = hankel;
    let mut prev = BigInt::one();
    for k in 0..m {
        if !a[(k, k)].is_positive() {
            return false;
        }
        for i in k + 1..m {
            for j in k + 1..m {
                let v = (&a[(k, k)] * &a[(i, j)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                a[(i, j)] = v;
            }
        }
        prev = a[(k, k)].clone();
    }
    let twisted = ZMatrix::from_flat(
        m,
        m,
        (0..m * m)
            .map(|k| {
                let s = k / m + k % m;
                BigInt::from(4) * &p[s] - &p[s + 2]
            })
            .collect(),
    );
    twisted.det().is_negative()
}

fn scan_tail(e: &mut Vec<i128>, k: usize, m: usize, bounds: &[i128], out: &mut Vec<IntPolynomial>) {
    if k == m {
        // q(2) < 0 and (-1)^m q(-2) > 0 pin the constant term to an interval
        let mut a = 0i128; // sum_{j<m} e_j 2^{m-j}
        let mut b = 0i128; // sum_{j<m} (-1)^j e_j 2^{m-j}
        for j in 0..m {
            let w = e[j] << (m - j);
            a += w;
            b += if j % 2 == 1 { -w } else { w };
        }
        // (-1)^m q(-2) = a + e_m > 0 and q(2) = b + (-1)^m e_m < 0
        let (lo, hi) = if m % 2 == 0 {
            (-a + 1, -b - 1)
        } else {
            ((-a + 1).max(b + 1), bounds[m])
        };
        let lo = lo.max(-bounds[m]);
        let hi = hi.min(bounds[m]);
        for em in lo..=hi {
            e[m] = em;
            if m >= 2 && !newton_ok(e, m - 1, m) {
                continue;
            }
            out.push(trace_poly_from_elementary(e));
        }
        return;
    }
    for ek in -bounds[k]..=bounds[k] {
        e[k] = ek;
        if k >= 2 && !newton_ok(e, k - 1, m) {
            continue;
        }
        scan_tail(e, k + 1, m, bounds, out);
    }
}

/// All Salem polynomials of the given even degree whose trace lies in
/// `[trace_min, trace_max]`, sorted by ascending coefficient tuple.
pub fn enumerate_salem(degree: usize, trace_min: i64, trace_max: i64) -> Result<Vec<SalemCertificate>> {
    if degree % 2 == 1 {
        return Err(Error::OddDegree(degree));
    }
    if degree < 2 || degree > ENUMERATION_DEGREE_BOUND {
        return Err(Error::DegreeBound {
            degree,
            bound: ENUMERATION_DEGREE_BOUND,
        });
    }
    if trace_min > trace_max {
        return Err(Error::Precondition("trace_min exceeds trace_max".into()));
    }
    let m = degree / 2;
    // largest trace root: y0 = trace - (others) < trace_max + 2(m - 1)
    let y_max = trace_max + 2 * (m as i64 - 1);
    if y_max <= 2 {
        return Ok(Vec::new());
    }
    let bounds = elementary_bounds(m, y_max);
    let t_lo = trace_min.max(-(bounds[1] as i64));
    let t_hi = trace_max.min(bounds[1] as i64);
    if t_lo > t_hi {
        return Ok(Vec::new());
    }
    // (e1, e2) seeds for the parallel scan
    let seeds: Vec<(i128, i128)> = (t_lo as i128..=t_hi as i128)
        .flat_map(|t| {
            let b2 = if m >= 2 { bounds[2] } else { 0 };
            (-b2..=b2).map(move |e2| (t, e2))
        })
        .collect();
    let precision = rat(1, 1 << 20);
    let mut found: Vec<SalemCertificate> = seeds
        .par_iter()
        .flat_map_iter(|&(t, e2)| {
            let mut e = vec![0i128; m + 1];
            e[0] = 1;
            e[1] = t;
            let mut candidates = Vec::new();
            if m == 1 {
                candidates.push(trace_poly_from_elementary(&e));
            } else {
                e[2] = e2;
                // power sum y0^2 + sum y_i^2 lies in (4, y_max^2 + 4(m-1))
                let p2 = t * t - 2 * e2;
                let p2_max = (y_max as i128) * (y_max as i128) + 4 * (m as i128 - 1);
                if p2 > 4 && p2 < p2_max {
                    if m == 2 {
                        scan_tail(&mut e, 2, m, &bounds, &mut candidates);
                    } else if newton_ok(&[e[0], e[1], e[2]], 1, m) {
                        scan_tail(&mut e, 3, m, &bounds, &mut candidates);
                    }
                }
            }
            candidates
                .into_iter()
                .filter(|q| hermite_layout_possible(q))
                .filter_map(|q| {
                    let p = from_trace_polynomial(&q);
                    match classify_salem(&p, &precision) {
                        Ok(SalemVerdict::Salem(c)) => Some(c),
                        _ => None,
                    }
                })
                .collect::<Vec<_>>()
        })
        .collect();
    found.sort_by(|a, b| a.polynomial.cmp(&b.polynomial));
    found.dedup_by(|a, b| a.polynomial == b.polynomial);
    Ok(found)
}

/// For each `n`, every integer `m` with `c1 < α^n β^m < c2`, certified by
/// interval evaluation with on-demand refinement of the Salem enclosures.
pub fn bounded_power_products(
    alpha: &SalemCertificate,
    beta: &SalemCertificate,
    c1: &BigRational,
    c2: &BigRational,
    n_range: std::ops::RangeInclusive<i64>,
) -> Result<Vec<(i64, i64, RationalInterval)>> {
    if !(c1 > &BigRational::one() && c1 < c2) {
        return Err(Error::Precondition("need 1 < c1 < c2".into()));
    }
    const BUDGET: usize = 40;
    let la = alpha.salem_number_interval.midpoint().to_f64().unwrap_or(f64::NAN).ln();
    let lb = beta.salem_number_interval.midpoint().to_f64().unwrap_or(f64::NAN).ln();
    let (l1, l2) = (c1.to_f64().unwrap().ln(), c2.to_f64().unwrap().ln());
    let mut out = Vec::new();
    for n in n_range {
        let m_lo = ((l1 - n as f64 * la) / lb).floor() as i64 - 2;
        let m_hi = ((l2 - n as f64 * la) / lb).ceil() as i64 + 2;
        for m in m_lo..=m_hi {
            let mut a = alpha.salem_number_interval.clone();
            let mut b = beta.salem_number_interval.clone();
            let mut eps = a.width().max(b.width()).max(rat(1, 1 << 20));
            let mut decided = None;
            for _ in 0..BUDGET {
                let v = a.powi_positive(n).mul_positive(&b.powi_positive(m));
                if &v.lo > c1 && &v.hi < c2 {
                    decided = Some(Some(v));
                    break;
                }
                if &v.hi <= c1 || &v.lo >= c2 {
                    decided = Some(None);
                    break;
                }
                eps /= BigRational::from_integer(BigInt::from(1u64 << 16));
                a = alpha.refine(&eps)?;
                b = beta.refine(&eps)?;
            }
            match decided {
                Some(Some(v)) => out.push((n, m, v)),
                Some(None) => {}
                None => return Err(Error::Undecidable(BUDGET)),
            }
        }
    }
    Ok(out)
}
