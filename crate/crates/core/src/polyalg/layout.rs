//! Exact position of roots relative to the unit circle, and certified
//! spectral radii.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::cyclotomic::is_cyclotomic_product;
use super::factor::factor_monic;
use super::salem::trace_polynomial;
use super::sturm::{bisect_sign_change, cauchy_bound, count_roots_between, Bound};
use super::IntPolynomial;
use crate::arith::{rat, rat_int, sqrt_enclosure, RationalInterval};
use crate::error::{Error, Result};

/// Root counts with multiplicity.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct UnitCircleLayout {
    pub outside: usize,
    pub on_circle: usize,
    pub inside: usize,
    /// Real roots `> 1`.
    pub outside_positive: usize,
    /// Real roots `< -1`.
    pub outside_negative: usize,
}

impl UnitCircleLayout {
    pub fn outside_nonreal(&self) -> usize {
        self.outside - self.outside_positive - self.outside_negative
    }
}

/// Strips all factors `x - 1` and `x + 1`; returns `(rest, #(x-1), #(x+1))`.
pub fn strip_unit_roots(f: &IntPolynomial) -> (IntPolynomial, usize, usize) {
    let mut rest = f.clone();
    let mut counts = [0usize; 2];
    for (slot, root) in [(0usize, 1i64), (1, -1)] {
        let lin = IntPolynomial::from_i64(&[-root, 1]);
        while rest.degree() > 0 {
            match rest.div_exact(&lin) {
                Some(q) => {
                    rest = q;
                    counts[slot] += 1;
                }
                None => break,
            }
        }
    }
    (rest, counts[0], counts[1])
}

/// Layout of the roots of a polynomial whose roots are closed under inversion
/// (characteristic polynomials of isometries), via the trace polynomial of its
/// palindromic part and Sturm counts; no floating point.
pub fn unit_circle_layout(f: &IntPolynomial) -> Result<UnitCircleLayout> {
    if f.is_zero() || f.coeff(0).is_zero() {
        return Err(Error::Precondition("layout needs f(0) != 0".into()));
    }
    let (rest, a, b) = strip_unit_roots(f);
    let mut out = UnitCircleLayout {
        on_circle: a + b,
        ..Default::default()
    };
    if rest.degree() == 0 {
        return Ok(out);
    }
    let rest = rest.primitive_part();
    if !rest.is_reciprocal() {
        return Err(Error::NotReciprocal);
    }
    let q = trace_polynomial(&rest)?;
    let two = Bound::At(rat(2, 1));
    let m_two = Bound::At(rat(-2, 1));
    for (h, mult) in q.squarefree_decomposition() {
        // h(±2) ≠ 0 because rest(±1) ≠ 0
        let above = count_roots_between(&h, &two, &Bound::PosInf)?;
        let below = count_roots_between(&h, &Bound::NegInf, &m_two)?;
        let mid = count_roots_between(&h, &m_two, &two)?;
        let nonreal = h.degree() - above - below - mid;
        out.outside_positive += above * mult;
        out.outside_negative += below * mult;
        out.outside += (above + below + nonreal) * mult;
        out.inside += (above + below + nonreal) * mult;
        out.on_circle += 2 * mid * mult;
    }
    Ok(out)
}

/// Enclosure of the largest real root of a squarefree `p` in `(lo, hi)`,
/// assuming at least one root there and non-root endpoints.
pub fn largest_root_in(
    p: &IntPolynomial,
    lo: &BigRational,
    hi: &BigRational,
    eps: &BigRational,
) -> Result<RationalInterval> {
    let count = |a: &BigRational, b: &BigRational| {
        count_roots_between(p, &Bound::At(a.clone()), &Bound::At(b.clone()))
    };
    let (mut a, mut b) = (lo.clone(), hi.clone());
    while count(&a, &b)? > 1 {
        let mut mid = (&a + &b) / rat(2, 1);
        if p.sign_at(&mid) == 0 {
            mid = (&a + &mid * rat(2, 1)) / rat(3, 1);
        }
        if count(&mid, &b)? >= 1 {
            a = mid;
        } else {
            b = mid;
        }
    }
    bisect_sign_change(p, &a, &b, eps)
}

/// `Π_{i<=j} (t - z_i z_j)` for the roots `z_i` of a monic `f`; its largest
/// real root is the squared spectral radius.
pub fn pair_product_polynomial(f: &IntPolynomial) -> IntPolynomial {
    let n = f.degree();
    let big_n = n * (n + 1) / 2;
    let a = f.coeffs();
    // power sums of the roots of f
    let mut s = vec![BigInt::zero(); 2 * big_n + 1];
    s[0] = BigInt::from(n);
    for k in 1..=2 * big_n {
        let mut acc = BigInt::zero();
        for i in 1..=k.min(n) {
            let coeff = &a[n - i];
            if i == k {
                acc += coeff * BigInt::from(k);
            } else {
                acc += coeff * &s[k - i];
            }
        }
        s[k] = -acc;
    }
    let pw: Vec<BigInt> = (0..=big_n)
        .map(|k| {
            if k == 0 {
                BigInt::from(big_n)
            } else {
                (&s[k] * &s[k] + &s[2 * k]) / 2
            }
        })
        .collect();
    // Newton: k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} P_i
    let mut e = vec![BigInt::one()];
    for k in 1..=big_n {
        let mut acc = BigInt::zero();
        for i in 1..=k {
            let term = &e[k - i] * &pw[i];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let (q, r) = acc.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero());
        e.push(q);
    }
    let mut coeffs = vec![BigInt::zero(); big_n + 1];
    for (k, ek) in e.into_iter().enumerate() {
        coeffs[big_n - k] = if k % 2 == 1 { -ek } else { ek };
    }
    IntPolynomial::new(coeffs)
}

fn reflect(p: &IntPolynomial) -> IntPolynomial {
    p.compose_scale(&BigInt::from(-1))
}

/// Spectral radius of a monic irreducible non-cyclotomic factor.
fn factor_radius(g: &IntPolynomial, eps: &BigRational) -> Result<RationalInterval> {
    let one = BigRational::one();
    let layout = if g.is_reciprocal() {
        unit_circle_layout(g).ok()
    } else {
        None
    };
    if let Some(l) = layout.filter(|l| l.outside_nonreal() == 0) {
        let bound = rat_int(&cauchy_bound(g));
        let mut best: Option<RationalInterval> = None;
        if l.outside_positive > 0 {
            best = Some(largest_root_in(g, &one, &bound, eps)?);
        }
        if l.outside_negative > 0 {
            let r = largest_root_in(&reflect(g).primitive_part(), &one, &bound, eps)?;
            best = Some(match best {
                Some(b) if b.lo >= r.hi => b,
                Some(b) if r.lo >= b.hi => r,
                Some(b) => RationalInterval::new(b.lo.clone().max(r.lo), b.hi.max(r.hi))?,
                None => r,
            });
        }
        if let Some(b) = best {
            return Ok(b);
        }
    }
    let pp = pair_product_polynomial(g).squarefree_part();
    let pp = if pp.leading().is_negative() { pp.neg() } else { pp };
    let bound = rat_int(&cauchy_bound(&pp));
    // pairs z, 1/z give the root t = 1; the squared radius exceeds 1 (Kronecker)
    let t_minus_1 = IntPolynomial::from_i64(&[-1, 1]);
    let pp = pp.div_exact(&t_minus_1).unwrap_or(pp);
    let start = one.clone();
    if count_roots_between(&pp, &Bound::At(start.clone()), &Bound::At(bound.clone()))? == 0 {
        return Err(Error::Precondition("no root beyond the unit circle".into()));
    }
    let sq = largest_root_in(&pp, &start, &bound, &(eps * eps / rat(16, 1)))?;
    let lo = sqrt_enclosure(&sq.lo, &(eps / rat(4, 1)))?.lo;
    let hi = sqrt_enclosure(&sq.hi, &(eps / rat(4, 1)))?.hi;
    RationalInterval::new(lo, hi)
}

/// Certified enclosure of the spectral radius `max |z|` over the roots of a
/// monic polynomial, of width below `eps`.
pub fn spectral_radius(f: &IntPolynomial, eps: &BigRational) -> Result<RationalInterval> {
    if !f.is_monic() || f.coeff(0).is_zero() {
        return Err(Error::Precondition("monic polynomial with f(0) != 0 required".into()));
    }
    let mut best = RationalInterval::point(BigRational::one());
    for (g, _) in factor_monic(f)? {
        if is_cyclotomic_product(&g) {
            continue;
        }
        let r = factor_radius(&g, eps)?;
        if r.lo >= best.hi {
            best = r;
        } else if r.hi > best.lo {
            best = RationalInterval::new(best.lo.clone().max(r.lo), best.hi.clone().max(r.hi))?;
        }
    }
    Ok(best)
}
