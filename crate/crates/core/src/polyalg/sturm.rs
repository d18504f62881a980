//! Sturm sequences over the integers and exact real-root counting.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::IntPolynomial;
use crate::arith::{rat_to_string, RationalInterval};
use crate::error::{Error, Result};

/// Endpoint of a counting interval; infinite ends are evaluated by leading
/// coefficient signs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    At(BigRational),
    PosInf,
}

/// Primitive Sturm chain `p, p', -rem, ...` with positive rescaling so signs
/// match the classical rational chain.
pub fn sturm_sequence(p: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut seq = vec![p.clone()];
    let d = p.derivative();
    if d.is_zero() {
        return seq;
    }
    seq.push(d.primitive_part_keep_sign());
    loop {
        let n = seq.len();
        let (a, b) = (&seq[n - 2], &seq[n - 1]);
        if b.degree() == 0 {
            break;
        }
        let delta = a.degree() - b.degree() + 1;
        let mut r = a.pseudo_rem(b);
        // prem = lc(b)^delta * a mod b; undo a negative factor
        if b.leading().is_negative() && delta % 2 == 1 {
            r = r.neg();
        }
        if r.is_zero() {
            break;
        }
        seq.push(r.neg().primitive_part_keep_sign());
    }
    seq
}

impl IntPolynomial {
    /// Divides by the positive content, keeping the sign of every coefficient.
    pub fn primitive_part_keep_sign(&self) -> IntPolynomial {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPolynomial::new(self.coeffs().iter().map(|c| c / &g).collect())
    }
}

fn sign_at_bound(p: &IntPolynomial, x: &Bound) -> i32 {
    match x {
        Bound::PosInf => crate::arith::sign_of(&p.leading()),
        Bound::NegInf => {
            let s = crate::arith::sign_of(&p.leading());
            if p.degree() % 2 == 0 {
                s
            } else {
                -s
            }
        }
        Bound::At(v) => p.sign_at(v),
    }
}

fn variations(seq: &[IntPolynomial], x: &Bound) -> usize {
    let mut count = 0;
    let mut last = 0;
    for p in seq {
        let s = sign_at_bound(p, x);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots in the open interval `(a, b)`.
pub fn count_roots_between(p: &IntPolynomial, a: &Bound, b: &Bound) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::Precondition("root count of the zero polynomial".into()));
    }
    for end in [a, b] {
        if let Bound::At(v) = end {
            if p.sign_at(v) == 0 {
                return Err(Error::EndpointIsRoot {
                    endpoint: rat_to_string(v),
                });
            }
        }
    }
    if p.degree() == 0 {
        return Ok(0);
    }
    let seq = sturm_sequence(p);
    let va = variations(&seq, a);
    let vb = variations(&seq, b);
    Ok(va.saturating_sub(vb))
}

/// Exact count of real roots in the open interval via Sturm sequences.
pub fn sturm_count(p: &IntPolynomial, interval: &RationalInterval) -> Result<usize> {
    count_roots_between(
        p,
        &Bound::At(interval.lo.clone()),
        &Bound::At(interval.hi.clone()),
    )
}

/// Distinct real roots on the whole line.
pub fn count_real_roots(p: &IntPolynomial) -> usize {
    if p.degree() == 0 {
        return 0;
    }
    count_roots_between(p, &Bound::NegInf, &Bound::PosInf).expect("infinite bounds")
}

/// Cauchy bound: every complex root satisfies `|z| < bound`.
pub fn cauchy_bound(p: &IntPolynomial) -> BigInt {
    let lc = p.leading().abs();
    let max = p.coeffs()[..p.degree()]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    // 1 + max|a_i| / |a_n|, rounded up, plus one for strictness
    let q = (&max + &lc - BigInt::one()) / &lc;
    q + BigInt::from(2)
}

/// Bisects a sign change of `p` on `[lo, hi]` until the width is below `eps`.
/// Requires `p(lo)` and `p(hi)` nonzero with opposite signs.
pub fn bisect_sign_change(
    p: &IntPolynomial,
    lo: &BigRational,
    hi: &BigRational,
    eps: &BigRational,
) -> Result<RationalInterval> {
    let (mut lo, mut hi) = (lo.clone(), hi.clone());
    let slo = p.sign_at(&lo);
    let shi = p.sign_at(&hi);
    if slo == 0 || shi == 0 || slo == shi {
        return Err(Error::Precondition("bisection needs a strict sign change".into()));
    }
    let two = BigRational::from_integer(BigInt::from(2));
    while &hi - &lo >= *eps {
        let mid = (&lo + &hi) / &two;
        let s = p.sign_at(&mid);
        if s == 0 {
            return Ok(RationalInterval::point(mid));
        }
        if s == slo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    RationalInterval::new(lo, hi)
}
