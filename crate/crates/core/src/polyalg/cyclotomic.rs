//! Roots-of-unity recognition.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::IntPolynomial;
use crate::arith::binomial;

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi needs n >= 1");
    let mut m = n;
    let mut out = n;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            while m % d == 0 {
                m /= d;
            }
            out -= out / d;
        }
        d += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out
}

/// One Graeffe step: the monic polynomial whose roots are the squares of the
/// roots of `p`.
pub fn graeffe(p: &IntPolynomial) -> IntPolynomial {
    let n = p.degree();
    let minus = IntPolynomial::new(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect(),
    );
    let prod = p.mul(&minus);
    let half = IntPolynomial::new(prod.coeffs().iter().step_by(2).cloned().collect());
    if n % 2 == 1 {
        half.neg()
    } else {
        half
    }
}

/// Whether every root of the monic polynomial `p` is a root of unity.
pub fn is_cyclotomic_product(p: &IntPolynomial) -> bool {
    if p.degree() == 0 {
        return true;
    }
    if p.coeff(0).is_zero() || !p.is_monic() {
        return false;
    }
    let n = p.degree() as u64;
    let bounds: Vec<BigInt> = (0..=n).map(|k| binomial(n, k)).collect();
    let within = |q: &IntPolynomial| {
        q.coeffs()
            .iter()
            .zip(&bounds)
            .all(|(c, b)| c.abs() <= *b)
    };
    let mut seen = vec![p.clone()];
    let mut cur = p.clone();
    for _ in 0..(2 * n + 8) {
        if !within(&cur) {
            return false;
        }
        let next = graeffe(&cur);
        if seen.contains(&next) {
            return true;
        }
        seen.push(next.clone());
        cur = next;
    }
    false
}

/// `x^n mod f` for monic `f`.
fn x_pow_mod(n: u64, f: &IntPolynomial) -> IntPolynomial {
    let reduce = |a: IntPolynomial| a.divrem_monic(f).expect("monic").1;
    let mut acc = reduce(IntPolynomial::one());
    let mut base = reduce(IntPolynomial::monomial(1));
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            acc = reduce(acc.mul(&base));
        }
        base = reduce(base.mul(&base));
        e >>= 1;
    }
    acc
}

/// The `n` with `p = Φ_n`, if any. Assumes `p` monic irreducible.
pub fn cyclotomic_order(p: &IntPolynomial) -> Option<u64> {
    if !p.is_monic() || p.degree() == 0 {
        return None;
    }
    let d = p.degree() as u64;
    let one = IntPolynomial::one();
    // φ(n) >= sqrt(n/2), so n <= 2 d^2
    (1..=2 * d * d + 2).find(|&n| euler_phi(n) == d && x_pow_mod(n, p) == one)
}

/// The `n`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u64) -> IntPolynomial {
    assert!(n >= 1);
    let mut c = vec![0i64; n as usize + 1];
    c[0] = -1;
    c[n as usize] = 1;
    let mut f = IntPolynomial::from_i64(&c);
    for d in 1..n {
        if n % d == 0 {
            f = f.div_exact(&cyclotomic_polynomial(d)).expect("Φ_d divides x^n - 1");
        }
    }
    f
}
