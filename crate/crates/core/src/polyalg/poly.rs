use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Integer polynomial, coefficients in ascending degree order.
///
/// The zero polynomial has an empty coefficient list; every other value has a
/// nonzero last coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `x - r`
    pub fn linear_root(r: &BigInt) -> Self {
        Self::new(vec![-r, BigInt::one()])
    }

    pub fn monomial(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        Self { coeffs: c }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0 (check [`is_zero`](Self::is_zero)).
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Palindromic coefficient list.
    pub fn is_reciprocal(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// `x^deg p(1/x)`
    pub fn reversed(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        // Horner on numerator/denominator to avoid repeated gcds
        let (p, q) = (x.numer(), x.denom());
        let n = self.degree();
        if self.is_zero() {
            return BigRational::zero();
        }
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * p + c * &qpow;
            qpow *= q;
        }
        // acc = sum c_k p^k q^(n-k); qpow = q^(n+1)
        BigRational::new(acc, num_traits::pow(q.clone(), n))
    }

    /// Sign of the value at a rational point.
    pub fn sign_at(&self, x: &BigRational) -> i32 {
        let (p, q) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * p + c * &qpow;
            qpow *= q;
        }
        crate::arith::sign_of(&acc)
    }

    /// `p(c x)`
    pub fn compose_scale(&self, c: &BigInt) -> Self {
        let mut pw = BigInt::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &pw);
            pw *= c;
        }
        Self::new(out)
    }

    /// `p(x^2)`
    pub fn compose_square(&self) -> Self {
        let mut out = vec![BigInt::zero(); 2 * self.coeffs.len().max(1) - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[2 * i] = a.clone();
        }
        Self::new(out)
    }

    /// Division with remainder by a monic divisor, exact over the integers.
    pub fn divrem_monic(&self, d: &Self) -> Result<(Self, Self)> {
        if !d.is_monic() {
            return Err(Error::Precondition("divisor must be monic".into()));
        }
        let mut r = self.coeffs.clone();
        let dd = d.degree();
        if r.len() < d.coeffs.len() {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &c * dc;
            }
            q[k] = c;
        }
        Ok((Self::new(q), Self::new(r)))
    }

    /// Exact division over the integers; `None` if the quotient is not integral
    /// or the remainder is nonzero.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.degree() < d.degree() {
            return None;
        }
        let mut r = self.coeffs.clone();
        let dd = d.degree();
        let lc = d.leading();
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].clone();
            if c.is_zero() {
                continue;
            }
            let (qc, rem) = c.div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &qc * dc;
            }
            q[k] = qc;
        }
        r.iter().all(|x| x.is_zero()).then(|| Self::new(q))
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_exact(self).is_some()
    }

    /// Pseudo-remainder `lc(d)^(deg a - deg d + 1) a mod d`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        if self.degree() < d.degree() || self.is_zero() {
            return self.clone();
        }
        let mut r = self.coeffs.clone();
        let dd = d.degree();
        let lc = d.leading();
        for k in (0..=(r.len() - 1 - dd)).rev() {
            let c = r[k + dd].clone();
            for x in r.iter_mut() {
                *x *= &lc;
            }
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
        }
        Self::new(r)
    }

    /// Gcd over Q, returned as a primitive integer polynomial with positive
    /// leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    /// Squarefree part `p / gcd(p, p')` (primitive).
    pub fn squarefree_part(&self) -> Self {
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.primitive_part();
        }
        let pp = self.primitive_part();
        pp.div_exact(&g)
            .expect("gcd divides the polynomial")
            .primitive_part()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == 0
    }

    /// Squarefree decomposition of the primitive part (Musser's gcd scheme):
    /// `(factor, multiplicity)` with pairwise coprime primitive factors,
    /// ordered by multiplicity.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let f = self.primitive_part();
        if f.degree() == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut g = f.gcd(&f.derivative());
        let mut w = f.div_exact(&g).expect("gcd divides").primitive_part();
        let mut i = 1;
        while w.degree() > 0 {
            let y = w.gcd(&g);
            let z = w.div_exact(&y).expect("gcd divides").primitive_part();
            if z.degree() > 0 {
                out.push((z, i));
            }
            g = g.div_exact(&y).expect("gcd divides").primitive_part();
            w = y;
            i += 1;
        }
        out
    }

    /// Human readable `x^4 - x^3 + 1`.
    pub fn pretty(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if k == 0 {
                s.push_str(&a.to_string());
            } else if a.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{a}{mono}"));
            }
        }
        s
    }

    /// Parses comma separated ascending coefficients, e.g. `1,-1,-1,-1,1`.
    pub fn parse_csv(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad coefficient {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }

    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty("x"))
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({})", self.pretty("x"))
    }
}

impl PartialOrd for IntPolynomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the ascending coefficient tuple.
impl Ord for IntPolynomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs.cmp(&other.coeffs)
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_decimal_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<serde_json::Value> = Vec::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(crate::json::value_to_bigint)
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(Self::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn reciprocity() {
        assert!(p(&[1, -1, -1, -1, 1]).is_reciprocal());
        assert!(!p(&[2, -3, 1]).is_reciprocal());
        assert!(p(&[1]).is_reciprocal());
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[1, 1]));
        assert_eq!(a.squarefree_part(), p(&[-1, 0, 1]));
        let dec = a.squarefree_decomposition();
        assert_eq!(dec, vec![(p(&[1, 1]), 1), (p(&[-1, 1]), 2)]);
        assert!(!a.is_squarefree());
    }

    #[test]
    fn yun_on_higher_powers() {
        let x1 = p(&[-1, 1]);
        let x2 = p(&[1, 1, 1]);
        let f = x1.pow(3).mul(&x2.pow(2)).mul(&p(&[3, 0, 1]));
        let dec = f.squarefree_decomposition();
        assert_eq!(dec, vec![(p(&[3, 0, 1]), 1), (x2, 2), (x1, 3)]);
    }

    #[test]
    fn division() {
        let f = p(&[-1, 0, 0, 0, 1]);
        let (q, r) = f.divrem_monic(&p(&[1, 0, 1])).unwrap();
        assert_eq!(q, p(&[-1, 0, 1]));
        assert!(r.is_zero());
        assert!(p(&[2, 1]).div_exact(&p(&[1, 2])).is_none());
    }

    #[test]
    fn pretty_print() {
        assert_eq!(p(&[1, -1, -1, -1, 1]).to_string(), "x^4 - x^3 - x^2 - x + 1");
        assert_eq!(p(&[-3, -1, 1]).pretty("y"), "y^2 - y - 3");
    }
}
