//! Polynomials over a small prime field, for factorization patterns and
//! Cantor–Zassenhaus splitting.

use rand::Rng;

/// Dense polynomial over `F_p`, ascending coefficients, trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMod {
    pub p: u64,
    pub c: Vec<u64>,
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

pub fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

impl PolyMod {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for x in c.iter_mut() {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        Self { p, c }
    }

    pub fn from_bigints(p: u64, coeffs: &[num_bigint::BigInt]) -> Self {
        use num_integer::Integer;
        use num_traits::ToPrimitive;
        let pb = num_bigint::BigInt::from(p);
        Self::new(
            p,
            coeffs
                .iter()
                .map(|c| c.mod_floor(&pb).to_u64().expect("reduced"))
                .collect(),
        )
    }

    pub fn zero(p: u64) -> Self {
        Self { p, c: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        Self { p, c: vec![1] }
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lead(&self) -> u64 {
        *self.c.last().unwrap_or(&0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = invmod(self.lead(), self.p);
        Self::new(self.p, self.c.iter().map(|&x| mulmod(x, inv, self.p)).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new(
            self.p,
            (0..n)
                .map(|i| (self.c.get(i).unwrap_or(&0) + o.c.get(i).unwrap_or(&0)) % self.p)
                .collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new(
            self.p,
            (0..n)
                .map(|i| {
                    (self.c.get(i).unwrap_or(&0) + self.p - o.c.get(i).unwrap_or(&0)) % self.p
                })
                .collect(),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.p);
        }
        let mut out = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                out[i + j] = (out[i + j] + mulmod(a, b, self.p)) % self.p;
            }
        }
        Self::new(self.p, out)
    }

    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let p = self.p;
        let mut r = self.c.clone();
        if r.len() < d.c.len() {
            return (Self::zero(p), self.clone());
        }
        let inv = invmod(d.lead(), p);
        let dd = d.degree();
        let mut q = vec![0u64; r.len() - dd];
        for k in (0..q.len()).rev() {
            let coef = mulmod(r[k + dd], inv, p);
            if coef == 0 {
                continue;
            }
            for (j, &dc) in d.c.iter().enumerate() {
                r[k + j] = (r[k + j] + p - mulmod(coef, dc, p)) % p;
            }
            q[k] = coef;
        }
        (Self::new(p, q), Self::new(p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s a + t b = g` monic.
    pub fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = invmod(r0.lead(), p);
        let k = Self::new(p, vec![inv]);
        (r0.mul(&k), s0.mul(&k), t0.mul(&k))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.p,
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mulmod(c, i as u64 % self.p, self.p))
                .collect(),
        )
    }

    pub fn powmod_poly(&self, mut e: u128, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        let d = self.derivative();
        !d.is_zero() && self.gcd(&d).degree() == 0
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// `(product of irreducible factors of degree d, d)`.
    pub fn distinct_degree(&self) -> Vec<(Self, usize)> {
        let p = self.p;
        let mut out = Vec::new();
        let mut f = self.monic();
        let x = Self::x(p);
        let mut h = x.clone();
        let mut d = 0;
        while f.degree() >= 2 * (d + 1) {
            d += 1;
            h = h.powmod_poly(p as u128, &f);
            let g = f.gcd(&h.sub(&x));
            if g.degree() > 0 {
                f = f.divrem(&g).0;
                h = h.rem(&f);
                out.push((g, d));
            }
        }
        if f.degree() > 0 {
            let deg = f.degree();
            out.push((f, deg));
        }
        out
    }

    /// Factor degrees of a monic squarefree polynomial.
    pub fn factor_degrees(&self) -> Vec<usize> {
        let mut degs = Vec::new();
        for (g, d) in self.distinct_degree() {
            for _ in 0..g.degree() / d {
                degs.push(d);
            }
        }
        degs.sort_unstable();
        degs
    }

    /// Equal-degree splitting (Cantor–Zassenhaus, odd `p`).
    pub fn equal_degree<R: Rng>(&self, d: usize, rng: &mut R) -> Vec<Self> {
        let f = self.monic();
        if f.degree() == d {
            return vec![f];
        }
        let p = self.p;
        let n = f.degree();
        let e = ((p as u128).pow(d as u32) - 1) / 2;
        loop {
            let a = Self::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
            if a.degree() == 0 {
                continue;
            }
            let g = f.gcd(&a);
            let candidate = if g.degree() > 0 && g.degree() < n {
                g
            } else {
                let b = a.powmod_poly(e, &f).sub(&Self::one(p));
                f.gcd(&b)
            };
            if candidate.degree() > 0 && candidate.degree() < n {
                let other = f.divrem(&candidate).0;
                let mut out = candidate.equal_degree(d, rng);
                out.extend(other.equal_degree(d, rng));
                return out;
            }
        }
    }

    /// Complete factorization into monic irreducibles (squarefree input).
    pub fn factor_squarefree<R: Rng>(&self, rng: &mut R) -> Vec<Self> {
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree() {
            out.extend(g.equal_degree(d, rng));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn ddf_and_edf() {
        // x^4 - 1 over F_5 splits completely
        let f = PolyMod::new(5, vec![4, 0, 0, 0, 1]);
        assert_eq!(f.factor_degrees(), vec![1, 1, 1, 1]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let fs = f.factor_squarefree(&mut rng);
        assert_eq!(fs.len(), 4);
        let prod = fs.iter().fold(PolyMod::one(5), |a, b| a.mul(b));
        assert_eq!(prod, f);
        // x^2 + 1 irreducible over F_3
        assert_eq!(PolyMod::new(3, vec![1, 0, 1]).factor_degrees(), vec![2]);
    }

    #[test]
    fn extended_gcd() {
        let a = PolyMod::new(7, vec![1, 2, 1]);
        let b = PolyMod::new(7, vec![3, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }
}
