//! Factorization of monic integer polynomials: squarefree decomposition,
//! modular factorization, Hensel lifting, and recombination of lifted factors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::PolyMod;
use super::IntPolynomial;
use crate::error::{Error, Result};

/// Largest degree accepted by the irreducibility test.
pub const IRREDUCIBILITY_DEGREE_BOUND: usize = 24;

const SMALL_PRIMES: [u64; 24] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

fn reduce(f: &IntPolynomial, p: u64) -> PolyMod {
    PolyMod::from_bigints(p, f.coeffs())
}

fn lift_to_int(g: &PolyMod) -> Vec<BigInt> {
    g.c.iter().map(|&c| BigInt::from(c)).collect()
}

/// Good primes for a monic squarefree `f`: reduction stays squarefree.
fn good_primes(f: &IntPolynomial) -> impl Iterator<Item = u64> + '_ {
    SMALL_PRIMES
        .iter()
        .copied()
        .filter(move |&p| reduce(f, p).is_squarefree())
}

fn poly_mod_m(c: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut v: Vec<BigInt> = c.iter().map(|x| x.mod_floor(m)).collect();
    while v.last().is_some_and(|x| x.is_zero()) {
        v.pop();
    }
    v
}

fn mul_mod_m(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    poly_mod_m(&out, m)
}

fn symmetric(c: &[BigInt], m: &BigInt) -> IntPolynomial {
    let half = m / 2;
    IntPolynomial::new(
        c.iter()
            .map(|x| {
                let r = x.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// Lifts a coprime factorization `f = g h (mod p)`, `g` monic, to
/// `f = G H (mod p^e)`; returns the lift of `g`.
fn hensel_lift_factor(f: &IntPolynomial, g: &PolyMod, h: &PolyMod, e: u32) -> Vec<BigInt> {
    let p = g.p;
    let pb = BigInt::from(p);
    let (_, s, t) = g.ext_gcd(h);
    let mut gz = lift_to_int(g);
    let mut hz = lift_to_int(h);
    let mut pk = pb.clone();
    for _ in 1..e {
        // error term (f - g h) / p^k, reduced mod p
        let prod = IntPolynomial::new(gz.clone()).mul(&IntPolynomial::new(hz.clone()));
        let diff = f.sub(&prod);
        let err: Vec<BigInt> = diff.coeffs().iter().map(|c| c / &pk).collect();
        let err = PolyMod::from_bigints(p, &err);
        if !err.is_zero() {
            // s g + t h = 1 gives err = g (s err + q h) + h (t err rem g)
            let gm = PolyMod::from_bigints(p, &gz);
            let hm = PolyMod::from_bigints(p, &hz);
            let (q, dg) = t.mul(&err).divrem(&gm);
            let dh = s.mul(&err).add(&q.mul(&hm));
            let add = |base: &mut Vec<BigInt>, d: &PolyMod| {
                if base.len() < d.c.len() {
                    base.resize(d.c.len(), BigInt::zero());
                }
                for (i, &c) in d.c.iter().enumerate() {
                    base[i] += &pk * BigInt::from(c);
                }
            };
            add(&mut gz, &dg);
            add(&mut hz, &dh);
        }
        pk *= &pb;
    }
    gz
}

/// Coefficient bound for any integer factor of `f` (Mignotte).
fn factor_coefficient_bound(f: &IntPolynomial) -> BigInt {
    let norm2: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let norm = crate::arith::isqrt(&norm2) + BigInt::one();
    let n = f.degree() as u64;
    crate::arith::binomial(n, n / 2) * norm
}

/// Irreducible factors of a monic squarefree polynomial, sorted.
fn zassenhaus(f: &IntPolynomial) -> Vec<IntPolynomial> {
    let n = f.degree();
    if n <= 1 {
        return vec![f.clone()];
    }
    // pick the good prime with fewest modular factors among the first few
    let mut best: Option<(u64, usize)> = None;
    for p in good_primes(f).take(6) {
        let r = reduce(f, p).factor_degrees().len();
        if r == 1 {
            return vec![f.clone()];
        }
        if best.map_or(true, |(_, br)| r < br) {
            best = Some((p, r));
        }
    }
    let (p, _) = best.expect("some small prime keeps a squarefree integer polynomial squarefree");
    let mut rng = ChaCha8Rng::seed_from_u64(p);
    let fm = reduce(f, p);
    let mut local = fm.factor_squarefree(&mut rng);
    local.sort_by(|a, b| a.c.cmp(&b.c));

    let bound = factor_coefficient_bound(f) * BigInt::from(2) + BigInt::one();
    let pb = BigInt::from(p);
    let mut e = 1u32;
    let mut m = pb.clone();
    while m <= bound {
        m *= &pb;
        e += 1;
    }
    let lifted: Vec<Vec<BigInt>> = local
        .iter()
        .map(|g| {
            let h = fm.divrem(g).0;
            poly_mod_m(&hensel_lift_factor(f, g, &h, e), &m)
        })
        .collect();

    let mut remaining: Vec<usize> = (0..lifted.len()).collect();
    let mut current = f.clone();
    let mut found = Vec::new();
    let mut k = 1;
    while 2 * k <= remaining.len() {
        let mut hit = None;
        for subset in combinations(&remaining, k) {
            let mut prod = vec![BigInt::one()];
            for &i in &subset {
                prod = mul_mod_m(&prod, &lifted[i], &m);
            }
            let cand = symmetric(&prod, &m);
            // constant term must divide
            let c0 = cand.coeff(0);
            if c0.is_zero() != current.coeff(0).is_zero() {
                continue;
            }
            if !c0.is_zero() && !(current.coeff(0) % &c0).is_zero() {
                continue;
            }
            if let Some(q) = current.div_exact(&cand) {
                hit = Some((subset, cand, q));
                break;
            }
        }
        match hit {
            Some((subset, cand, q)) => {
                found.push(cand);
                current = q;
                remaining.retain(|i| !subset.contains(i));
            }
            None => k += 1,
        }
    }
    if current.degree() > 0 {
        found.push(current);
    }
    found.sort();
    found
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    let n = items.len();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Monic irreducible factorization with multiplicities, factors sorted.
pub fn factor_monic(f: &IntPolynomial) -> Result<Vec<(IntPolynomial, usize)>> {
    if !f.is_monic() {
        return Err(Error::Precondition("factorization needs a monic polynomial".into()));
    }
    let mut out = Vec::new();
    for (part, mult) in f.squarefree_decomposition() {
        let part = if part.leading().is_negative() { part.neg() } else { part };
        for g in zassenhaus(&part) {
            out.push((g, mult));
        }
    }
    out.sort();
    Ok(out)
}

/// Whether a monic polynomial admits no factorization into monic integer
/// polynomials of lower degree.
pub fn is_irreducible_over_integers(p: &IntPolynomial) -> Result<bool> {
    let n = p.degree();
    if n > IRREDUCIBILITY_DEGREE_BOUND {
        return Err(Error::DegreeBound {
            degree: n,
            bound: IRREDUCIBILITY_DEGREE_BOUND,
        });
    }
    if !p.is_monic() || n == 0 {
        return Err(Error::Precondition("monic polynomial of degree >= 1 required".into()));
    }
    if n == 1 {
        return Ok(true);
    }
    if !p.is_squarefree() {
        return Ok(false);
    }
    // degree patterns: a true factor of degree d needs a subset sum d mod every prime
    let mut feasible = vec![true; n + 1];
    for prime in good_primes(p).take(4) {
        let degs = reduce(p, prime).factor_degrees();
        let mut sums = vec![false; n + 1];
        sums[0] = true;
        for d in degs {
            for s in (d..=n).rev() {
                if sums[s - d] {
                    sums[s] = true;
                }
            }
        }
        for d in 0..=n {
            feasible[d] &= sums[d];
        }
    }
    if (1..n).all(|d| !feasible[d]) {
        return Ok(true);
    }
    Ok(zassenhaus(p).len() == 1)
}
