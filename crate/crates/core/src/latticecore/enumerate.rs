use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::signature::signature;
use super::sublattice::quotient_by_radical;
use super::GramLattice;
use crate::arith::{ceil, floor, sqrt_enclosure};
use crate::error::{Error, Result};

/// `Q(x) = Σ d_i (x_i + Σ_{j>i} μ_{ij} x_j)^2`, exact over the rationals.
struct Ldl {
    d: Vec<BigRational>,
    mu: Vec<Vec<BigRational>>,
}

fn ldl(gram: &[Vec<BigRational>]) -> Ldl {
    let n = gram.len();
    let mut a = gram.to_vec();
    let mut d = vec![BigRational::zero(); n];
    let mut mu = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        d[i] = a[i][i].clone();
        for j in i + 1..n {
            mu[i][j] = &a[i][j] / &d[i];
        }
        for j in i + 1..n {
            for k in i + 1..n {
                let x = &a[j][k] - &mu[i][j] * &a[i][k];
                a[j][k] = x;
            }
        }
    }
    Ldl { d, mu }
}

/// All `x` with `Q(x) <= bound` for positive definite `Q`, visiting
/// coordinates from last to first.
fn fincke_pohst(gram: &[Vec<BigRational>], bound: &BigRational, exact: Option<&BigRational>) -> Vec<Vec<BigInt>> {
    let n = gram.len();
    let f = ldl(gram);
    let mut out = Vec::new();
    let mut x = vec![BigInt::zero(); n];
    let tiny = BigRational::new(BigInt::from(1), BigInt::from(1u64 << 20));
    fn rec(
        i: usize,
        rem: BigRational,
        x: &mut Vec<BigInt>,
        f: &Ldl,
        tiny: &BigRational,
        bound: &BigRational,
        exact: Option<&BigRational>,
        out: &mut Vec<Vec<BigInt>>,
    ) {
        // center c = Σ_{j>i} μ_ij x_j, need d_i (x_i + c)^2 <= rem
        let n = x.len();
        let mut c = BigRational::zero();
        for j in i + 1..n {
            c += &f.mu[i][j] * BigRational::from_integer(x[j].clone());
        }
        let r = sqrt_enclosure(&(&rem / &f.d[i]), tiny).expect("non-negative").hi;
        let lo = ceil(&(-&c - &r));
        let hi = floor(&(-&c + &r));
        let mut xi = lo;
        while xi <= hi {
            let t = BigRational::from_integer(xi.clone()) + &c;
            let used = &f.d[i] * &t * &t;
            if used <= rem {
                x[i] = xi.clone();
                let left = &rem - &used;
                if i == 0 {
                    let q = bound - &left;
                    if exact.is_none_or(|e| &q == e) {
                        out.push(x.clone());
                    }
                } else {
                    rec(i - 1, left, x, f, tiny, bound, exact, out);
                }
            }
            xi += 1;
        }
        x[i] = BigInt::zero();
    }
    if n == 0 {
        return out;
    }
    rec(n - 1, bound.clone(), &mut x, &f, &tiny, bound, exact, &mut out);
    out
}

fn first_nonzero_positive(v: &[BigInt]) -> bool {
    v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_positive())
}

/// All vectors of the given norm in a definite lattice, one per `±` pair
/// (first nonzero coordinate positive), in lexicographic order.
pub fn vectors_of_norm(l: &GramLattice, target: &BigInt) -> Result<Vec<Vec<BigInt>>> {
    let s = signature(l);
    if !s.is_definite() {
        return Err(Error::Indefinite {
            n_plus: s.n_plus,
            n_zero: s.n_zero,
            n_minus: s.n_minus,
        });
    }
    let negate = s.n_minus > 0;
    let t = if negate { -target.clone() } else { target.clone() };
    if !t.is_positive() {
        return Ok(Vec::new());
    }
    let n = l.rank();
    let gram: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let g = l.gram()[(i, j)].clone();
                    BigRational::from_integer(if negate { -g } else { g })
                })
                .collect()
        })
        .collect();
    let bound = BigRational::from_integer(t);
    let mut out: Vec<Vec<BigInt>> = fincke_pohst(&gram, &bound, Some(&bound))
        .into_iter()
        .filter(|v| first_nonzero_positive(v))
        .collect();
    out.sort();
    Ok(out)
}

/// Whether some vector has the given norm; the witness is a lattice vector.
/// Definite lattices are enumerated directly; parabolic lattices are decided
/// on the quotient by the radical, where norms are constant on cosets.
pub fn represents(l: &GramLattice, target: &BigInt) -> Result<Option<Vec<BigInt>>> {
    let s = signature(l);
    if s.is_definite() {
        return Ok(vectors_of_norm(l, target)?.into_iter().next());
    }
    if s.n_zero == 1 && (s.n_plus == 0 || s.n_minus == 0) {
        let frame = quotient_by_radical(l)?;
        if target.is_zero() {
            return Ok(Some(frame.v.clone()));
        }
        let found = vectors_of_norm(&frame.quotient, target)?;
        return Ok(found.first().map(|y| frame.lift(y)));
    }
    Err(Error::Indefinite {
        n_plus: s.n_plus,
        n_zero: s.n_zero,
        n_minus: s.n_minus,
    })
}
