use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::GramLattice;

/// Counts of positive, zero and negative eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SignatureTriple {
    pub n_plus: usize,
    pub n_zero: usize,
    pub n_minus: usize,
}

impl SignatureTriple {
    pub fn new(n_plus: usize, n_zero: usize, n_minus: usize) -> Self {
        Self { n_plus, n_zero, n_minus }
    }

    pub fn rank(&self) -> usize {
        self.n_plus + self.n_zero + self.n_minus
    }

    pub fn is_definite(&self) -> bool {
        self.n_zero == 0 && (self.n_plus == 0 || self.n_minus == 0)
    }
}

impl std::fmt::Display for SignatureTriple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.n_plus, self.n_zero, self.n_minus)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LatticeClass {
    Hyperbolic,
    Parabolic,
    Elliptic,
    Other,
}

/// Diagonalizing data: mutually orthogonal integer vectors with their norms,
/// one per nonzero pivot, followed by a basis of the radical.
#[derive(Clone, Debug)]
pub struct SignatureWitness {
    pub signature: SignatureTriple,
    pub positive: Vec<(Vec<BigInt>, BigInt)>,
    pub negative: Vec<(Vec<BigInt>, BigInt)>,
}

fn primitive_integer(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Exact symmetric reduction over the rationals with basis tracking.
pub fn signature_with_witness(l: &GramLattice) -> SignatureWitness {
    let n = l.rank();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| BigRational::from_integer(l.gram()[(i, j)].clone())).collect())
        .collect();
    let mut basis: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| BigRational::from_integer(BigInt::from((i == j) as i32))).collect())
        .collect();
    let mut positive = Vec::new();
    let mut negative = Vec::new();
    let mut k = 0;
    while k < n {
        // diagonal pivot, else make one from an off-diagonal entry
        let pivot = (k..n).find(|&i| !a[i][i].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                let off = (k..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero());
                let Some((i, j)) = off else { break };
                // b_i += b_j: new norm 2 a_ij
                for t in 0..n {
                    let x = &basis[i][t] + &basis[j][t];
                    basis[i][t] = x;
                }
                for t in 0..n {
                    let x = &a[i][t] + &a[j][t];
                    a[i][t] = x;
                }
                for t in 0..n {
                    let x = &a[t][i] + &a[t][j];
                    a[t][i] = x;
                }
                i
            }
        };
        a.swap(k, p);
        for row in a.iter_mut() {
            row.swap(k, p);
        }
        basis.swap(k, p);
        let d = a[k][k].clone();
        for j in k + 1..n {
            if a[j][k].is_zero() {
                continue;
            }
            let c = &a[j][k] / &d;
            for t in 0..n {
                let x = &a[j][t] - &c * &a[k][t];
                a[j][t] = x;
            }
            for t in 0..n {
                let x = &a[t][j] - &c * &a[t][k];
                a[t][j] = x;
            }
            for t in 0..n {
                let x = &basis[j][t] - &c * &basis[k][t];
                basis[j][t] = x;
            }
        }
        let v = primitive_integer(&basis[k]);
        let norm = l.norm(&v);
        if d.is_positive() {
            positive.push((v, norm));
        } else {
            negative.push((v, norm));
        }
        k += 1;
    }
    SignatureWitness {
        signature: SignatureTriple::new(positive.len(), n - positive.len() - negative.len(), negative.len()),
        positive,
        negative,
    }
}

/// Exact signature.
pub fn signature(l: &GramLattice) -> SignatureTriple {
    signature_with_witness(l).signature
}

/// Hyperbolic `(1,0,r-1)`, parabolic `(0,1,r-1)`, elliptic `(0,0,r)`.
pub fn classify(l: &GramLattice) -> LatticeClass {
    let s = signature(l);
    match (s.n_plus, s.n_zero) {
        _ if s.rank() == 0 => LatticeClass::Other,
        (1, 0) => LatticeClass::Hyperbolic,
        (0, 1) => LatticeClass::Parabolic,
        (0, 0) => LatticeClass::Elliptic,
        _ => LatticeClass::Other,
    }
}
