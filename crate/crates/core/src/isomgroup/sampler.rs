//! Seeded random isometries: products of reflections in norm `±2` vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{verify_isometry, LatticeIsometry};
use crate::error::{Error, Result};
use crate::latticecore::{signature, GramLattice};
use crate::linalg::{integer_kernel, ZMatrix};
use crate::polyalg::IntPolynomial;

/// Environment variable overriding the seed of [`ReflectionSampler::from_env`].
pub const SEED_ENV: &str = "SALEMLAT_SEED";

/// Deterministic generator of isometries of an even lattice.
pub struct ReflectionSampler {
    lattice: GramLattice,
    roots: Vec<Vec<BigInt>>,
    rng: ChaCha8Rng,
}

/// `x ↦ x - (2 (x, w) / (w, w)) w` as a matrix acting on columns.
pub fn reflection_matrix(l: &GramLattice, w: &[BigInt]) -> Result<ZMatrix> {
    let ww = l.norm(w);
    if ww.abs() != BigInt::from(2) {
        return Err(Error::Precondition(format!("reflection vector has norm {ww}, expected ±2")));
    }
    let n = l.rank();
    let gw = l.gram().mul_vec(w);
    let mut m = ZMatrix::identity(n);
    // 2 / (w, w) = ±1
    for i in 0..n {
        for j in 0..n {
            let t = &w[i] * &gw[j];
            if ww.is_positive() {
                m[(i, j)] -= t;
            } else {
                m[(i, j)] += t;
            }
        }
    }
    Ok(m)
}

impl ReflectionSampler {
    /// Collects roots by sampling small coordinate vectors; fails when none
    /// turn up.
    pub fn new(l: &GramLattice, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = l.rank();
        let two = BigInt::from(2);
        let mut roots: Vec<Vec<BigInt>> = Vec::new();
        // unit and pairwise vectors first, then random small ones
        let mut candidates: Vec<Vec<BigInt>> = Vec::new();
        for i in 0..n {
            let mut v = vec![BigInt::zero(); n];
            v[i] = BigInt::from(1);
            candidates.push(v);
            for j in i + 1..n {
                for s in [1i64, -1] {
                    let mut v = vec![BigInt::zero(); n];
                    v[i] = BigInt::from(1);
                    v[j] = BigInt::from(s);
                    candidates.push(v);
                }
            }
        }
        for _ in 0..(200 * n) {
            candidates.push((0..n).map(|_| BigInt::from(rng.gen_range(-2i64..=2))).collect());
        }
        for v in candidates {
            if l.norm(&v).abs() == two && !roots.contains(&v) {
                roots.push(v);
            }
        }
        if roots.is_empty() {
            return Err(Error::Precondition("no vectors of norm ±2 found".into()));
        }
        Ok(Self {
            lattice: l.clone(),
            roots,
            rng,
        })
    }

    /// Seed from `SALEMLAT_SEED` when set, `default_seed` otherwise.
    pub fn from_env(l: &GramLattice, default_seed: u64) -> Result<Self> {
        let seed = std::env::var(SEED_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(default_seed);
        Self::new(l, seed)
    }

    pub fn roots(&self) -> &[Vec<BigInt>] {
        &self.roots
    }

    /// Product of `1..=max_len` random reflections.
    pub fn sample(&mut self, max_len: usize) -> LatticeIsometry {
        self.sample_between(1, max_len)
    }

    /// Product of `min_len..=max_len` random reflections.
    pub fn sample_between(&mut self, min_len: usize, max_len: usize) -> LatticeIsometry {
        let len = self.rng.gen_range(min_len.max(1)..=max_len.max(min_len).max(1));
        let mut m = ZMatrix::identity(self.lattice.rank());
        for _ in 0..len {
            let w = self.roots.choose(&mut self.rng).expect("nonempty");
            let s = reflection_matrix(&self.lattice, w).expect("roots have norm ±2");
            m = m.mul(&s);
        }
        verify_isometry(&m, &self.lattice).expect("products of reflections are isometries")
    }
}

/// Companion matrix of a monic `f`, acting on columns: `e_i ↦ e_{i+1}`.
pub fn companion_matrix(f: &IntPolynomial) -> ZMatrix {
    let n = f.degree();
    let mut m = ZMatrix::zeros(n, n);
    for i in 0..n {
        if i + 1 < n {
            m[(i + 1, i)] = BigInt::from(1);
        }
        m[(i, n - 1)] = -f.coeff(i);
    }
    m
}

/// Integral basis of the symmetric forms `G` with `Mᵀ G M = G`.
pub fn invariant_gram_basis(m: &ZMatrix) -> Vec<ZMatrix> {
    let n = m.rows();
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let unit = |k: usize| {
        let (i, j) = slots[k];
        let mut g = ZMatrix::zeros(n, n);
        g[(i, j)] = BigInt::from(1);
        g[(j, i)] = BigInt::from(1);
        g
    };
    // column k: the linear map G ↦ MᵀGM − G on the k-th unit form
    let images: Vec<ZMatrix> = (0..slots.len())
        .map(|k| {
            let g = unit(k);
            m.transpose().mul(&g).mul(m).sub(&g)
        })
        .collect();
    let mut eqs = ZMatrix::zeros(n * n, slots.len());
    for (k, img) in images.iter().enumerate() {
        for r in 0..n * n {
            eqs[(r, k)] = img[(r / n, r % n)].clone();
        }
    }
    let kernel = integer_kernel(&eqs);
    (0..kernel.rows())
        .map(|r| {
            let mut g = ZMatrix::zeros(n, n);
            for (k, &(i, j)) in slots.iter().enumerate() {
                g[(i, j)] = kernel[(r, k)].clone();
                g[(j, i)] = kernel[(r, k)].clone();
            }
            g
        })
        .collect()
}

/// A random even nondegenerate `M`-invariant form with `n_plus` positive
/// eigenvalues, with `M` and the form conjugated by a random unimodular
/// change of basis; `None` after `attempts` unlucky draws.
pub fn isometry_with_positive_index<R: Rng>(
    m: &ZMatrix,
    n_plus: usize,
    attempts: usize,
    rng: &mut R,
) -> Option<LatticeIsometry> {
    let n = m.rows();
    let basis = invariant_gram_basis(m);
    if basis.is_empty() {
        return None;
    }
    for _ in 0..attempts {
        let mut g = ZMatrix::zeros(n, n);
        for b in &basis {
            g = g.add(&b.scale(&BigInt::from(rng.gen_range(-3i64..=3))));
        }
        if (0..n).any(|i| g[(i, i)].is_odd()) {
            g = g.scale(&BigInt::from(2));
        }
        let Ok(l) = GramLattice::new(g) else { continue };
        if !l.is_nondegenerate() || signature(&l).n_plus != n_plus {
            continue;
        }
        let u = random_unimodular(n, rng);
        let u_inv = u.inverse_unimodular().expect("unimodular");
        let l = GramLattice::new(u.transpose().mul(l.gram()).mul(&u)).expect("congruent form");
        return verify_isometry(&u_inv.mul(m).mul(&u), &l).ok();
    }
    None
}

fn random_unimodular<R: Rng>(n: usize, rng: &mut R) -> ZMatrix {
    let mut u = ZMatrix::identity(n);
    if n < 2 {
        return u;
    }
    for _ in 0..2 * n {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let c = BigInt::from(if rng.gen_bool(0.5) { 1 } else { -1 });
        // column operation: col_j += c col_i
        for r in 0..n {
            let add = &u[(r, i)] * &c;
            u[(r, j)] += add;
        }
    }
    u
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::latticecore::catalog::*;

    #[test]
    fn reflections_are_involutive_isometries() {
        let l = sum(&[hyperbolic_plane(), e8_negative()]);
        let mut s = ReflectionSampler::new(&l, 7).unwrap();
        assert!(s.roots().len() > 10);
        for w in s.roots().to_vec().iter().take(10) {
            let m = reflection_matrix(&l, w).unwrap();
            let g = verify_isometry(&m, &l).unwrap();
            assert!(g.pow(2).is_identity());
            assert_eq!(g.det(), BigInt::from(-1));
        }
        let a = s.sample(6);
        let b = ReflectionSampler::new(&l, 7).unwrap().sample(6);
        assert_eq!(a, b);
    }

    #[test]
    fn salem_twists() {
        let f = IntPolynomial::from_i64(&[1, -1, 0, -1, 0, -1, 1]);
        let c = companion_matrix(&f);
        assert_eq!(crate::isomgroup::char_poly(&verify_isometry(&c, &GramLattice::new(invariant_gram_basis(&c)[0].clone()).unwrap()).unwrap()), f);
        assert_eq!(invariant_gram_basis(&c).len(), 3);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = isometry_with_positive_index(&c, 3, 100, &mut rng).unwrap();
        assert_eq!(signature(g.lattice()).n_plus, 3);
        assert!(g.lattice().is_even());
    }
}
