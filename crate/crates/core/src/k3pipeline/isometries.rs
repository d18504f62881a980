//! The isometries `φᵢ` of `L = U ⊕ N̄`, their extensions `Φᵢ` to `Λ`, and the
//! homomorphism `α` recording the `e₀`-translation of each `wᵢ`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::period::PeriodPoint;
use super::K3Construction;
use crate::error::{Error, Result};
use crate::isomgroup::{verify_isometry, LatticeIsometry};
use crate::latticecore::{discriminant_group, GramLattice, SublatticeEmbedding};
use crate::linalg::{smith_normal_form, ZMatrix};

/// `φᵢ` on `L` with basis `e₀, f₀, w₁, …, w_r` (`1 ≤ i ≤ r`):
/// `e₀ ↦ e₀`, `wᵢ ↦ wᵢ + m e₀`, `wⱼ ↦ wⱼ`, `f₀ ↦ f₀ + γ e₀ + Σ cₖ wₖ`,
/// with `m = det Q`, `c = −(row i of adj Q)`, `γ = −(Σ cₖ wₖ)² / 2`.
pub fn build_phi(i: usize, l: &GramLattice) -> Result<LatticeIsometry> {
    let n = l.rank();
    if n < 3 {
        return Err(Error::Shape("L needs e₀, f₀ and at least one w".into()));
    }
    let r = n - 2;
    if i == 0 || i > r {
        return Err(Error::Precondition(format!("index {i} outside 1..={r}")));
    }
    let g = l.gram();
    let (zero, one) = (BigInt::zero(), BigInt::one());
    if g[(0, 0)] != zero || g[(1, 1)] != zero || g[(0, 1)] != one || (2..n).any(|k| g[(0, k)] != zero || g[(1, k)] != zero) {
        return Err(Error::Shape("L must be U ⊕ N̄ on the basis e₀, f₀, w₁, …".into()));
    }
    let idx: Vec<usize> = (2..n).collect();
    let q = g.submatrix(&idx, &idx);
    let m = q.det();
    if m.is_zero() {
        return Err(Error::DegenerateLattice);
    }
    let adj = q.adjugate()?;
    let c: Vec<BigInt> = adj.row(i - 1).iter().map(|x| -x).collect();
    let cc = q.bilinear(&c, &c);
    let (gamma, rem) = (-cc).div_rem(&BigInt::from(2));
    if !rem.is_zero() {
        return Err(Error::Shape("N̄ is not even".into()));
    }
    let mut mat = ZMatrix::identity(n);
    // column j = image of basis vector j
    mat[(0, 1 + i)] = m;
    mat[(0, 1)] = gamma;
    for (k, ck) in c.into_iter().enumerate() {
        mat[(2 + k, 1)] = ck;
    }
    verify_isometry(&mat, l)
}

/// Least `k ≥ 1` with `φᵏ` trivial on `L*/L`, i.e. `(Mᵏ − I) G⁻¹` integral.
pub fn extension_order(phi: &LatticeIsometry, l: &GramLattice) -> Result<u64> {
    const SEARCH_LIMIT: u64 = 1 << 16;
    let disc = discriminant_group(l)?;
    let d = l.det();
    let adj = l.gram().adjugate()?;
    let n = l.rank();
    let cap = disc.order.clone() * disc.exponent();
    let mut pw = phi.matrix().clone();
    let mut k = 1u64;
    loop {
        let diff = pw.sub(&ZMatrix::identity(n)).mul(&adj);
        if diff.to_rows().iter().flatten().all(|x| (x % &d).is_zero()) {
            return Ok(k);
        }
        if BigInt::from(k) >= cap {
            return Err(Error::Precondition(format!("no k ≤ {cap} trivializes the discriminant action")));
        }
        if k >= SEARCH_LIMIT {
            return Err(Error::Undecidable(SEARCH_LIMIT as usize));
        }
        pw = pw.mul(phi.matrix());
        k += 1;
    }
}

/// The `Λ`-isometry equal to `phi_power` on `L` and the identity on `T̄`:
/// `Φ = Bᵀ diag(φᵏ, I) (Bᵀ)⁻¹` with `B` the stacked bases, checked integral.
pub fn extend_to_lambda(
    phi_power: &LatticeIsometry,
    l_emb: &SublatticeEmbedding,
    tbar_emb: &SublatticeEmbedding,
) -> Result<LatticeIsometry> {
    let ambient = l_emb.ambient();
    if tbar_emb.ambient() != ambient {
        return Err(Error::Precondition("L and T̄ live in different lattices".into()));
    }
    if l_emb.rank() + tbar_emb.rank() != ambient.rank() || phi_power.rank() != l_emb.rank() {
        return Err(Error::Dimension("ranks of L, T̄ and the ambient lattice do not match".into()));
    }
    if phi_power.lattice() != &l_emb.lattice() {
        return Err(Error::Precondition("isometry is not defined on L".into()));
    }
    for i in 0..l_emb.rank() {
        for j in 0..tbar_emb.rank() {
            if !ambient.pair(l_emb.basis().row(i), tbar_emb.basis().row(j)).is_zero() {
                return Err(Error::Precondition("L and T̄ are not orthogonal".into()));
            }
        }
    }
    let bt = l_emb.basis().vstack(tbar_emb.basis())?.transpose();
    let block = ZMatrix::block_diag(&[phi_power.matrix(), &ZMatrix::identity(tbar_emb.rank())]);
    let inv = bt.to_rational().inverse()?;
    let full = bt.mul(&block).to_rational().mul(&inv);
    let m = full.to_integer().ok_or(Error::NonIntegralExtension)?;
    verify_isometry(&m, ambient)
}

/// Clauses of the lattice side of the period-fixing argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorelliCertificate {
    /// `Φ` is the identity on `T`, so `Φ σ = σ` and the period eigenvalue is 1.
    pub identity_on_t: bool,
    /// `Φ σ = σ`, checked directly in the quartic algebra.
    pub fixes_period: bool,
    /// `Φ(e₀) = e₀`, so `Φ` preserves the positive cone it bounds.
    pub fixes_e0: bool,
}

impl TorelliCertificate {
    pub fn passed(&self) -> bool {
        self.identity_on_t && self.fixes_period && self.fixes_e0
    }

    /// Eigenvalue on the period line, when `σ` is fixed.
    pub fn period_eigenvalue(&self) -> Option<i64> {
        self.fixes_period.then_some(1)
    }
}

/// `σ` in ambient coordinates.
pub fn torelli_certificate(
    phi: &LatticeIsometry,
    sigma: &PeriodPoint,
    t_emb: &SublatticeEmbedding,
    e0: &[BigInt],
) -> TorelliCertificate {
    let identity_on_t = (0..t_emb.rank()).all(|i| {
        let v = t_emb.basis().row(i);
        phi.apply(v) == v
    });
    let fixes_period = sigma.coordinates.len() == phi.rank() && sigma.apply(phi.matrix()) == sigma.coordinates;
    TorelliCertificate {
        identity_on_t,
        fixes_period,
        fixes_e0: phi.apply(e0) == e0,
    }
}

/// `(m₁(g), …, m₁₈(g))` with `g(wᵢ) = wᵢ + mᵢ(g) e₀`, after checking that `g`
/// fixes `e₀` and `T̄` pointwise.
pub fn alpha_map(g: &LatticeIsometry, c: &K3Construction) -> Result<Vec<BigInt>> {
    if g.lattice() != &c.lambda {
        return Err(Error::Shape("isometry is not defined on Λ".into()));
    }
    let e0 = c.e0();
    if g.apply(&e0) != e0 {
        return Err(Error::Shape("g does not fix e₀".into()));
    }
    for j in 0..c.t_bar.rank() {
        let u = c.t_bar.basis().row(j);
        if g.apply(u) != u {
            return Err(Error::Shape("g is not the identity on T̄".into()));
        }
    }
    let mut out = Vec::with_capacity(c.n_bar.rank());
    for i in 0..c.n_bar.rank() {
        let w = c.w(i);
        let d: Vec<BigInt> = g.apply(w).iter().zip(w).map(|(a, b)| a - b).collect();
        let m = d[super::E0].clone();
        if d.iter().enumerate().any(|(k, x)| k != super::E0 && !x.is_zero()) {
            return Err(Error::Shape(format!("g moves w{} off w{} + Z e₀", i + 1, i + 1)));
        }
        out.push(m);
    }
    Ok(out)
}

/// Rank of the subgroup of `Z¹⁸` spanned by the `α`-images.
pub fn group_rank_via_alpha(generators: &[LatticeIsometry], c: &K3Construction) -> Result<usize> {
    if generators.is_empty() {
        return Ok(0);
    }
    let rows = generators.iter().map(|g| alpha_map(g, c)).collect::<Result<Vec<_>>>()?;
    Ok(smith_normal_form(&ZMatrix::from_rows(rows)?).rank())
}

/// `φᵢ` on `L`, its extension order `kᵢ`, and `Φᵢ` on `Λ`.
#[derive(Clone, Debug)]
pub struct Generator {
    pub index: usize,
    pub phi: LatticeIsometry,
    pub k: u64,
    pub big_phi: LatticeIsometry,
}

/// All eighteen generators, built independently in parallel.
pub fn generate_isometries(c: &K3Construction) -> Result<Vec<Generator>> {
    let l = c.l.lattice();
    (1..=c.n_bar.rank())
        .into_par_iter()
        .map(|i| {
            let phi = build_phi(i, &l)?;
            let k = extension_order(&phi, &l)?;
            let big_phi = extend_to_lambda(&phi.pow(k), &c.l, &c.t_bar)?;
            Ok(Generator {
                index: i,
                phi,
                k,
                big_phi,
            })
        })
        .collect()
}
