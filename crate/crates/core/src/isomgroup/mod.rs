//! Isometries of Gram lattices: verification, order, the Salem dichotomy,
//! spectral radius and entropy, and commuting-power expressions.

mod sampler;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::arith::{ln_interval, rat, RationalInterval};
use crate::error::{Error, Result};
use crate::json::{bigint_to_value, matrix_to_value};
use crate::latticecore::{GramLattice, SublatticeEmbedding};
use crate::linalg::{QMatrix, ZMatrix};
use crate::polyalg::{
    classify_salem, cyclotomic_order, factor_monic, is_cyclotomic_product, spectral_radius, unit_circle_layout,
    IntPolynomial, SalemCertificate, SalemVerdict, UnitCircleLayout,
};

pub use sampler::{
    companion_matrix, invariant_gram_basis, isometry_with_positive_index, reflection_matrix, ReflectionSampler, SEED_ENV,
};

/// Integer matrix acting on coordinate columns and preserving a Gram form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeIsometry {
    matrix: ZMatrix,
    lattice: GramLattice,
}

/// Checks `Mᵀ G M = G` and `det M = ±1`.
pub fn verify_isometry(m: &ZMatrix, l: &GramLattice) -> Result<LatticeIsometry> {
    let n = l.rank();
    if m.rows() != n || m.cols() != n {
        return Err(Error::Dimension(format!(
            "{}x{} matrix on a rank-{n} lattice",
            m.rows(),
            m.cols()
        )));
    }
    let pulled = m.transpose().mul(l.gram()).mul(m);
    for i in 0..n {
        for j in 0..n {
            if pulled[(i, j)] != l.gram()[(i, j)] {
                return Err(Error::GramViolation { i, j });
            }
        }
    }
    let d = m.det();
    if !d.abs().is_one() {
        return Err(Error::Determinant(d.to_string()));
    }
    Ok(LatticeIsometry {
        matrix: m.clone(),
        lattice: l.clone(),
    })
}

impl LatticeIsometry {
    pub fn identity(l: &GramLattice) -> Self {
        Self {
            matrix: ZMatrix::identity(l.rank()),
            lattice: l.clone(),
        }
    }

    pub fn matrix(&self) -> &ZMatrix {
        &self.matrix
    }

    pub fn lattice(&self) -> &GramLattice {
        &self.lattice
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn det(&self) -> BigInt {
        self.matrix.det()
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.matrix.mul_vec(v)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LatticeIsometry) -> LatticeIsometry {
        LatticeIsometry {
            matrix: self.matrix.mul(&other.matrix),
            lattice: self.lattice.clone(),
        }
    }

    pub fn pow(&self, k: u64) -> LatticeIsometry {
        LatticeIsometry {
            matrix: self.matrix.pow(k),
            lattice: self.lattice.clone(),
        }
    }

    pub fn inverse(&self) -> LatticeIsometry {
        LatticeIsometry {
            matrix: self.matrix.inverse_unimodular().expect("isometries are unimodular"),
            lattice: self.lattice.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn commutes_with(&self, other: &LatticeIsometry) -> bool {
        self.matrix.mul(&other.matrix) == other.matrix.mul(&self.matrix)
    }

    /// Restriction to an invariant sublattice, in the sublattice basis.
    pub fn restrict(&self, e: &SublatticeEmbedding) -> Result<LatticeIsometry> {
        if e.ambient() != &self.lattice {
            return Err(Error::Precondition("sublattice of a different lattice".into()));
        }
        let r = e.rank();
        let mut cols = Vec::with_capacity(r);
        for i in 0..r {
            let image = self.apply(e.basis().row(i));
            let c = e
                .coordinates_of(&image)
                .ok_or_else(|| Error::Shape(format!("basis vector {i} leaves the sublattice")))?;
            cols.push(c);
        }
        let m = ZMatrix::from_rows(cols)?.transpose();
        verify_isometry(&m, &e.lattice())
    }

    pub fn to_json(&self) -> Value {
        json!({ "lattice": self.lattice.to_json(), "matrix": matrix_to_value(&self.matrix) })
    }
}

/// `det(tI - M)`.
pub fn char_poly(g: &LatticeIsometry) -> IntPolynomial {
    IntPolynomial::new(g.matrix.char_poly_coeffs())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl Order {
    pub fn is_finite(&self) -> bool {
        matches!(self, Order::Finite(_))
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut d: Vec<u64> = (1..=n).take_while(|k| k * k <= n).filter(|k| n % k == 0).flat_map(|k| [k, n / k]).collect();
    d.sort_unstable();
    d.dedup();
    d
}

/// Exact order: infinite if a root is not a root of unity or if the
/// cyclotomic spectrum carries a nontrivial unipotent part.
pub fn order(g: &LatticeIsometry) -> Order {
    let chi = char_poly(g);
    if !is_cyclotomic_product(&chi) {
        return Order::Infinite;
    }
    let mut n = 1u64;
    for (f, _) in factor_monic(&chi).expect("characteristic polynomials are monic") {
        let k = cyclotomic_order(&f).expect("factors of a cyclotomic product are cyclotomic");
        n = n.lcm(&k);
    }
    if !g.matrix.pow(n).is_identity() {
        return Order::Infinite;
    }
    let d = divisors(n)
        .into_iter()
        .find(|&d| g.matrix.pow(d).is_identity())
        .expect("n itself works");
    Order::Finite(d)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsometryKind {
    FiniteOrder { order: u64 },
    SalemType { certificate: SalemCertificate, determinant: BigInt },
    /// Cyclotomic spectrum with a nontrivial unipotent part (infinite order).
    QuasiUnipotent { factors: Vec<(IntPolynomial, usize)> },
    MixedSpectrum { factors: Vec<(IntPolynomial, usize)> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsometryClassification {
    pub kind: IsometryKind,
}

impl IsometryClassification {
    pub fn label(&self) -> &'static str {
        match self.kind {
            IsometryKind::FiniteOrder { .. } => "FiniteOrder",
            IsometryKind::SalemType { .. } => "SalemType",
            IsometryKind::QuasiUnipotent { .. } => "QuasiUnipotent",
            IsometryKind::MixedSpectrum { .. } => "MixedSpectrum",
        }
    }

    pub fn is_mixed(&self) -> bool {
        matches!(self.kind, IsometryKind::MixedSpectrum { .. })
    }

    /// Tagged JSON with fixed key order.
    pub fn to_json(&self) -> Value {
        let factors_json = |fs: &[(IntPolynomial, usize)]| {
            Value::Array(
                fs.iter()
                    .map(|(f, m)| json!({ "factor": f, "multiplicity": m }))
                    .collect(),
            )
        };
        match &self.kind {
            IsometryKind::FiniteOrder { order } => json!({ "kind": "FiniteOrder", "order": order }),
            IsometryKind::SalemType {
                certificate,
                determinant,
            } => json!({
                "kind": "SalemType",
                "certificate": certificate,
                "determinant": bigint_to_value(determinant),
            }),
            IsometryKind::QuasiUnipotent { factors } => {
                json!({ "kind": "QuasiUnipotent", "factors": factors_json(factors) })
            }
            IsometryKind::MixedSpectrum { factors } => {
                json!({ "kind": "MixedSpectrum", "factors": factors_json(factors) })
            }
        }
    }
}

/// Precision of the Salem-number enclosure stored in classifications.
pub fn default_salem_precision() -> BigRational {
    rat(1, 1 << 40)
}

/// Finite order, Salem type, quasi-unipotent, or mixed spectrum.
pub fn classify_isometry(g: &LatticeIsometry) -> IsometryClassification {
    let chi = char_poly(g);
    let kind = if is_cyclotomic_product(&chi) {
        match order(g) {
            Order::Finite(order) => IsometryKind::FiniteOrder { order },
            Order::Infinite => IsometryKind::QuasiUnipotent {
                factors: factor_monic(&chi).expect("monic"),
            },
        }
    } else {
        let verdict = if chi.degree() >= 2 {
            classify_salem(&chi, &default_salem_precision()).expect("monic of degree >= 2")
        } else {
            SalemVerdict::Rejected(crate::polyalg::SalemRejection::NotReciprocal)
        };
        match verdict {
            SalemVerdict::Salem(certificate) => IsometryKind::SalemType {
                certificate,
                determinant: g.det(),
            },
            SalemVerdict::Rejected(_) => IsometryKind::MixedSpectrum {
                factors: factor_monic(&chi).expect("monic"),
            },
        }
    };
    IsometryClassification { kind }
}

/// Characteristic polynomial is a power of one irreducible polynomial.
pub fn is_primary_charpoly(g: &LatticeIsometry) -> bool {
    factor_monic(&char_poly(g)).expect("monic").len() == 1
}

/// Squarefree characteristic polynomial.
pub fn has_simple_spectrum(g: &LatticeIsometry) -> bool {
    char_poly(g).is_squarefree()
}

/// Root layout of the characteristic polynomial relative to the unit circle.
pub fn eigenvalue_layout(g: &LatticeIsometry) -> Result<UnitCircleLayout> {
    unit_circle_layout(&char_poly(g))
}

/// Certified enclosure of `log(spectral radius)`.
///
/// The raw enclosure has width below `precision / 2` and is padded outward by
/// `precision / 4` on each side, so that enclosures of powers `g^k` also
/// contain `k` times the midpoint of a finer enclosure for `g`.
pub fn entropy(g: &LatticeIsometry, precision: &BigRational) -> Result<RationalInterval> {
    if !precision.is_positive() {
        return Err(Error::Precondition("precision must be positive".into()));
    }
    let half = precision / rat(2, 1);
    let quarter = precision / rat(4, 1);
    let chi = char_poly(g);
    let raw = if is_cyclotomic_product(&chi) {
        RationalInterval::point(BigRational::zero())
    } else {
        let radius = match classify_isometry(g).kind {
            IsometryKind::SalemType { certificate, .. } => certificate.refine(&(&half / rat(8, 1)))?,
            _ => spectral_radius(&chi, &(&half / rat(8, 1)))?,
        };
        ln_interval(&radius, &(&half / rat(2, 1)))?
    };
    if raw.lo.is_zero() && raw.hi.is_zero() {
        return Ok(raw);
    }
    let lo = (&raw.lo - &quarter).max(BigRational::zero());
    RationalInterval::new(lo, &raw.hi + &quarter)
}

/// Coefficients `c_0, …, c_{n-1}` with `G = Σ c_k F^k`, if they exist.
pub fn express_in_powers(f: &LatticeIsometry, g: &LatticeIsometry) -> Result<Option<Vec<BigRational>>> {
    if f.lattice != g.lattice {
        return Err(Error::Precondition("isometries of different lattices".into()));
    }
    if !f.commutes_with(g) {
        return Err(Error::Precondition("isometries do not commute".into()));
    }
    let chi = char_poly(f);
    if factor_monic(&chi)?.len() != 1 || !chi.is_squarefree() {
        return Err(Error::Precondition("characteristic polynomial of F is reducible".into()));
    }
    let n = f.rank();
    let mut powers = vec![ZMatrix::identity(n)];
    for k in 1..n {
        powers.push(powers[k - 1].mul(&f.matrix));
    }
    // columns: vec(F^k); right-hand side vec(G)
    let mut aug = QMatrix::zeros(n * n, n + 1);
    for (k, p) in powers.iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                aug[(i * n + j, k)] = BigRational::from_integer(p[(i, j)].clone());
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            aug[(i * n + j, n)] = BigRational::from_integer(g.matrix[(i, j)].clone());
        }
    }
    let pivots = aug.rref();
    if pivots.contains(&n) {
        return Ok(None);
    }
    let mut c = vec![BigRational::zero(); n];
    for (r, &col) in pivots.iter().enumerate() {
        c[col] = aug[(r, n)].clone();
    }
    Ok(Some(c))
}

/// `φ(F)` for rational coefficients; `None` if the result is not integral.
pub fn evaluate_polynomial_at(f: &LatticeIsometry, coeffs: &[BigRational]) -> Option<ZMatrix> {
    let n = f.rank();
    let fq = f.matrix.to_rational();
    let mut acc = QMatrix::zeros(n, n);
    let mut pw = QMatrix::identity(n);
    for c in coeffs {
        acc = acc.add(&pw.scale(c));
        pw = pw.mul(&fq);
    }
    acc.to_integer()
}

/// `g v = v`.
pub fn fixes_isotropic_ray(g: &LatticeIsometry, v: &[BigInt]) -> bool {
    g.apply(v) == v
}
