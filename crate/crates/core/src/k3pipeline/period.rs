//! Exact period points in `Q(√2, ω)`, `ω² = -A`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::arith::rat_to_string;
use crate::error::{Error, Result};
use crate::latticecore::{saturation, signature, GramLattice, SublatticeEmbedding};
use crate::linalg::{hermite_normal_form, ZMatrix};

/// `x0 + x1 √2 + x2 ω + x3 √2 ω`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticAlgebraElement {
    pub x0: BigRational,
    pub x1: BigRational,
    pub x2: BigRational,
    pub x3: BigRational,
}

impl QuarticAlgebraElement {
    pub fn new(x0: BigRational, x1: BigRational, x2: BigRational, x3: BigRational) -> Self {
        Self { x0, x1, x2, x3 }
    }

    pub fn zero() -> Self {
        Self::rational(BigRational::zero())
    }

    pub fn rational(x: BigRational) -> Self {
        Self::new(x, BigRational::zero(), BigRational::zero(), BigRational::zero())
    }

    pub fn sqrt2() -> Self {
        Self::new(BigRational::zero(), BigRational::one(), BigRational::zero(), BigRational::zero())
    }

    pub fn omega() -> Self {
        Self::new(BigRational::zero(), BigRational::zero(), BigRational::one(), BigRational::zero())
    }

    pub fn components(&self) -> [&BigRational; 4] {
        [&self.x0, &self.x1, &self.x2, &self.x3]
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(|x| x.is_zero())
    }

    /// The rational value, when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        (self.x1.is_zero() && self.x2.is_zero() && self.x3.is_zero()).then(|| self.x0.clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&self.x0 + &o.x0, &self.x1 + &o.x1, &self.x2 + &o.x2, &self.x3 + &o.x3)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::new(&self.x0 * k, &self.x1 * k, &self.x2 * k, &self.x3 * k)
    }

    /// Complex conjugation `ω ↦ -ω`.
    pub fn conj(&self) -> Self {
        Self::new(self.x0.clone(), self.x1.clone(), -&self.x2, -&self.x3)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.components().iter().map(|x| Value::String(rat_to_string(x))).collect())
    }
}

/// The algebra `Q[√2, ω] / ((√2)² - 2, ω² + A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticAlgebra {
    pub a: BigInt,
}

impl QuarticAlgebra {
    pub fn new(a: BigInt) -> Result<Self> {
        if !a.is_positive() {
            return Err(Error::Precondition("ω² = -A needs A > 0".into()));
        }
        Ok(Self { a })
    }

    pub fn mul(&self, u: &QuarticAlgebraElement, v: &QuarticAlgebraElement) -> QuarticAlgebraElement {
        let two = BigRational::from_integer(BigInt::from(2));
        let ma = BigRational::from_integer(-self.a.clone());
        // basis 1, s, w, sw with s² = 2, w² = -A
        let (a0, a1, a2, a3) = (&u.x0, &u.x1, &u.x2, &u.x3);
        let (b0, b1, b2, b3) = (&v.x0, &v.x1, &v.x2, &v.x3);
        let x0 = a0 * b0 + &two * a1 * b1 + &ma * a2 * b2 + &two * &ma * a3 * b3;
        let x1 = a0 * b1 + a1 * b0 + &ma * (a2 * b3 + a3 * b2);
        let x2 = a0 * b2 + a2 * b0 + &two * (a1 * b3 + a3 * b1);
        let x3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1;
        QuarticAlgebraElement::new(x0, x1, x2, x3)
    }

    /// `Σ u_i v_j G_ij` for algebra-valued coordinate vectors.
    pub fn pair(&self, gram: &ZMatrix, u: &[QuarticAlgebraElement], v: &[QuarticAlgebraElement]) -> QuarticAlgebraElement {
        let mut acc = QuarticAlgebraElement::zero();
        for (i, ui) in u.iter().enumerate() {
            for (j, vj) in v.iter().enumerate() {
                let g = &gram[(i, j)];
                if g.is_zero() {
                    continue;
                }
                acc = acc.add(&self.mul(ui, vj).scale(&BigRational::from_integer(g.clone())));
            }
        }
        acc
    }
}

/// `σ = √2 e₀ + ((-b + ω) / 2a) u₁ + u₂` on a basis `(e₀, u₁, u₂)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodPoint {
    pub algebra: QuarticAlgebra,
    /// `T̄` Gram entries `[[2a, b], [b, 2c]]`.
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub coordinates: Vec<QuarticAlgebraElement>,
}

impl PeriodPoint {
    pub fn big_a(&self) -> &BigInt {
        &self.algebra.a
    }

    pub fn conj(&self) -> Vec<QuarticAlgebraElement> {
        self.coordinates.iter().map(|x| x.conj()).collect()
    }

    /// The same vector in ambient coordinates, given the basis its
    /// coordinates refer to.
    pub fn in_ambient(&self, basis: &SublatticeEmbedding) -> Result<PeriodPoint> {
        if basis.rank() != self.coordinates.len() {
            return Err(Error::Dimension("period coordinates do not match the basis".into()));
        }
        let n = basis.ambient().rank();
        let mut coords = vec![QuarticAlgebraElement::zero(); n];
        for (i, s) in self.coordinates.iter().enumerate() {
            for (j, x) in basis.basis().row(i).iter().enumerate() {
                if !x.is_zero() {
                    coords[j] = coords[j].add(&s.scale(&BigRational::from_integer(x.clone())));
                }
            }
        }
        Ok(PeriodPoint {
            coordinates: coords,
            ..self.clone()
        })
    }

    /// `(σ, σ)` and `(σ, σ̄)`.
    pub fn identities(&self, gram: &ZMatrix) -> (QuarticAlgebraElement, QuarticAlgebraElement) {
        let s = &self.coordinates;
        (self.algebra.pair(gram, s, s), self.algebra.pair(gram, s, &self.conj()))
    }

    /// `(σ, σ) = 0` and `(σ, σ̄) = A/a` exactly.
    pub fn verify(&self, gram: &ZMatrix) -> bool {
        let (ss, sbar) = self.identities(gram);
        let expected = BigRational::new(self.algebra.a.clone(), self.a.clone());
        ss.is_zero() && sbar.as_rational() == Some(expected)
    }

    /// Image under an integer matrix acting on coordinate columns.
    pub fn apply(&self, m: &ZMatrix) -> Vec<QuarticAlgebraElement> {
        (0..m.rows())
            .map(|i| {
                let mut acc = QuarticAlgebraElement::zero();
                for (j, s) in self.coordinates.iter().enumerate() {
                    if !m[(i, j)].is_zero() {
                        acc = acc.add(&s.scale(&BigRational::from_integer(m[(i, j)].clone())));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "A": self.algebra.a.to_string(),
            "a": self.a.to_string(),
            "b": self.b.to_string(),
            "c": self.c.to_string(),
            "coordinates": self.coordinates.iter().map(|x| x.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// Period point on `T = Z e₀ ⊕ T̄` (basis `e₀, u₁, u₂`), with both identities
/// checked exactly against the Gram matrix of `T`.
pub fn period_point(tbar: &GramLattice, t: &GramLattice) -> Result<PeriodPoint> {
    let s = signature(tbar);
    if tbar.rank() != 2 || s.n_plus != 2 {
        return Err(Error::Shape(format!("T̄ must be positive definite of rank 2, got signature {s}")));
    }
    if t.rank() != 3 {
        return Err(Error::Shape("T must have rank 3".into()));
    }
    let g = tbar.gram();
    let two = BigInt::from(2);
    if !(&g[(0, 0)] % &two).is_zero() || !(&g[(1, 1)] % &two).is_zero() {
        return Err(Error::Shape("T̄ must be even".into()));
    }
    let (a, b, c) = (&g[(0, 0)] / &two, g[(0, 1)].clone(), &g[(1, 1)] / &two);
    let big_a = BigInt::from(4) * &a * &c - &b * &b;
    let algebra = QuarticAlgebra::new(big_a)?;
    let inv2a = BigRational::new(BigInt::one(), &two * &a);
    let u1 = QuarticAlgebraElement::new(
        BigRational::from_integer(-b.clone()) * &inv2a,
        BigRational::zero(),
        inv2a.clone(),
        BigRational::zero(),
    );
    let sigma = PeriodPoint {
        algebra,
        a,
        b,
        c,
        coordinates: vec![
            QuarticAlgebraElement::sqrt2(),
            u1,
            QuarticAlgebraElement::rational(BigRational::one()),
        ],
    };
    // T = Z e₀ ⊕ T̄ with e₀ in its radical
    let tg = t.gram();
    for i in 0..3 {
        if !tg[(0, i)].is_zero() {
            return Err(Error::Shape("e₀ must be isotropic and orthogonal to T̄".into()));
        }
    }
    if tg[(1, 1)] != g[(0, 0)] || tg[(1, 2)] != g[(0, 1)] || tg[(2, 2)] != g[(1, 1)] {
        return Err(Error::Shape("T must restrict to T̄ on its last two basis vectors".into()));
    }
    if !sigma.verify(tg) {
        return Err(Error::Shape("period identities fail".into()));
    }
    Ok(sigma)
}

/// Saturation of the integer points of the rational span of the four
/// component vectors of `σ` (coordinates taken in the ambient basis).
pub fn minimal_primitive_sublattice(sigma: &PeriodPoint, ambient: &GramLattice) -> Result<SublatticeEmbedding> {
    let n = ambient.rank();
    if sigma.coordinates.len() != n {
        return Err(Error::Dimension(format!(
            "{} period coordinates on a rank-{n} lattice",
            sigma.coordinates.len()
        )));
    }
    let mut rows = Vec::new();
    for k in 0..4 {
        let comp: Vec<&BigRational> = sigma.coordinates.iter().map(|x| x.components()[k]).collect();
        let den = comp.iter().fold(BigInt::one(), |acc, x| num_integer::lcm(acc, x.denom().clone()));
        let v: Vec<BigInt> = comp
            .iter()
            .map(|x| (*x * BigRational::from_integer(den.clone())).to_integer())
            .collect();
        if v.iter().any(|x| !x.is_zero()) {
            rows.push(v);
        }
    }
    if rows.is_empty() {
        return Ok(SublatticeEmbedding::zero(ambient));
    }
    let basis = hermite_normal_form(&ZMatrix::from_rows(rows)?);
    Ok(saturation(&SublatticeEmbedding::new(ambient, basis)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::latticecore::catalog::*;

    fn t_of(tbar: &GramLattice) -> GramLattice {
        diagonal(&[0]).direct_sum(tbar)
    }

    #[test]
    fn a2_period() {
        let tbar = GramLattice::from_i64(&[&[2, 1], &[1, 2]]).unwrap();
        let s = period_point(&tbar, &t_of(&tbar)).unwrap();
        assert_eq!(s.big_a(), &BigInt::from(3));
        let (ss, sbar) = s.identities(t_of(&tbar).gram());
        assert!(ss.is_zero());
        assert_eq!(sbar.as_rational(), Some(rat(3, 1)));
    }

    #[test]
    fn square_period() {
        let tbar = diagonal(&[2, 2]);
        let s = period_point(&tbar, &t_of(&tbar)).unwrap();
        assert_eq!(s.big_a(), &BigInt::from(4));
        assert_eq!(s.coordinates[1], QuarticAlgebraElement::new(rat(0, 1), rat(0, 1), rat(1, 2), rat(0, 1)));
        assert!(s.verify(t_of(&tbar).gram()));
        // ω² = -4
        let w = QuarticAlgebraElement::omega();
        assert_eq!(s.algebra.mul(&w, &w), QuarticAlgebraElement::rational(rat(-4, 1)));
        assert!(period_point(&diagonal(&[2, -2]), &diagonal(&[0, 2, -2])).is_err());
    }

    #[test]
    fn conjugation_is_an_involutive_algebra_map() {
        let alg = QuarticAlgebra::new(BigInt::from(7)).unwrap();
        let u = QuarticAlgebraElement::new(rat(1, 2), rat(-3, 1), rat(2, 5), rat(1, 1));
        let v = QuarticAlgebraElement::new(rat(0, 1), rat(1, 3), rat(-1, 1), rat(4, 1));
        assert_eq!(u.conj().conj(), u);
        assert_eq!(alg.mul(&u, &v).conj(), alg.mul(&u.conj(), &v.conj()));
        assert_eq!(alg.mul(&u, &v), alg.mul(&v, &u));
    }

    #[test]
    fn minimal_sublattices() {
        let z3 = diagonal(&[1, 1, 1]);
        let alg = QuarticAlgebra::new(BigInt::from(1)).unwrap();
        let one = QuarticAlgebraElement::rational(rat(1, 1));
        let mk = |coordinates| PeriodPoint {
            algebra: alg.clone(),
            a: BigInt::from(1),
            b: BigInt::from(0),
            c: BigInt::from(1),
            coordinates,
        };
        let s = mk(vec![QuarticAlgebraElement::sqrt2(), QuarticAlgebraElement::zero(), one.clone()]);
        let m = minimal_primitive_sublattice(&s, &z3).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.basis(), &ZMatrix::from_i64(&[&[1, 0, 0], &[0, 0, 1]]));
        let r = mk(vec![
            QuarticAlgebraElement::rational(rat(2, 3)),
            QuarticAlgebraElement::rational(rat(4, 3)),
            QuarticAlgebraElement::zero(),
        ]);
        let m = minimal_primitive_sublattice(&r, &z3).unwrap();
        assert_eq!(m.basis(), &ZMatrix::from_i64(&[&[1, 2, 0]]));
        let tbar = GramLattice::from_i64(&[&[2, 1], &[1, 2]]).unwrap();
        let t = t_of(&tbar);
        let s = period_point(&tbar, &t).unwrap();
        assert_eq!(minimal_primitive_sublattice(&s, &t).unwrap().rank(), 3);
    }
}
