use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::json::{matrix_to_value, value_to_matrix, value_to_usize};
use crate::linalg::ZMatrix;

/// Rank-`n` integer symmetric bilinear form on a fixed basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GramLattice {
    gram: ZMatrix,
    even: bool,
}

impl std::fmt::Debug for GramLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GramLattice(rank {}, even {}) {:?}", self.rank(), self.even, self.gram)
    }
}

impl GramLattice {
    /// Symmetric Gram matrix; the even flag is read off the diagonal.
    pub fn new(gram: ZMatrix) -> Result<Self> {
        if !gram.is_square() || !gram.is_symmetric() {
            return Err(Error::Dimension("Gram matrix must be square and symmetric".into()));
        }
        let even = (0..gram.rows()).all(|i| gram[(i, i)].is_even());
        Ok(Self { gram, even })
    }

    /// As [`GramLattice::new`] but with an asserted even flag.
    pub fn with_even_flag(gram: ZMatrix, even: bool) -> Result<Self> {
        let l = Self::new(gram)?;
        if even && !l.even {
            return Err(Error::Precondition("even flag set but a diagonal entry is odd".into()));
        }
        Ok(Self { even, ..l })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::new(ZMatrix::from_i64(rows))
    }

    pub fn gram(&self) -> &ZMatrix {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn is_even(&self) -> bool {
        self.even
    }

    pub fn pair(&self, u: &[BigInt], v: &[BigInt]) -> BigInt {
        self.gram.bilinear(u, v)
    }

    pub fn norm(&self, v: &[BigInt]) -> BigInt {
        self.gram.bilinear(v, v)
    }

    pub fn det(&self) -> BigInt {
        self.gram.det()
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.det().is_zero()
    }

    /// Orthogonal direct sum.
    pub fn direct_sum(&self, other: &GramLattice) -> GramLattice {
        GramLattice {
            gram: ZMatrix::block_diag(&[&self.gram, &other.gram]),
            even: self.even && other.even,
        }
    }

    /// Form multiplied by `k`.
    pub fn scaled(&self, k: i64) -> GramLattice {
        GramLattice::new(self.gram.scale(&BigInt::from(k))).expect("scaling keeps symmetry")
    }

    /// Gram matrix of the vectors given as rows of `basis`.
    pub fn induced(&self, basis: &ZMatrix) -> Result<GramLattice> {
        if basis.cols() != self.rank() {
            return Err(Error::Dimension("basis width differs from the lattice rank".into()));
        }
        GramLattice::new(basis.mul(&self.gram).mul(&basis.transpose()))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "rank": self.rank(),
            "gram": matrix_to_value(&self.gram),
            "even": self.even,
        })
    }

    pub fn from_json(v: &Value) -> Result<GramLattice> {
        let gram = value_to_matrix(v.get("gram").ok_or_else(|| Error::Parse("missing \"gram\"".into()))?)?;
        if let Some(r) = v.get("rank") {
            if value_to_usize(r)? != gram.rows() {
                return Err(Error::Parse("\"rank\" disagrees with the Gram matrix".into()));
            }
        }
        match v.get("even") {
            Some(Value::Bool(e)) => GramLattice::with_even_flag(gram, *e),
            Some(_) => Err(Error::Parse("\"even\" must be a boolean".into())),
            None => GramLattice::new(gram),
        }
    }
}

/// Standard lattices.
pub mod catalog {
    use super::*;

    /// Hyperbolic plane `U`.
    pub fn hyperbolic_plane() -> GramLattice {
        GramLattice::from_i64(&[&[0, 1], &[1, 0]]).expect("symmetric")
    }

    /// Edges of the E8 Dynkin diagram in Bourbaki numbering (0-based).
    pub const E8_EDGES: [(usize, usize); 7] = [(0, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 6), (6, 7)];

    /// Negative definite `E8(-1)`: diagonal −2, +1 on Dynkin edges.
    pub fn e8_negative() -> GramLattice {
        let mut g = ZMatrix::zeros(8, 8);
        for i in 0..8 {
            g[(i, i)] = BigInt::from(-2);
        }
        for (a, b) in E8_EDGES {
            g[(a, b)] = BigInt::from(1);
            g[(b, a)] = BigInt::from(1);
        }
        GramLattice::new(g).expect("symmetric")
    }

    /// Positive definite root lattice `A_n` (Cartan matrix).
    pub fn a_n(n: usize) -> GramLattice {
        let mut g = ZMatrix::zeros(n, n);
        for i in 0..n {
            g[(i, i)] = BigInt::from(2);
            if i + 1 < n {
                g[(i, i + 1)] = BigInt::from(-1);
                g[(i + 1, i)] = BigInt::from(-1);
            }
        }
        GramLattice::new(g).expect("symmetric")
    }

    pub fn diagonal(entries: &[i64]) -> GramLattice {
        let n = entries.len();
        let mut g = ZMatrix::zeros(n, n);
        for (i, &e) in entries.iter().enumerate() {
            g[(i, i)] = BigInt::from(e);
        }
        GramLattice::new(g).expect("symmetric")
    }

    /// Direct sum of a list of lattices.
    pub fn sum(parts: &[GramLattice]) -> GramLattice {
        let mut it = parts.iter();
        let first = it.next().expect("at least one summand").clone();
        it.fold(first, |acc, l| acc.direct_sum(l))
    }
}
