use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::Value;

use super::signature::{classify, LatticeClass};
use super::GramLattice;
use crate::error::{Error, Result};
use crate::json::{matrix_to_value, value_to_matrix};
use crate::linalg::{hermite_normal_form, integer_kernel, SmithForm, ZMatrix};

/// Sublattice spanned by the rows of `basis`, in ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SublatticeEmbedding {
    ambient: GramLattice,
    basis: ZMatrix,
}

impl SublatticeEmbedding {
    /// Rows must be linearly independent over the rationals.
    pub fn new(ambient: &GramLattice, basis: ZMatrix) -> Result<Self> {
        if basis.cols() != ambient.rank() {
            return Err(Error::Dimension(format!(
                "basis vectors have length {}, ambient rank is {}",
                basis.cols(),
                ambient.rank()
            )));
        }
        if basis.rows() > 0 && basis.to_rational().rank() != basis.rows() {
            return Err(Error::Dimension("basis rows are linearly dependent".into()));
        }
        Ok(Self {
            ambient: ambient.clone(),
            basis,
        })
    }

    /// The zero sublattice.
    pub fn zero(ambient: &GramLattice) -> Self {
        Self {
            ambient: ambient.clone(),
            basis: ZMatrix::from_flat(0, ambient.rank(), Vec::new()),
        }
    }

    /// The whole ambient lattice on its own basis.
    pub fn full(ambient: &GramLattice) -> Self {
        Self {
            ambient: ambient.clone(),
            basis: ZMatrix::identity(ambient.rank()),
        }
    }

    pub fn ambient(&self) -> &GramLattice {
        &self.ambient
    }

    pub fn basis(&self) -> &ZMatrix {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    /// Induced form `B G Bᵀ`.
    pub fn lattice(&self) -> GramLattice {
        self.ambient.induced(&self.basis).expect("dimensions checked at construction")
    }

    /// Ambient vector with the given coordinates in the sublattice basis.
    pub fn to_ambient(&self, coords: &[BigInt]) -> Vec<BigInt> {
        self.basis.transpose().mul_vec(coords)
    }

    /// Sublattice coordinates of an ambient vector, if it lies in the span.
    pub fn coordinates_of(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        crate::linalg::solve_row_combination(&self.basis, v)
    }

    /// Same sublattice (as a set), regardless of basis.
    pub fn same_span(&self, other: &SublatticeEmbedding) -> bool {
        self.ambient == other.ambient && hermite_normal_form(&self.basis) == hermite_normal_form(&other.basis)
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.ambient.to_json();
        v["basis"] = matrix_to_value(&self.basis);
        v
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let ambient = GramLattice::from_json(v)?;
        let basis = value_to_matrix(v.get("basis").ok_or_else(|| Error::Parse("missing \"basis\"".into()))?)?;
        Self::new(&ambient, basis)
    }
}

/// Smith normal form `U M V = D`.
pub fn smith_normal_form(m: &ZMatrix) -> SmithForm {
    crate::linalg::smith_normal_form(m)
}

/// Minimal primitive sublattice containing `e`; `e` itself when already primitive.
pub fn saturation(e: &SublatticeEmbedding) -> SublatticeEmbedding {
    if e.rank() == 0 || is_primitive(e) {
        return e.clone();
    }
    let snf = smith_normal_form(&e.basis);
    let r = e.rank();
    // B = U^-1 D V^-1, so the rational span of B is that of the first r rows of V^-1
    let rows: Vec<usize> = (0..r).collect();
    let sat = hermite_normal_form(&snf.v_inv.select_rows(&rows));
    SublatticeEmbedding {
        ambient: e.ambient.clone(),
        basis: sat,
    }
}

/// Torsion-free quotient: all nonzero invariant factors are 1.
pub fn is_primitive(e: &SublatticeEmbedding) -> bool {
    smith_normal_form(&e.basis)
        .diagonal()
        .iter()
        .filter(|x| !x.is_zero())
        .all(|x| x.is_one())
}

/// Primitive sublattice of ambient vectors orthogonal to every row of `e`.
pub fn orthogonal_complement(e: &SublatticeEmbedding) -> SublatticeEmbedding {
    let n = e.ambient.rank();
    if e.rank() == 0 {
        return SublatticeEmbedding::full(&e.ambient);
    }
    let pairing = e.basis.mul(e.ambient.gram());
    let ker = integer_kernel(&pairing);
    let basis = if ker.rows() == 0 {
        ZMatrix::from_flat(0, n, Vec::new())
    } else {
        hermite_normal_form(&ker)
    };
    SublatticeEmbedding {
        ambient: e.ambient.clone(),
        basis,
    }
}

/// Index of a sublattice in its ambient lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Index {
    Finite(BigInt),
    Infinite,
}

impl Serialize for Index {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Index::Finite(n) => s.serialize_str(&n.to_string()),
            Index::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// `[ambient : A + B]`.
pub fn index_of_sum(a: &SublatticeEmbedding, b: &SublatticeEmbedding) -> Result<Index> {
    if a.ambient != b.ambient {
        return Err(Error::Precondition("sublattices live in different ambient lattices".into()));
    }
    let n = a.ambient.rank();
    let stacked = a.basis.vstack(&b.basis)?;
    if stacked.rows() == 0 {
        return Ok(if n == 0 { Index::Finite(BigInt::one()) } else { Index::Infinite });
    }
    let d = smith_normal_form(&stacked).diagonal();
    let nonzero: Vec<&BigInt> = d.iter().filter(|x| !x.is_zero()).collect();
    if nonzero.len() < n {
        return Ok(Index::Infinite);
    }
    Ok(Index::Finite(nonzero.into_iter().product()))
}

/// Finite abelian group `L*/L` as invariant factors `d_1 | d_2 | ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscriminantGroup {
    pub invariant_factors: Vec<BigInt>,
    pub order: BigInt,
}

impl DiscriminantGroup {
    /// Largest invariant factor (1 for the trivial group).
    pub fn exponent(&self) -> BigInt {
        self.invariant_factors.last().cloned().unwrap_or_else(BigInt::one)
    }
}

pub fn discriminant_group(l: &GramLattice) -> Result<DiscriminantGroup> {
    if !l.is_nondegenerate() {
        return Err(Error::DegenerateLattice);
    }
    let d = smith_normal_form(l.gram()).diagonal();
    let invariant_factors: Vec<BigInt> = d.into_iter().filter(|x| x > &BigInt::one()).collect();
    let order = invariant_factors.iter().product();
    Ok(DiscriminantGroup {
        invariant_factors,
        order,
    })
}

/// Primitive kernel of the Gram matrix.
pub fn radical(l: &GramLattice) -> SublatticeEmbedding {
    let ker = integer_kernel(l.gram());
    let basis = if ker.rows() == 0 {
        ZMatrix::from_flat(0, l.rank(), Vec::new())
    } else {
        hermite_normal_form(&ker)
    };
    SublatticeEmbedding {
        ambient: l.clone(),
        basis,
    }
}

/// Unimodular frame `(v, u_1, …, u_{r-1})` of a parabolic lattice with the
/// induced form on `L / Zv`.
#[derive(Clone, Debug)]
pub struct ParabolicFrame {
    pub v: Vec<BigInt>,
    /// Rows `u_1, …, u_{r-1}`.
    pub complement: ZMatrix,
    pub quotient: GramLattice,
    pub quotient_class: LatticeClass,
}

impl ParabolicFrame {
    /// Frame basis as rows `v, u_1, …`.
    pub fn frame_matrix(&self) -> ZMatrix {
        ZMatrix::from_rows(vec![self.v.clone()])
            .expect("row")
            .vstack(&self.complement)
            .expect("same width")
    }

    /// Lifts quotient coordinates to a lattice vector `Σ y_i u_i`.
    pub fn lift(&self, y: &[BigInt]) -> Vec<BigInt> {
        self.complement.transpose().mul_vec(y)
    }
}

/// `L / radical` for a lattice whose radical has rank exactly 1.
pub fn quotient_by_radical(l: &GramLattice) -> Result<ParabolicFrame> {
    let rad = radical(l);
    if rad.rank() != 1 {
        return Err(Error::RadicalRank(rad.rank()));
    }
    let n = l.rank();
    let v = rad.basis.row(0).to_vec();
    let nonzero: Vec<usize> = (0..n).filter(|&i| !v[i].is_zero()).collect();
    let complement = if nonzero.len() == 1 && v[nonzero[0]].abs().is_one() {
        // v = ±e_j: keep the remaining basis vectors in order
        let j = nonzero[0];
        let idx: Vec<usize> = (0..n).filter(|&i| i != j).collect();
        ZMatrix::identity(n).select_rows(&idx)
    } else {
        // v V = (1, 0, …, 0) up to sign, so the rows of V^-1 complete v
        let row = ZMatrix::from_rows(vec![v.clone()])?;
        let snf = smith_normal_form(&row);
        let idx: Vec<usize> = (1..n).collect();
        snf.v_inv.select_rows(&idx)
    };
    let quotient = l.induced(&complement)?;
    let quotient_class = classify(&quotient);
    Ok(ParabolicFrame {
        v,
        complement,
        quotient,
        quotient_class,
    })
}
