//! Unipotent coordinates of isometries of parabolic lattices, and ranks of
//! the abelian groups they generate.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::isomgroup::LatticeIsometry;
use crate::json::vector_to_value;
use crate::latticecore::{quotient_by_radical, GramLattice, ParabolicFrame};
use crate::linalg::{smith_normal_form, ZMatrix};

/// `g(v) = sign · v` and `g(uᵢ) = uᵢ + αᵢ v` on the frame `(v, u₁, …, u_{r−1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnipotentCoordinates {
    pub sign: i8,
    pub vector: Vec<BigInt>,
}

impl UnipotentCoordinates {
    pub fn to_json(&self) -> Value {
        json!({ "sign": self.sign, "vector": vector_to_value(&self.vector) })
    }
}

fn frame_coordinates(frame: &ParabolicFrame, v: &[BigInt]) -> Vec<BigInt> {
    // frame rows are a unimodular basis, so this solve is exact
    crate::linalg::solve_row_combination(&frame.frame_matrix(), v).expect("frame is a basis")
}

/// Coordinates on the fixed frame of `quotient_by_radical(l)`.
pub fn parabolic_coordinates(g: &LatticeIsometry, l: &GramLattice) -> Result<UnipotentCoordinates> {
    if g.lattice() != l {
        return Err(Error::Precondition("isometry is not defined on this lattice".into()));
    }
    let frame = quotient_by_radical(l)?;
    let r = l.rank();
    let gv = frame_coordinates(&frame, &g.apply(&frame.v));
    let sign = if gv[0].is_one() { 1 } else { -1 };
    if !(gv[0].is_one() || gv[0] == -BigInt::one()) || gv[1..].iter().any(|x| !x.is_zero()) {
        return Err(Error::QuotientAction);
    }
    let mut vector = Vec::with_capacity(r - 1);
    for i in 0..r - 1 {
        let c = frame_coordinates(&frame, &g.apply(frame.complement.row(i)));
        for (k, x) in c[1..].iter().enumerate() {
            let expected = if k == i { BigInt::one() } else { BigInt::zero() };
            if *x != expected {
                return Err(Error::QuotientAction);
            }
        }
        vector.push(c[0].clone());
    }
    Ok(UnipotentCoordinates { sign, vector })
}

/// Rank of the span of the coordinate vectors; at most `rank(l) − 1`.
pub fn parabolic_group_rank(generators: &[LatticeIsometry], l: &GramLattice) -> Result<usize> {
    let vectors = generators
        .iter()
        .map(|g| parabolic_coordinates(g, l).map(|c| c.vector))
        .collect::<Result<Vec<_>>>()?;
    if vectors.is_empty() {
        return Ok(0);
    }
    abelian_rank_of_image(&vectors)
}

/// Rank of the subgroup of `Zᵏ` generated by the vectors.
pub fn abelian_rank_of_image(vectors: &[Vec<BigInt>]) -> Result<usize> {
    let Some(first) = vectors.first() else {
        return Ok(0);
    };
    if vectors.iter().any(|v| v.len() != first.len()) {
        return Err(Error::Dimension("vectors of different lengths".into()));
    }
    if first.is_empty() {
        return Ok(0);
    }
    Ok(smith_normal_form(&ZMatrix::from_rows(vectors.to_vec())?).rank())
}
