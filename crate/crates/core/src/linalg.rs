//! Dense exact matrices over `BigInt` and `BigRational`.
//!
//! Row-major storage. Integer routines never leave the integers: determinants
//! use Bareiss elimination and the characteristic polynomial uses
//! Faddeev–LeVerrier with exact divisions.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type ZMatrix = Matrix<BigInt>;
pub type QMatrix = Matrix<BigRational>;

impl<T> Matrix<T> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [T] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

impl<T: Clone> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged matrix rows".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// An `r x c` matrix with zero columns is allowed (e.g. an empty basis).
    pub fn from_flat(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(rows * cols, data.len());
        Self { rows, cols, data }
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Self {
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                data.push(self[(i, j)].clone());
            }
        }
        Self {
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }

    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(Error::Dimension("vstack column mismatch".into()));
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Self {
            rows: self.rows + other.rows,
            cols,
            data,
        })
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn block_diag(blocks: &[&Self]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(n, m);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }
}

impl<T: Clone + Zero + One + PartialEq> Matrix<T> {
    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + One,
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T>,
{
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    let slot = &mut out.data[i * other.cols + j];
                    *slot = std::mem::replace(slot, T::zero()) + prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `u^T * self * v` for a bilinear form.
    pub fn bilinear(&self, u: &[T], v: &[T]) -> T {
        let mv = self.mul_vec(v);
        u.iter().zip(&mv).fold(T::zero(), |acc, (a, b)| acc + a * b)
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + One,
    for<'a> &'a T: std::ops::Add<&'a T, Output = T> + std::ops::Sub<&'a T, Output = T>,
{
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl ZMatrix {
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    pub fn neg(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    pub fn to_rational(&self) -> QMatrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| BigRational::from_integer(x.clone())).collect(),
        }
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> BigInt {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = v / &prev;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * &a[(n - 1, n - 1)]
    }

    /// Characteristic polynomial `det(tI - A)` as ascending coefficients.
    pub fn char_poly_coeffs(&self) -> Vec<BigInt> {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        let mut m = ZMatrix::zeros(n, n);
        let ident = ZMatrix::identity(n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I ; c_{n-k} = -tr(A M_k) / k
            m = self.mul(&m).add(&ident.scale(&coeffs[n - k + 1]));
            let t = self.mul(&m).trace();
            let (q, r) = (-t).div_rem(&BigInt::from(k));
            debug_assert!(r.is_zero());
            coeffs[n - k] = q;
        }
        coeffs
    }

    /// Inverse of a unimodular matrix, staying in the integers.
    pub fn inverse_unimodular(&self) -> Result<ZMatrix> {
        let inv = self.to_rational().inverse()?;
        inv.to_integer()
            .ok_or_else(|| Error::Determinant("matrix is not unimodular".into()))
    }

    /// Adjugate `adj(A)` with `A adj(A) = det(A) I`.
    pub fn adjugate(&self) -> Result<ZMatrix> {
        let d = self.det();
        if d.is_zero() {
            return Err(Error::Singular("adjugate of a singular matrix".into()));
        }
        let inv = self.to_rational().inverse()?;
        let scaled = inv.scale(&BigRational::from_integer(d));
        scaled
            .to_integer()
            .ok_or_else(|| Error::Singular("adjugate not integral".into()))
    }

    /// Gcd of all entries of a row.
    pub fn row_content(&self, i: usize) -> BigInt {
        self.row(i).iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }
}

impl QMatrix {
    pub fn scale(&self, k: &BigRational) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    pub fn to_integer(&self) -> Option<ZMatrix> {
        let mut data = Vec::with_capacity(self.data.len());
        for x in &self.data {
            if !x.is_integer() {
                return None;
            }
            data.push(x.to_integer());
        }
        Some(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Gauss–Jordan reduced row echelon form; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(p, r);
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                let v = &self[(r, j)] * &inv;
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let f = self[(i, c)].clone();
                    for j in c..self.cols {
                        let v = &self[(i, j)] - &f * &self[(r, j)];
                        self[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    pub fn inverse(&self) -> Result<QMatrix> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = QMatrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = BigRational::one();
        }
        let piv = aug.rref();
        if piv.len() < n || piv[n - 1] >= n {
            return Err(Error::Singular("matrix is not invertible".into()));
        }
        let idx: Vec<usize> = (0..n).collect();
        let cols: Vec<usize> = (n..2 * n).collect();
        Ok(aug.submatrix(&idx, &cols))
    }

    /// Solves `self * x = b` when the solution exists and is unique.
    pub fn solve(&self, b: &[BigRational]) -> Result<Vec<BigRational>> {
        if b.len() != self.rows {
            return Err(Error::Dimension("right-hand side length".into()));
        }
        let n = self.cols;
        let mut aug = QMatrix::zeros(self.rows, n + 1);
        for i in 0..self.rows {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n)] = b[i].clone();
        }
        let piv = aug.rref();
        if piv.contains(&n) {
            return Err(Error::Singular("inconsistent linear system".into()));
        }
        if piv.len() < n {
            return Err(Error::Singular("linear system has no unique solution".into()));
        }
        Ok((0..n).map(|i| aug[(i, n)].clone()).collect())
    }
}

/// Result of a Smith normal form computation: `u * m * v = d`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: ZMatrix,
    pub d: ZMatrix,
    pub v: ZMatrix,
    pub v_inv: ZMatrix,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|x| !x.is_zero()).count()
    }
}

/// Smith normal form with unimodular transforms; pivots are chosen by minimal
/// absolute value to keep entries small.
pub fn smith_normal_form(m: &ZMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = ZMatrix::identity(rows);
    let mut v = ZMatrix::identity(cols);
    let mut vi = ZMatrix::identity(cols);

    // column op: col_j += c * col_k  (v <- v E, v_inv <- E^-1 v_inv)
    fn col_add(a: &mut ZMatrix, v: &mut ZMatrix, vi: &mut ZMatrix, j: usize, k: usize, c: &BigInt) {
        for i in 0..a.rows() {
            let x = &a[(i, j)] + c * &a[(i, k)];
            a[(i, j)] = x;
        }
        for i in 0..v.rows() {
            let x = &v[(i, j)] + c * &v[(i, k)];
            v[(i, j)] = x;
        }
        for t in 0..vi.cols() {
            let x = &vi[(k, t)] - c * &vi[(j, t)];
            vi[(k, t)] = x;
        }
    }
    fn row_add(a: &mut ZMatrix, u: &mut ZMatrix, i: usize, k: usize, c: &BigInt) {
        for j in 0..a.cols() {
            let x = &a[(i, j)] + c * &a[(k, j)];
            a[(i, j)] = x;
        }
        for j in 0..u.cols() {
            let x = &u[(i, j)] + c * &u[(k, j)];
            u[(i, j)] = x;
        }
    }

    let steps = rows.min(cols);
    for t in 0..steps {
        loop {
            // pivot: smallest nonzero |entry| in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !a[(i, j)].is_zero()
                        && best.is_none_or(|(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(a, u, v, vi);
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);
            vi.swap_rows(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_floor(&a[(t, t)]);
                row_add(&mut a, &mut u, i, t, &-q);
                if !a[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].div_floor(&a[(t, t)]);
                col_add(&mut a, &mut v, &mut vi, j, t, &-q);
                if !a[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility: pivot must divide the whole trailing block
            let mut fixed = true;
            'outer: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(&a[(i, j)] % &a[(t, t)]).is_zero() {
                        row_add(&mut a, &mut u, t, i, &BigInt::one());
                        fixed = false;
                        break 'outer;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        if a[(t, t)].is_negative() {
            for j in 0..cols {
                let x = -&a[(t, j)];
                a[(t, j)] = x;
            }
            for j in 0..rows {
                let x = -&u[(t, j)];
                u[(t, j)] = x;
            }
        }
    }
    finish(a, u, v, vi)
}

fn finish(d: ZMatrix, u: ZMatrix, v: ZMatrix, v_inv: ZMatrix) -> SmithForm {
    SmithForm { u, d, v, v_inv }
}

/// Row-style Hermite normal form of the row lattice; zero rows dropped.
/// Pivots are positive and entries above a pivot are reduced into `[0, pivot)`.
pub fn hermite_normal_form(m: &ZMatrix) -> ZMatrix {
    let mut a = m.to_rows();
    let cols = m.cols();
    let mut r = 0;
    for c in 0..cols {
        if r == a.len() {
            break;
        }
        // gcd-combine all rows from r downward in column c
        loop {
            let nz: Vec<usize> = (r..a.len()).filter(|&i| !a[i][c].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let p = *nz
                .iter()
                .min_by(|&&x, &&y| a[x][c].abs().cmp(&a[y][c].abs()))
                .unwrap();
            a.swap(r, p);
            let mut done = true;
            for i in r + 1..a.len() {
                if a[i][c].is_zero() {
                    continue;
                }
                let q = a[i][c].div_floor(&a[r][c]);
                let pivot_row = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
                if !a[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a[r][c].is_zero() {
            continue;
        }
        if a[r][c].is_negative() {
            for x in a[r].iter_mut() {
                *x = -&*x;
            }
        }
        let pivot_row = a[r].clone();
        for i in 0..r {
            let q = a[i][c].div_floor(&pivot_row[c]);
            if !q.is_zero() {
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
            }
        }
        r += 1;
    }
    a.truncate(r);
    a.retain(|row| row.iter().any(|x| !x.is_zero()));
    if a.is_empty() {
        return ZMatrix::from_flat(0, cols, Vec::new());
    }
    ZMatrix::from_rows(a).expect("rectangular")
}

/// Integer kernel `{x : m x = 0}` as primitive basis rows.
pub fn integer_kernel(m: &ZMatrix) -> ZMatrix {
    let n = m.cols();
    if m.rows() == 0 {
        return ZMatrix::identity(n);
    }
    let snf = smith_normal_form(m);
    let r = snf.rank();
    let cols: Vec<usize> = (r..n).collect();
    let rows: Vec<usize> = (0..n).collect();
    snf.v.submatrix(&rows, &cols).transpose()
}

/// Integer solution of `x * basis = target` (row combination), if any.
pub fn solve_row_combination(basis: &ZMatrix, target: &[BigInt]) -> Option<Vec<BigInt>> {
    if basis.rows() == 0 {
        return target.iter().all(|x| x.is_zero()).then(Vec::new);
    }
    // x B = t  <=>  B^T x^T = t^T ; U B^T V = D
    let bt = basis.transpose();
    let snf = smith_normal_form(&bt);
    let ut = snf.u.mul_vec(target);
    let d = snf.diagonal();
    let mut y = vec![BigInt::zero(); bt.cols()];
    for (i, yi) in ut.iter().enumerate() {
        let di = d.get(i).cloned().unwrap_or_else(BigInt::zero);
        if di.is_zero() {
            if !yi.is_zero() {
                return None;
            }
        } else {
            let (q, r) = yi.div_rem(&di);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        }
    }
    Some(snf.v.mul_vec(&y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(rows: &[&[i64]]) -> ZMatrix {
        ZMatrix::from_i64(rows)
    }

    #[test]
    fn bareiss_determinant() {
        assert_eq!(z(&[&[2, 1], &[1, 2]]).det(), BigInt::from(3));
        assert_eq!(z(&[&[0, 1], &[1, 0]]).det(), BigInt::from(-1));
        assert_eq!(z(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]).det(), BigInt::zero());
        assert_eq!(z(&[&[0, 2, 1], &[3, 0, 0], &[1, 1, 5]]).det(), BigInt::from(-27));
    }

    #[test]
    fn faddeev_leverrier_char_poly() {
        let c = z(&[&[3, 4], &[2, 3]]).char_poly_coeffs();
        assert_eq!(c, vec![1.into(), (-6).into(), 1.into()]);
        let c = z(&[&[-1, -1], &[1, 0]]).char_poly_coeffs();
        assert_eq!(c, vec![1.into(), 1.into(), 1.into()]);
    }

    #[test]
    fn snf_examples() {
        let s = smith_normal_form(&z(&[&[2, 1], &[1, 2]]));
        assert_eq!(s.diagonal(), vec![1.into(), 3.into()]);
        let s = smith_normal_form(&z(&[&[2, 0], &[0, 2]]));
        assert_eq!(s.diagonal(), vec![2.into(), 2.into()]);
        let m = z(&[&[6, 4, 2], &[3, 9, 12], &[0, 5, 10]]);
        let s = smith_normal_form(&m);
        assert_eq!(s.u.mul(&m).mul(&s.v), s.d);
        assert!(s.v.mul(&s.v_inv).is_identity());
    }

    #[test]
    fn hnf_canonical() {
        let a = hermite_normal_form(&z(&[&[2, 4], &[1, 2], &[0, 3]]));
        let b = hermite_normal_form(&z(&[&[1, 2], &[0, 3]]));
        assert_eq!(a, b);
    }

    #[test]
    fn kernel_and_row_solve() {
        let m = z(&[&[1, 1, 0]]);
        let k = integer_kernel(&m);
        assert_eq!(k.rows(), 2);
        for i in 0..2 {
            assert!(m.mul_vec(k.row(i)).iter().all(|x| x.is_zero()));
        }
        let basis = z(&[&[2, 0], &[0, 3]]);
        assert_eq!(
            solve_row_combination(&basis, &[4.into(), 9.into()]),
            Some(vec![2.into(), 3.into()])
        );
        assert_eq!(solve_row_combination(&basis, &[1.into(), 0.into()]), None);
    }

    #[test]
    fn adjugate_identity() {
        let q = z(&[&[-2, 1, 0], &[1, -2, 1], &[0, 1, -2]]);
        let adj = q.adjugate().unwrap();
        assert_eq!(q.mul(&adj), ZMatrix::identity(3).scale(&q.det()));
    }
}
