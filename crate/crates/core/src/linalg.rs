//! Dense vectors, matrices and rank-3/rank-4 coordinate tensors over a
//! [`Field`], with exact inverse, rank and signature.
//!
//! Pivoting always takes the first entry whose normal form is nonzero; with
//! exact arithmetic there is nothing to gain from magnitude pivoting and the
//! fixed choice keeps outputs reproducible.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use std::cmp::Ordering;

use thiserror::Error;

use crate::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

#[derive(Clone, PartialEq)]
pub struct Vector<F>(Vec<F>);

impl<F: Field> Vector<F> {
    pub fn new(entries: Vec<F>) -> Self {
        Vector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        Vector(vec![F::zero(); n])
    }

    /// The `i`-th standard basis vector.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = F::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, F> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[F] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<F> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn scale(&self, k: &F) -> Self {
        Vector(self.0.iter().map(|x| k.clone() * x.clone()).collect())
    }

    /// Plain coordinate pairing `sum_i u_i v_i`.
    pub fn dot(&self, other: &Self) -> F {
        assert_eq!(self.len(), other.len(), "dot of vectors of different length");
        self.0
            .iter()
            .zip(&other.0)
            .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Vector<G> {
        Vector(self.0.iter().map(f).collect())
    }
}

impl<F> Index<usize> for Vector<F> {
    type Output = F;
    fn index(&self, i: usize) -> &F {
        &self.0[i]
    }
}

impl<F> IndexMut<usize> for Vector<F> {
    fn index_mut(&mut self, i: usize) -> &mut F {
        &mut self.0[i]
    }
}

impl<F: Field> Add for &Vector<F> {
    type Output = Vector<F>;
    fn add(self, rhs: &Vector<F>) -> Vector<F> {
        assert_eq!(self.len(), rhs.len());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a.clone() + b.clone()).collect())
    }
}

impl<F: Field> Sub for &Vector<F> {
    type Output = Vector<F>;
    fn sub(self, rhs: &Vector<F>) -> Vector<F> {
        assert_eq!(self.len(), rhs.len());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a.clone() - b.clone()).collect())
    }
}

impl<F: Field> Neg for &Vector<F> {
    type Output = Vector<F>;
    fn neg(self) -> Vector<F> {
        Vector(self.0.iter().map(|a| -a.clone()).collect())
    }
}

impl<F: fmt::Display> fmt::Display for Vector<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl<F: fmt::Display> fmt::Debug for Vector<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Row-major dense matrix. A matrix acts on column coordinate vectors, so
/// column `j` of an endomorphism holds the image of the `j`-th basis vector.
#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn diagonal(entries: Vec<F>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in entries.into_iter().enumerate() {
            m[(i, i)] = x;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::Dimension("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vector<F>]) -> Result<Self, LinalgError> {
        let rows = cols.first().map_or(0, |c| c.len());
        if cols.iter().any(|c| c.len() != rows) {
            return Err(LinalgError::Dimension("columns of different length".into()));
        }
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in 0..rows {
                m[(i, j)] = c[i].clone();
            }
        }
        Ok(m)
    }

    /// `u v^T`.
    pub fn outer(u: &Vector<F>, v: &Vector<F>) -> Self {
        let mut m = Self::zeros(u.len(), v.len());
        for i in 0..u.len() {
            for j in 0..v.len() {
                m[(i, j)] = u[i].clone() * v[j].clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> Vector<F> {
        Vector(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn col(&self, j: usize) -> Vector<F> {
        Vector((0..self.rows).map(|i| self[(i, j)].clone()).collect())
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).into_inner()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &Vector<F>) -> Vector<F> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        Vector((0..self.rows).map(|i| self.row(i).dot(v)).collect())
    }

    /// `v^T M`, i.e. a covector pulled back through `M`.
    pub fn vec_mul(&self, v: &Vector<F>) -> Vector<F> {
        self.transpose().mul_vec(v)
    }

    /// Bilinear form `u^T M v`.
    pub fn form(&self, u: &Vector<F>, v: &Vector<F>) -> F {
        u.dot(&self.mul_vec(v))
    }

    pub fn scale(&self, k: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| k.clone() * x.clone()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Entries that differ from `other`, as `(row, col)` pairs.
    pub fn differences(&self, other: &Self) -> Vec<(usize, usize)> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = Vec::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                if (self[(i, j)].clone() - other[(i, j)].clone()) != F::zero() {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn row_reduce(&self) -> (Self, usize, F) {
        // returns (echelon form, rank, product of pivots with row-swap sign)
        let mut m = self.clone();
        let mut rank = 0;
        let mut det = F::one();
        for col in 0..m.cols {
            let Some(p) = (rank..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                det = F::zero();
                continue;
            };
            if p != rank {
                m.swap_rows(p, rank);
                det = -det;
            }
            let pivot = m[(rank, col)].clone();
            det = det * pivot.clone();
            let inv = pivot.inv().expect("nonzero pivot is invertible");
            for r in rank + 1..m.rows {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone() * inv.clone();
                for c in col..m.cols {
                    let v = m[(r, c)].clone() - factor.clone() * m[(rank, c)].clone();
                    m[(r, c)] = v;
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        if rank < m.rows.min(m.cols) || m.rows != m.cols {
            det = F::zero();
        }
        (m, rank, det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().1
    }

    pub fn determinant(&self) -> Result<F, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::Dimension("determinant of a non-square matrix".into()));
        }
        Ok(self.row_reduce().2)
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Self, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let p = (col..n).find(|&r| !m[(r, col)].is_zero()).ok_or(LinalgError::Singular)?;
            if p != col {
                m.swap_rows(p, col);
                inv.swap_rows(p, col);
            }
            let pivot_inv = m[(col, col)].inv().ok_or(LinalgError::Singular)?;
            for c in 0..n {
                m[(col, c)] = m[(col, c)].clone() * pivot_inv.clone();
                inv[(col, c)] = inv[(col, c)].clone() * pivot_inv.clone();
            }
            for r in 0..n {
                if r == col || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for c in 0..n {
                    let a = m[(r, c)].clone() - factor.clone() * m[(col, c)].clone();
                    m[(r, c)] = a;
                    let b = inv[(r, c)].clone() - factor.clone() * inv[(col, c)].clone();
                    inv[(r, c)] = b;
                }
            }
        }
        Ok(inv)
    }

    /// Solves `self * x = b` for square invertible `self`.
    pub fn solve(&self, b: &Vector<F>) -> Result<Vector<F>, LinalgError> {
        Ok(self.inverse()?.mul_vec(b))
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field> Mul for &Matrix<F> {
    type Output = Matrix<F>;
    fn mul(self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Matrix::<F>::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out[(i, j)].clone() + a.clone() * rhs[(k, j)].clone();
                    out[(i, j)] = v;
                }
            }
        }
        out
    }
}

impl<F: Field> Add for &Matrix<F> {
    type Output = Matrix<F>;
    fn add(self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }
}

impl<F: Field> Sub for &Matrix<F> {
    type Output = Matrix<F>;
    fn sub(self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }
}

impl<F: Field> Neg for &Matrix<F> {
    type Output = Matrix<F>;
    fn neg(self) -> Matrix<F> {
        self.scale(&-F::one())
    }
}

impl<F: fmt::Display> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            f.write_str("  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Signature of a symmetric form: counts of positive and negative pivots.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Signature {
    Known { positive: usize, negative: usize },
    /// Some pivot's sign depends on free parameters.
    Indeterminate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetricForm {
    pub rank: usize,
    pub signature: Signature,
}

/// Rank and signature of a symmetric matrix by symmetric (congruence)
/// elimination. A zero diagonal with a nonzero off-diagonal entry `(i, j)` is
/// handled by the congruence `e_i -> e_i + e_j`, which puts `2 m_ij` on the
/// diagonal.
pub fn sym_rank_and_signature<F: Field>(m: &Matrix<F>) -> Result<SymmetricForm, LinalgError> {
    if !m.is_symmetric() {
        return Err(LinalgError::Dimension("matrix is not symmetric".into()));
    }
    let mut a = m.clone();
    let mut live: Vec<usize> = (0..a.rows).collect();
    let mut rank = 0;
    let (mut pos, mut neg) = (0, 0);
    let mut determinate = true;
    loop {
        let pivot = live.iter().copied().find(|&i| !a[(i, i)].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                let pair = live.iter().copied().find_map(|i| {
                    live.iter().copied().find(|&j| j != i && !a[(i, j)].is_zero()).map(|j| (i, j))
                });
                let Some((i, j)) = pair else { break };
                // row/col i += row/col j
                for &k in &live {
                    let v = a[(i, k)].clone() + a[(j, k)].clone();
                    a[(i, k)] = v;
                }
                for &k in &live {
                    let v = a[(k, i)].clone() + a[(k, j)].clone();
                    a[(k, i)] = v;
                }
                i
            }
        };
        let d = a[(p, p)].clone();
        match d.sign() {
            Some(Ordering::Greater) => pos += 1,
            Some(Ordering::Less) => neg += 1,
            _ => determinate = false,
        }
        rank += 1;
        let d_inv = d.inv().expect("pivot is nonzero");
        live.retain(|&i| i != p);
        for &r in &live {
            if a[(r, p)].is_zero() {
                continue;
            }
            let factor = a[(r, p)].clone() * d_inv.clone();
            for &c in &live {
                let v = a[(r, c)].clone() - factor.clone() * a[(p, c)].clone();
                a[(r, c)] = v;
            }
        }
    }
    let signature = if determinate {
        Signature::Known { positive: pos, negative: neg }
    } else {
        Signature::Indeterminate
    };
    Ok(SymmetricForm { rank, signature })
}

/// Coordinate array `T[i][j][k]` over an `n`-dimensional frame.
#[derive(Clone, PartialEq)]
pub struct Tensor3<F> {
    n: usize,
    data: Vec<F>,
}

impl<F: Field> Tensor3<F> {
    pub fn zeros(n: usize) -> Self {
        Tensor3 { n, data: vec![F::zero(); n * n * n] }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    data.push(f(i, j, k));
                }
            }
        }
        Tensor3 { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Nonzero components in index order.
    pub fn nonzero(&self) -> Vec<([usize; 3], &F)> {
        let n = self.n;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(idx, x)| ([idx / (n * n), (idx / n) % n, idx % n], x))
            .collect()
    }

    /// Contraction with three vectors.
    pub fn eval(&self, x: &Vector<F>, y: &Vector<F>, z: &Vector<F>) -> F {
        let mut acc = F::zero();
        for ([i, j, k], t) in self.nonzero() {
            acc = acc + t.clone() * x[i].clone() * y[j].clone() * z[k].clone();
        }
        acc
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Tensor3<G> {
        Tensor3 { n: self.n, data: self.data.iter().map(f).collect() }
    }
}

impl<F> Index<(usize, usize, usize)> for Tensor3<F> {
    type Output = F;
    fn index(&self, (i, j, k): (usize, usize, usize)) -> &F {
        &self.data[(i * self.n + j) * self.n + k]
    }
}

impl<F> IndexMut<(usize, usize, usize)> for Tensor3<F> {
    fn index_mut(&mut self, (i, j, k): (usize, usize, usize)) -> &mut F {
        &mut self.data[(i * self.n + j) * self.n + k]
    }
}

impl<F: fmt::Display> fmt::Debug for Tensor3<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor3(n={}, [", self.n)?;
        for (i, x) in self.data.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("])")
    }
}

/// Coordinate array `T[i][j][k][l]` over an `n`-dimensional frame.
#[derive(Clone, PartialEq)]
pub struct Tensor4<F> {
    n: usize,
    data: Vec<F>,
}

impl<F: Field> Tensor4<F> {
    pub fn zeros(n: usize) -> Self {
        Tensor4 { n, data: vec![F::zero(); n * n * n * n] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn nonzero(&self) -> Vec<([usize; 4], &F)> {
        let n = self.n;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(idx, x)| ([idx / (n * n * n), (idx / (n * n)) % n, (idx / n) % n, idx % n], x))
            .collect()
    }
}

impl<F> Index<(usize, usize, usize, usize)> for Tensor4<F> {
    type Output = F;
    fn index(&self, (i, j, k, l): (usize, usize, usize, usize)) -> &F {
        &self.data[((i * self.n + j) * self.n + k) * self.n + l]
    }
}

impl<F> IndexMut<(usize, usize, usize, usize)> for Tensor4<F> {
    fn index_mut(&mut self, (i, j, k, l): (usize, usize, usize, usize)) -> &mut F {
        &mut self.data[((i * self.n + j) * self.n + k) * self.n + l]
    }
}

impl<F: fmt::Display> fmt::Debug for Tensor4<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor4(n={}, {} entries)", self.n, self.data.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Fraction, SymbolTable};
    use num_rational::BigRational;
    use std::sync::Arc;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_int(n)
    }

    fn sym() -> Arc<SymbolTable> {
        SymbolTable::new(["a", "s"]).unwrap().with_rule("s", "3").unwrap().into_shared()
    }

    fn fm(t: &Arc<SymbolTable>, rows: &[&[&str]]) -> Matrix<Fraction> {
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|e| Fraction::parse(t, e).unwrap()).collect()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn involution_and_identity_inverses() {
        let c = Matrix::diagonal(vec![q(1), q(1), q(1), q(-1), q(-1)]);
        assert_eq!(c.inverse().unwrap(), c);
        let i = Matrix::<Q>::identity(4);
        assert_eq!(i.inverse().unwrap(), i);
    }

    #[test]
    fn surd_two_by_two_inverse() {
        let t = sym();
        let m = fm(&t, &[&["1", "s"], &["s", "1"]]);
        // adjugate / (1 - 3), worked by hand
        let expected = fm(&t, &[&["-1/2", "s/2"], &["s/2", "-1/2"]]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv, expected);
        assert_eq!(&m * &inv, Matrix::identity(2));
    }

    #[test]
    fn singular_inputs() {
        let m = Matrix::from_rows(vec![vec![q(1), q(2)], vec![q(2), q(4)]]).unwrap();
        assert_eq!(m.inverse(), Err(LinalgError::Singular));
        assert_eq!(m.rank(), 1);
        assert_eq!(m.determinant().unwrap(), q(0));
        let t = sym();
        let s = fm(&t, &[&["s", "3"], &["1", "s"]]);
        assert_eq!(s.inverse(), Err(LinalgError::Singular));
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let m = Matrix::from_rows(vec![
            vec![q(2), q(0), q(1)],
            vec![q(1), q(3), q(2)],
            vec![q(1), q(1), q(1)],
        ])
        .unwrap();
        // 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(m.determinant().unwrap(), q(0));
        let p = Matrix::from_rows(vec![vec![q(0), q(1)], vec![q(1), q(0)]]).unwrap();
        assert_eq!(p.determinant().unwrap(), q(-1));
    }

    #[test]
    fn section_signatures() {
        let hybrid = Matrix::diagonal(vec![q(1), q(-1)]);
        assert_eq!(
            sym_rank_and_signature(&hybrid).unwrap(),
            SymmetricForm { rank: 2, signature: Signature::Known { positive: 1, negative: 1 } }
        );
        let zero = Matrix::<Q>::zeros(2, 2);
        assert_eq!(
            sym_rank_and_signature(&zero).unwrap(),
            SymmetricForm { rank: 0, signature: Signature::Known { positive: 0, negative: 0 } }
        );
        let pure = Matrix::diagonal(vec![q(1), q(1)]);
        assert_eq!(
            sym_rank_and_signature(&pure).unwrap().signature,
            Signature::Known { positive: 2, negative: 0 }
        );
        // hyperbolic plane needs the off-diagonal congruence step
        let hyp = Matrix::from_rows(vec![vec![q(0), q(1)], vec![q(1), q(0)]]).unwrap();
        assert_eq!(
            sym_rank_and_signature(&hyp).unwrap().signature,
            Signature::Known { positive: 1, negative: 1 }
        );
    }

    #[test]
    fn signature_with_parameters() {
        let t = sym();
        let m = fm(&t, &[&["a", "0"], &["0", "1"]]);
        assert_eq!(sym_rank_and_signature(&m).unwrap().signature, Signature::Indeterminate);
        let m = fm(&t, &[&["s - 2", "0"], &["0", "s"]]);
        assert_eq!(
            sym_rank_and_signature(&m).unwrap().signature,
            Signature::Known { positive: 1, negative: 1 }
        );
        let asym = fm(&t, &[&["1", "a"], &["0", "1"]]);
        assert!(sym_rank_and_signature(&asym).is_err());
    }
}
