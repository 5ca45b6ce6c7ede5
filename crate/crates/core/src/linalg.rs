//! Dense exact vectors and matrices over `Q`.
//!
//! Maps act on column vectors: `(A * B).apply(v) == A.apply(&B.apply(v))`.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};

use malachite_base::num::arithmetic::traits::Reciprocal;
use malachite_base::num::basic::traits::{One, Zero};

use crate::rational::{fmt_q, Q};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Vector(Vec<Q>);

impl Vector {
    pub fn new(coords: Vec<Q>) -> Self {
        Vector(coords)
    }

    pub fn zeros(n: usize) -> Self {
        Vector(vec![Q::ZERO; n])
    }

    /// The `i`-th standard basis vector of length `n`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Q::ONE;
        v
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Vector(values.iter().map(|&x| Q::from(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Q] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Q> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Q> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| *x == Q::ZERO)
    }

    pub fn dot(&self, other: &Vector) -> Q {
        assert_eq!(self.len(), other.len(), "dot: length mismatch");
        let mut acc = Q::ZERO;
        for (a, b) in self.0.iter().zip(&other.0) {
            if *a != Q::ZERO && *b != Q::ZERO {
                acc += a * b;
            }
        }
        acc
    }

    pub fn scale(&self, s: &Q) -> Vector {
        if *s == Q::ZERO {
            return Self::zeros(self.len());
        }
        Vector(self.0.iter().map(|x| x * s).collect())
    }

    /// `self + s * other`
    pub fn add_scaled(&self, s: &Q, other: &Vector) -> Vector {
        assert_eq!(self.len(), other.len(), "add_scaled: length mismatch");
        let mut out = self.clone();
        if *s != Q::ZERO {
            for (o, b) in out.0.iter_mut().zip(&other.0) {
                if *b != Q::ZERO {
                    *o += s * b;
                }
            }
        }
        out
    }

    pub fn concat(parts: &[&Vector]) -> Vector {
        Vector(parts.iter().flat_map(|p| p.0.iter().cloned()).collect())
    }

    pub fn slice(&self, start: usize, end: usize) -> Vector {
        Vector(self.0[start..end].to_vec())
    }
}

impl From<Vec<Q>> for Vector {
    fn from(v: Vec<Q>) -> Self {
        Vector(v)
    }
}

impl Index<usize> for Vector {
    type Output = Q;
    fn index(&self, i: usize) -> &Q {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut Q {
        &mut self.0[i]
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.len(), rhs.len(), "add: length mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.len(), rhs.len(), "sub: length mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", fmt_q(x))?;
        }
        write!(f, "]")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Q::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Q::ONE;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Q::from(x)).collect())
                .collect(),
        )
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for i in 0..rows {
                m.data[i * m.cols + j] = col[i].clone();
            }
        }
        m
    }

    /// Matrix of the linear map `f` on `Q^n` (columns are images of basis vectors).
    pub fn from_linear_map(n: usize, f: impl Fn(&Vector) -> Vector) -> Self {
        let cols: Vec<Vector> = (0..n).map(|i| f(&Vector::unit(n, i))).collect();
        let rows = cols.first().map_or(0, Vector::len);
        Self::from_columns(rows, &cols)
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

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Q) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.len(), "apply: dimension mismatch");
        let mut out = Vector::zeros(self.rows);
        for (j, x) in v.iter().enumerate() {
            if *x == Q::ZERO {
                continue;
            }
            for i in 0..self.rows {
                let a = &self.data[i * self.cols + j];
                if *a != Q::ZERO {
                    out.0[i] += a * x;
                }
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "mul: dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if *a == Q::ZERO {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.data[k * rhs.cols + j];
                    if *b != Q::ZERO {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn scale(&self, s: &Q) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        *x == Q::ONE
                    } else {
                        *x == Q::ZERO
                    }
                })
            })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| *x == Q::ZERO)
    }

    /// Submatrix with rows `r0..r1` and columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Matrix {
        let mut out = Matrix::zeros(r1 - r0, c1 - c0);
        for i in r0..r1 {
            for j in c0..c1 {
                out.set(i - r0, j - c0, self.get(i, j).clone());
            }
        }
        out
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| *m.get(i, c) != Q::ZERO) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).clone().reciprocal();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || *m.get(i, c) == Q::ZERO {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let pivot_entry = m.get(r, j);
                    if *pivot_entry != Q::ZERO {
                        let v = m.get(i, j) - &factor * pivot_entry;
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the kernel, one vector per free column; the basis vector for
    /// free column `f` has a 1 in position `f` and 0 in every other free
    /// position. Returns the basis and the free columns.
    pub fn nullspace(&self) -> (Vec<Vector>, Vec<usize>) {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let basis = free
            .iter()
            .map(|&f| {
                let mut v = Vector::zeros(self.cols);
                v[f] = Q::ONE;
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f);
                }
                v
            })
            .collect();
        (basis, free)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Q::ONE);
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.block(0, n, n, 2 * n))
    }

    /// Unique solution of `self * x = b`, if one exists.
    pub fn solve(&self, b: &Vector) -> Option<Vector> {
        assert_eq!(self.rows, b.len(), "solve: dimension mismatch");
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) || pivots.len() < self.cols {
            return None;
        }
        Some(Vector((0..self.cols).map(|i| r.get(i, self.cols).clone()).collect()))
    }

    pub fn det(&self) -> Q {
        assert!(self.is_square(), "det of non-square matrix");
        let mut m = self.clone();
        let n = self.rows;
        let mut det = Q::ONE;
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| *m.get(i, c) != Q::ZERO) else {
                return Q::ZERO;
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det *= &pivot;
            let inv = pivot.reciprocal();
            for i in c + 1..n {
                if *m.get(i, c) == Q::ZERO {
                    continue;
                }
                let factor = m.get(i, c) * &inv;
                for j in c..n {
                    let v = m.get(i, j) - &factor * m.get(c, j);
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    pub fn trace(&self) -> Q {
        let mut t = Q::ZERO;
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    /// Rows as canonical rational strings (serialization form).
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| fmt_q(self.get(i, j))).collect())
            .collect()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            writeln!(f, "{}", self.row(i))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qr};

    #[test]
    fn inverse_and_det() {
        let m = Matrix::from_int_rows(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert_eq!(m.det(), q(18));
        let singular = Matrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert!(singular.inverse().is_none());
        assert_eq!(singular.det(), q(0));
    }

    #[test]
    fn nullspace_has_unit_free_coordinates() {
        let m = Matrix::from_int_rows(&[&[1, 1, 0, 0], &[0, 0, 1, -1]]);
        let (basis, free) = m.nullspace();
        assert_eq!(free, vec![1, 3]);
        assert_eq!(basis.len(), 2);
        for (v, &f) in basis.iter().zip(&free) {
            assert!(m.apply(v).is_zero());
            assert_eq!(v[f], q(1));
        }
    }

    #[test]
    fn solve_unique() {
        let m = Matrix::from_int_rows(&[&[1, 2], &[3, 4]]);
        let x = m.solve(&Vector::from_ints(&[5, 6])).unwrap();
        assert_eq!(x, Vector::new(vec![q(-4), qr(9, 2)]));
        let under = Matrix::from_int_rows(&[&[1, 1]]);
        assert!(under.solve(&Vector::from_ints(&[1])).is_none());
    }

    #[test]
    fn linear_map_columns() {
        let m = Matrix::from_linear_map(2, |v| Vector::new(vec![v[1].clone(), v[0].clone() * q(3)]));
        assert_eq!(m, Matrix::from_int_rows(&[&[0, 1], &[3, 0]]));
        assert_eq!(m.apply(&Vector::from_ints(&[1, 2])), Vector::from_ints(&[2, 3]));
    }
}
