//! Dense matrices over [`Scalar`] and small helpers for rational matrices.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use serde::Serialize;

use super::scalar::{Rational, Scalar, Sign};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Inertia of a hermitian matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Signature {
    pub fn is_positive_definite(&self) -> bool {
        self.negative == 0 && self.zero == 0
    }

    pub fn is_definite(&self) -> bool {
        self.zero == 0 && (self.negative == 0 || self.positive == 0)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(+{}, -{}, 0:{})", self.positive, self.negative, self.zero)
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_rational(rows: &[Vec<Rational>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().cloned().map(Scalar::from).collect())
                .collect(),
        )
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut f = f;
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
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

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn conj(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(Scalar::conj).collect(),
        }
    }

    pub fn adjoint(&self) -> Matrix {
        self.transpose().conj()
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.adjoint()
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("nonzero pivot");
            for j in c..m.cols {
                m[(r, j)] = &m[(r, j)] * &inv;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if !m[(r, j)].is_zero() {
                        let d = &f * &m[(r, j)];
                        m[(i, j)] -= &d;
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

    /// Basis of the right null space, as column vectors.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -&r[(row, f)];
                }
                v
            })
            .collect()
    }

    /// Basis of the column space, as column vectors.
    pub fn image(&self) -> Vec<Vec<Scalar>> {
        let (_, pivots) = self.rref();
        pivots.iter().map(|&c| self.column(c)).collect()
    }

    pub fn from_columns(rows: usize, cols: &[Vec<Scalar>]) -> Matrix {
        Matrix::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn determinant(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::Dimension {
                expected: self.rows,
                got: self.cols,
            });
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(Scalar::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det *= &pivot;
            let inv = pivot.inv()?;
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] * &inv;
                for j in c..n {
                    let d = &f * &m[(c, j)];
                    m[(i, j)] -= &d;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Dimension {
                expected: self.rows,
                got: self.cols,
            });
        }
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::DivisionByZero);
        }
        Ok(Matrix::from_fn(n, n, |i, j| r[(i, j + n)].clone()))
    }

    /// Solves `self * x = b`. Returns a particular solution and a basis of
    /// the homogeneous solutions, or `None` when inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<(Vec<Scalar>, Vec<Vec<Scalar>>)> {
        assert_eq!(b.len(), self.rows);
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r[(row, self.cols)].clone();
        }
        Some((x, self.kernel()))
    }

    /// Sum of the principal minors of size `k`, i.e. the `k`-th elementary
    /// symmetric function of the eigenvalues.
    pub fn principal_minor_sum(&self, k: usize) -> Scalar {
        let n = self.rows;
        let mut total = Scalar::zero();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let idx: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let sub = Matrix::from_fn(k, k, |a, b| self[(idx[a], idx[b])].clone());
            total += &sub.determinant().expect("square");
        }
        total
    }

    /// Inertia of a hermitian matrix by congruence diagonalization.
    pub fn signature(&self) -> Result<Signature> {
        if !self.is_hermitian() {
            return Err(Error::NotHermitian);
        }
        let mut m = self.clone();
        let mut active: Vec<usize> = (0..m.rows).collect();
        let mut sig = Signature {
            positive: 0,
            negative: 0,
            zero: 0,
        };
        while !active.is_empty() {
            let pivot = active.iter().position(|&i| !m[(i, i)].is_zero());
            let p = match pivot {
                Some(pos) => active.remove(pos),
                None => {
                    // Every diagonal entry vanishes; mix in an off-diagonal
                    // partner so that a nonzero diagonal entry appears.
                    let pair = active.iter().enumerate().find_map(|(a, &i)| {
                        active[a + 1..]
                            .iter()
                            .find(|&&j| !m[(i, j)].is_zero())
                            .map(|&j| (i, j))
                    });
                    let Some((i, j)) = pair else {
                        sig.zero += active.len();
                        break;
                    };
                    let c = if m[(i, j)].re().is_zero() {
                        Scalar::i()
                    } else {
                        Scalar::one()
                    };
                    m.add_congruence(i, j, &c);
                    continue;
                }
            };
            let d = m[(p, p)].clone();
            match d.sign()? {
                Sign::Positive => sig.positive += 1,
                Sign::Negative => sig.negative += 1,
                Sign::Zero => unreachable!("pivot is nonzero"),
            }
            let dinv = d.inv()?;
            // Schur complement: m[j][l] -= m[j][p] m[p][l] / d
            let col: Vec<Scalar> = active.iter().map(|&j| &m[(j, p)] * &dinv).collect();
            for (a, &j) in active.iter().enumerate() {
                if col[a].is_zero() {
                    continue;
                }
                for &l in &active {
                    let upd = &col[a] * &m[(p, l)];
                    m[(j, l)] -= &upd;
                }
            }
            for &j in &active {
                m[(j, p)] = Scalar::zero();
                m[(p, j)] = Scalar::zero();
            }
        }
        Ok(sig)
    }

    /// Replaces basis vector `e_i` by `e_i + c e_j` in the sesquilinear form.
    fn add_congruence(&mut self, i: usize, j: usize, c: &Scalar) {
        let cc = c.conj();
        for r in 0..self.rows {
            let upd = c * &self[(r, j)];
            self[(r, i)] += &upd;
        }
        for col in 0..self.cols {
            let upd = &cc * &self[(j, col)];
            self[(i, col)] += &upd;
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{}\n{self}", self.rows, self.cols)
    }
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

/// Product of rational matrices.
pub fn rat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut acc = Rational::default();
                    for (k, row) in b.iter().enumerate() {
                        acc += &a[i][k] * &row[j];
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn rat_transpose(a: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let m = a.first().map_or(0, Vec::len);
    (0..m).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn rat_identity(n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { super::scalar::int(1) } else { Rational::default() })
                .collect()
        })
        .collect()
}

/// Inverse of an invertible rational matrix.
pub fn rat_inverse(a: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    let inv = Matrix::from_rational(a).inverse()?;
    Ok(inv
        .to_rows()
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|s| s.as_rational().cloned().expect("rational input"))
                .collect()
        })
        .collect())
}

pub fn rat_mul_vec(a: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

pub fn rat_dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
