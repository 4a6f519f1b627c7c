//! Dense exact linear algebra over a field.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::Field;

#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Result of [`Matrix::solve`]: the solution and the pivots used, which
/// certify the specialisations where the solution stays valid.
#[derive(Clone, Debug, PartialEq)]
pub struct Solution<F> {
    pub x: Vec<F>,
    pub pivots: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> F) -> Self {
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

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::ArityMismatch { expected: self.cols, found: rhs.rows });
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = F::zero();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if !a.is_zero() {
                    acc.add_assign(&a.mul(rhs.get(k, j)));
                }
            }
            acc
        }))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("dimension mismatch")
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j).add(rhs.get(i, j)))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j).sub(rhs.get(i, j)))
    }

    pub fn scale(&self, k: &F) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j).mul(k))
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc.add_assign(&a.mul(b));
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form and pivot columns, with the pivot values
    /// met before normalisation.
    fn rref(&self) -> (Self, Vec<usize>, Vec<F>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_vals = Vec::new();
        let mut r = 0;
        for col in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let pv = m.get(r, col).clone();
            let inv = pv.inv().expect("nonzero pivot");
            for j in col..m.cols {
                let v = m.get(r, j).mul(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, col).clone();
                if f.is_zero() {
                    continue;
                }
                for j in col..m.cols {
                    let v = m.get(i, j).sub(&f.mul(m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(col);
            pivot_vals.push(pv);
            r += 1;
        }
        (m, pivots, pivot_vals)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Solves `A x = b`, distinguishing inconsistent from underdetermined systems.
    pub fn solve(&self, b: &[F]) -> Result<Solution<F>> {
        if b.len() != self.rows {
            return Err(Error::ArityMismatch { expected: self.rows, found: b.len() });
        }
        let aug = Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (red, pivots, pivot_vals) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(Error::NoSolution);
        }
        if pivots.len() < self.cols {
            return Err(Error::NonUnique);
        }
        let x = (0..self.cols).map(|i| red.get(i, self.cols).clone()).collect();
        Ok(Solution { x, pivots: pivot_vals })
    }

    /// Basis of the right kernel, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let (red, pivots, _) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![F::zero(); self.cols];
                v[fc] = F::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = red.get(r, fc).neg();
                }
                v
            })
            .collect()
    }

    /// Determinant by elimination; square matrices only.
    pub fn det(&self) -> F {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = self.rows;
        let mut det = F::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&i| !m.get(i, col).is_zero()) else {
                return F::zero();
            };
            if p != col {
                for j in 0..n {
                    m.data.swap(p * n + j, col * n + j);
                }
                det = det.neg();
            }
            let pv = m.get(col, col).clone();
            det = det.mul(&pv);
            let inv = pv.inv().expect("nonzero pivot");
            for i in col + 1..n {
                let f = m.get(i, col).mul(&inv);
                if f.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = m.get(i, j).sub(&f.mul(m.get(col, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    /// Leading `k x k` block.
    pub fn leading_block(&self, k: usize) -> Self {
        Self::from_fn(k, k, |i, j| self.get(i, j).clone())
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> =
                self.data[i * self.cols..(i + 1) * self.cols].iter().map(|x| format!("{x:?}")).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{RatFun, Rational, Ring};

    type Q = Rational;

    fn q(v: i64) -> Q {
        Q::from(v)
    }

    #[test]
    fn solve_examples() {
        let id = Matrix::<Q>::identity(3);
        let b = vec![q(1), q(-2), q(5)];
        assert_eq!(id.solve(&b).unwrap().x, b);

        type R = RatFun<Rational>;
        let c = R::param(0, 1);
        let a = Matrix::from_rows(vec![vec![c.clone(), R::zero()], vec![R::zero(), R::one()]]);
        let sol = a.solve(&[c.clone(), R::one()]).unwrap();
        assert_eq!(sol.x, vec![R::one(), R::one()]);
        assert_eq!(sol.pivots[0], c);

        let s = Matrix::from_rows(vec![vec![q(1), q(1)], vec![q(1), q(1)]]);
        assert_eq!(s.solve(&[q(1), q(0)]).unwrap_err(), Error::NoSolution);
        assert_eq!(s.solve(&[q(1), q(1)]).unwrap_err(), Error::NonUnique);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::<Q>::zeros(2, 2).kernel_basis().len(), 2);
        assert!(Matrix::<Q>::identity(3).kernel_basis().is_empty());
        let k = Matrix::from_rows(vec![vec![q(1), q(1)]]).kernel_basis();
        assert_eq!(k, vec![vec![q(-1), q(1)]]);
    }

    #[test]
    fn det_matches_rank() {
        let m = Matrix::from_rows(vec![vec![q(2), q(1)], vec![q(4), q(3)]]);
        assert_eq!(m.det(), q(2));
        assert_eq!(m.rank(), 2);
    }
}
