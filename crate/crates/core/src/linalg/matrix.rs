//! Dense matrices over `F_p` with exact Gaussian elimination.
//!
//! Entries are stored row-major as residues in `[0, p)`.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use rand::Rng;

use super::field::{check_modulus, mod_add, mod_inv, mod_mul, mod_sub, reduce_signed, FieldElem};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    p: u64,
    data: Vec<u64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, p: u64) -> Self {
        Matrix {
            rows,
            cols,
            p,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize, p: u64) -> Self {
        let mut m = Matrix::zeros(n, n, p);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, p: u64, data: Vec<u64>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows * cols");
        let data = data.into_iter().map(|x| x % p).collect();
        Matrix { rows, cols, p, data }
    }

    /// Builds a matrix from signed integer rows, reducing mod `p`.
    pub fn from_rows_i64(p: u64, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&x| reduce_signed(x, p)));
        }
        Matrix {
            rows: r,
            cols: c,
            p,
            data,
        }
    }

    /// Builds a matrix from field elements; all of them must share one prime modulus.
    pub fn from_elems(rows: usize, cols: usize, entries: &[FieldElem]) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let p = match entries.first() {
            Some(e) => e.modulus(),
            None => {
                return Err(Error::ShapeMismatch(
                    "cannot infer the modulus of an empty matrix".into(),
                ))
            }
        };
        check_modulus(p)?;
        if let Some(bad) = entries.iter().find(|e| e.modulus() != p) {
            return Err(Error::ModulusMismatch(p, bad.modulus()));
        }
        Ok(Matrix {
            rows,
            cols,
            p,
            data: entries.iter().map(|e| e.residue()).collect(),
        })
    }

    /// Stacks equal-length vectors as rows.
    pub fn from_row_vectors(cols: usize, p: u64, vectors: &[Vec<u64>]) -> Self {
        let mut data = Vec::with_capacity(vectors.len() * cols);
        for v in vectors {
            assert_eq!(v.len(), cols);
            data.extend_from_slice(v);
        }
        Matrix {
            rows: vectors.len(),
            cols,
            p,
            data,
        }
    }

    pub fn random<R: Rng>(rows: usize, cols: usize, p: u64, rng: &mut R) -> Self {
        let data = (0..rows * cols).map(|_| rng.gen_range(0..p)).collect();
        Matrix { rows, cols, p, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn data(&self) -> &[u64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn elem(&self, r: usize, c: usize) -> FieldElem {
        FieldElem::from_residue(self.get(r, c), self.p)
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<u64> {
        self.row(r).to_vec()
    }

    pub fn col_vec(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows, self.p);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn scale(&self, s: u64) -> Matrix {
        let s = s % self.p;
        Matrix {
            rows: self.rows,
            cols: self.cols,
            p: self.p,
            data: self.data.iter().map(|&x| mod_mul(x, s, self.p)).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(self.p - 1)
    }

    /// `self += s * other`, entrywise.
    pub fn add_scaled(&mut self, other: &Matrix, s: u64) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let p = self.p;
        let s = s % p;
        if s == 0 {
            return;
        }
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = mod_add(*a, mod_mul(b, s, p), p);
        }
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p, other.p));
        }
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = self.p;
        let n = other.cols;
        let mut out = vec![0u64; self.rows * n];
        for i in 0..self.rows {
            let out_row = &mut out[i * n..(i + 1) * n];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * n..(k + 1) * n];
                for (o, &b) in out_row.iter_mut().zip(brow) {
                    if b != 0 {
                        *o = (*o + a * b) % p;
                    }
                }
            }
        }
        Ok(Matrix {
            rows: self.rows,
            cols: n,
            p,
            data: out,
        })
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.rows);
        let p = self.p;
        let mut out = vec![0u64; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (o, &b) in out.iter_mut().zip(self.row(k)) {
                if b != 0 {
                    *o = (*o + a * b) % p;
                }
            }
        }
        out
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), cols.len(), self.p);
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                m.data[i * cols.len() + j] = self.get(r, c);
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Matrix {
            rows: rows.len(),
            cols: self.cols,
            p: self.p,
            data,
        }
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        assert_eq!(self.p, other.p);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            p: self.p,
            data,
        }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.p, other.p);
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Matrix {
            rows: self.rows,
            cols,
            p: self.p,
            data,
        }
    }

    /// Block matrix `[[a, b], [c, d]]`.
    pub fn block(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Matrix {
        a.hstack(b).vstack(&c.hstack(d))
    }

    /// Writes `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.data[(r0 + r) * self.cols + c0 + c] = block.get(r, c);
            }
        }
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let p = self.p;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for k in 0..cols {
                    self.data.swap(pr * cols + k, r * cols + k);
                }
            }
            let inv = mod_inv(self.data[r * cols + c], p);
            for k in c..cols {
                let x = &mut self.data[r * cols + k];
                *x = mod_mul(*x, inv, p);
            }
            let (before, rest) = self.data.split_at_mut(r * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            let eliminate = |row: &mut [u64]| {
                let f = row[c];
                if f == 0 {
                    return;
                }
                for k in c..cols {
                    if pivot_row[k] != 0 {
                        row[k] = mod_sub(row[k], mod_mul(f, pivot_row[k], p), p);
                    }
                }
            };
            before.chunks_mut(cols).for_each(eliminate);
            after.chunks_mut(cols).for_each(eliminate);
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.rows <= self.cols {
            self.clone().rref().len()
        } else {
            self.transpose().rref().len()
        }
    }

    /// Canonical basis of the row space (the nonzero rows of the RREF).
    pub fn row_space_basis(&self) -> Matrix {
        let mut m = self.clone();
        let k = m.rref().len();
        m.data.truncate(k * m.cols);
        m.rows = k;
        m
    }

    /// Columns form a basis of `{x : self * x = 0}`.
    pub fn kernel_basis(&self) -> Matrix {
        let mut m = self.clone();
        let pivots = m.rref();
        let p = self.p;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(self.cols, free.len(), p);
        for (j, &f) in free.iter().enumerate() {
            k.data[f * free.len() + j] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                let v = m.data[i * self.cols + f];
                k.data[pc * free.len() + j] = mod_sub(0, v, p);
            }
        }
        k
    }

    /// Rows form a basis of `{x : x * self = 0}`.
    pub fn left_kernel(&self) -> Matrix {
        self.transpose().kernel_basis().transpose()
    }

    /// Returns `X` with `a * X = b`.
    pub fn solve_right(a: &Matrix, b: &Matrix) -> Result<Matrix> {
        if a.p != b.p {
            return Err(Error::ModulusMismatch(a.p, b.p));
        }
        if a.rows != b.rows {
            return Err(Error::ShapeMismatch(format!(
                "solve with {} rows against {} rows",
                a.rows, b.rows
            )));
        }
        let mut aug = a.hstack(b);
        let pivots = aug.rref();
        if pivots.iter().any(|&c| c >= a.cols) {
            return Err(Error::NoSolution);
        }
        let mut x = Matrix::zeros(a.cols, b.cols, a.p);
        for (i, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.data[pc * b.cols + j] = aug.get(i, a.cols + j);
            }
        }
        Ok(x)
    }

    /// Returns `X` with `X * a = b`.
    pub fn solve_left(a: &Matrix, b: &Matrix) -> Result<Matrix> {
        Ok(Matrix::solve_right(&a.transpose(), &b.transpose())?.transpose())
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let x = Matrix::solve_right(self, &Matrix::identity(self.rows, self.p)).ok()?;
        if self.rank() == self.rows {
            Some(x)
        } else {
            None
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn pow(&self, e: usize) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows, self.p);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

/// Extends the rows of `sub` (linearly independent, in RREF or not) by rows of
/// `ambient` to a basis of `rowspace(sub) + rowspace(ambient)`; returns only
/// the added rows. The choice is deterministic.
pub fn complement_rows(sub: &Matrix, ambient: &Matrix) -> Matrix {
    let p = ambient.p;
    let mut current = sub.row_space_basis();
    let mut chosen = Matrix::zeros(0, ambient.cols, p);
    let mut rank = current.rows;
    for r in 0..ambient.rows {
        let candidate = current.vstack(&ambient.select_rows(&[r]));
        let cr = candidate.rank();
        if cr > rank {
            rank = cr;
            current = candidate;
            chosen = chosen.vstack(&ambient.select_rows(&[r]));
        }
    }
    chosen
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} mod {}", self.rows, self.cols, self.p)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix product shape")
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        let mut out = self.clone();
        out.add_scaled(rhs, 1);
        out
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        let mut out = self.clone();
        out.add_scaled(rhs, self.p - 1);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(2, 5).rank(), 2);
        assert_eq!(Matrix::zeros(3, 4, 5).rank(), 0);
        // second row is twice the first
        let m = Matrix::from_rows_i64(7, &[vec![1, 2], vec![2, 4]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(2, 5).kernel_basis().cols(), 0);
        assert_eq!(Matrix::zeros(2, 2, 5).kernel_basis().cols(), 2);
        // x + y = 0 over F_3
        let k = Matrix::from_rows_i64(3, &[vec![1, 1]]).kernel_basis();
        assert_eq!(k.cols(), 1);
        assert_eq!(k.col_vec(0), vec![2, 1]);
    }

    #[test]
    fn solve_examples() {
        let b = Matrix::from_rows_i64(11, &[vec![3, 4], vec![5, 9]]);
        assert_eq!(Matrix::solve_right(&Matrix::identity(2, 11), &b).unwrap(), b);
        let zero = Matrix::zeros(2, 2, 11);
        assert_eq!(Matrix::solve_right(&zero, &b), Err(Error::NoSolution));
        // 2 * 4 = 8 = 3 mod 5
        let x = Matrix::solve_right(
            &Matrix::from_rows_i64(5, &[vec![2]]),
            &Matrix::from_rows_i64(5, &[vec![3]]),
        )
        .unwrap();
        assert_eq!(x.get(0, 0), 4);
    }

    #[test]
    fn from_elems_rejects_mixed_moduli() {
        let e = [FieldElem::new(1, 5), FieldElem::new(1, 7)];
        assert_eq!(
            Matrix::from_elems(1, 2, &e),
            Err(Error::ModulusMismatch(5, 7))
        );
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_rows_i64(101, &[vec![1, 2, 0], vec![0, 1, 5], vec![3, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(3, 101));
        assert!(Matrix::from_rows_i64(101, &[vec![1, 2], vec![2, 4]]).inverse().is_none());
    }

    #[test]
    fn left_kernel_annihilates() {
        let m = Matrix::from_rows_i64(13, &[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        let k = m.left_kernel();
        assert_eq!(k.rows(), 1);
        assert!((&k * &m).is_zero());
    }

    #[test]
    fn complement_extends_to_basis() {
        let sub = Matrix::from_rows_i64(7, &[vec![1, 1, 0]]);
        let amb = Matrix::identity(3, 7);
        let c = complement_rows(&sub, &amb);
        assert_eq!(c.rows(), 2);
        assert_eq!(sub.vstack(&c).rank(), 3);
    }
}
