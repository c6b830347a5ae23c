//! Dense exact matrices over the rationals.

use crate::rational::Q;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Index, IndexMut};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(crate::rational::fmt_q).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Q;
    fn index(&self, (r, c): (usize, usize)) -> &Q {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Q {
        &mut self.data[r * self.cols + c]
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| crate::rational::q(x)).collect()).collect())
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<Q>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    /// Columns given as vectors of equal length `rows`.
    pub fn from_columns(rows: usize, cols: &[Vec<Q>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for i in 0..rows {
                m[(i, j)] = c[i].clone();
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

    pub fn data(&self) -> &[Q] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Q> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Q>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(c, r)] = self[(r, c)].clone();
            }
        }
        m
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut m = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        m[(i, j)] += a * b;
                    }
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut s = Q::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        s += a * b;
                    }
                }
                s
            })
            .collect()
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, s: &Q) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn add_scaled(&mut self, o: &Matrix, s: &Q) {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&o.data) {
            if !b.is_zero() {
                *a += b * s;
            }
        }
    }

    pub fn trace(&self) -> Q {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, o: &Matrix) -> Matrix {
        let mut m = Self::zeros(self.rows + o.rows, self.cols + o.cols);
        m.set_block(0, 0, self);
        m.set_block(self.rows, self.cols, o);
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        for r in 0..b.rows {
            for c in 0..b.cols {
                self[(r0 + r, c0 + c)] = b[(r, c)].clone();
            }
        }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                m[(i, j)] = self[(r, c)].clone();
            }
        }
        m
    }

    /// Horizontal concatenation.
    pub fn hcat(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.rows, o.rows);
        let mut m = Self::zeros(self.rows, self.cols + o.cols);
        m.set_block(0, 0, self);
        m.set_block(0, self.cols, o);
        m
    }

    /// Vertical concatenation.
    pub fn vcat(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.cols);
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Matrix { rows: self.rows + o.rows, cols: self.cols, data }
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
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else { continue };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                if !m[(r, j)].is_zero() {
                    let v = &m[(r, j)] * &inv;
                    m[(r, j)] = v;
                }
            }
            let prow: Vec<(usize, Q)> =
                (c..m.cols).filter(|&j| !m[(r, j)].is_zero()).map(|j| (j, m[(r, j)].clone())).collect();
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for (j, v) in &prow {
                    let t = &m[(i, *j)] - &f * v;
                    m[(i, *j)] = t;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : self * v = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Q::zero(); self.cols];
            v[f] = Q::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[(i, f)].clone();
            }
            out.push(v);
        }
        out
    }

    /// Basis of the column space, as a list of independent columns of `self`.
    pub fn column_space(&self) -> Vec<Vec<Q>> {
        let (_, pivots) = self.rref();
        pivots.iter().map(|&c| self.column(c)).collect()
    }

    /// Some X with `self * X = b`, if it exists.
    pub fn solve(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, b.rows);
        let aug = self.hcat(b);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.cols, b.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x[(p, j)] = r[(i, self.cols + j)].clone();
            }
        }
        Some(x)
    }

    pub fn solve_vec(&self, b: &[Q]) -> Option<Vec<Q>> {
        self.solve(&Matrix::from_columns(self.rows, &[b.to_vec()])).map(|x| x.column(0))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let x = self.solve(&Matrix::identity(self.rows))?;
        if self.mul(&x) == Matrix::identity(self.rows) {
            Some(x)
        } else {
            None
        }
    }

    pub fn det(&self) -> Q {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Q::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else { return Q::zero() };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det *= &piv;
            let inv = piv.recip();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] * &inv;
                for j in c..n {
                    if !m[(c, j)].is_zero() {
                        let t = &m[(i, j)] - &f * &m[(c, j)];
                        m[(i, j)] = t;
                    }
                }
            }
        }
        det
    }

    pub fn pow(&self, k: usize) -> Matrix {
        let mut r = Matrix::identity(self.rows);
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.rows).is_zero()
    }
}

pub fn vec_is_zero(v: &[Q]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn vec_add_scaled(a: &mut [Q], b: &[Q], s: &Q) {
    if s.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x += y * s;
        }
    }
}

pub fn vec_scale(a: &[Q], s: &Q) -> Vec<Q> {
    a.iter().map(|x| x * s).collect()
}

pub fn vec_sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn unit(n: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[i] = Q::one();
    v
}

/// Incrementally maintained row-reduced basis of a subspace of `Q^n`.
#[derive(Clone, Debug)]
pub struct Echelon {
    n: usize,
    rows: Vec<(usize, Vec<Q>)>,
    originals: Vec<Vec<Q>>,
}

impl Echelon {
    pub fn new(n: usize) -> Self {
        Echelon { n, rows: Vec::new(), originals: Vec::new() }
    }

    pub fn from_vectors(n: usize, vs: impl IntoIterator<Item = Vec<Q>>) -> Self {
        let mut e = Self::new(n);
        for v in vs {
            e.insert(v);
        }
        e
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            if !w[*p].is_zero() {
                let f = w[*p].clone();
                for (x, y) in w.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        vec_is_zero(&self.reduce(v))
    }

    /// Returns true if `v` enlarged the span.
    pub fn insert(&mut self, v: Vec<Q>) -> bool {
        assert_eq!(v.len(), self.n);
        let w = self.reduce(&v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else { return false };
        let inv = w[p].recip();
        let w: Vec<Q> = w.iter().map(|x| x * &inv).collect();
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&w) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        self.rows.push((p, w));
        self.originals.push(v);
        true
    }

    /// The inserted vectors that were independent, in insertion order.
    pub fn basis(&self) -> &[Vec<Q>] {
        &self.originals
    }

    pub fn reduced_rows(&self) -> Vec<Vec<Q>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    /// Standard basis vectors completing the span to the whole space.
    pub fn complement(&self) -> Vec<Vec<Q>> {
        let mut e = self.clone();
        let mut out = Vec::new();
        for i in 0..self.n {
            let u = unit(self.n, i);
            if e.insert(u.clone()) {
                out.push(u);
            }
        }
        out
    }
}

/// Basis of the intersection of two subspaces given by spanning vectors.
pub fn intersect(n: usize, a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut cols = a.to_vec();
    cols.extend(b.iter().map(|v| v.iter().map(|x| -x).collect::<Vec<Q>>()));
    let m = Matrix::from_columns(n, &cols);
    let mut out = Echelon::new(n);
    for k in m.nullspace() {
        let mut v = vec![Q::zero(); n];
        for (i, c) in a.iter().enumerate() {
            vec_add_scaled(&mut v, c, &k[i]);
        }
        out.insert(v);
    }
    out.basis().to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};

    #[test]
    fn inverse_and_det() {
        let m = Matrix::from_i64(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(m.det(), q(18));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(3));
        assert_eq!(inv[(0, 0)], qf(11, 18));
    }

    #[test]
    fn nullspace_dimension() {
        let m = Matrix::from_i64(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(vec_is_zero(&m.mul_vec(&v)));
        }
    }

    #[test]
    fn solve_inconsistent() {
        let a = Matrix::from_i64(&[&[1, 1], &[1, 1]]);
        let b = Matrix::from_i64(&[&[1], &[2]]);
        assert!(a.solve(&b).is_none());
    }

    #[test]
    fn echelon_and_intersection() {
        let mut e = Echelon::new(3);
        assert!(e.insert(vec![q(1), q(1), q(0)]));
        assert!(!e.insert(vec![q(2), q(2), q(0)]));
        assert_eq!(e.complement().len(), 2);
        let i = intersect(3, &[unit(3, 0), unit(3, 1)], &[unit(3, 1), unit(3, 2)]);
        assert_eq!(i.len(), 1);
        assert_eq!(Echelon::from_vectors(3, i).reduced_rows()[0], unit(3, 1));
    }
}
