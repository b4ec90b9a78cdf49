//! Dense exact matrices, row reduction and linear solving, plus a sparse
//! incremental echelon basis used for the larger span computations.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::field::{FieldElement, FieldError, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<FieldElement>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Unique(Matrix),
    Underdetermined {
        particular: Matrix,
        kernel: Vec<Vec<FieldElement>>,
    },
    Inconsistent,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<FieldElement>>) -> Result<Self, MatrixError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(MatrixError::Dimension("ragged rows".into()));
            }
            for e in row {
                if e.spec() != field {
                    return Err(FieldError::FieldMismatch(field, e.spec()).into());
                }
                data.push(e);
            }
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            field,
            data,
        })
    }

    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&n| field.from_i64(n)).collect())
            .collect();
        Self::from_rows(field, rows).expect("rectangular literal")
    }

    pub fn column(field: FieldSpec, entries: Vec<FieldElement>) -> Result<Self, MatrixError> {
        Self::from_rows(field, entries.into_iter().map(|e| vec![e]).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        assert_eq!(v.spec(), self.field, "field mismatch in Matrix::set");
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<FieldElement>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldElement::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        if self.field != other.field {
            return Err(FieldError::FieldMismatch(self.field, other.field).into());
        }
        if self.cols != other.rows {
            return Err(MatrixError::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &FieldElement) -> Matrix {
        let mut out = self.clone();
        for e in out.data.iter_mut() {
            *e = &*e * s;
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(MatrixError::Dimension("shape mismatch in add".into()));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<_, _>>()?;
        Ok(Matrix { data, ..self.clone() })
    }

    pub fn pow(&self, mut e: u32) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("square");
            }
            base = base.mul(&base).expect("square");
            e >>= 1;
        }
        acc
    }

    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let sub = &f * m.get(r, j);
                    if !sub.is_zero() {
                        let v = m.get(i, j) - &sub;
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let rank = pivots.len();
        Rref {
            matrix: m,
            pivots,
            rank,
        }
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
        self.rref().rank
    }

    /// Basis of the right kernel {v : m·v = 0}, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<FieldElement>> {
        let Rref { matrix, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -matrix.get(r, f);
                }
                v
            })
            .collect()
    }

    /// Solves `self · X = rhs` for X.
    pub fn solve(&self, rhs: &Matrix) -> Result<Solution, MatrixError> {
        if self.field != rhs.field {
            return Err(FieldError::FieldMismatch(self.field, rhs.field).into());
        }
        if self.rows != rhs.rows {
            return Err(MatrixError::Dimension("row counts differ in solve".into()));
        }
        let n = self.cols;
        let k = rhs.cols;
        let mut aug = Matrix::zeros(self.field, self.rows, n + k);
        for i in 0..self.rows {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            for j in 0..k {
                aug.set(i, n + j, rhs.get(i, j).clone());
            }
        }
        let Rref { matrix, pivots, .. } = aug.rref();
        if pivots.iter().any(|&p| p >= n) {
            return Ok(Solution::Inconsistent);
        }
        let mut x = Matrix::zeros(self.field, n, k);
        for (r, &p) in pivots.iter().enumerate() {
            for j in 0..k {
                x.set(p, j, matrix.get(r, n + j).clone());
            }
        }
        let kernel = self.kernel();
        if kernel.is_empty() {
            Ok(Solution::Unique(x))
        } else {
            Ok(Solution::Underdetermined {
                particular: x,
                kernel,
            })
        }
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        match self.solve(&Matrix::identity(self.field, self.rows)).ok()? {
            Solution::Unique(x) => Some(x),
            _ => None,
        }
    }

    pub fn determinant(&self) -> FieldElement {
        assert!(self.is_square());
        let mut m = self.clone();
        let mut det = self.field.one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return self.field.zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for i in c + 1..m.rows {
                let f = m.get(i, c) * &inv;
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j) - &(&f * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && !self.determinant().is_zero()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

pub type SparseVec = BTreeMap<usize, FieldElement>;

/// Incrementally maintained echelon basis of sparse vectors. Each stored row
/// is monic at its pivot and only has entries at or after the pivot.
#[derive(Debug, Clone)]
pub struct Echelon {
    field: FieldSpec,
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(field: FieldSpec) -> Self {
        Echelon {
            field,
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut cursor = 0;
        loop {
            let Some((&lead, coeff)) = v.range(cursor..).next() else {
                return v;
            };
            let coeff = coeff.clone();
            if let Some(row) = self.rows.get(&lead) {
                for (&j, e) in row {
                    let sub = &coeff * e;
                    let entry = v.entry(j).or_insert_with(|| self.field.zero());
                    *entry = &*entry - &sub;
                    if entry.is_zero() {
                        v.remove(&j);
                    }
                }
            } else {
                cursor = lead + 1;
            }
        }
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let v = self.reduce_leading(v);
        let Some((&lead, c)) = v.iter().next() else {
            return false;
        };
        let inv = c.inv().expect("nonzero");
        let v: SparseVec = v.into_iter().map(|(j, e)| (j, &e * &inv)).collect();
        self.rows.insert(lead, v);
        true
    }

    fn reduce_leading(&self, mut v: SparseVec) -> SparseVec {
        loop {
            let Some((&lead, coeff)) = v.iter().next() else {
                return v;
            };
            let Some(row) = self.rows.get(&lead) else {
                return v;
            };
            let coeff = coeff.clone();
            for (&j, e) in row {
                let sub = &coeff * e;
                let entry = v.entry(j).or_insert_with(|| self.field.zero());
                *entry = &*entry - &sub;
                if entry.is_zero() {
                    v.remove(&j);
                }
            }
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(Q, 3);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.pivots, vec![0, 1, 2]);
        assert_eq!(r.rank, 3);

        let z = Matrix::zeros(Q, 2, 3);
        assert_eq!(z.rref().rank, 0);
        assert_eq!(z.rref().matrix, z);

        let m = Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]);
        let r = m.rref();
        assert_eq!(r.matrix, Matrix::from_i64(Q, &[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn solve_examples() {
        let v = Matrix::from_i64(Q, &[&[4], &[-1], &[7]]);
        assert_eq!(
            Matrix::identity(Q, 3).solve(&v).unwrap(),
            Solution::Unique(v.clone())
        );
        assert_eq!(
            Matrix::zeros(Q, 3, 3).solve(&v).unwrap(),
            Solution::Inconsistent
        );
        let m = Matrix::from_i64(Q, &[&[1, 1]]);
        match m.solve(&Matrix::from_i64(Q, &[&[2]])).unwrap() {
            Solution::Underdetermined { particular, kernel } => {
                assert_eq!(particular, Matrix::from_i64(Q, &[&[2], &[0]]));
                assert_eq!(kernel, vec![vec![Q.from_i64(-1), Q.from_i64(1)]]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn determinant_and_inverse() {
        let m = Matrix::from_i64(Q, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 2]]);
        assert_eq!(m.determinant(), Q.from_i64(-2));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(Q, 3));
        assert!(Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn echelon_rank() {
        let mut e = Echelon::new(Q);
        let v = |pairs: &[(usize, i64)]| -> SparseVec {
            pairs.iter().map(|&(i, c)| (i, Q.from_i64(c))).collect()
        };
        assert!(e.insert(v(&[(0, 1), (2, 1)])));
        assert!(e.insert(v(&[(1, 1), (2, 1)])));
        assert!(!e.insert(v(&[(0, 2), (1, 3), (2, 5)])));
        assert!(e.contains(&v(&[(0, 1), (1, -1)])));
        assert_eq!(e.rank(), 2);
    }
}
