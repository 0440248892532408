//! Dense vectors and matrices over a [`Field`], plus exact linear solving.

use std::fmt;
use std::ops::{Add, Deref, DerefMut, Index, IndexMut, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;

/// Coordinate vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vector<F>(pub Vec<F>);

impl<F: Field> Vector<F> {
    pub fn zeros(n: usize) -> Self {
        Vector(vec![F::zero(); n])
    }

    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = F::one();
        v
    }

    pub fn from_i64(xs: &[i64]) -> Self {
        Vector(xs.iter().map(|&x| F::from_i64(x)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(F::is_zero)
    }

    pub fn scale(&self, c: &F) -> Self {
        Vector(self.0.iter().map(|x| x.clone() * c).collect())
    }

    /// `self += c * other`
    pub fn axpy(&mut self, c: &F, other: &[F]) {
        debug_assert_eq!(self.len(), other.len());
        if c.is_zero() {
            return;
        }
        for (s, o) in self.0.iter_mut().zip(other) {
            if !o.is_zero() {
                *s += c.clone() * o;
            }
        }
    }

    pub fn dot(&self, other: &[F]) -> F {
        let mut acc = F::zero();
        for (a, b) in self.0.iter().zip(other) {
            if !a.is_zero() && !b.is_zero() {
                acc += a.clone() * b;
            }
        }
        acc
    }

    pub fn concat(&self, other: &[F]) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(other);
        Vector(v)
    }

    pub fn slice(&self, from: usize, to: usize) -> Self {
        Vector(self.0[from..to].to_vec())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(|x| x.to_string()).collect()
    }
}

impl<F> Deref for Vector<F> {
    type Target = [F];
    fn deref(&self) -> &[F] {
        &self.0
    }
}

impl<F> AsRef<[F]> for Vector<F> {
    fn as_ref(&self) -> &[F] {
        &self.0
    }
}

impl<F> DerefMut for Vector<F> {
    fn deref_mut(&mut self) -> &mut [F] {
        &mut self.0
    }
}

impl<F: fmt::Debug> fmt::Debug for Vector<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x:?}")?;
        }
        write!(f, "]")
    }
}

impl<F: Field> Add<&Vector<F>> for &Vector<F> {
    type Output = Vector<F>;
    fn add(self, rhs: &Vector<F>) -> Vector<F> {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a.clone() + b).collect())
    }
}

impl<F: Field> Add for Vector<F> {
    type Output = Vector<F>;
    fn add(self, rhs: Vector<F>) -> Vector<F> {
        &self + &rhs
    }
}

impl<F: Field> Add<&Vector<F>> for Vector<F> {
    type Output = Vector<F>;
    fn add(self, rhs: &Vector<F>) -> Vector<F> {
        &self + rhs
    }
}

impl<F: Field> Sub<&Vector<F>> for &Vector<F> {
    type Output = Vector<F>;
    fn sub(self, rhs: &Vector<F>) -> Vector<F> {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a.clone() - b).collect())
    }
}

impl<F: Field> Sub for Vector<F> {
    type Output = Vector<F>;
    fn sub(self, rhs: Vector<F>) -> Vector<F> {
        &self - &rhs
    }
}

impl<F: Field> Sub<&Vector<F>> for Vector<F> {
    type Output = Vector<F>;
    fn sub(self, rhs: &Vector<F>) -> Vector<F> {
        &self - rhs
    }
}

impl<F: Field> Neg for Vector<F> {
    type Output = Vector<F>;
    fn neg(self) -> Vector<F> {
        Vector(self.0.into_iter().map(|x| -x).collect())
    }
}

impl<F: Field> Neg for &Vector<F> {
    type Output = Vector<F>;
    fn neg(self) -> Vector<F> {
        Vector(self.0.iter().map(|x| -x.clone()).collect())
    }
}

/// Row-major matrix; also the representation of linear maps
/// `k^cols -> k^rows`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

pub type LinMap<F> = Matrix<F>;

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::dim("matrix rows have different lengths"));
        }
        let n = rows.len();
        Ok(Matrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| F::from_i64(x)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vector<F>]) -> Self {
        Self::from_fn(rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector<F> {
        Vector((0..self.rows).map(|r| self[(r, c)].clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn apply(&self, v: &[F]) -> Vector<F> {
        assert_eq!(v.len(), self.cols, "matrix/vector shape mismatch");
        let mut out = Vector::zeros(self.rows);
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for r in 0..self.rows {
                let m = &self.data[r * self.cols + c];
                if !m.is_zero() {
                    out[r] += m.clone() * x;
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[r * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other.data[k * other.cols + c];
                    if !b.is_zero() {
                        out.data[r * other.cols + c] += a.clone() * b;
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix<F> {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn add(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.shape(), other.shape(), "matrix sum shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix<F>) -> Matrix<F> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Matrix<F> {
        self.scale(&-F::one())
    }

    pub fn scale(&self, c: &F) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * c).collect(),
        }
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn rank(&self) -> usize {
        Rref::new(self).pivots.len()
    }

    pub fn inverse(&self) -> Option<Matrix<F>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, n + r)] = F::one();
        }
        let rref = Rref::with_limit(&aug, n);
        if rref.pivots.len() < n {
            return None;
        }
        Some(Matrix::from_fn(n, n, |r, c| rref.m[(r, n + c)].clone()))
    }

    /// Basis of the null space, one vector per free column.
    pub fn kernel(&self) -> Vec<Vector<F>> {
        Rref::new(self).nullspace()
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Matrix<F>) -> Matrix<F> {
        let mut m = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(r, c)] = self[(r, c)].clone();
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                m[(self.rows + r, self.cols + c)] = other[(r, c)].clone();
            }
        }
        m
    }
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (r, c): (usize, usize)) -> &F {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        &self.data[r * self.cols + c]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut F {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        &mut self.data[r * self.cols + c]
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{:?} ", self.data[r * self.cols + c])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form with first-nonzero pivoting, so results are
/// deterministic.
struct Rref<F> {
    m: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Rref<F> {
    fn new(input: &Matrix<F>) -> Self {
        Self::with_limit(input, input.cols)
    }

    /// Only columns `< limit` are eligible as pivots.
    fn with_limit(input: &Matrix<F>, limit: usize) -> Self {
        let mut m = input.clone();
        let (rows, cols) = m.shape();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..limit {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for k in 0..cols {
                    m.data.swap(p * cols + k, r * cols + k);
                }
            }
            let inv = m[(r, c)].inv().expect("pivot is nonzero");
            for k in 0..cols {
                let v = m[(r, k)].clone() * &inv;
                m[(r, k)] = v;
            }
            for i in 0..rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for k in 0..cols {
                    if !m[(r, k)].is_zero() {
                        let v = m[(i, k)].clone() - f.clone() * &m[(r, k)];
                        m[(i, k)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { m, pivots }
    }

    fn nullspace(&self) -> Vec<Vector<F>> {
        let cols = self.m.cols;
        let mut out = Vec::new();
        let mut is_pivot = vec![None; cols];
        for (row, &c) in self.pivots.iter().enumerate() {
            is_pivot[c] = Some(row);
        }
        for free in 0..cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = Vector::zeros(cols);
            v[free] = F::one();
            for (row, &c) in self.pivots.iter().enumerate() {
                v[c] = -self.m[(row, free)].clone();
            }
            out.push(v);
        }
        out
    }
}

/// Affine solution set `particular + span(nullspace)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution<F> {
    pub particular: Vector<F>,
    pub nullspace: Vec<Vector<F>>,
}

/// Outcome of [`solve_linear`]. An inconsistent system comes with a vector
/// `y` such that `y^T M = 0` and `y . b != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolve<F> {
    Consistent(Solution<F>),
    Inconsistent { certificate: Vector<F> },
}

impl<F: Field> LinearSolve<F> {
    pub fn solution(self) -> Option<Solution<F>> {
        match self {
            LinearSolve::Consistent(s) => Some(s),
            LinearSolve::Inconsistent { .. } => None,
        }
    }

    pub fn is_consistent(&self) -> bool {
        matches!(self, LinearSolve::Consistent(_))
    }
}

/// Solves `m x = b` exactly.
pub fn solve_linear<F: Field>(m: &Matrix<F>, b: &[F]) -> Result<LinearSolve<F>> {
    if b.len() != m.rows {
        return Err(Error::dim(format!(
            "right-hand side has length {} but the system has {} equations",
            b.len(),
            m.rows
        )));
    }
    let (rows, cols) = m.shape();
    // [m | b | I] so that row operations are recorded for certificates.
    let width = cols + 1 + rows;
    let mut aug = Matrix::zeros(rows, width);
    for r in 0..rows {
        for c in 0..cols {
            aug[(r, c)] = m[(r, c)].clone();
        }
        aug[(r, cols)] = b[r].clone();
        aug[(r, cols + 1 + r)] = F::one();
    }
    let rref = Rref::with_limit(&aug, cols);
    let rank = rref.pivots.len();
    for r in rank..rows {
        if !rref.m[(r, cols)].is_zero() {
            let certificate = Vector((0..rows).map(|k| rref.m[(r, cols + 1 + k)].clone()).collect());
            return Ok(LinearSolve::Inconsistent { certificate });
        }
    }
    let mut particular = Vector::zeros(cols);
    for (row, &c) in rref.pivots.iter().enumerate() {
        particular[c] = rref.m[(row, cols)].clone();
    }
    let reduced = Matrix::from_fn(rows, cols, |r, c| rref.m[(r, c)].clone());
    let nullspace = Rref {
        m: reduced,
        pivots: rref.pivots.clone(),
    }
    .nullspace();
    Ok(LinearSolve::Consistent(Solution {
        particular,
        nullspace,
    }))
}

/// Stacks linear equations row by row; a convenience for building systems
/// whose unknowns are matrix entries.
#[derive(Clone, Debug)]
pub struct LinearSystem<F> {
    unknowns: usize,
    rows: Vec<(Vec<F>, F)>,
}

impl<F: Field> LinearSystem<F> {
    pub fn new(unknowns: usize) -> Self {
        LinearSystem {
            unknowns,
            rows: Vec::new(),
        }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Adds `coeffs . x = rhs`; all-zero equations with zero right side are
    /// dropped.
    pub fn push(&mut self, coeffs: Vec<F>, rhs: F) {
        assert_eq!(coeffs.len(), self.unknowns);
        if coeffs.iter().all(F::is_zero) && rhs.is_zero() {
            return;
        }
        self.rows.push((coeffs, rhs));
    }

    pub fn matrix(&self) -> (Matrix<F>, Vector<F>) {
        let m = Matrix::from_fn(self.rows.len(), self.unknowns, |r, c| self.rows[r].0[c].clone());
        let b = Vector(self.rows.iter().map(|(_, b)| b.clone()).collect());
        (m, b)
    }

    pub fn solve(&self) -> LinearSolve<F> {
        let (m, b) = self.matrix();
        solve_linear(&m, &b).expect("system is well-formed")
    }
}
