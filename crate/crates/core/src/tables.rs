//! Structure-constant tables: bilinear maps and families of linear maps
//! indexed by basis elements.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Vector};

/// Bilinear map `k^left x k^right -> k^out` given by
/// `e_i o e_j = sum_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearOp<F> {
    left: usize,
    right: usize,
    out: usize,
    c: Vec<F>,
}

impl<F: Field> BilinearOp<F> {
    pub fn zeros(left: usize, right: usize, out: usize) -> Self {
        BilinearOp {
            left,
            right,
            out,
            c: vec![F::zero(); left * right * out],
        }
    }

    pub fn square(n: usize) -> Self {
        Self::zeros(n, n, n)
    }

    pub fn from_entries(
        left: usize,
        right: usize,
        out: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, F)>,
    ) -> Result<Self> {
        let mut op = Self::zeros(left, right, out);
        for (i, j, k, v) in entries {
            if i >= left || j >= right || k >= out {
                return Err(Error::Index(format!(
                    "product entry ({i}, {j}, {k}) outside {left}x{right}->{out}"
                )));
            }
            let at = op.idx(i, j, k);
            op.c[at] += v;
        }
        Ok(op)
    }

    /// Builds a table from a function on basis indices.
    pub fn from_fn(left: usize, right: usize, out: usize, mut f: impl FnMut(usize, usize) -> Vector<F>) -> Self {
        let mut op = Self::zeros(left, right, out);
        for i in 0..left {
            for j in 0..right {
                let v = f(i, j);
                assert_eq!(v.len(), out);
                for (k, x) in v.0.into_iter().enumerate() {
                    let at = op.idx(i, j, k);
                    op.c[at] = x;
                }
            }
        }
        op
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.right + j) * self.out + k
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.left, self.right, self.out)
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &F {
        &self.c[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: F) {
        let at = self.idx(i, j, k);
        self.c[at] = v;
    }

    /// Coefficients of `e_i o e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[F] {
        let start = self.idx(i, j, 0);
        &self.c[start..start + self.out]
    }

    pub fn apply(&self, x: &[F], y: &[F]) -> Vector<F> {
        assert_eq!(x.len(), self.left, "left argument has wrong length");
        assert_eq!(y.len(), self.right, "right argument has wrong length");
        let mut out = Vector::zeros(self.out);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi.clone() * yj;
                out.axpy(&c, self.basis_product(i, j));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(F::is_zero)
    }

    fn zip(&self, other: &Self, f: impl Fn(&F, &F) -> F) -> Self {
        assert_eq!(self.dims(), other.dims(), "bilinear map shape mismatch");
        BilinearOp {
            left: self.left,
            right: self.right,
            out: self.out,
            c: self.c.iter().zip(&other.c).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a.clone() + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a.clone() - b)
    }

    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }

    pub fn scale(&self, s: &F) -> Self {
        BilinearOp {
            left: self.left,
            right: self.right,
            out: self.out,
            c: self.c.iter().map(|a| a.clone() * s).collect(),
        }
    }

    /// `x o' y = y o x`.
    pub fn swap_args(&self) -> Self {
        let mut op = Self::zeros(self.right, self.left, self.out);
        for i in 0..self.left {
            for j in 0..self.right {
                for k in 0..self.out {
                    op.set(j, i, k, self.get(i, j, k).clone());
                }
            }
        }
        op
    }

    /// Matrix of `y -> x o y`.
    pub fn left_matrix(&self, x: &[F]) -> Matrix<F> {
        let mut m = Matrix::zeros(self.out, self.right);
        for j in 0..self.right {
            let col = self.apply(x, &Vector::basis(self.right, j));
            for k in 0..self.out {
                m[(k, j)] = col[k].clone();
            }
        }
        m
    }

    /// Matrix of `x -> x o y`.
    pub fn right_matrix(&self, y: &[F]) -> Matrix<F> {
        let mut m = Matrix::zeros(self.out, self.left);
        for i in 0..self.left {
            let col = self.apply(&Vector::basis(self.left, i), y);
            for k in 0..self.out {
                m[(k, i)] = col[k].clone();
            }
        }
        m
    }

    /// `x -> (y -> x o y)` as a family on the right-hand space.
    pub fn left_family(&self) -> ActionFamily<F> {
        assert_eq!(self.right, self.out, "left multiplications need right == out");
        ActionFamily::from_matrices(
            self.right,
            (0..self.left)
                .map(|i| self.left_matrix(&Vector::basis(self.left, i)))
                .collect(),
        )
    }

    /// `y -> (x -> x o y)` as a family on the left-hand space.
    pub fn right_family(&self) -> ActionFamily<F> {
        assert_eq!(self.left, self.out, "right multiplications need left == out");
        ActionFamily::from_matrices(
            self.left,
            (0..self.right)
                .map(|j| self.right_matrix(&Vector::basis(self.right, j)))
                .collect(),
        )
    }

    /// Nonzero entries in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &F)> + '_ {
        (0..self.left).flat_map(move |i| {
            (0..self.right).flat_map(move |j| {
                (0..self.out).filter_map(move |k| {
                    let v = self.get(i, j, k);
                    (!v.is_zero()).then_some((i, j, k, v))
                })
            })
        })
    }

    /// Same table reinterpreted in another field.
    pub fn map_field<G: Field>(&self, f: impl Fn(&F) -> G) -> BilinearOp<G> {
        BilinearOp {
            left: self.left,
            right: self.right,
            out: self.out,
            c: self.c.iter().map(f).collect(),
        }
    }
}

/// A linear map `k^alg -> End(k^module)`, stored as one matrix per basis
/// element of the acting space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ActionFamily<F> {
    alg_dim: usize,
    mod_dim: usize,
    mats: Vec<Matrix<F>>,
}

impl<F: Field> ActionFamily<F> {
    pub fn zeros(alg_dim: usize, mod_dim: usize) -> Self {
        ActionFamily {
            alg_dim,
            mod_dim,
            mats: vec![Matrix::zeros(mod_dim, mod_dim); alg_dim],
        }
    }

    pub fn from_matrices(mod_dim: usize, mats: Vec<Matrix<F>>) -> Self {
        for m in &mats {
            assert_eq!(m.shape(), (mod_dim, mod_dim), "action matrix has wrong shape");
        }
        ActionFamily {
            alg_dim: mats.len(),
            mod_dim,
            mats,
        }
    }

    /// Entries `(x, row, col, value)`: the `(row, col)` entry of the matrix
    /// of basis element `x`.
    pub fn from_entries(
        alg_dim: usize,
        mod_dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, F)>,
    ) -> Result<Self> {
        let mut fam = Self::zeros(alg_dim, mod_dim);
        for (x, r, c, v) in entries {
            if x >= alg_dim || r >= mod_dim || c >= mod_dim {
                return Err(Error::Index(format!(
                    "action entry ({x}, {r}, {c}) outside {alg_dim} x {mod_dim}x{mod_dim}"
                )));
            }
            fam.mats[x][(r, c)] += v;
        }
        Ok(fam)
    }

    pub fn from_fn(alg_dim: usize, mod_dim: usize, mut f: impl FnMut(usize) -> Matrix<F>) -> Self {
        Self::from_matrices(mod_dim, (0..alg_dim).map(&mut f).collect())
    }

    pub fn alg_dim(&self) -> usize {
        self.alg_dim
    }

    pub fn mod_dim(&self) -> usize {
        self.mod_dim
    }

    pub fn matrix(&self, x: usize) -> &Matrix<F> {
        &self.mats[x]
    }

    pub fn matrix_of(&self, x: &[F]) -> Matrix<F> {
        assert_eq!(x.len(), self.alg_dim);
        let mut m = Matrix::zeros(self.mod_dim, self.mod_dim);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                m = m.add(&self.mats[i].scale(xi));
            }
        }
        m
    }

    pub fn apply(&self, x: &[F], v: &[F]) -> Vector<F> {
        assert_eq!(x.len(), self.alg_dim, "acting element has wrong length");
        assert_eq!(v.len(), self.mod_dim, "module element has wrong length");
        let mut out = Vector::zeros(self.mod_dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let w = self.mats[i].apply(v);
            out.axpy(xi, &w);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(Matrix::is_zero)
    }

    fn zip(&self, other: &Self, f: impl Fn(&Matrix<F>, &Matrix<F>) -> Matrix<F>) -> Self {
        assert_eq!(
            (self.alg_dim, self.mod_dim),
            (other.alg_dim, other.mod_dim),
            "action family shape mismatch"
        );
        ActionFamily {
            alg_dim: self.alg_dim,
            mod_dim: self.mod_dim,
            mats: self.mats.iter().zip(&other.mats).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, Matrix::add)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, Matrix::sub)
    }

    pub fn neg(&self) -> Self {
        self.map(Matrix::neg)
    }

    pub fn scale(&self, s: &F) -> Self {
        self.map(|m| m.scale(s))
    }

    /// Pointwise transpose: the family `x -> f(x)^*` on the dual module.
    pub fn transpose(&self) -> Self {
        self.map(Matrix::transpose)
    }

    pub fn map(&self, f: impl Fn(&Matrix<F>) -> Matrix<F>) -> Self {
        ActionFamily {
            alg_dim: self.alg_dim,
            mod_dim: self.mod_dim,
            mats: self.mats.iter().map(f).collect(),
        }
    }

    /// Precomposes with a linear map on the acting space:
    /// `x -> f(m x)` where `m: k^new_dim -> k^alg`.
    pub fn pullback(&self, m: &Matrix<F>) -> Self {
        assert_eq!(m.rows(), self.alg_dim);
        ActionFamily {
            alg_dim: m.cols(),
            mod_dim: self.mod_dim,
            mats: (0..m.cols()).map(|j| self.matrix_of(&m.column(j))).collect(),
        }
    }

    /// Conjugates every matrix: `x -> b f(x) b^{-1}`.
    pub fn conjugate(&self, b: &Matrix<F>, b_inv: &Matrix<F>) -> Self {
        self.map(|m| b.mul(m).mul(b_inv))
    }

    /// Nonzero entries `(x, row, col, value)` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &F)> + '_ {
        let n = self.mod_dim;
        self.mats.iter().enumerate().flat_map(move |(x, m)| {
            (0..n).flat_map(move |r| {
                (0..n).filter_map(move |c| {
                    let v = &m[(r, c)];
                    (!v.is_zero()).then_some((x, r, c, v))
                })
            })
        })
    }

    pub fn map_field<G: Field>(&self, f: impl Fn(&F) -> G) -> ActionFamily<G> {
        ActionFamily {
            alg_dim: self.alg_dim,
            mod_dim: self.mod_dim,
            mats: self
                .mats
                .iter()
                .map(|m| Matrix::from_fn(m.rows(), m.cols(), |r, c| f(&m[(r, c)])))
                .collect(),
        }
    }
}
