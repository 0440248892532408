//! Order-2 and order-3 tensors in coordinates, leg permutations, and the
//! leg-wise products `u12 o v13`, `u13 o v23`, `u23 o v12`.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Vector};
use crate::tables::BilinearOp;

/// Element of `k^n1 (x) k^n2`, coefficient of `e_i (x) e_j` at `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor2<F> {
    dims: (usize, usize),
    c: Vec<F>,
}

impl<F: Field> Tensor2<F> {
    pub fn zeros(n1: usize, n2: usize) -> Self {
        Tensor2 {
            dims: (n1, n2),
            c: vec![F::zero(); n1 * n2],
        }
    }

    pub fn from_entries(n1: usize, n2: usize, entries: impl IntoIterator<Item = (usize, usize, F)>) -> Result<Self> {
        let mut t = Self::zeros(n1, n2);
        for (i, j, v) in entries {
            if i >= n1 || j >= n2 {
                return Err(Error::Index(format!("tensor entry ({i}, {j}) outside {n1}x{n2}")));
            }
            t.c[i * n2 + j] += v;
        }
        Ok(t)
    }

    /// `x (x) y`.
    pub fn outer(x: &[F], y: &[F]) -> Self {
        let mut t = Self::zeros(x.len(), y.len());
        for (i, a) in x.iter().enumerate() {
            for (j, b) in y.iter().enumerate() {
                t.c[i * y.len() + j] = a.clone() * b;
            }
        }
        t
    }

    /// Reads the tensor as the matrix with entry `(i, j)`.
    pub fn from_matrix(m: &Matrix<F>) -> Self {
        Tensor2 {
            dims: m.shape(),
            c: m.entries().to_vec(),
        }
    }

    pub fn to_matrix(&self) -> Matrix<F> {
        Matrix::from_fn(self.dims.0, self.dims.1, |i, j| self.get(i, j).clone())
    }

    pub fn dims(&self) -> (usize, usize) {
        self.dims
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.c[i * self.dims.1 + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        let n2 = self.dims.1;
        self.c[i * n2 + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(F::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dims, other.dims, "tensor shape mismatch");
        Tensor2 {
            dims: self.dims,
            c: self.c.iter().zip(&other.c).map(|(a, b)| a.clone() + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }

    pub fn scale(&self, s: &F) -> Self {
        Tensor2 {
            dims: self.dims,
            c: self.c.iter().map(|a| a.clone() * s).collect(),
        }
    }

    /// The flip `tau(x (x) y) = y (x) x`.
    pub fn twist(&self) -> Self {
        let (n1, n2) = self.dims;
        let mut t = Self::zeros(n2, n1);
        for i in 0..n1 {
            for j in 0..n2 {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_skew(&self) -> bool {
        self.dims.0 == self.dims.1 && self.add(&self.twist()).is_zero()
    }

    /// `(f (x) g) t`; `None` stands for the identity.
    pub fn apply_legs(&self, f: Option<&Matrix<F>>, g: Option<&Matrix<F>>) -> Self {
        let mut m = self.to_matrix();
        if let Some(f) = f {
            m = f.mul(&m);
        }
        if let Some(g) = g {
            m = m.mul(&g.transpose());
        }
        Self::from_matrix(&m)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &F)> + '_ {
        let n2 = self.dims.1;
        self.c
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(at, v)| (at / n2, at % n2, v))
    }

    pub fn coefficients(&self) -> &[F] {
        &self.c
    }

    pub fn map_field<G: Field>(&self, f: impl Fn(&F) -> G) -> Tensor2<G> {
        Tensor2 {
            dims: self.dims,
            c: self.c.iter().map(f).collect(),
        }
    }
}

/// A permutation of the three tensor legs: input leg `i` moves to output
/// position `images[i]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Perm3 {
    images: [usize; 3],
}

impl Perm3 {
    pub fn new(images: [usize; 3]) -> Result<Self> {
        let mut seen = [false; 3];
        for &i in &images {
            if i >= 3 || seen[i] {
                return Err(Error::malformed(format!("{images:?} is not a permutation of 0..3")));
            }
            seen[i] = true;
        }
        Ok(Perm3 { images })
    }

    pub fn identity() -> Self {
        Perm3 { images: [0, 1, 2] }
    }

    /// `x (x) y (x) z -> z (x) x (x) y`.
    pub fn sigma_123() -> Self {
        Perm3 { images: [1, 2, 0] }
    }

    /// `x (x) y (x) z -> y (x) z (x) x`.
    pub fn sigma_132() -> Self {
        Perm3 { images: [2, 0, 1] }
    }

    pub fn images(&self) -> [usize; 3] {
        self.images
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Perm3) -> Perm3 {
        Perm3 {
            images: other.images.map(|i| self.images[i]),
        }
    }

    pub fn inverse(&self) -> Perm3 {
        let mut inv = [0; 3];
        for (i, &p) in self.images.iter().enumerate() {
            inv[p] = i;
        }
        Perm3 { images: inv }
    }
}

/// Element of `k^n0 (x) k^n1 (x) k^n2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor3<F> {
    dims: [usize; 3],
    c: Vec<F>,
}

impl<F: Field> Tensor3<F> {
    pub fn zeros(dims: [usize; 3]) -> Self {
        Tensor3 {
            dims,
            c: vec![F::zero(); dims[0] * dims[1] * dims[2]],
        }
    }

    pub fn cube(n: usize) -> Self {
        Self::zeros([n; 3])
    }

    pub fn from_entries(dims: [usize; 3], entries: impl IntoIterator<Item = (usize, usize, usize, F)>) -> Result<Self> {
        let mut t = Self::zeros(dims);
        for (i, j, k, v) in entries {
            if i >= dims[0] || j >= dims[1] || k >= dims[2] {
                return Err(Error::Index(format!("tensor entry ({i}, {j}, {k}) outside {dims:?}")));
            }
            let at = t.idx(i, j, k);
            t.c[at] += v;
        }
        Ok(t)
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dims[1] + j) * self.dims[2] + k
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &F {
        &self.c[self.idx(i, j, k)]
    }

    pub fn add_at(&mut self, i: usize, j: usize, k: usize, v: F) {
        let at = self.idx(i, j, k);
        self.c[at] += v;
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(F::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dims, other.dims, "tensor shape mismatch");
        Tensor3 {
            dims: self.dims,
            c: self.c.iter().zip(&other.c).map(|(a, b)| a.clone() + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Tensor3 {
            dims: self.dims,
            c: self.c.iter().map(|a| -a.clone()).collect(),
        }
    }

    pub fn permute(&self, p: Perm3) -> Self {
        let im = p.images();
        let mut dims = [0; 3];
        for leg in 0..3 {
            dims[im[leg]] = self.dims[leg];
        }
        let mut t = Self::zeros(dims);
        for i in 0..self.dims[0] {
            for j in 0..self.dims[1] {
                for k in 0..self.dims[2] {
                    let v = self.get(i, j, k);
                    if v.is_zero() {
                        continue;
                    }
                    let mut pos = [0; 3];
                    pos[im[0]] = i;
                    pos[im[1]] = j;
                    pos[im[2]] = k;
                    t.add_at(pos[0], pos[1], pos[2], v.clone());
                }
            }
        }
        t
    }

    /// Applies `f` to one leg.
    pub fn apply_leg(&self, leg: usize, f: &Matrix<F>) -> Self {
        assert!(leg < 3);
        assert_eq!(f.cols(), self.dims[leg], "map does not fit the leg");
        let mut dims = self.dims;
        dims[leg] = f.rows();
        let mut t = Self::zeros(dims);
        for i in 0..self.dims[0] {
            for j in 0..self.dims[1] {
                for k in 0..self.dims[2] {
                    let v = self.get(i, j, k);
                    if v.is_zero() {
                        continue;
                    }
                    let src = [i, j, k][leg];
                    for r in 0..f.rows() {
                        let m = &f[(r, src)];
                        if m.is_zero() {
                            continue;
                        }
                        let mut pos = [i, j, k];
                        pos[leg] = r;
                        t.add_at(pos[0], pos[1], pos[2], v.clone() * m);
                    }
                }
            }
        }
        t
    }

    pub fn entries(&self) -> impl Iterator<Item = ([usize; 3], &F)> + '_ {
        let [_, n1, n2] = self.dims;
        self.c
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(at, v)| ([at / (n1 * n2), (at / n2) % n1, at % n2], v))
    }

    pub fn coefficients(&self) -> &[F] {
        &self.c
    }

    pub fn as_vector(&self) -> Vector<F> {
        Vector(self.c.clone())
    }
}

fn check_square_op<F: Field>(u: &Tensor2<F>, v: &Tensor2<F>, op: &BilinearOp<F>) -> usize {
    let (n, m, o) = op.dims();
    assert!(n == m && m == o, "leg products need a square product table");
    assert_eq!(u.dims(), (n, n), "tensor does not live on the algebra");
    assert_eq!(v.dims(), (n, n), "tensor does not live on the algebra");
    n
}

/// `u12 o v13 = sum (a_i o c_j) (x) b_i (x) d_j`.
pub fn prod_12_13<F: Field>(u: &Tensor2<F>, v: &Tensor2<F>, op: &BilinearOp<F>) -> Tensor3<F> {
    let n = check_square_op(u, v, op);
    let mut t = Tensor3::cube(n);
    for (i, j, a) in u.entries() {
        for (k, l, b) in v.entries() {
            let c = a.clone() * b;
            for (m, p) in op.basis_product(i, k).iter().enumerate() {
                if !p.is_zero() {
                    t.add_at(m, j, l, c.clone() * p);
                }
            }
        }
    }
    t
}

/// `u13 o v23 = sum a_i (x) c_j (x) (b_i o d_j)`.
pub fn prod_13_23<F: Field>(u: &Tensor2<F>, v: &Tensor2<F>, op: &BilinearOp<F>) -> Tensor3<F> {
    let n = check_square_op(u, v, op);
    let mut t = Tensor3::cube(n);
    for (i, j, a) in u.entries() {
        for (k, l, b) in v.entries() {
            let c = a.clone() * b;
            for (m, p) in op.basis_product(j, l).iter().enumerate() {
                if !p.is_zero() {
                    t.add_at(i, k, m, c.clone() * p);
                }
            }
        }
    }
    t
}

/// `u23 o v12 = sum c_j (x) (a_i o d_j) (x) b_i`.
pub fn prod_23_12<F: Field>(u: &Tensor2<F>, v: &Tensor2<F>, op: &BilinearOp<F>) -> Tensor3<F> {
    let n = check_square_op(u, v, op);
    let mut t = Tensor3::cube(n);
    for (i, j, a) in u.entries() {
        for (k, l, b) in v.entries() {
            let c = a.clone() * b;
            for (m, p) in op.basis_product(i, l).iter().enumerate() {
                if !p.is_zero() {
                    t.add_at(k, m, j, c.clone() * p);
                }
            }
        }
    }
    t
}
