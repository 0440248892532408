//! Anti-dendriform algebras: a vector space with two products `≻`, `≺` such
//! that, with `x·y = x≻y + x≺y`,
//!
//! * `A1`: `x≻(y≻z) = -(x·y)≻z = -x≺(y·z) = (x≺y)≺z`
//! * `A2`: `(x≻y)≺z = x≻(y≺z)`

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Vector};
use crate::report::{Checker, Report};
use crate::tables::{ActionFamily, BilinearOp};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdAlgebra<F> {
    basis: Vec<String>,
    succ: BilinearOp<F>,
    prec: BilinearOp<F>,
}

/// Left and right multiplication operators of an algebra.
#[derive(Clone, Debug)]
pub struct MulOperators<F> {
    pub l_succ: ActionFamily<F>,
    pub r_succ: ActionFamily<F>,
    pub l_prec: ActionFamily<F>,
    pub r_prec: ActionFamily<F>,
    pub l_dot: ActionFamily<F>,
    pub r_dot: ActionFamily<F>,
}

pub fn default_basis(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

impl<F: Field> AdAlgebra<F> {
    pub fn new(basis: Vec<String>, succ: BilinearOp<F>, prec: BilinearOp<F>) -> Result<Self> {
        let n = basis.len();
        for (name, op) in [("succ", &succ), ("prec", &prec)] {
            if op.dims() != (n, n, n) {
                return Err(Error::dim(format!(
                    "{name} table has shape {:?} but the basis has {n} elements",
                    op.dims()
                )));
            }
        }
        Ok(AdAlgebra { basis, succ, prec })
    }

    pub fn from_tables(succ: BilinearOp<F>, prec: BilinearOp<F>) -> Result<Self> {
        let n = succ.dims().0;
        Self::new(default_basis("e", n), succ, prec)
    }

    /// Builds an algebra from `(i, j, k, c)` entries, meaning `e_i ∘ e_j`
    /// has coefficient `c` on `e_k`.
    pub fn from_entries(
        n: usize,
        succ: impl IntoIterator<Item = (usize, usize, usize, F)>,
        prec: impl IntoIterator<Item = (usize, usize, usize, F)>,
    ) -> Result<Self> {
        Self::from_tables(
            BilinearOp::from_entries(n, n, n, succ)?,
            BilinearOp::from_entries(n, n, n, prec)?,
        )
    }

    pub fn zero(n: usize) -> Self {
        Self::from_tables(BilinearOp::square(n), BilinearOp::square(n)).expect("square tables")
    }

    /// The anti-Zinbiel case `x≻y = y≺x`.
    pub fn anti_zinbiel(prec: BilinearOp<F>) -> Result<Self> {
        Self::from_tables(prec.swap_args(), prec)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn with_basis(mut self, basis: Vec<String>) -> Result<Self> {
        if basis.len() != self.dim() {
            return Err(Error::dim("basis name count differs from the dimension"));
        }
        self.basis = basis;
        Ok(self)
    }

    pub fn e(&self, i: usize) -> Vector<F> {
        Vector::basis(self.dim(), i)
    }

    pub fn succ_table(&self) -> &BilinearOp<F> {
        &self.succ
    }

    pub fn prec_table(&self) -> &BilinearOp<F> {
        &self.prec
    }

    /// Structure constants of the associated product `x·y = x≻y + x≺y`.
    pub fn dot_table(&self) -> BilinearOp<F> {
        self.succ.add(&self.prec)
    }

    pub fn succ(&self, x: &[F], y: &[F]) -> Vector<F> {
        self.succ.apply(x, y)
    }

    pub fn prec(&self, x: &[F], y: &[F]) -> Vector<F> {
        self.prec.apply(x, y)
    }

    pub fn dot(&self, x: &[F], y: &[F]) -> Vector<F> {
        self.succ.apply(x, y) + self.prec.apply(x, y)
    }

    pub fn is_anti_zinbiel(&self) -> bool {
        self.succ == self.prec.swap_args()
    }

    pub fn mul_operators(&self) -> MulOperators<F> {
        let dot = self.dot_table();
        MulOperators {
            l_succ: self.succ.left_family(),
            r_succ: self.succ.right_family(),
            l_prec: self.prec.left_family(),
            r_prec: self.prec.right_family(),
            l_dot: dot.left_family(),
            r_dot: dot.right_family(),
        }
    }

    pub fn check(&self) -> Report {
        let mut c = Checker::new();
        self.check_into(&mut c);
        c.finish()
    }

    pub fn check_into(&self, c: &mut Checker) {
        let n = self.dim();
        for i in 0..n {
            let x = self.e(i);
            for j in 0..n {
                let y = self.e(j);
                let xy_succ = self.succ(&x, &y);
                let xy_prec = self.prec(&x, &y);
                let xy_dot = &xy_succ + &xy_prec;
                for k in 0..n {
                    let z = self.e(k);
                    let w = [i, j, k];
                    let yz_succ = self.succ(&y, &z);
                    let yz_prec = self.prec(&y, &z);
                    let yz_dot = &yz_succ + &yz_prec;
                    c.chain(
                        "A1",
                        &w,
                        &[
                            self.succ(&x, &yz_succ),
                            -self.succ(&xy_dot, &z),
                            -self.prec(&x, &yz_dot),
                            self.prec(&xy_prec, &z),
                        ],
                    );
                    c.equal("A2", &w, &self.prec(&xy_succ, &z), &self.succ(&x, &yz_prec));
                }
            }
        }
    }

    /// Rewrites the structure constants in the basis given by the columns of
    /// `p`.
    pub fn transform(&self, p: &Matrix<F>) -> Result<Self> {
        let n = self.dim();
        if p.shape() != (n, n) {
            return Err(Error::dim("change of basis must be square of the algebra's dimension"));
        }
        let p_inv = p
            .inverse()
            .ok_or_else(|| Error::precondition("change of basis is singular"))?;
        let cols: Vec<Vector<F>> = (0..n).map(|i| p.column(i)).collect();
        let conv = |op: &BilinearOp<F>| {
            BilinearOp::from_fn(n, n, n, |i, j| p_inv.apply(&op.apply(&cols[i], &cols[j])))
        };
        Self::new(self.basis.clone(), conv(&self.succ), conv(&self.prec))
    }

    /// Transports the structure along an arbitrary invertible `phi`, giving
    /// the algebra on which `phi` becomes an isomorphism from `self`.
    pub fn push_forward(&self, phi: &Matrix<F>) -> Result<Self> {
        let inv = phi
            .inverse()
            .ok_or_else(|| Error::precondition("map is not invertible"))?;
        self.transform(&inv)
    }

    pub fn map_field<G: Field>(&self, f: impl Fn(&F) -> G) -> AdAlgebra<G> {
        AdAlgebra {
            basis: self.basis.clone(),
            succ: self.succ.map_field(&f),
            prec: self.prec.map_field(&f),
        }
    }

    /// Checks that `m` is an algebra homomorphism `self -> target` for both
    /// products. Labels: `H≻`, `H≺`.
    pub fn check_homomorphism(&self, target: &AdAlgebra<F>, m: &Matrix<F>) -> Result<Report> {
        if m.shape() != (target.dim(), self.dim()) {
            return Err(Error::dim("homomorphism has the wrong shape"));
        }
        let mut c = Checker::new();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let (x, y) = (self.e(i), self.e(j));
                let (mx, my) = (m.column(i), m.column(j));
                c.equal("H≻", &[i, j], &m.apply(&self.succ(&x, &y)), &target.succ(&mx, &my));
                c.equal("H≺", &[i, j], &m.apply(&self.prec(&x, &y)), &target.prec(&mx, &my));
            }
        }
        Ok(c.finish())
    }
}

/// Associativity of a square product table. Label `AS`.
pub fn check_associative<F: Field>(op: &BilinearOp<F>, c: &mut Checker) {
    let (n, _, _) = op.dims();
    for i in 0..n {
        for j in 0..n {
            let xy = op.basis_product(i, j).to_vec();
            for k in 0..n {
                let yz = op.basis_product(j, k);
                let lhs = op.apply(&xy, &Vector::basis(n, k));
                let rhs = op.apply(&Vector::basis(n, i), yz);
                c.equal("AS", &[i, j, k], &lhs, &rhs);
            }
        }
    }
}

pub fn check_anti_dendriform<F: Field>(a: &AdAlgebra<F>) -> Report {
    a.check()
}
