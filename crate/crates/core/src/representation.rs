//! Representations `(V, l≻, r≻, l≺, r≺)` of an anti-dendriform algebra,
//! their duals, the induced bimodules of the associated associative algebra,
//! and semidirect products.
//!
//! Conditions, with `l· = l≻ + l≺`, `r· = r≻ + r≺`:
//!
//! * `R1`: `l≻(x)l≻(y) = -l≻(x·y) = -l≺(x)l·(y) = l≺(x≺y)`
//! * `R2`: `r≻(x≻y) = -r≻(y)r·(x) = -r≺(x·y) = r≺(y)r≺(x)`
//! * `R3`: `l≻(x)r≻(y) = -r≻(y)l·(x) = -l≺(x)r·(y) = r≺(y)l≺(x)`
//! * `R4`: `l≺(x≻y) = l≻(x)l≺(y)`
//! * `R5`: `r≺(y)r≻(x) = r≻(x≺y)`
//! * `R6`: `r≺(y)l≻(x) = l≻(x)r≺(y)`
//! * `R7`: `r·(y)l·(x) = l·(x)r·(y)` (a consequence of the others)

use crate::algebra::{check_associative, AdAlgebra};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Vector;
use crate::report::{Checker, Report};
use crate::tables::{ActionFamily, BilinearOp};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdRep<F> {
    algebra: AdAlgebra<F>,
    mod_dim: usize,
    l_succ: ActionFamily<F>,
    r_succ: ActionFamily<F>,
    l_prec: ActionFamily<F>,
    r_prec: ActionFamily<F>,
}

/// The four associative bimodules of `(A, ·)` carried by a representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InducedAssoc {
    /// `(V, -l≻, -r≺)`
    NegSuccPrec,
    /// `(V, l≻ + l≺, r≻ + r≺)`
    Sum,
    /// `(V*, -r≺*, -l≻*)`
    DualNeg,
    /// `(V*, r≺* + r≻*, l≺* + l≻*)`
    DualSum,
}

impl InducedAssoc {
    pub const ALL: [InducedAssoc; 4] = [
        InducedAssoc::NegSuccPrec,
        InducedAssoc::Sum,
        InducedAssoc::DualNeg,
        InducedAssoc::DualSum,
    ];
}

pub(crate) fn check_family_shape<F: Field>(
    name: &str,
    f: &ActionFamily<F>,
    alg_dim: usize,
    mod_dim: usize,
) -> Result<()> {
    if f.alg_dim() != alg_dim || f.mod_dim() != mod_dim {
        return Err(Error::dim(format!(
            "{name} acts as {}-dim on {}-dim, expected {alg_dim}-dim on {mod_dim}-dim",
            f.alg_dim(),
            f.mod_dim()
        )));
    }
    Ok(())
}

impl<F: Field> AdRep<F> {
    pub fn new(
        algebra: AdAlgebra<F>,
        l_succ: ActionFamily<F>,
        r_succ: ActionFamily<F>,
        l_prec: ActionFamily<F>,
        r_prec: ActionFamily<F>,
    ) -> Result<Self> {
        let n = algebra.dim();
        let m = l_succ.mod_dim();
        for (name, f) in [("l≻", &l_succ), ("r≻", &r_succ), ("l≺", &l_prec), ("r≺", &r_prec)] {
            check_family_shape(name, f, n, m)?;
        }
        Ok(AdRep {
            algebra,
            mod_dim: m,
            l_succ,
            r_succ,
            l_prec,
            r_prec,
        })
    }

    /// `(A, L≻, R≻, L≺, R≺)`.
    pub fn regular(algebra: &AdAlgebra<F>) -> Self {
        let ops = algebra.mul_operators();
        AdRep::new(algebra.clone(), ops.l_succ, ops.r_succ, ops.l_prec, ops.r_prec).expect("regular shapes agree")
    }

    pub fn trivial(algebra: &AdAlgebra<F>, mod_dim: usize) -> Self {
        let z = ActionFamily::zeros(algebra.dim(), mod_dim);
        AdRep::new(algebra.clone(), z.clone(), z.clone(), z.clone(), z).expect("zero shapes agree")
    }

    pub fn algebra(&self) -> &AdAlgebra<F> {
        &self.algebra
    }

    pub fn mod_dim(&self) -> usize {
        self.mod_dim
    }

    pub fn l_succ(&self) -> &ActionFamily<F> {
        &self.l_succ
    }
    pub fn r_succ(&self) -> &ActionFamily<F> {
        &self.r_succ
    }
    pub fn l_prec(&self) -> &ActionFamily<F> {
        &self.l_prec
    }
    pub fn r_prec(&self) -> &ActionFamily<F> {
        &self.r_prec
    }
    pub fn l_dot(&self) -> ActionFamily<F> {
        self.l_succ.add(&self.l_prec)
    }
    pub fn r_dot(&self) -> ActionFamily<F> {
        self.r_succ.add(&self.r_prec)
    }

    /// Families in the order `(l≻, r≻, l≺, r≺)`.
    pub fn families(&self) -> [&ActionFamily<F>; 4] {
        [&self.l_succ, &self.r_succ, &self.l_prec, &self.r_prec]
    }

    pub fn with_families(&self, families: [ActionFamily<F>; 4]) -> Result<Self> {
        let [ls, rs, lp, rp] = families;
        AdRep::new(self.algebra.clone(), ls, rs, lp, rp)
    }

    pub fn check(&self) -> Report {
        let mut c = Checker::new();
        self.check_into(&mut c);
        c.finish()
    }

    /// Checks `R1`-`R7` on all basis triples `(x, y, a)`.
    pub fn check_into(&self, c: &mut Checker) {
        let a_alg = &self.algebra;
        let n = a_alg.dim();
        let m = self.mod_dim;
        let l_dot = self.l_dot();
        let r_dot = self.r_dot();
        let (ls, rs, lp, rp) = (&self.l_succ, &self.r_succ, &self.l_prec, &self.r_prec);
        for i in 0..n {
            let x = a_alg.e(i);
            for j in 0..n {
                let y = a_alg.e(j);
                let x_succ_y = a_alg.succ(&x, &y);
                let x_prec_y = a_alg.prec(&x, &y);
                let x_dot_y = &x_succ_y + &x_prec_y;
                let ls_xy_dot = ls.matrix_of(&x_dot_y);
                let lp_xy_prec = lp.matrix_of(&x_prec_y);
                let rs_xy_succ = rs.matrix_of(&x_succ_y);
                let rp_xy_dot = rp.matrix_of(&x_dot_y);
                let lp_xy_succ = lp.matrix_of(&x_succ_y);
                let rs_xy_prec = rs.matrix_of(&x_prec_y);
                for k in 0..m {
                    let a = Vector::basis(m, k);
                    let w = [i, j, k];
                    let ap = |f: &ActionFamily<F>, idx: usize, v: &Vector<F>| f.matrix(idx).apply(v);

                    c.chain(
                        "R1",
                        &w,
                        &[
                            ap(ls, i, &ap(ls, j, &a)),
                            -ls_xy_dot.apply(&a),
                            -ap(lp, i, &ap(&l_dot, j, &a)),
                            lp_xy_prec.apply(&a),
                        ],
                    );
                    c.chain(
                        "R2",
                        &w,
                        &[
                            rs_xy_succ.apply(&a),
                            -ap(rs, j, &ap(&r_dot, i, &a)),
                            -rp_xy_dot.apply(&a),
                            ap(rp, j, &ap(rp, i, &a)),
                        ],
                    );
                    c.chain(
                        "R3",
                        &w,
                        &[
                            ap(ls, i, &ap(rs, j, &a)),
                            -ap(rs, j, &ap(&l_dot, i, &a)),
                            -ap(lp, i, &ap(&r_dot, j, &a)),
                            ap(rp, j, &ap(lp, i, &a)),
                        ],
                    );
                    c.equal("R4", &w, &lp_xy_succ.apply(&a), &ap(ls, i, &ap(lp, j, &a)));
                    c.equal("R5", &w, &ap(rp, j, &ap(rs, i, &a)), &rs_xy_prec.apply(&a));
                    c.equal("R6", &w, &ap(rp, j, &ap(ls, i, &a)), &ap(ls, i, &ap(rp, j, &a)));
                    c.equal("R7", &w, &ap(&r_dot, j, &ap(&l_dot, i, &a)), &ap(&l_dot, i, &ap(&r_dot, j, &a)));
                }
            }
        }
    }

    /// The dual representation on `V*`:
    /// `(-(r≺* + r≻*), l≺*, r≻*, -(l≺* + l≻*))`.
    pub fn dual(&self) -> Self {
        let t = |f: &ActionFamily<F>| f.transpose();
        AdRep {
            algebra: self.algebra.clone(),
            mod_dim: self.mod_dim,
            l_succ: t(&self.r_prec).add(&t(&self.r_succ)).neg(),
            r_succ: t(&self.l_prec),
            l_prec: t(&self.r_succ),
            r_prec: t(&self.l_prec).add(&t(&self.l_succ)).neg(),
        }
    }

    pub fn induced_assoc(&self, kind: InducedAssoc) -> AssocRep<F> {
        let t = |f: &ActionFamily<F>| f.transpose();
        let (left, right) = match kind {
            InducedAssoc::NegSuccPrec => (self.l_succ.neg(), self.r_prec.neg()),
            InducedAssoc::Sum => (self.l_dot(), self.r_dot()),
            InducedAssoc::DualNeg => (t(&self.r_prec).neg(), t(&self.l_succ).neg()),
            InducedAssoc::DualSum => (t(&self.r_prec).add(&t(&self.r_succ)), t(&self.l_prec).add(&t(&self.l_succ))),
        };
        AssocRep::new(self.algebra.dot_table(), left, right).expect("induced shapes agree")
    }

    /// `A ⋉ V`, refusing representations that fail the checks.
    pub fn semidirect_product(&self) -> Result<AdAlgebra<F>> {
        let r = self.check();
        if let Some(v) = r.first_violation() {
            return Err(Error::precondition(format!(
                "not a representation: {} fails at {:?}",
                v.equation, v.witness
            )));
        }
        Ok(self.semidirect_product_unchecked())
    }

    /// `(x, a) ≻ (y, b) = (x≻y, l≻(x)b + r≻(y)a)` and likewise for `≺`, on
    /// the basis of `A` followed by the basis of `V`.
    pub fn semidirect_product_unchecked(&self) -> AdAlgebra<F> {
        let n = self.algebra.dim();
        let m = self.mod_dim;
        let build = |op: &BilinearOp<F>, l: &ActionFamily<F>, r: &ActionFamily<F>| {
            BilinearOp::from_fn(n + m, n + m, n + m, |i, j| match (i < n, j < n) {
                (true, true) => Vector(op.basis_product(i, j).to_vec()).concat(&vec![F::zero(); m]),
                (true, false) => Vector::zeros(n).concat(&l.matrix(i).column(j - n)),
                (false, true) => Vector::zeros(n).concat(&r.matrix(j).column(i - n)),
                (false, false) => Vector::zeros(n + m),
            })
        };
        let succ = build(self.algebra.succ_table(), &self.l_succ, &self.r_succ);
        let prec = build(self.algebra.prec_table(), &self.l_prec, &self.r_prec);
        let mut basis = self.algebra.basis().to_vec();
        basis.extend((1..=m).map(|i| format!("v{i}")));
        AdAlgebra::new(basis, succ, prec).expect("semidirect shapes agree")
    }

    pub fn map_field<G: Field>(&self, f: impl Fn(&F) -> G) -> AdRep<G> {
        AdRep {
            algebra: self.algebra.map_field(&f),
            mod_dim: self.mod_dim,
            l_succ: self.l_succ.map_field(&f),
            r_succ: self.r_succ.map_field(&f),
            l_prec: self.l_prec.map_field(&f),
            r_prec: self.r_prec.map_field(&f),
        }
    }
}

/// A bimodule `(V, l, r)` over an associative product. Conditions:
///
/// * `AB1`: `l(x·y) = l(x)l(y)`
/// * `AB2`: `r(x·y) = r(y)r(x)`
/// * `AB3`: `l(x)r(y) = r(y)l(x)`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssocRep<F> {
    product: BilinearOp<F>,
    mod_dim: usize,
    left: ActionFamily<F>,
    right: ActionFamily<F>,
}

impl<F: Field> AssocRep<F> {
    pub fn new(product: BilinearOp<F>, left: ActionFamily<F>, right: ActionFamily<F>) -> Result<Self> {
        let (n, n2, n3) = product.dims();
        if n != n2 || n != n3 {
            return Err(Error::dim("associative product must be square"));
        }
        let m = left.mod_dim();
        check_family_shape("l", &left, n, m)?;
        check_family_shape("r", &right, n, m)?;
        Ok(AssocRep {
            product,
            mod_dim: m,
            left,
            right,
        })
    }

    pub fn regular(product: &BilinearOp<F>) -> Self {
        AssocRep::new(product.clone(), product.left_family(), product.right_family()).expect("square product")
    }

    pub fn product(&self) -> &BilinearOp<F> {
        &self.product
    }
    pub fn mod_dim(&self) -> usize {
        self.mod_dim
    }
    pub fn left(&self) -> &ActionFamily<F> {
        &self.left
    }
    pub fn right(&self) -> &ActionFamily<F> {
        &self.right
    }

    /// `(V*, r*, l*)`.
    pub fn dual(&self) -> Self {
        AssocRep {
            product: self.product.clone(),
            mod_dim: self.mod_dim,
            left: self.right.transpose(),
            right: self.left.transpose(),
        }
    }

    pub fn check(&self) -> Report {
        let mut c = Checker::new();
        self.check_into(&mut c);
        c.finish()
    }

    /// Checks associativity of the product (`AS`) and `AB1`-`AB3`.
    pub fn check_into(&self, c: &mut Checker) {
        check_associative(&self.product, c);
        self.check_bimodule_into(c);
    }

    /// `AB1`-`AB3` only.
    pub fn check_bimodule_into(&self, c: &mut Checker) {
        let n = self.product.dims().0;
        let m = self.mod_dim;
        for i in 0..n {
            for j in 0..n {
                let xy = Vector(self.product.basis_product(i, j).to_vec());
                let l_xy = self.left.matrix_of(&xy);
                let r_xy = self.right.matrix_of(&xy);
                for k in 0..m {
                    let a = Vector::basis(m, k);
                    let w = [i, j, k];
                    let (l, r) = (&self.left, &self.right);
                    c.equal("AB1", &w, &l_xy.apply(&a), &l.matrix(i).apply(&l.matrix(j).apply(&a)));
                    c.equal("AB2", &w, &r_xy.apply(&a), &r.matrix(j).apply(&r.matrix(i).apply(&a)));
                    c.equal(
                        "AB3",
                        &w,
                        &l.matrix(i).apply(&r.matrix(j).apply(&a)),
                        &r.matrix(j).apply(&l.matrix(i).apply(&a)),
                    );
                }
            }
        }
    }
}

pub fn check_representation<F: Field>(rep: &AdRep<F>) -> Report {
    rep.check()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::linalg::Matrix;

    type Q = Rational;

    fn nilpotent() -> AdAlgebra<Q> {
        AdAlgebra::from_entries(2, [(0, 0, 1, Q::from(1))], []).unwrap()
    }

    #[test]
    fn regular_and_dual_pass() {
        let a = nilpotent();
        let reg = AdRep::regular(&a);
        assert!(reg.check().passed());
        assert!(reg.dual().check().passed());
        assert_eq!(reg.dual().dual(), reg);
    }

    #[test]
    fn regular_sum_family_is_the_associated_multiplication() {
        let a = nilpotent();
        let reg = AdRep::regular(&a);
        let sum = reg.induced_assoc(InducedAssoc::Sum);
        let dot = a.dot_table();
        assert_eq!(sum.left(), &dot.left_family());
        assert_eq!(sum.right(), &dot.right_family());
    }

    #[test]
    fn induced_bimodules_pass() {
        let reg = AdRep::regular(&nilpotent());
        for rep in [reg.clone(), reg.dual()] {
            for kind in InducedAssoc::ALL {
                assert!(rep.induced_assoc(kind).check().passed(), "{kind:?}");
            }
        }
    }

    #[test]
    fn semidirect_product_is_refused_for_bad_actions() {
        let a = nilpotent();
        let mut bad = AdRep::trivial(&a, 1);
        bad.l_succ = ActionFamily::from_matrices(1, vec![Matrix::identity(1), Matrix::zeros(1, 1)]);
        assert!(!bad.check().passed());
        assert!(matches!(bad.semidirect_product(), Err(Error::Precondition(_))));
        assert!(!bad.semidirect_product_unchecked().check().passed());
    }

    #[test]
    fn semidirect_with_dual_is_anti_dendriform() {
        let a = nilpotent();
        let s = AdRep::regular(&a).dual().semidirect_product().unwrap();
        assert_eq!(s.dim(), 4);
        assert!(s.check().passed());
    }
}
