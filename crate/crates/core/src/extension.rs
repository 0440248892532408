//! Crossed products and non-abelian extensions.
//!
//! A crossed datum of `A` through an algebra `V` consists of actions
//! `l≻, r≻, l≺, r≺` of `A` on `V` and cocycles `ω1, ω2: A × A -> V`. On
//! `A ⊕ V`:
//!
//! ```text
//! (x,a) ⪰ (y,b) = (x≻y, ω1(x,y) + l≻(x)b + r≻(y)a + a≻_V b)
//! (x,a) ⪯ (y,b) = (x≺y, ω2(x,y) + l≺(x)b + r≺(y)a + a≺_V b)
//! ```
//!
//! The six maps with a fixed `V` form a non-abelian 2-cocycle when `C1`-`C11`
//! hold. `C12` is the requirement that `V` itself is anti-dendriform.

use std::collections::BTreeSet;

use crate::algebra::AdAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{LinearSolve, LinearSystem, Matrix, Vector};
use crate::report::{Checker, Report};
use crate::representation::check_family_shape;
use crate::tables::{ActionFamily, BilinearOp};
use crate::unified::{check_bilinear_shape, ExtendingDatum, Instance};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedDatum<F> {
    pub algebra: AdAlgebra<F>,
    pub v_algebra: AdAlgebra<F>,
    pub l_succ: ActionFamily<F>,
    pub r_succ: ActionFamily<F>,
    pub l_prec: ActionFamily<F>,
    pub r_prec: ActionFamily<F>,
    pub omega1: BilinearOp<F>,
    pub omega2: BilinearOp<F>,
}

/// With `V` fixed, a crossed datum is the same data as a non-abelian
/// 2-cocycle.
pub type NonAbelian2Cocycle<F> = CrossedDatum<F>;

impl<F: Field> CrossedDatum<F> {
    /// Zero actions and cocycles: the crossed product is `A × V`.
    pub fn trivial(algebra: &AdAlgebra<F>, v_algebra: &AdAlgebra<F>) -> Self {
        let (n, m) = (algebra.dim(), v_algebra.dim());
        let z = ActionFamily::zeros(n, m);
        CrossedDatum {
            algebra: algebra.clone(),
            v_algebra: v_algebra.clone(),
            l_succ: z.clone(),
            r_succ: z.clone(),
            l_prec: z.clone(),
            r_prec: z,
            omega1: BilinearOp::zeros(n, n, m),
            omega2: BilinearOp::zeros(n, n, m),
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.algebra.dim(), self.v_algebra.dim())
    }

    pub fn validate(&self) -> Result<()> {
        let (n, m) = self.dims();
        for (name, f) in [
            ("l≻", &self.l_succ),
            ("r≻", &self.r_succ),
            ("l≺", &self.l_prec),
            ("r≺", &self.r_prec),
        ] {
            check_family_shape(name, f, n, m)?;
        }
        check_bilinear_shape("ω1", &self.omega1, (n, n, m))?;
        check_bilinear_shape("ω2", &self.omega2, (n, n, m))?;
        Ok(())
    }

    /// Emits every instance of `C1`-`C11`. Chains are listed in the order
    /// `x≻(y≻z), -(x·y)≻z, -x≺(y·z), (x≺y)≺z` and `(x≻y)≺z, x≻(y≺z)`.
    pub fn visit_conditions(&self, emit: &mut dyn FnMut(Instance<F>)) {
        let (n, m) = self.dims();
        let alg = &self.algebra;
        let v = &self.v_algebra;
        let sv = |a: &[F], b: &[F]| v.succ(a, b);
        let pv = |a: &[F], b: &[F]| v.prec(a, b);
        let dv = |a: &[F], b: &[F]| v.dot(a, b);
        let ls = |x: &[F], a: &[F]| self.l_succ.apply(x, a);
        let rs = |x: &[F], a: &[F]| self.r_succ.apply(x, a);
        let lp = |x: &[F], a: &[F]| self.l_prec.apply(x, a);
        let rp = |x: &[F], a: &[F]| self.r_prec.apply(x, a);
        let ld = |x: &[F], a: &[F]| ls(x, a) + lp(x, a);
        let rd = |x: &[F], a: &[F]| rs(x, a) + rp(x, a);
        let w1 = |x: &[F], y: &[F]| self.omega1.apply(x, y);
        let w2 = |x: &[F], y: &[F]| self.omega2.apply(x, y);
        let wd = |x: &[F], y: &[F]| w1(x, y) + w2(x, y);
        let ea = |i: usize| Vector::<F>::basis(n, i);
        let ev = |i: usize| Vector::<F>::basis(m, i);
        let mut put = |label: &'static str, witness: [usize; 3], terms: Vec<Vector<F>>| {
            emit(Instance {
                label,
                witness: witness.to_vec(),
                terms,
            })
        };

        for i in 0..n {
            let x = ea(i);
            for j in 0..n {
                let y = ea(j);
                for k in 0..n {
                    let z = ea(k);
                    put(
                        "C1",
                        [i, j, k],
                        vec![
                            ls(&x, &w1(&y, &z)) + w1(&x, &alg.succ(&y, &z)),
                            -rs(&z, &wd(&x, &y)) - w1(&alg.dot(&x, &y), &z),
                            -lp(&x, &wd(&y, &z)) - w2(&x, &alg.dot(&y, &z)),
                            rp(&z, &w2(&x, &y)) + w2(&alg.prec(&x, &y), &z),
                        ],
                    );
                    put(
                        "C8",
                        [i, j, k],
                        vec![
                            rp(&z, &w1(&x, &y)) + w2(&alg.succ(&x, &y), &z),
                            ls(&x, &w2(&y, &z)) + w1(&x, &alg.prec(&y, &z)),
                        ],
                    );
                }
                for k in 0..m {
                    let a = ev(k);
                    // (x, y, a)
                    put(
                        "C2",
                        [i, j, k],
                        vec![
                            ls(&x, &ls(&y, &a)),
                            lp(&alg.prec(&x, &y), &a) + pv(&w2(&x, &y), &a),
                            -ls(&alg.dot(&x, &y), &a) - sv(&wd(&x, &y), &a),
                            -lp(&x, &ld(&y, &a)),
                        ],
                    );
                    put(
                        "C9",
                        [i, j, k],
                        vec![
                            lp(&alg.succ(&x, &y), &a) + pv(&w1(&x, &y), &a),
                            ls(&x, &lp(&y, &a)),
                        ],
                    );
                    // (x, a, y)
                    put(
                        "C3",
                        [i, k, j],
                        vec![
                            ls(&x, &rs(&y, &a)),
                            rp(&y, &lp(&x, &a)),
                            -rs(&y, &ld(&x, &a)),
                            -lp(&x, &rd(&y, &a)),
                        ],
                    );
                    put("C9", [i, k, j], vec![rp(&y, &ls(&x, &a)), ls(&x, &rp(&y, &a))]);
                    // (a, x, y)
                    put(
                        "C4",
                        [k, i, j],
                        vec![
                            rs(&alg.succ(&x, &y), &a) + sv(&a, &w1(&x, &y)),
                            rp(&y, &rp(&x, &a)),
                            -rp(&alg.dot(&x, &y), &a) - pv(&a, &wd(&x, &y)),
                            -rs(&y, &rd(&x, &a)),
                        ],
                    );
                    put(
                        "C10",
                        [k, i, j],
                        vec![
                            rp(&y, &rs(&x, &a)),
                            rs(&alg.prec(&x, &y), &a) + sv(&a, &w2(&x, &y)),
                        ],
                    );
                }
            }
            for k in 0..m {
                let a = ev(k);
                for l in 0..m {
                    let b = ev(l);
                    // (x, a, b)
                    put(
                        "C5",
                        [i, k, l],
                        vec![
                            ls(&x, &sv(&a, &b)),
                            pv(&lp(&x, &a), &b),
                            -sv(&ld(&x, &a), &b),
                            -lp(&x, &dv(&a, &b)),
                        ],
                    );
                    put("C10", [i, k, l], vec![pv(&ls(&x, &a), &b), ls(&x, &pv(&a, &b))]);
                    // (a, x, b)
                    put(
                        "C6",
                        [k, i, l],
                        vec![
                            sv(&a, &ls(&x, &b)),
                            pv(&rp(&x, &a), &b),
                            -sv(&rd(&x, &a), &b),
                            -pv(&a, &ld(&x, &b)),
                        ],
                    );
                    put("C11", [k, i, l], vec![pv(&rs(&x, &a), &b), sv(&a, &lp(&x, &b))]);
                    // (a, b, x)
                    put(
                        "C7",
                        [k, l, i],
                        vec![
                            sv(&a, &rs(&x, &b)),
                            rp(&x, &pv(&a, &b)),
                            -rs(&x, &dv(&a, &b)),
                            -pv(&a, &rd(&x, &b)),
                        ],
                    );
                    put("C11", [k, l, i], vec![rp(&x, &sv(&a, &b)), sv(&a, &rp(&x, &b))]);
                }
            }
        }
    }

    pub fn check(&self) -> Result<Report> {
        self.check_with(Checker::new())
    }

    /// `A`'s own axioms, `C1`-`C11`, and `C12` (the axioms of `V`, reported
    /// under that label). Passing is equivalent to the crossed product being
    /// anti-dendriform.
    pub fn check_with(&self, mut c: Checker) -> Result<Report> {
        self.validate()?;
        self.algebra.check_into(&mut c);
        self.visit_conditions(&mut |inst| {
            c.chain(inst.label, &inst.witness, &inst.terms);
        });
        let mut vc = Checker::with_mode(c.is_exhaustive());
        self.v_algebra.check_into(&mut vc);
        let mut vr = vc.finish();
        for v in vr.violations.iter_mut() {
            v.equation = "C12".to_string();
        }
        if !c.is_exhaustive() {
            vr.violations.truncate(1);
        }
        c.absorb(vr);
        Ok(c.finish())
    }

    /// Checks only `C1`-`C11`, i.e. whether the six maps form a non-abelian
    /// 2-cocycle with values in the given `V`.
    pub fn check_cocycle(&self) -> Result<Report> {
        self.validate()?;
        let mut c = Checker::new();
        self.visit_conditions(&mut |inst| {
            c.chain(inst.label, &inst.witness, &inst.terms);
        });
        Ok(c.finish())
    }

    fn product_basis(&self) -> Vec<String> {
        let mut names = self.algebra.basis().to_vec();
        let taken: BTreeSet<&String> = names.iter().collect();
        let v_names = self.v_algebra.basis();
        if v_names.iter().any(|s| taken.contains(s)) {
            names.extend((1..=v_names.len()).map(|i| format!("v{i}")));
        } else {
            names.extend(v_names.iter().cloned());
        }
        names
    }

    pub fn crossed_product(&self) -> Result<AdAlgebra<F>> {
        let r = self.check()?;
        if let Some(v) = r.first_violation() {
            return Err(Error::precondition(format!(
                "not a crossed system: {} fails at {:?}",
                v.equation, v.witness
            )));
        }
        self.crossed_product_unchecked()
    }

    /// Assembles the products on `A ⊕ V` (basis of `A` first).
    pub fn crossed_product_unchecked(&self) -> Result<AdAlgebra<F>> {
        self.validate()?;
        let (n, m) = self.dims();
        let build = |op: &BilinearOp<F>, vop: &BilinearOp<F>, l: &ActionFamily<F>, r: &ActionFamily<F>, w: &BilinearOp<F>| {
            BilinearOp::from_fn(n + m, n + m, n + m, |i, j| match (i < n, j < n) {
                (true, true) => Vector(op.basis_product(i, j).to_vec()).concat(w.basis_product(i, j)),
                (true, false) => Vector::zeros(n).concat(&l.matrix(i).column(j - n)),
                (false, true) => Vector::zeros(n).concat(&r.matrix(j).column(i - n)),
                (false, false) => Vector::zeros(n).concat(vop.basis_product(i - n, j - n)),
            })
        };
        let succ = build(
            self.algebra.succ_table(),
            self.v_algebra.succ_table(),
            &self.l_succ,
            &self.r_succ,
            &self.omega1,
        );
        let prec = build(
            self.algebra.prec_table(),
            self.v_algebra.prec_table(),
            &self.l_prec,
            &self.r_prec,
            &self.omega2,
        );
        AdAlgebra::new(self.product_basis(), succ, prec)
    }

    /// The same structure seen as a unified product of `V` (the subalgebra)
    /// through the space of `A`; its product lives on `V ⊕ A`.
    pub fn as_extending_datum(&self) -> ExtendingDatum<F> {
        let (n, _) = self.dims();
        let mut d = ExtendingDatum::trivial(&self.v_algebra, n);
        d.rho_succ = self.l_succ.clone();
        d.mu_succ = self.r_succ.clone();
        d.rho_prec = self.l_prec.clone();
        d.mu_prec = self.r_prec.clone();
        d.varpi1 = self.omega1.clone();
        d.varpi2 = self.omega2.clone();
        d.succ_v = self.algebra.succ_table().clone();
        d.prec_v = self.algebra.prec_table().clone();
        d
    }

    /// Reads a crossed datum from an algebra on `A ⊕ V` (basis of `A` first)
    /// in which `V` is an ideal and the projection to `A` is a homomorphism.
    pub fn from_product_on_sum(algebra: &AdAlgebra<F>, total: &AdAlgebra<F>) -> Result<Self> {
        let n = algebra.dim();
        let big = total.dim();
        if big < n {
            return Err(Error::dim("ambient algebra is smaller than the quotient"));
        }
        let m = big - n;
        let restrict = |op: &BilinearOp<F>| {
            BilinearOp::from_fn(m, m, m, |i, j| Vector(op.basis_product(n + i, n + j)[n..].to_vec()))
        };
        for (op, a_op) in [
            (total.succ_table(), algebra.succ_table()),
            (total.prec_table(), algebra.prec_table()),
        ] {
            for i in 0..big {
                for j in 0..big {
                    let got = &op.basis_product(i, j)[..n];
                    let want = if i < n && j < n {
                        a_op.basis_product(i, j).to_vec()
                    } else {
                        vec![F::zero(); n]
                    };
                    if got != want.as_slice() {
                        return Err(Error::precondition(format!(
                            "projection to A is not a homomorphism with kernel an ideal (basis pair {i}, {j})"
                        )));
                    }
                }
            }
        }
        let v_names: Vec<String> = total.basis()[n..].to_vec();
        let v_algebra = AdAlgebra::new(v_names, restrict(total.succ_table()), restrict(total.prec_table()))?;
        let fam = |op: &BilinearOp<F>, left: bool| {
            ActionFamily::from_fn(n, m, |x| {
                Matrix::from_fn(m, m, |r, c| {
                    let p = if left {
                        op.basis_product(x, n + c)
                    } else {
                        op.basis_product(n + c, x)
                    };
                    p[n + r].clone()
                })
            })
        };
        let cocycle = |op: &BilinearOp<F>| BilinearOp::from_fn(n, n, m, |i, j| Vector(op.basis_product(i, j)[n..].to_vec()));
        Ok(CrossedDatum {
            algebra: algebra.clone(),
            v_algebra,
            l_succ: fam(total.succ_table(), true),
            r_succ: fam(total.succ_table(), false),
            l_prec: fam(total.prec_table(), true),
            r_prec: fam(total.prec_table(), false),
            omega1: cocycle(total.succ_table()),
            omega2: cocycle(total.prec_table()),
        })
    }

    pub fn map_field<G: Field>(&self, f: impl Fn(&F) -> G) -> CrossedDatum<G> {
        CrossedDatum {
            algebra: self.algebra.map_field(&f),
            v_algebra: self.v_algebra.map_field(&f),
            l_succ: self.l_succ.map_field(&f),
            r_succ: self.r_succ.map_field(&f),
            l_prec: self.l_prec.map_field(&f),
            r_prec: self.r_prec.map_field(&f),
            omega1: self.omega1.map_field(&f),
            omega2: self.omega2.map_field(&f),
        }
    }
}

pub fn check_crossed_system<F: Field>(d: &CrossedDatum<F>) -> Result<Report> {
    d.check()
}

/// Output of [`cocycle_from_section`].
#[derive(Clone, Debug)]
pub struct SectionCocycle<F> {
    pub datum: CrossedDatum<F>,
    /// Basis of `V = ker p` inside `E`, as columns.
    pub kernel: Matrix<F>,
    /// `φ(x, a) = s(x) + a`, an isomorphism `A ♯ V -> E`.
    pub iso: Matrix<F>,
}

/// The non-abelian 2-cocycle of the extension `0 -> ker p -> E -> A -> 0`
/// induced by the section `s`:
/// `l≻(x)a = s(x)≻a`, `r≻(x)a = a≻s(x)`, `ω1(x,y) = s(x)≻s(y) - s(x≻y)`,
/// and likewise for `≺`.
pub fn cocycle_from_section<F: Field>(
    e: &AdAlgebra<F>,
    a: &AdAlgebra<F>,
    p: &Matrix<F>,
    s: &Matrix<F>,
) -> Result<SectionCocycle<F>> {
    let (big, n) = (e.dim(), a.dim());
    if p.shape() != (n, big) || s.shape() != (big, n) {
        return Err(Error::dim(format!(
            "projection must be {n}x{big} and section {big}x{n}, got {:?} and {:?}",
            p.shape(),
            s.shape()
        )));
    }
    if p.mul(s) != Matrix::identity(n) {
        return Err(Error::precondition("p∘s is not the identity"));
    }
    let hom = e.check_homomorphism(a, p)?;
    if let Some(v) = hom.first_violation() {
        return Err(Error::precondition(format!(
            "projection is not a homomorphism ({} fails at {:?})",
            v.equation, v.witness
        )));
    }
    let kernel_vecs = p.kernel();
    let kernel = Matrix::from_columns(big, &kernel_vecs);
    let mut cols: Vec<Vector<F>> = (0..n).map(|i| s.column(i)).collect();
    cols.extend(kernel_vecs.iter().cloned());
    let iso = Matrix::from_columns(big, &cols);
    let moved = e.transform(&iso)?;
    let moved = moved.with_basis(
        a.basis()
            .iter()
            .cloned()
            .chain((1..=kernel_vecs.len()).map(|i| format!("b{i}")))
            .collect(),
    )?;
    let datum = CrossedDatum::from_product_on_sum(a, &moved)?;
    Ok(SectionCocycle { datum, kernel, iso })
}

/// Checks `N1`-`N5` for `ζ: A -> V`, i.e. that `c` and `c2` are
/// cohomologous via `ζ`. The map `(x, a) ↦ (x, ζ(x) + a)` is then an
/// isomorphism from the crossed product of `c` onto that of `c2`.
pub fn check_cocycles_cohomologous<F: Field>(
    c: &CrossedDatum<F>,
    c2: &CrossedDatum<F>,
    zeta: &Matrix<F>,
) -> Result<Report> {
    c.validate()?;
    c2.validate()?;
    let (n, m) = c.dims();
    if c2.algebra != c.algebra || c2.dims() != (n, m) {
        return Err(Error::dim("cocycles live on different algebras"));
    }
    if zeta.shape() != (m, n) {
        return Err(Error::dim(format!("ζ must be {m}x{n}, got {:?}", zeta.shape())));
    }
    let alg = &c.algebra;
    let v2 = &c2.v_algebra;
    let mut ch = Checker::new();
    for i in 0..n {
        let x = alg.e(i);
        let zx = zeta.apply(&x);
        for k in 0..m {
            let a = Vector::basis(m, k);
            let w = [i, k];
            ch.equal("N1", &w, &c.l_prec.apply(&x, &a), &(c2.l_prec.apply(&x, &a) + v2.prec(&zx, &a)));
            ch.equal("N1", &w, &c.l_succ.apply(&x, &a), &(c2.l_succ.apply(&x, &a) + v2.succ(&zx, &a)));
            ch.equal("N2", &w, &c.r_prec.apply(&x, &a), &(c2.r_prec.apply(&x, &a) + v2.prec(&a, &zx)));
            ch.equal("N2", &w, &c.r_succ.apply(&x, &a), &(c2.r_succ.apply(&x, &a) + v2.succ(&a, &zx)));
        }
        for j in 0..n {
            let y = alg.e(j);
            let zy = zeta.apply(&y);
            let w = [i, j];
            ch.equal(
                "N3",
                &w,
                &(c.omega1.apply(&x, &y) + zeta.apply(&alg.succ(&x, &y))),
                &(c2.omega1.apply(&x, &y) + c2.l_succ.apply(&x, &zy) + c2.r_succ.apply(&y, &zx) + v2.succ(&zx, &zy)),
            );
            ch.equal(
                "N4",
                &w,
                &(c.omega2.apply(&x, &y) + zeta.apply(&alg.prec(&x, &y))),
                &(c2.omega2.apply(&x, &y) + c2.l_prec.apply(&x, &zy) + c2.r_prec.apply(&y, &zx) + v2.prec(&zx, &zy)),
            );
        }
    }
    for k in 0..m {
        for l in 0..m {
            let (a, b) = (Vector::basis(m, k), Vector::basis(m, l));
            let w = [k, l];
            ch.equal("N5", &w, &c.v_algebra.succ(&a, &b), &v2.succ(&a, &b));
            ch.equal("N5", &w, &c.v_algebra.prec(&a, &b), &v2.prec(&a, &b));
        }
    }
    Ok(ch.finish())
}

/// `(x, a) ↦ (x, ζ(x) + a)` on `A ⊕ V`.
pub fn cohomology_iso<F: Field>(zeta: &Matrix<F>) -> Matrix<F> {
    let (m, n) = zeta.shape();
    Matrix::identity(n).direct_sum(&Matrix::identity(m)).add(&Matrix::from_fn(n + m, n + m, |r, c| {
        if r >= n && c < n {
            zeta[(r - n, c)].clone()
        } else {
            F::zero()
        }
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZetaSearch<F> {
    Found(Matrix<F>),
    /// The linear system for `ζ` has no solution; the certificate `y`
    /// satisfies `yᵀM = 0` and `y·b != 0`.
    Infeasible { certificate: Vector<F> },
}

/// Solves `N1`-`N4` for `ζ`. The equations are linear exactly when `V` has
/// zero products, which is required here.
pub fn find_cohomologous_zeta<F: Field>(c: &CrossedDatum<F>, c2: &CrossedDatum<F>) -> Result<ZetaSearch<F>> {
    c.validate()?;
    c2.validate()?;
    let (n, m) = c.dims();
    if c2.algebra != c.algebra || c2.dims() != (n, m) {
        return Err(Error::dim("cocycles live on different algebras"));
    }
    if !c2.v_algebra.succ_table().is_zero() || !c2.v_algebra.prec_table().is_zero() {
        return Err(Error::precondition(
            "the linear search for ζ needs V to have zero products",
        ));
    }
    if c.v_algebra != c2.v_algebra {
        // N5 fails for every ζ; an empty certificate marks this case.
        return Ok(ZetaSearch::Infeasible {
            certificate: Vector::zeros(0),
        });
    }
    let unknowns = m * n;
    let unit = |u: usize| {
        let mut z = Matrix::zeros(m, n);
        z[(u / n, u % n)] = F::one();
        z
    };
    let units: Vec<Matrix<F>> = (0..unknowns).map(unit).collect();
    let zero = Matrix::zeros(m, n);
    let mut sys = LinearSystem::new(unknowns);
    let mut add_affine = |f: &dyn Fn(&Matrix<F>) -> Vector<F>| {
        let base = f(&zero);
        let cols: Vec<Vector<F>> = units.iter().map(|u| f(u) - &base).collect();
        for r in 0..base.len() {
            sys.push(cols.iter().map(|c| c[r].clone()).collect(), -base[r].clone());
        }
    };
    let alg = &c.algebra;
    for i in 0..n {
        let x = alg.e(i);
        for k in 0..m {
            let a = Vector::basis(m, k);
            for (f1, f2) in [
                (&c.l_succ, &c2.l_succ),
                (&c.r_succ, &c2.r_succ),
                (&c.l_prec, &c2.l_prec),
                (&c.r_prec, &c2.r_prec),
            ] {
                add_affine(&|_z| f1.apply(&x, &a) - f2.apply(&x, &a));
            }
        }
        for j in 0..n {
            let y = alg.e(j);
            add_affine(&|z| {
                c.omega1.apply(&x, &y) + z.apply(&alg.succ(&x, &y))
                    - c2.omega1.apply(&x, &y)
                    - c2.l_succ.apply(&x, &z.apply(&y))
                    - c2.r_succ.apply(&y, &z.apply(&x))
            });
            add_affine(&|z| {
                c.omega2.apply(&x, &y) + z.apply(&alg.prec(&x, &y))
                    - c2.omega2.apply(&x, &y)
                    - c2.l_prec.apply(&x, &z.apply(&y))
                    - c2.r_prec.apply(&y, &z.apply(&x))
            });
        }
    }
    Ok(match sys.solve() {
        LinearSolve::Consistent(s) => ZetaSearch::Found(Matrix::from_fn(m, n, |r, col| s.particular[r * n + col].clone())),
        LinearSolve::Inconsistent { certificate } => ZetaSearch::Infeasible { certificate },
    })
}

/// A pair of automorphisms `(α, β)` of `A` and `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutPair<F> {
    pub alpha: Matrix<F>,
    pub beta: Matrix<F>,
}

impl<F: Field> AutPair<F> {
    pub fn identity(n: usize, m: usize) -> Self {
        AutPair {
            alpha: Matrix::identity(n),
            beta: Matrix::identity(m),
        }
    }

    /// Both maps invertible and compatible with both products. Labels
    /// `α-H≻`, `α-H≺`, `β-H≻`, `β-H≺`, `α-invertible`, `β-invertible`.
    pub fn check(&self, a: &AdAlgebra<F>, b: &AdAlgebra<F>) -> Result<Report> {
        let mut c = Checker::new();
        for (name, m, alg) in [("α", &self.alpha, a), ("β", &self.beta, b)] {
            let r = alg.check_homomorphism(alg, m)?;
            let mut r2 = r;
            for v in r2.violations.iter_mut() {
                v.equation = format!("{name}-{}", v.equation);
            }
            c.absorb(r2);
            if m.inverse().is_none() {
                c.fail_with(&format!("{name}-invertible"), &[], "map is singular");
            }
        }
        Ok(c.finish())
    }
}

/// Checks `Iam1`-`Iam4` for `φ: A -> B` against the cocycle `c`. On success
/// also builds `γ(x, a) = (α(x), φ(x) + β(a))` on the crossed product and
/// verifies that it is an automorphism with `γ i = i β` and `p γ = α p`
/// (labels `γ-H≻`, `γ-H≺`, `γ-invertible`, `γi=iβ`, `pγ=αp`).
pub fn check_inducible<F: Field>(c: &CrossedDatum<F>, pair: &AutPair<F>, phi: &Matrix<F>) -> Result<InducibleReport<F>> {
    c.validate()?;
    let (n, m) = c.dims();
    if pair.alpha.shape() != (n, n) || pair.beta.shape() != (m, m) || phi.shape() != (m, n) {
        return Err(Error::dim(format!(
            "expected α {n}x{n}, β {m}x{m}, φ {m}x{n}; got {:?}, {:?}, {:?}",
            pair.alpha.shape(),
            pair.beta.shape(),
            phi.shape()
        )));
    }
    let alg = &c.algebra;
    let b = &c.v_algebra;
    let (al, be) = (&pair.alpha, &pair.beta);
    let mut ch = Checker::new();
    for i in 0..n {
        let x = alg.e(i);
        let ax = al.apply(&x);
        let px = phi.apply(&x);
        for k in 0..m {
            let a = Vector::basis(m, k);
            let ba = be.apply(&a);
            let w = [i, k];
            ch.equal(
                "Iam1",
                &w,
                &(be.apply(&c.l_succ.apply(&x, &a)) - c.l_succ.apply(&ax, &ba)),
                &b.succ(&px, &ba),
            );
            ch.equal(
                "Iam1",
                &w,
                &(be.apply(&c.r_succ.apply(&x, &a)) - c.r_succ.apply(&ax, &ba)),
                &b.succ(&ba, &px),
            );
            ch.equal(
                "Iam2",
                &w,
                &(be.apply(&c.l_prec.apply(&x, &a)) - c.l_prec.apply(&ax, &ba)),
                &b.prec(&px, &ba),
            );
            ch.equal(
                "Iam2",
                &w,
                &(be.apply(&c.r_prec.apply(&x, &a)) - c.r_prec.apply(&ax, &ba)),
                &b.prec(&ba, &px),
            );
        }
        for j in 0..n {
            let y = alg.e(j);
            let ay = al.apply(&y);
            let py = phi.apply(&y);
            let w = [i, j];
            ch.equal(
                "Iam3",
                &w,
                &(be.apply(&c.omega1.apply(&x, &y)) - c.omega1.apply(&ax, &ay)),
                &(b.succ(&px, &py) - phi.apply(&alg.succ(&x, &y)) + c.l_succ.apply(&ax, &py) + c.r_succ.apply(&ay, &px)),
            );
            ch.equal(
                "Iam4",
                &w,
                &(be.apply(&c.omega2.apply(&x, &y)) - c.omega2.apply(&ax, &ay)),
                &(b.prec(&px, &py) - phi.apply(&alg.prec(&x, &y)) + c.l_prec.apply(&ax, &py) + c.r_prec.apply(&ay, &px)),
            );
        }
    }
    let mut gamma = None;
    if ch.passed_so_far() {
        let g = extension_automorphism(pair, phi);
        let e = c.crossed_product_unchecked()?;
        let mut r = e.check_homomorphism(&e, &g)?;
        for v in r.violations.iter_mut() {
            v.equation = format!("γ-{}", v.equation);
        }
        ch.absorb(r);
        if g.inverse().is_none() {
            ch.fail_with("γ-invertible", &[], "γ is singular");
        }
        let (inc, proj) = canonical_maps::<F>(n, m);
        ch.equal("γi=iβ", &[], g.mul(&inc).entries(), inc.mul(be).entries());
        ch.equal("pγ=αp", &[], proj.mul(&g).entries(), al.mul(&proj).entries());
        gamma = Some(g);
    }
    Ok(InducibleReport {
        report: ch.finish(),
        gamma,
    })
}

#[derive(Clone, Debug)]
pub struct InducibleReport<F> {
    pub report: Report,
    /// The automorphism of the crossed product, present when `Iam1`-`Iam4`
    /// hold.
    pub gamma: Option<Matrix<F>>,
}

/// `γ(x, a) = (α(x), φ(x) + β(a))`, i.e. `γ(a + s(x)) = β(a) + φ(x) + sα(x)`
/// for the section `s(x) = (x, 0)`.
pub fn extension_automorphism<F: Field>(pair: &AutPair<F>, phi: &Matrix<F>) -> Matrix<F> {
    let (n, m) = (pair.alpha.rows(), pair.beta.rows());
    Matrix::from_fn(n + m, n + m, |r, c| match (r < n, c < n) {
        (true, true) => pair.alpha[(r, c)].clone(),
        (true, false) => F::zero(),
        (false, true) => phi[(r - n, c)].clone(),
        (false, false) => pair.beta[(r - n, c - n)].clone(),
    })
}

/// The inclusion `B -> A ⊕ B` and projection `A ⊕ B -> A`.
pub fn canonical_maps<F: Field>(n: usize, m: usize) -> (Matrix<F>, Matrix<F>) {
    let inc = Matrix::from_fn(n + m, m, |r, c| if r == n + c { F::one() } else { F::zero() });
    let proj = Matrix::from_fn(n, n + m, |r, c| if r == c { F::one() } else { F::zero() });
    (inc, proj)
}

/// `K(γ) = (p γ s, γ|_B)` for the crossed product with `s(x) = (x, 0)`.
pub fn restriction_pair<F: Field>(gamma: &Matrix<F>, n: usize, m: usize) -> AutPair<F> {
    let (inc, proj) = canonical_maps::<F>(n, m);
    let sec = proj.transpose();
    AutPair {
        alpha: proj.mul(gamma).mul(&sec),
        beta: Matrix::from_fn(m, m, |r, c| gamma.mul(&inc)[(n + r, c)].clone()),
    }
}

/// `l_{α,β}(x) = β l(α⁻¹x) β⁻¹`, `ω_{α,β}(x,y) = β ω(α⁻¹x, α⁻¹y)`, and the
/// same for the other maps. `(x, a) ↦ (α(x), β(a))` is an isomorphism from
/// the crossed product of `c` onto that of the result.
pub fn transformed_cocycle<F: Field>(c: &CrossedDatum<F>, pair: &AutPair<F>) -> Result<CrossedDatum<F>> {
    c.validate()?;
    let (n, m) = c.dims();
    if pair.alpha.shape() != (n, n) || pair.beta.shape() != (m, m) {
        return Err(Error::dim("automorphism pair has the wrong shape"));
    }
    let ai = pair
        .alpha
        .inverse()
        .ok_or_else(|| Error::precondition("α is not invertible"))?;
    let bi = pair
        .beta
        .inverse()
        .ok_or_else(|| Error::precondition("β is not invertible"))?;
    let be = &pair.beta;
    let fam = |f: &ActionFamily<F>| {
        ActionFamily::from_fn(n, m, |x| be.mul(&f.matrix_of(&ai.column(x))).mul(&bi))
    };
    let cocycle = |w: &BilinearOp<F>| {
        BilinearOp::from_fn(n, n, m, |i, j| be.apply(&w.apply(&ai.column(i), &ai.column(j))))
    };
    Ok(CrossedDatum {
        algebra: c.algebra.clone(),
        v_algebra: c.v_algebra.clone(),
        l_succ: fam(&c.l_succ),
        r_succ: fam(&c.r_succ),
        l_prec: fam(&c.l_prec),
        r_prec: fam(&c.r_prec),
        omega1: cocycle(&c.omega1),
        omega2: cocycle(&c.omega2),
    })
}

/// The Wells class `[c_{α,β} - c]`, kept as the pair of cocycles.
#[derive(Clone, Debug)]
pub struct WellsClass<F> {
    pub transformed: CrossedDatum<F>,
    pub original: CrossedDatum<F>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WellsVerdict<F> {
    /// The class vanishes: `c_{α,β}` and `c` are cohomologous via `ζ`.
    Vanishes { zeta: Matrix<F> },
    NonVanishing { certificate: Vector<F> },
}

pub fn wells_map<F: Field>(c: &CrossedDatum<F>, pair: &AutPair<F>) -> Result<WellsClass<F>> {
    Ok(WellsClass {
        transformed: transformed_cocycle(c, pair)?,
        original: c.clone(),
    })
}

impl<F: Field> WellsClass<F> {
    /// Decides vanishing with the linear search (requires `B` to have zero
    /// products).
    pub fn decide(&self) -> Result<WellsVerdict<F>> {
        Ok(match find_cohomologous_zeta(&self.transformed, &self.original)? {
            ZetaSearch::Found(zeta) => {
                let r = check_cocycles_cohomologous(&self.transformed, &self.original, &zeta)?;
                debug_assert!(r.passed());
                WellsVerdict::Vanishes { zeta }
            }
            ZetaSearch::Infeasible { certificate } => WellsVerdict::NonVanishing { certificate },
        })
    }

    /// Verifies a supplied witness `ζ` for vanishing.
    pub fn check_witness(&self, zeta: &Matrix<F>) -> Result<Report> {
        check_cocycles_cohomologous(&self.transformed, &self.original, zeta)
    }
}

/// A basis of the non-abelian 1-cocycles: maps `φ: A -> B` whose image
/// annihilates `B` on both sides for both products, with
/// `φ(x≻y) = l≻(x)φ(y) + r≻(y)φ(x)` and likewise for `≺` (the terms
/// `φ(x)∘φ(y)` vanish on the annihilating subspace).
pub fn z1_basis<F: Field>(c: &CrossedDatum<F>) -> Result<Vec<Matrix<F>>> {
    c.validate()?;
    let (n, m) = c.dims();
    let unknowns = m * n;
    let b = &c.v_algebra;
    let alg = &c.algebra;
    let unit = |u: usize| {
        let mut z = Matrix::zeros(m, n);
        z[(u / n, u % n)] = F::one();
        z
    };
    let units: Vec<Matrix<F>> = (0..unknowns).map(unit).collect();
    let mut sys = LinearSystem::new(unknowns);
    let mut add_linear = |f: &dyn Fn(&Matrix<F>) -> Vector<F>| {
        let cols: Vec<Vector<F>> = units.iter().map(f).collect();
        let len = cols.first().map_or(0, |c| c.len());
        for r in 0..len {
            sys.push(cols.iter().map(|c| c[r].clone()).collect(), F::zero());
        }
    };
    for i in 0..n {
        let x = alg.e(i);
        for k in 0..m {
            let a = Vector::basis(m, k);
            add_linear(&|z| b.succ(&z.apply(&x), &a));
            add_linear(&|z| b.succ(&a, &z.apply(&x)));
            add_linear(&|z| b.prec(&z.apply(&x), &a));
            add_linear(&|z| b.prec(&a, &z.apply(&x)));
        }
        for j in 0..n {
            let y = alg.e(j);
            add_linear(&|z| {
                z.apply(&alg.succ(&x, &y)) - c.l_succ.apply(&x, &z.apply(&y)) - c.r_succ.apply(&y, &z.apply(&x))
            });
            add_linear(&|z| {
                z.apply(&alg.prec(&x, &y)) - c.l_prec.apply(&x, &z.apply(&y)) - c.r_prec.apply(&y, &z.apply(&x))
            });
        }
    }
    let (mat, _) = sys.matrix();
    Ok(mat
        .kernel()
        .into_iter()
        .map(|v| Matrix::from_fn(m, n, |r, col| v[r * n + col].clone()))
        .collect())
}

/// All `φ` over a finite field for which `γ(x, a) = (x, φ(x) + a)` is an
/// automorphism of the crossed product, i.e. the kernel of `K` read through
/// `γ ↦ γs - s`. Exponential in `dim A · dim B`; `limit` caps the number of
/// maps examined.
pub fn enumerate_ker_k<F: Field>(c: &CrossedDatum<F>, limit: usize) -> Result<Vec<Matrix<F>>> {
    c.validate()?;
    let elems = F::elements().ok_or_else(|| Error::precondition("enumeration needs a finite field"))?;
    let (n, m) = c.dims();
    let cells = n * m;
    let total = (elems.len() as u128).checked_pow(cells as u32).unwrap_or(u128::MAX);
    if total > limit as u128 {
        return Err(Error::precondition(format!(
            "{total} candidate maps exceed the enumeration limit {limit}"
        )));
    }
    let e = c.crossed_product_unchecked()?;
    let id = AutPair::identity(n, m);
    let mut found = Vec::new();
    let mut digits = vec![0usize; cells];
    loop {
        let phi = Matrix::from_fn(m, n, |r, col| elems[digits[r * n + col]].clone());
        let g = extension_automorphism(&id, &phi);
        if e.check_homomorphism(&e, &g)?.passed() {
            found.push(phi);
        }
        // Next tuple in base |F|.
        let mut pos = 0;
        loop {
            if pos == cells {
                return Ok(found);
            }
            digits[pos] += 1;
            if digits[pos] < elems.len() {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

/// Six-tuple `(A, B, C, D, θ₀, ε₀)` describing a crossed system of a
/// one-dimensional zero algebra `k` through `kⁿ` with zero products:
/// `A, B, C, D` are the matrices of `l≻, r≻, l≺, r≺` at the generator and
/// `θ₀ = ω1(e, e)`, `ε₀ = ω2(e, e)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gh2Tuple<F> {
    pub a: Matrix<F>,
    pub b: Matrix<F>,
    pub c: Matrix<F>,
    pub d: Matrix<F>,
    pub theta0: Vector<F>,
    pub epsilon0: Vector<F>,
}

impl<F: Field> Gh2Tuple<F> {
    pub fn zero(n: usize) -> Self {
        Gh2Tuple {
            a: Matrix::zeros(n, n),
            b: Matrix::zeros(n, n),
            c: Matrix::zeros(n, n),
            d: Matrix::zeros(n, n),
            theta0: Vector::zeros(n),
            epsilon0: Vector::zeros(n),
        }
    }

    pub fn n(&self) -> usize {
        self.a.rows()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        for (name, m) in [("A", &self.a), ("B", &self.b), ("C", &self.c), ("D", &self.d)] {
            if m.shape() != (n, n) {
                return Err(Error::dim(format!("{name} must be {n}x{n}, got {:?}", m.shape())));
            }
        }
        if self.theta0.len() != n || self.epsilon0.len() != n {
            return Err(Error::dim(format!("θ₀ and ε₀ must have length {n}")));
        }
        Ok(())
    }

    /// The relations obtained from `C1`-`C11`:
    ///
    /// ```text
    /// A² = -C(A+C) = 0,  AB = DC = -B(A+C) = -C(B+D),
    /// D² = -B(D+B) = 0,  AC = 0,  DB = 0,  AD = DA,
    /// Aθ₀ = -B(θ₀+ε₀) = -C(θ₀+ε₀) = Dε₀,  Dθ₀ = Aε₀.
    /// ```
    ///
    /// Labels are the relations themselves; witnesses are entry positions.
    pub fn check(&self) -> Result<Report> {
        self.validate()?;
        let n = self.n();
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let z = Matrix::zeros(n, n);
        let mut ch = Checker::new();
        let mats: Vec<(&str, Vec<Matrix<F>>)> = vec![
            ("A²=-C(A+C)=0", vec![a.mul(a), c.mul(&a.add(c)).neg(), z.clone()]),
            (
                "AB=DC=-B(A+C)=-C(B+D)",
                vec![a.mul(b), d.mul(c), b.mul(&a.add(c)).neg(), c.mul(&b.add(d)).neg()],
            ),
            ("D²=-B(D+B)=0", vec![d.mul(d), b.mul(&d.add(b)).neg(), z.clone()]),
            ("AC=0", vec![a.mul(c), z.clone()]),
            ("DB=0", vec![d.mul(b), z.clone()]),
            ("AD=DA", vec![a.mul(d), d.mul(a)]),
        ];
        for (label, terms) in &mats {
            for r in 0..n {
                for col in 0..n {
                    let entries: Vec<Vec<F>> = terms.iter().map(|m| vec![m[(r, col)].clone()]).collect();
                    ch.chain(label, &[r, col], &entries);
                }
            }
        }
        let te = &self.theta0 + &self.epsilon0;
        let vecs: Vec<(&str, Vec<Vector<F>>)> = vec![
            (
                "Aθ₀=-B(θ₀+ε₀)=-C(θ₀+ε₀)=Dε₀",
                vec![a.apply(&self.theta0), -b.apply(&te), -c.apply(&te), d.apply(&self.epsilon0)],
            ),
            ("Dθ₀=Aε₀", vec![d.apply(&self.theta0), a.apply(&self.epsilon0)]),
        ];
        for (label, terms) in &vecs {
            for r in 0..n {
                let entries: Vec<Vec<F>> = terms.iter().map(|v| vec![v[r].clone()]).collect();
                ch.chain(label, &[r], &entries);
            }
        }
        Ok(ch.finish())
    }

    /// The crossed datum of `k` (zero algebra, basis `e`) through `kⁿ`.
    pub fn to_crossed_datum(&self) -> Result<CrossedDatum<F>> {
        self.validate()?;
        let n = self.n();
        let k = AdAlgebra::zero(1).with_basis(vec![format!("E{}", n + 1)])?;
        let v = AdAlgebra::zero(n).with_basis((1..=n).map(|i| format!("E{i}")).collect())?;
        let fam = |m: &Matrix<F>| ActionFamily::from_matrices(n, vec![m.clone()]);
        let w = |t: &Vector<F>| BilinearOp::from_fn(1, 1, n, |_, _| t.clone());
        Ok(CrossedDatum {
            algebra: k,
            v_algebra: v,
            l_succ: fam(&self.a),
            r_succ: fam(&self.b),
            l_prec: fam(&self.c),
            r_prec: fam(&self.d),
            omega1: w(&self.theta0),
            omega2: w(&self.epsilon0),
        })
    }

    /// The crossed product `k^{n+1}` in the basis `E1, …, En, E_{n+1}` with
    /// `E_{n+1}` the generator of `k`.
    pub fn algebra(&self) -> Result<AdAlgebra<F>> {
        let n = self.n();
        let cp = self.to_crossed_datum()?.crossed_product_unchecked()?;
        // Crossed products list A first; move the generator to the end.
        let perm = Matrix::from_fn(n + 1, n + 1, |r, c| {
            let src = if c == n { 0 } else { c + 1 };
            if r == src { F::one() } else { F::zero() }
        });
        cp.transform(&perm)?
            .with_basis((1..=n + 1).map(|i| format!("E{i}")).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Gh2Verdict<F> {
    Cohomologous { w: Vector<F> },
    /// Some matrix differs; the label names which.
    MatricesDiffer { which: &'static str },
    /// No `w` solves the system; the certificate `y` has `yᵀM = 0`,
    /// `y·b != 0` for `M = [A+B; C+D]`, `b = [θ₀-θ₀'; ε₀-ε₀']`.
    NotCohomologous { certificate: Vector<F> },
}

/// Equal matrices and `θ₀ - θ₀' = (A+B)w`, `ε₀ - ε₀' = (C+D)w`.
pub fn gh2_tuples_cohomologous<F: Field>(t1: &Gh2Tuple<F>, t2: &Gh2Tuple<F>) -> Result<Gh2Verdict<F>> {
    t1.validate()?;
    t2.validate()?;
    if t1.n() != t2.n() {
        return Err(Error::dim("tuples have different sizes"));
    }
    for (which, x, y) in [("A", &t1.a, &t2.a), ("B", &t1.b, &t2.b), ("C", &t1.c, &t2.c), ("D", &t1.d, &t2.d)] {
        if x != y {
            return Ok(Gh2Verdict::MatricesDiffer { which });
        }
    }
    let n = t1.n();
    let ab = t1.a.add(&t1.b);
    let cd = t1.c.add(&t1.d);
    let m = Matrix::from_fn(2 * n, n, |r, c| if r < n { ab[(r, c)].clone() } else { cd[(r - n, c)].clone() });
    let rhs = (&t1.theta0 - &t2.theta0).concat(&(&t1.epsilon0 - &t2.epsilon0));
    Ok(match crate::linalg::solve_linear(&m, &rhs)? {
        LinearSolve::Consistent(s) => Gh2Verdict::Cohomologous { w: s.particular },
        LinearSolve::Inconsistent { certificate } => Gh2Verdict::NotCohomologous { certificate },
    })
}
