//! Extending structures of an anti-dendriform algebra `A` through a space
//! `V` and their unified products `A ♮ V`.
//!
//! An extending datum carries actions `l, r` of `A` on `V`, actions
//! `ρ, μ` of `V` on `A`, cocycles `ϖ1, ϖ2: V × V -> A` and products on `V`.
//! On `A ⊕ V`:
//!
//! ```text
//! (x,a) ⪰ (y,b) = (x≻y + ρ≻(a)y + μ≻(b)x + ϖ1(a,b), l≻(x)b + r≻(y)a + a≻_V b)
//! (x,a) ⪯ (y,b) = (x≺y + ρ≺(a)y + μ≺(b)x + ϖ2(a,b), l≺(x)b + r≺(y)a + a≺_V b)
//! ```
//!
//! The conditions checked here come from splitting both axioms of the
//! product along the eight kinds of basis triple. `S1` is the requirement
//! that `(V, l≻, r≻, l≺, r≺)` is a representation (reported with the
//! representation labels). Labels `S17a`-`S17f` cover the three mixed
//! triples of the second axiom with two arguments in `V`.

use crate::algebra::AdAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{LinearSystem, Matrix, Vector};
use crate::report::{Checker, Report};
use crate::representation::{check_family_shape, AdRep};
use crate::tables::{ActionFamily, BilinearOp};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendingDatum<F> {
    pub algebra: AdAlgebra<F>,
    pub v_dim: usize,
    pub l_succ: ActionFamily<F>,
    pub r_succ: ActionFamily<F>,
    pub l_prec: ActionFamily<F>,
    pub r_prec: ActionFamily<F>,
    pub rho_succ: ActionFamily<F>,
    pub mu_succ: ActionFamily<F>,
    pub rho_prec: ActionFamily<F>,
    pub mu_prec: ActionFamily<F>,
    pub varpi1: BilinearOp<F>,
    pub varpi2: BilinearOp<F>,
    pub succ_v: BilinearOp<F>,
    pub prec_v: BilinearOp<F>,
}

/// One instance of a labelled condition: all `terms` must agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance<F> {
    pub label: &'static str,
    pub witness: Vec<usize>,
    pub terms: Vec<Vector<F>>,
}

pub(crate) fn check_bilinear_shape<F: Field>(name: &str, op: &BilinearOp<F>, dims: (usize, usize, usize)) -> Result<()> {
    if op.dims() != dims {
        return Err(Error::dim(format!("{name} has shape {:?}, expected {dims:?}", op.dims())));
    }
    Ok(())
}

impl<F: Field> ExtendingDatum<F> {
    /// All maps zero.
    pub fn trivial(algebra: &AdAlgebra<F>, v_dim: usize) -> Self {
        let n = algebra.dim();
        let av = ActionFamily::zeros(n, v_dim);
        let va = ActionFamily::zeros(v_dim, n);
        ExtendingDatum {
            algebra: algebra.clone(),
            v_dim,
            l_succ: av.clone(),
            r_succ: av.clone(),
            l_prec: av.clone(),
            r_prec: av,
            rho_succ: va.clone(),
            mu_succ: va.clone(),
            rho_prec: va.clone(),
            mu_prec: va,
            varpi1: BilinearOp::zeros(v_dim, v_dim, n),
            varpi2: BilinearOp::zeros(v_dim, v_dim, n),
            succ_v: BilinearOp::square(v_dim),
            prec_v: BilinearOp::square(v_dim),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.algebra.dim();
        let m = self.v_dim;
        for (name, f) in [
            ("l≻", &self.l_succ),
            ("r≻", &self.r_succ),
            ("l≺", &self.l_prec),
            ("r≺", &self.r_prec),
        ] {
            check_family_shape(name, f, n, m)?;
        }
        for (name, f) in [
            ("ρ≻", &self.rho_succ),
            ("μ≻", &self.mu_succ),
            ("ρ≺", &self.rho_prec),
            ("μ≺", &self.mu_prec),
        ] {
            check_family_shape(name, f, m, n)?;
        }
        check_bilinear_shape("ϖ1", &self.varpi1, (m, m, n))?;
        check_bilinear_shape("ϖ2", &self.varpi2, (m, m, n))?;
        check_bilinear_shape("≻_V", &self.succ_v, (m, m, m))?;
        check_bilinear_shape("≺_V", &self.prec_v, (m, m, m))?;
        Ok(())
    }

    /// The action of `A` on `V` as a representation candidate.
    pub fn rep(&self) -> AdRep<F> {
        AdRep::new(
            self.algebra.clone(),
            self.l_succ.clone(),
            self.r_succ.clone(),
            self.l_prec.clone(),
            self.r_prec.clone(),
        )
        .expect("validated shapes")
    }

    /// Emits every instance of `S2`-`S17f`.
    pub fn visit_conditions(&self, emit: &mut dyn FnMut(Instance<F>)) {
        let alg = &self.algebra;
        let n = alg.dim();
        let m = self.v_dim;
        let sa = |x: &[F], y: &[F]| alg.succ(x, y);
        let pa = |x: &[F], y: &[F]| alg.prec(x, y);
        let da = |x: &[F], y: &[F]| alg.dot(x, y);
        let sv = |a: &[F], b: &[F]| self.succ_v.apply(a, b);
        let pv = |a: &[F], b: &[F]| self.prec_v.apply(a, b);
        let dv = |a: &[F], b: &[F]| sv(a, b) + pv(a, b);
        let ls = |x: &[F], a: &[F]| self.l_succ.apply(x, a);
        let rs = |x: &[F], a: &[F]| self.r_succ.apply(x, a);
        let lp = |x: &[F], a: &[F]| self.l_prec.apply(x, a);
        let rp = |x: &[F], a: &[F]| self.r_prec.apply(x, a);
        let ld = |x: &[F], a: &[F]| ls(x, a) + lp(x, a);
        let rd = |x: &[F], a: &[F]| rs(x, a) + rp(x, a);
        let rhos = |a: &[F], x: &[F]| self.rho_succ.apply(a, x);
        let rhop = |a: &[F], x: &[F]| self.rho_prec.apply(a, x);
        let rhod = |a: &[F], x: &[F]| rhos(a, x) + rhop(a, x);
        let mus = |a: &[F], x: &[F]| self.mu_succ.apply(a, x);
        let mup = |a: &[F], x: &[F]| self.mu_prec.apply(a, x);
        let mud = |a: &[F], x: &[F]| mus(a, x) + mup(a, x);
        let w1 = |a: &[F], b: &[F]| self.varpi1.apply(a, b);
        let w2 = |a: &[F], b: &[F]| self.varpi2.apply(a, b);
        let wd = |a: &[F], b: &[F]| w1(a, b) + w2(a, b);
        let ea = |i: usize| Vector::<F>::basis(n, i);
        let ev = |i: usize| Vector::<F>::basis(m, i);
        let mut put = |label: &'static str, witness: [usize; 3], terms: Vec<Vector<F>>| {
            emit(Instance {
                label,
                witness: witness.to_vec(),
                terms,
            })
        };

        // Two arguments in A, one in V.
        for i in 0..n {
            let x = ea(i);
            for j in 0..n {
                let y = ea(j);
                for k in 0..m {
                    let a = ev(k);
                    // (x, y, a)
                    put(
                        "S2",
                        [i, j, k],
                        vec![
                            sa(&x, &mus(&a, &y)) + mus(&ls(&y, &a), &x),
                            mup(&a, &pa(&x, &y)),
                            -mus(&a, &da(&x, &y)),
                            -pa(&x, &mud(&a, &y)) - mup(&ld(&y, &a), &x),
                        ],
                    );
                    put(
                        "S13",
                        [i, j, k],
                        vec![
                            mup(&a, &sa(&x, &y)),
                            sa(&x, &mup(&a, &y)) + mus(&lp(&y, &a), &x),
                        ],
                    );
                    // (x, a, y)
                    put(
                        "S3",
                        [i, k, j],
                        vec![
                            sa(&x, &rhos(&a, &y)) + mus(&rs(&y, &a), &x),
                            pa(&mup(&a, &x), &y) + rhop(&lp(&x, &a), &y),
                            -sa(&mud(&a, &x), &y) - rhos(&ld(&x, &a), &y),
                            -pa(&x, &rhod(&a, &y)) - mup(&rd(&y, &a), &x),
                        ],
                    );
                    put(
                        "S14",
                        [i, k, j],
                        vec![
                            pa(&mus(&a, &x), &y) + rhop(&ls(&x, &a), &y),
                            sa(&x, &rhop(&a, &y)) + mus(&rp(&y, &a), &x),
                        ],
                    );
                    // (a, x, y)
                    put(
                        "S4",
                        [k, i, j],
                        vec![
                            rhos(&a, &sa(&x, &y)),
                            pa(&rhop(&a, &x), &y) + rhop(&rp(&x, &a), &y),
                            -rhop(&a, &da(&x, &y)),
                            -sa(&rhod(&a, &x), &y) - rhos(&rd(&x, &a), &y),
                        ],
                    );
                    put(
                        "S15",
                        [k, i, j],
                        vec![
                            pa(&rhos(&a, &x), &y) + rhop(&rs(&x, &a), &y),
                            rhos(&a, &pa(&x, &y)),
                        ],
                    );
                }
            }
        }

        // One argument in A, two in V.
        for i in 0..n {
            let x = ea(i);
            for k in 0..m {
                let a = ev(k);
                for l in 0..m {
                    let b = ev(l);
                    // (x, a, b)
                    put(
                        "S5",
                        [i, k, l],
                        vec![
                            sa(&x, &w1(&a, &b)) + mus(&sv(&a, &b), &x),
                            w2(&lp(&x, &a), &b) + mup(&b, &mup(&a, &x)),
                            -w1(&ld(&x, &a), &b) - mus(&b, &mud(&a, &x)),
                            -pa(&x, &wd(&a, &b)) - mup(&dv(&a, &b), &x),
                        ],
                    );
                    put(
                        "S6",
                        [i, k, l],
                        vec![
                            ls(&x, &sv(&a, &b)),
                            lp(&mup(&a, &x), &b) + pv(&lp(&x, &a), &b),
                            -ls(&mud(&a, &x), &b) - sv(&ld(&x, &a), &b),
                            -lp(&x, &dv(&a, &b)),
                        ],
                    );
                    put(
                        "S17a",
                        [i, k, l],
                        vec![
                            mup(&b, &mus(&a, &x)) + w2(&ls(&x, &a), &b),
                            sa(&x, &w2(&a, &b)) + mus(&pv(&a, &b), &x),
                        ],
                    );
                    put(
                        "S17b",
                        [i, k, l],
                        vec![
                            lp(&mus(&a, &x), &b) + pv(&ls(&x, &a), &b),
                            ls(&x, &pv(&a, &b)),
                        ],
                    );
                    // (a, x, b)
                    put(
                        "S7",
                        [k, i, l],
                        vec![
                            rhos(&a, &mus(&b, &x)) + w1(&a, &ls(&x, &b)),
                            mup(&b, &rhop(&a, &x)) + w2(&rp(&x, &a), &b),
                            -mus(&b, &rhod(&a, &x)) - w1(&rd(&x, &a), &b),
                            -rhop(&a, &mud(&b, &x)) - w2(&a, &ld(&x, &b)),
                        ],
                    );
                    put(
                        "S8",
                        [k, i, l],
                        vec![
                            rs(&mus(&b, &x), &a) + sv(&a, &ls(&x, &b)),
                            pv(&rp(&x, &a), &b) + lp(&rhop(&a, &x), &b),
                            -sv(&rd(&x, &a), &b) - ls(&rhod(&a, &x), &b),
                            -pv(&a, &ld(&x, &b)) - rp(&mud(&b, &x), &a),
                        ],
                    );
                    put(
                        "S17c",
                        [k, i, l],
                        vec![
                            mup(&b, &rhos(&a, &x)) + w2(&rs(&x, &a), &b),
                            rhos(&a, &mup(&b, &x)) + w1(&a, &lp(&x, &b)),
                        ],
                    );
                    put(
                        "S17d",
                        [k, i, l],
                        vec![
                            lp(&rhos(&a, &x), &b) + pv(&rs(&x, &a), &b),
                            rs(&mup(&b, &x), &a) + sv(&a, &lp(&x, &b)),
                        ],
                    );
                    // (a, b, x)
                    put(
                        "S9",
                        [k, l, i],
                        vec![
                            rhos(&a, &rhos(&b, &x)) + w1(&a, &rs(&x, &b)),
                            pa(&w2(&a, &b), &x) + rhop(&pv(&a, &b), &x),
                            -sa(&wd(&a, &b), &x) - rhos(&dv(&a, &b), &x),
                            -w2(&a, &rd(&x, &b)) - rhop(&a, &rhod(&b, &x)),
                        ],
                    );
                    put(
                        "S10",
                        [k, l, i],
                        vec![
                            rs(&rhos(&b, &x), &a) + sv(&a, &rs(&x, &b)),
                            rp(&x, &pv(&a, &b)),
                            -rs(&x, &dv(&a, &b)),
                            -rp(&rhod(&b, &x), &a) - pv(&a, &rd(&x, &b)),
                        ],
                    );
                    put(
                        "S17e",
                        [k, l, i],
                        vec![
                            pa(&w1(&a, &b), &x) + rhop(&sv(&a, &b), &x),
                            rhos(&a, &rhop(&b, &x)) + w1(&a, &rp(&x, &b)),
                        ],
                    );
                    put(
                        "S17f",
                        [k, l, i],
                        vec![
                            rp(&x, &sv(&a, &b)),
                            rs(&rhop(&b, &x), &a) + sv(&a, &rp(&x, &b)),
                        ],
                    );
                }
            }
        }

        // All three arguments in V.
        for k in 0..m {
            let a = ev(k);
            for l in 0..m {
                let b = ev(l);
                for o in 0..m {
                    let c = ev(o);
                    let w = [k, l, o];
                    put(
                        "S11",
                        w,
                        vec![
                            rhos(&a, &w1(&b, &c)) + w1(&a, &sv(&b, &c)),
                            mup(&c, &w2(&a, &b)) + w2(&pv(&a, &b), &c),
                            -rhop(&a, &wd(&b, &c)) - w2(&a, &dv(&b, &c)),
                            -mus(&c, &wd(&a, &b)) - w1(&dv(&a, &b), &c),
                        ],
                    );
                    put(
                        "S12",
                        w,
                        vec![
                            rs(&w1(&b, &c), &a) + sv(&a, &sv(&b, &c)),
                            lp(&w2(&a, &b), &c) + pv(&pv(&a, &b), &c),
                            -rp(&wd(&b, &c), &a) - pv(&a, &dv(&b, &c)),
                            -ls(&wd(&a, &b), &c) - sv(&dv(&a, &b), &c),
                        ],
                    );
                    put(
                        "S16",
                        w,
                        vec![
                            mup(&c, &w1(&a, &b)) + w2(&sv(&a, &b), &c),
                            rhos(&a, &w2(&b, &c)) + w1(&a, &pv(&b, &c)),
                        ],
                    );
                    put(
                        "S17",
                        w,
                        vec![
                            lp(&w1(&a, &b), &c) + pv(&sv(&a, &b), &c),
                            rs(&w2(&b, &c), &a) + sv(&a, &pv(&b, &c)),
                        ],
                    );
                }
            }
        }
    }

    pub fn check(&self) -> Result<Report> {
        self.check_with(Checker::new())
    }

    /// Checks the axioms of `A`, `S1` (via the representation labels) and
    /// `S2`-`S17f`. Passing is equivalent to the unified product being
    /// anti-dendriform.
    pub fn check_with(&self, mut c: Checker) -> Result<Report> {
        self.validate()?;
        self.algebra.check_into(&mut c);
        self.rep().check_into(&mut c);
        self.visit_conditions(&mut |inst| {
            c.chain(inst.label, &inst.witness, &inst.terms);
        });
        Ok(c.finish())
    }

    /// The unified product, refused when the datum fails its checks.
    pub fn unified_product(&self) -> Result<AdAlgebra<F>> {
        let r = self.check()?;
        if let Some(v) = r.first_violation() {
            return Err(Error::precondition(format!(
                "not an extending structure: {} fails at {:?}",
                v.equation, v.witness
            )));
        }
        self.unified_product_unchecked()
    }

    /// Assembles the products on `A ⊕ V` (basis of `A` first) without
    /// checking anything.
    pub fn unified_product_unchecked(&self) -> Result<AdAlgebra<F>> {
        self.validate()?;
        let n = self.algebra.dim();
        let m = self.v_dim;
        let build = |op: &BilinearOp<F>,
                     l: &ActionFamily<F>,
                     r: &ActionFamily<F>,
                     rho: &ActionFamily<F>,
                     mu: &ActionFamily<F>,
                     w: &BilinearOp<F>,
                     v: &BilinearOp<F>| {
            BilinearOp::from_fn(n + m, n + m, n + m, |i, j| match (i < n, j < n) {
                (true, true) => Vector(op.basis_product(i, j).to_vec()).concat(&vec![F::zero(); m]),
                // (x, 0) o (0, b) = (μ(b)x, l(x)b)
                (true, false) => mu.matrix(j - n).column(i).concat(&l.matrix(i).column(j - n)),
                // (0, a) o (y, 0) = (ρ(a)y, r(y)a)
                (false, true) => rho.matrix(i - n).column(j).concat(&r.matrix(j).column(i - n)),
                (false, false) => Vector(w.basis_product(i - n, j - n).to_vec()).concat(v.basis_product(i - n, j - n)),
            })
        };
        let succ = build(
            self.algebra.succ_table(),
            &self.l_succ,
            &self.r_succ,
            &self.rho_succ,
            &self.mu_succ,
            &self.varpi1,
            &self.succ_v,
        );
        let prec = build(
            self.algebra.prec_table(),
            &self.l_prec,
            &self.r_prec,
            &self.rho_prec,
            &self.mu_prec,
            &self.varpi2,
            &self.prec_v,
        );
        let mut basis = self.algebra.basis().to_vec();
        basis.extend((1..=m).map(|i| format!("v{i}")));
        AdAlgebra::new(basis, succ, prec)
    }

    /// Reads a datum back from any algebra structure on `A ⊕ V` whose first
    /// `n` basis vectors span a copy of `A`'s space. No checks on `A`.
    pub fn from_product_on_sum(algebra: &AdAlgebra<F>, total: &AdAlgebra<F>) -> Result<Self> {
        let n = algebra.dim();
        let big = total.dim();
        if big < n {
            return Err(Error::dim("ambient algebra is smaller than the subalgebra"));
        }
        let m = big - n;
        let mut d = ExtendingDatum::trivial(algebra, m);
        for (op, is_succ) in [(total.succ_table(), true), (total.prec_table(), false)] {
            let mut l = ActionFamily::zeros(n, m);
            let mut r = ActionFamily::zeros(n, m);
            let mut rho = ActionFamily::zeros(m, n);
            let mut mu = ActionFamily::zeros(m, n);
            let mut w = BilinearOp::zeros(m, m, n);
            let mut v = BilinearOp::square(m);
            let mut l_m: Vec<Matrix<F>> = (0..n).map(|_| Matrix::zeros(m, m)).collect();
            let mut r_m = l_m.clone();
            let mut rho_m: Vec<Matrix<F>> = (0..m).map(|_| Matrix::zeros(n, n)).collect();
            let mut mu_m = rho_m.clone();
            for i in 0..n {
                for b in 0..m {
                    let xb = op.basis_product(i, n + b);
                    let bx = op.basis_product(n + b, i);
                    for k in 0..n {
                        mu_m[b][(k, i)] = xb[k].clone();
                        rho_m[b][(k, i)] = bx[k].clone();
                    }
                    for k in 0..m {
                        l_m[i][(k, b)] = xb[n + k].clone();
                        r_m[i][(k, b)] = bx[n + k].clone();
                    }
                }
            }
            for a in 0..m {
                for b in 0..m {
                    let ab = op.basis_product(n + a, n + b);
                    for k in 0..n {
                        w.set(a, b, k, ab[k].clone());
                    }
                    for k in 0..m {
                        v.set(a, b, k, ab[n + k].clone());
                    }
                }
            }
            if n > 0 {
                l = ActionFamily::from_matrices(m, l_m);
                r = ActionFamily::from_matrices(m, r_m);
            }
            if m > 0 {
                rho = ActionFamily::from_matrices(n, rho_m);
                mu = ActionFamily::from_matrices(n, mu_m);
            }
            if is_succ {
                (d.l_succ, d.r_succ, d.rho_succ, d.mu_succ, d.varpi1, d.succ_v) = (l, r, rho, mu, w, v);
            } else {
                (d.l_prec, d.r_prec, d.rho_prec, d.mu_prec, d.varpi2, d.prec_v) = (l, r, rho, mu, w, v);
            }
        }
        Ok(d)
    }

    pub fn map_field<G: Field>(&self, f: impl Fn(&F) -> G) -> ExtendingDatum<G> {
        ExtendingDatum {
            algebra: self.algebra.map_field(&f),
            v_dim: self.v_dim,
            l_succ: self.l_succ.map_field(&f),
            r_succ: self.r_succ.map_field(&f),
            l_prec: self.l_prec.map_field(&f),
            r_prec: self.r_prec.map_field(&f),
            rho_succ: self.rho_succ.map_field(&f),
            mu_succ: self.mu_succ.map_field(&f),
            rho_prec: self.rho_prec.map_field(&f),
            mu_prec: self.mu_prec.map_field(&f),
            varpi1: self.varpi1.map_field(&f),
            varpi2: self.varpi2.map_field(&f),
            succ_v: self.succ_v.map_field(&f),
            prec_v: self.prec_v.map_field(&f),
        }
    }
}

/// Result of splitting an algebra along a subalgebra.
#[derive(Clone, Debug)]
pub struct Extraction<F> {
    pub datum: ExtendingDatum<F>,
    /// `φ(x, a) = ι(x) + κ(a)`, an isomorphism `A ♮ V -> E`.
    pub iso: Matrix<F>,
    /// Basis of `V = ker p` inside `E`, as columns.
    pub kernel: Matrix<F>,
}

/// Splits `E` along the subalgebra `ι(A)` using a retraction `p` with
/// `p ι = id`. `V = ker p`. The subalgebra structure on `A` is the one
/// transported through `ι`.
pub fn extract_extending_structure<F: Field>(
    e: &AdAlgebra<F>,
    inclusion: &Matrix<F>,
    projector: &Matrix<F>,
) -> Result<Extraction<F>> {
    let big = e.dim();
    let n = inclusion.cols();
    if inclusion.rows() != big || projector.shape() != (n, big) {
        return Err(Error::dim(format!(
            "inclusion must be {big}x{n} and projector {n}x{big}, got {:?} and {:?}",
            inclusion.shape(),
            projector.shape()
        )));
    }
    if projector.mul(inclusion) != Matrix::identity(n) {
        return Err(Error::precondition("projector is not a retraction of the inclusion"));
    }
    let er = e.check();
    if let Some(v) = er.first_violation() {
        return Err(Error::precondition(format!(
            "ambient algebra fails {} at {:?}",
            v.equation, v.witness
        )));
    }
    let kernel_vecs = projector.kernel();
    let kernel = Matrix::from_columns(big, &kernel_vecs);
    let mut cols: Vec<Vector<F>> = (0..n).map(|i| inclusion.column(i)).collect();
    cols.extend(kernel_vecs.iter().cloned());
    let iso = Matrix::from_columns(big, &cols);
    let in_new_basis = e.transform(&iso)?;
    // The first n basis vectors must close up under both products.
    for op in [in_new_basis.succ_table(), in_new_basis.prec_table()] {
        for i in 0..n {
            for j in 0..n {
                if op.basis_product(i, j)[n..].iter().any(|c| !c.is_zero()) {
                    return Err(Error::precondition(format!(
                        "image of the inclusion is not a subalgebra (basis pair {i}, {j})"
                    )));
                }
            }
        }
    }
    let restrict = |op: &BilinearOp<F>| BilinearOp::from_fn(n, n, n, |i, j| Vector(op.basis_product(i, j)[..n].to_vec()));
    let algebra = AdAlgebra::from_tables(
        restrict(in_new_basis.succ_table()),
        restrict(in_new_basis.prec_table()),
    )?;
    let datum = ExtendingDatum::from_product_on_sum(&algebra, &in_new_basis)?;
    Ok(Extraction { datum, iso, kernel })
}

/// Checks the conditions `h1`-`h10` for `ψ(x, a) = (x + ζ(a), η(a))` to be
/// a homomorphism `A ♮ V -> A ♮' V`. Both data must share `A` and `V`'s
/// dimension. `h5` uses `μ≺(a)x`, matching its neighbours.
pub fn check_equivalence<F: Field>(
    d: &ExtendingDatum<F>,
    d2: &ExtendingDatum<F>,
    zeta: &Matrix<F>,
    eta: &Matrix<F>,
) -> Result<Report> {
    d.validate()?;
    d2.validate()?;
    let n = d.algebra.dim();
    let m = d.v_dim;
    if d2.algebra != d.algebra || d2.v_dim != m {
        return Err(Error::dim("extending structures live on different algebras or spaces"));
    }
    if zeta.shape() != (n, m) || eta.shape() != (m, m) {
        return Err(Error::dim(format!(
            "ζ must be {n}x{m} and η {m}x{m}, got {:?} and {:?}",
            zeta.shape(),
            eta.shape()
        )));
    }
    let alg = &d.algebra;
    let mut c = Checker::new();
    let z = |a: &[F]| zeta.apply(a);
    let h = |a: &[F]| eta.apply(a);
    for i in 0..n {
        let x = alg.e(i);
        for k in 0..m {
            let a = Vector::basis(m, k);
            let w = [i, k];
            let ha = h(&a);
            let za = z(&a);
            c.equal("h1", &w, &h(&d.l_succ.apply(&x, &a)), &d2.l_succ.apply(&x, &ha));
            c.equal("h1", &w, &h(&d.r_succ.apply(&x, &a)), &d2.r_succ.apply(&x, &ha));
            c.equal("h2", &w, &h(&d.l_prec.apply(&x, &a)), &d2.l_prec.apply(&x, &ha));
            c.equal("h2", &w, &h(&d.r_prec.apply(&x, &a)), &d2.r_prec.apply(&x, &ha));
            c.equal(
                "h3",
                &w,
                &z(&d.l_succ.apply(&x, &a)),
                &(alg.succ(&x, &za) - d.mu_succ.apply(&a, &x) + d2.mu_succ.apply(&ha, &x)),
            );
            c.equal(
                "h4",
                &w,
                &z(&d.r_succ.apply(&x, &a)),
                &(alg.succ(&za, &x) - d.rho_succ.apply(&a, &x) + d2.rho_succ.apply(&ha, &x)),
            );
            c.equal(
                "h5",
                &w,
                &z(&d.l_prec.apply(&x, &a)),
                &(alg.prec(&x, &za) - d.mu_prec.apply(&a, &x) + d2.mu_prec.apply(&ha, &x)),
            );
            c.equal(
                "h6",
                &w,
                &z(&d.r_prec.apply(&x, &a)),
                &(alg.prec(&za, &x) - d.rho_prec.apply(&a, &x) + d2.rho_prec.apply(&ha, &x)),
            );
        }
    }
    for k in 0..m {
        let a = Vector::basis(m, k);
        for l in 0..m {
            let b = Vector::basis(m, l);
            let w = [k, l];
            let (ha, hb, za, zb) = (h(&a), h(&b), z(&a), z(&b));
            c.equal(
                "h7",
                &w,
                &h(&d.succ_v.apply(&a, &b)),
                &(d2.succ_v.apply(&ha, &hb) + d2.l_succ.apply(&za, &hb) + d2.r_succ.apply(&zb, &ha)),
            );
            c.equal(
                "h8",
                &w,
                &(z(&d.succ_v.apply(&a, &b)) + d.varpi1.apply(&a, &b)),
                &(alg.succ(&za, &zb)
                    + d2.rho_succ.apply(&ha, &zb)
                    + d2.mu_succ.apply(&hb, &za)
                    + d2.varpi1.apply(&ha, &hb)),
            );
            c.equal(
                "h9",
                &w,
                &h(&d.prec_v.apply(&a, &b)),
                &(d2.prec_v.apply(&ha, &hb) + d2.l_prec.apply(&za, &hb) + d2.r_prec.apply(&zb, &ha)),
            );
            c.equal(
                "h10",
                &w,
                &(z(&d.prec_v.apply(&a, &b)) + d.varpi2.apply(&a, &b)),
                &(alg.prec(&za, &zb)
                    + d2.rho_prec.apply(&ha, &zb)
                    + d2.mu_prec.apply(&hb, &za)
                    + d2.varpi2.apply(&ha, &hb)),
            );
        }
    }
    if eta.inverse().is_none() {
        c.fail_with("η-bijective", &[], "η is not invertible");
    }
    Ok(c.finish())
}

/// `h1`-`h10` with `η = id`.
pub fn check_cohomologous<F: Field>(d: &ExtendingDatum<F>, d2: &ExtendingDatum<F>, zeta: &Matrix<F>) -> Result<Report> {
    check_equivalence(d, d2, zeta, &Matrix::identity(d.v_dim))
}

/// The map `ψ(x, a) = (x + ζ(a), η(a))` on `A ⊕ V`.
pub fn equivalence_map<F: Field>(zeta: &Matrix<F>, eta: &Matrix<F>) -> Matrix<F> {
    let (n, m) = zeta.shape();
    Matrix::from_fn(n + m, n + m, |r, c| match (r < n, c < n) {
        (true, true) => {
            if r == c {
                F::one()
            } else {
                F::zero()
            }
        }
        (true, false) => zeta[(r, c - n)].clone(),
        (false, true) => F::zero(),
        (false, false) => eta[(r - n, c - n)].clone(),
    })
}

/// Outcome of searching for `ζ` with `η = id`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CohomologySearch<F> {
    Found(Matrix<F>),
    /// No `ζ` exists; `certificate` combines the linear conditions into
    /// `0 = c` with `c != 0`.
    Infeasible { certificate: Vector<F> },
}

/// Looks for `ζ` with `η = id`. With `η` fixed, `h1`-`h7`, `h9` are linear
/// in `ζ`; `h8` and `h10` contain `ζ(a)≻ζ(b)`, `ζ(a)≺ζ(b)`, so `A` must have
/// zero products for the system to be linear.
pub fn find_cohomology<F: Field>(d: &ExtendingDatum<F>, d2: &ExtendingDatum<F>) -> Result<CohomologySearch<F>> {
    d.validate()?;
    d2.validate()?;
    if d2.algebra != d.algebra || d2.v_dim != d.v_dim {
        return Err(Error::dim("extending structures live on different algebras or spaces"));
    }
    if !d.algebra.succ_table().is_zero() || !d.algebra.prec_table().is_zero() {
        return Err(Error::precondition(
            "the linear search needs A to have zero products (the ζ-quadratic terms must vanish)",
        ));
    }
    let n = d.algebra.dim();
    let m = d.v_dim;
    let unknowns = n * m;
    // ζ entry (r, c) is unknown r * m + c; each condition is coefficient
    // rows computed by evaluating on unit ζ's.
    let unit = |u: usize| {
        let mut z = Matrix::zeros(n, m);
        z[(u / m, u % m)] = F::one();
        z
    };
    let units: Vec<Matrix<F>> = (0..unknowns).map(unit).collect();
    let zero = Matrix::zeros(n, m);
    let mut sys = LinearSystem::new(unknowns);
    // residual(ζ) = lhs - rhs is affine in ζ: residual(0) + Σ t_u (residual(unit_u) - residual(0)).
    let mut add_affine = |f: &dyn Fn(&Matrix<F>) -> Vector<F>| {
        let base = f(&zero);
        let cols: Vec<Vector<F>> = units.iter().map(|u| f(u) - &base).collect();
        for r in 0..base.len() {
            let coeffs = cols.iter().map(|c| c[r].clone()).collect();
            sys.push(coeffs, -base[r].clone());
        }
    };
    let alg = &d.algebra;
    for i in 0..n {
        let x = alg.e(i);
        for k in 0..m {
            let a = Vector::basis(m, k);
            add_affine(&|_z| d.l_succ.apply(&x, &a) - d2.l_succ.apply(&x, &a));
            add_affine(&|_z| d.r_succ.apply(&x, &a) - d2.r_succ.apply(&x, &a));
            add_affine(&|_z| d.l_prec.apply(&x, &a) - d2.l_prec.apply(&x, &a));
            add_affine(&|_z| d.r_prec.apply(&x, &a) - d2.r_prec.apply(&x, &a));
            add_affine(&|z| {
                z.apply(&d.l_succ.apply(&x, &a)) - alg.succ(&x, &z.apply(&a)) + d.mu_succ.apply(&a, &x)
                    - d2.mu_succ.apply(&a, &x)
            });
            add_affine(&|z| {
                z.apply(&d.r_succ.apply(&x, &a)) - alg.succ(&z.apply(&a), &x) + d.rho_succ.apply(&a, &x)
                    - d2.rho_succ.apply(&a, &x)
            });
            add_affine(&|z| {
                z.apply(&d.l_prec.apply(&x, &a)) - alg.prec(&x, &z.apply(&a)) + d.mu_prec.apply(&a, &x)
                    - d2.mu_prec.apply(&a, &x)
            });
            add_affine(&|z| {
                z.apply(&d.r_prec.apply(&x, &a)) - alg.prec(&z.apply(&a), &x) + d.rho_prec.apply(&a, &x)
                    - d2.rho_prec.apply(&a, &x)
            });
        }
    }
    for k in 0..m {
        let a = Vector::basis(m, k);
        for l in 0..m {
            let b = Vector::basis(m, l);
            add_affine(&|z| {
                d.succ_v.apply(&a, &b)
                    - d2.succ_v.apply(&a, &b)
                    - d2.l_succ.apply(&z.apply(&a), &b)
                    - d2.r_succ.apply(&z.apply(&b), &a)
            });
            add_affine(&|z| {
                z.apply(&d.succ_v.apply(&a, &b)) + d.varpi1.apply(&a, &b)
                    - d2.rho_succ.apply(&a, &z.apply(&b))
                    - d2.mu_succ.apply(&b, &z.apply(&a))
                    - d2.varpi1.apply(&a, &b)
            });
            add_affine(&|z| {
                d.prec_v.apply(&a, &b)
                    - d2.prec_v.apply(&a, &b)
                    - d2.l_prec.apply(&z.apply(&a), &b)
                    - d2.r_prec.apply(&z.apply(&b), &a)
            });
            add_affine(&|z| {
                z.apply(&d.prec_v.apply(&a, &b)) + d.varpi2.apply(&a, &b)
                    - d2.rho_prec.apply(&a, &z.apply(&b))
                    - d2.mu_prec.apply(&b, &z.apply(&a))
                    - d2.varpi2.apply(&a, &b)
            });
        }
    }
    Ok(match sys.solve() {
        crate::linalg::LinearSolve::Consistent(s) => {
            Found(Matrix::from_fn(n, m, |r, c| s.particular[r * m + c].clone()))
        }
        crate::linalg::LinearSolve::Inconsistent { certificate } => Infeasible { certificate },
    })
}

use CohomologySearch::{Found, Infeasible};

pub fn check_extending_structure<F: Field>(d: &ExtendingDatum<F>) -> Result<Report> {
    d.check()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    type Q = Rational;

    fn nilpotent() -> AdAlgebra<Q> {
        AdAlgebra::from_entries(2, [(0, 0, 1, Q::from(1))], []).unwrap()
    }

    fn random_datum(seed: u64, n: usize, m: usize) -> ExtendingDatum<Q> {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut s = || Q::from(rng.gen_range(-2i64..=2));
        let fam = |a: usize, b: usize, s: &mut dyn FnMut() -> Q| {
            ActionFamily::from_fn(a, b, |_| Matrix::from_fn(b, b, |_, _| s()))
        };
        let op = |l: usize, o: usize, s: &mut dyn FnMut() -> Q| {
            BilinearOp::from_fn(l, l, o, |_, _| Vector((0..o).map(|_| s()).collect()))
        };
        let algebra = AdAlgebra::from_tables(op(n, n, &mut s), op(n, n, &mut s)).unwrap();
        ExtendingDatum {
            algebra,
            v_dim: m,
            l_succ: fam(n, m, &mut s),
            r_succ: fam(n, m, &mut s),
            l_prec: fam(n, m, &mut s),
            r_prec: fam(n, m, &mut s),
            rho_succ: fam(m, n, &mut s),
            mu_succ: fam(m, n, &mut s),
            rho_prec: fam(m, n, &mut s),
            mu_prec: fam(m, n, &mut s),
            varpi1: op(m, n, &mut s),
            varpi2: op(m, n, &mut s),
            succ_v: op(m, m, &mut s),
            prec_v: op(m, m, &mut s),
        }
    }

    /// Which product triple and component each condition is read from:
    /// (second axiom?, argument lies in V, V-component?).
    fn source(label: &str) -> (bool, [bool; 3], bool) {
        const X: bool = false;
        const A: bool = true;
        match label {
            "S2" => (false, [X, X, A], false),
            "S3" => (false, [X, A, X], false),
            "S4" => (false, [A, X, X], false),
            "S5" => (false, [X, A, A], false),
            "S6" => (false, [X, A, A], true),
            "S7" => (false, [A, X, A], false),
            "S8" => (false, [A, X, A], true),
            "S9" => (false, [A, A, X], false),
            "S10" => (false, [A, A, X], true),
            "S11" => (false, [A, A, A], false),
            "S12" => (false, [A, A, A], true),
            "S13" => (true, [X, X, A], false),
            "S14" => (true, [X, A, X], false),
            "S15" => (true, [A, X, X], false),
            "S16" => (true, [A, A, A], false),
            "S17" => (true, [A, A, A], true),
            "S17a" => (true, [X, A, A], false),
            "S17b" => (true, [X, A, A], true),
            "S17c" => (true, [A, X, A], false),
            "S17d" => (true, [A, X, A], true),
            "S17e" => (true, [A, A, X], false),
            "S17f" => (true, [A, A, X], true),
            other => panic!("unexpected label {other}"),
        }
    }

    // Every condition is, term for term up to order, one component of an
    // axiom of the assembled product evaluated on a basis triple.
    #[test]
    fn conditions_transcribe_the_product_axioms() {
        for seed in 0..4 {
            let (n, m) = (2, 2);
            let d = random_datum(seed, n, m);
            let u = d.unified_product_unchecked().unwrap();
            let mut labels = std::collections::BTreeSet::new();
            let mut count = 0;
            d.visit_conditions(&mut |inst| {
                let (second, in_v, v_comp) = source(inst.label);
                labels.insert(inst.label);
                count += 1;
                let e = |t: usize| {
                    let i = inst.witness[t] + if in_v[t] { n } else { 0 };
                    u.e(i)
                };
                let (x, y, z) = (e(0), e(1), e(2));
                let mut prod: Vec<Vector<Q>> = if second {
                    vec![u.prec(&u.succ(&x, &y), &z), u.succ(&x, &u.prec(&y, &z))]
                } else {
                    vec![
                        u.succ(&x, &u.succ(&y, &z)),
                        -u.succ(&u.dot(&x, &y), &z),
                        -u.prec(&x, &u.dot(&y, &z)),
                        u.prec(&u.prec(&x, &y), &z),
                    ]
                };
                for t in prod.iter_mut() {
                    *t = if v_comp { t.slice(n, n + m) } else { t.slice(0, n) };
                }
                let mut ours = inst.terms.clone();
                prod.sort();
                ours.sort();
                assert_eq!(prod, ours, "{} at {:?}", inst.label, inst.witness);
            });
            assert_eq!(labels.len(), 22);
            assert_eq!(count, 3 * 2 * 8 + 3 * 4 * 8 + 4 * 8);
        }
    }

    #[test]
    fn random_data_verdict_matches_the_product() {
        for seed in 10..30 {
            let d = random_datum(seed, 1, 1);
            let ours = d.check().unwrap().passed();
            let theirs = d.unified_product_unchecked().unwrap().check().passed();
            assert_eq!(ours, theirs);
        }
    }

    #[test]
    fn trivial_datum_is_an_extending_structure() {
        let d = ExtendingDatum::trivial(&nilpotent(), 2);
        assert!(d.check().unwrap().passed());
        let u = d.unified_product().unwrap();
        assert_eq!(u.dim(), 4);
        assert!(u.check().passed());
    }

    #[test]
    fn shape_mismatch_is_an_input_error() {
        let mut d = ExtendingDatum::trivial(&nilpotent(), 1);
        d.varpi1 = BilinearOp::zeros(1, 1, 1);
        assert!(matches!(d.check(), Err(Error::Dimension(_))));
    }

    #[test]
    fn extraction_round_trip_on_a_semidirect_product() {
        let a = nilpotent();
        let e = AdRep::regular(&a).dual().semidirect_product().unwrap();
        let inclusion = Matrix::from_fn(4, 2, |r, c| if r == c { Q::one() } else { Q::zero() });
        let projector = inclusion.transpose();
        let ex = extract_extending_structure(&e, &inclusion, &projector).unwrap();
        assert!(ex.datum.check().unwrap().passed());
        let u = ex.datum.unified_product().unwrap();
        let hom = u.check_homomorphism(&e, &ex.iso).unwrap();
        assert!(hom.passed());
    }

    fn four_dim() -> AdAlgebra<Q> {
        AdRep::regular(&nilpotent()).dual().semidirect_product().unwrap()
    }

    fn block_split(ambient: &AdAlgebra<Q>, sub: &[usize], z: &Matrix<Q>) -> Extraction<Q> {
        // ι picks the coordinates in `sub`; p reads them and adds z applied
        // to the remaining coordinates.
        let big = ambient.dim();
        let rest: Vec<usize> = (0..big).filter(|i| !sub.contains(i)).collect();
        let inclusion = Matrix::from_fn(big, sub.len(), |r, c| if sub[c] == r { Q::one() } else { Q::zero() });
        let projector = Matrix::from_fn(sub.len(), big, |r, c| {
            if let Some(p) = sub.iter().position(|&s| s == c) {
                if p == r { Q::one() } else { Q::zero() }
            } else {
                z[(r, rest.iter().position(|&s| s == c).unwrap())].clone()
            }
        });
        extract_extending_structure(ambient, &inclusion, &projector).unwrap()
    }

    #[test]
    fn different_retractions_give_equivalent_data() {
        let e = four_dim();
        let z = Matrix::from_i64(&[&[1, -2], &[3, 1]]);
        let one = block_split(&e, &[0, 1], &Matrix::zeros(2, 2));
        let two = block_split(&e, &[0, 1], &z);
        assert!(one.datum.check().unwrap().passed());
        assert!(two.datum.check().unwrap().passed());
        let psi = two.iso.inverse().unwrap().mul(&one.iso);
        let zeta = Matrix::from_fn(2, 2, |r, c| psi[(r, 2 + c)].clone());
        let eta = Matrix::from_fn(2, 2, |r, c| psi[(2 + r, 2 + c)].clone());
        for r in 0..2 {
            for c in 0..2 {
                assert!(psi[(2 + r, c)].is_zero());
            }
        }
        assert_eq!(equivalence_map(&zeta, &eta), psi);
        assert!(!zeta.is_zero());
        assert!(check_equivalence(&one.datum, &two.datum, &zeta, &eta).unwrap().passed());
        // A wrong ζ is caught.
        let bad = zeta.add(&Matrix::from_i64(&[&[1, 0], &[0, 0]]));
        let r = check_equivalence(&one.datum, &two.datum, &bad, &eta).unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn linear_cohomology_search_over_an_abelian_subalgebra() {
        let e = four_dim();
        let one = block_split(&e, &[2, 3], &Matrix::zeros(2, 2)).datum;
        assert!(one.check().unwrap().passed());
        // Transport the unified product along ψ(x, a) = (x + ζa, a).
        let zeta = Matrix::from_i64(&[&[2, 1], &[-1, 4]]);
        let psi = equivalence_map(&zeta, &Matrix::identity(2));
        let moved = one.unified_product().unwrap().push_forward(&psi).unwrap();
        let two = ExtendingDatum::from_product_on_sum(&one.algebra, &moved).unwrap();
        assert_ne!(one, two);
        assert!(check_cohomologous(&one, &two, &zeta).unwrap().passed());
        match find_cohomology(&one, &two).unwrap() {
            Found(found) => {
                assert!(check_cohomologous(&one, &two, &found).unwrap().passed());
            }
            Infeasible { .. } => panic!("expected cohomologous data"),
        }
        // Changing a cocycle by something that is not a coboundary breaks it.
        let mut three = two.clone();
        three.l_succ = three.l_succ.add(&ActionFamily::from_fn(2, 2, |_| Matrix::identity(2)));
        match find_cohomology(&one, &three).unwrap() {
            Found(_) => panic!("actions differ, no ζ can work"),
            Infeasible { certificate } => assert!(!certificate.is_zero()),
        }
        assert!(matches!(find_cohomology(&ExtendingDatum::trivial(&nilpotent(), 1), &ExtendingDatum::trivial(&nilpotent(), 1)), Err(Error::Precondition(_))));
    }

    #[test]
    fn non_subalgebra_is_refused() {
        let a = nilpotent();
        // span(e1) is not closed: e1 ≻ e1 = e2.
        let inclusion = Matrix::from_i64(&[&[1], &[0]]);
        let projector = Matrix::from_i64(&[&[1, 0]]);
        assert!(matches!(
            extract_extending_structure(&a, &inclusion, &projector),
            Err(Error::Precondition(_))
        ));
    }
}
