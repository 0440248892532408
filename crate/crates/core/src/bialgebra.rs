//! Commutative Connes cocycles, double constructions, anti-dendriform
//! coalgebras and D-bialgebras, coboundary coproducts and the AD-YBE.
//!
//! Operators on tensors act leg-wise: `(f ⊗ g)(a ⊗ b) = f(a) ⊗ g(b)`, and
//! `L∘(x)`, `R∘(x)` are left and right multiplication by `x`. Starred maps
//! are plain transposes in the dual basis.

use crate::algebra::{check_associative, AdAlgebra, MulOperators};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Vector};
use crate::matched::AssocMatchedPair;
use crate::report::{Checker, Report};
use crate::tables::BilinearOp;
use crate::tensor::{prod_12_13, prod_13_23, prod_23_12, Tensor2, Tensor3};

/// A bilinear form `ω(e_i, e_j) = gram[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm<F> {
    gram: Matrix<F>,
}

impl<F: Field> BilinearForm<F> {
    pub fn new(gram: Matrix<F>) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::dim(format!("gram matrix must be square, got {:?}", gram.shape())));
        }
        Ok(BilinearForm { gram })
    }

    /// The canonical pairing on `A ⊕ A*`: `ω(x+a, y+b) = <x,b> + <a,y>`.
    pub fn hyperbolic(n: usize) -> Self {
        let gram = Matrix::from_fn(2 * n, 2 * n, |i, j| {
            if i + n == j || j + n == i {
                F::one()
            } else {
                F::zero()
            }
        });
        BilinearForm { gram }
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix<F> {
        &self.gram
    }

    pub fn eval(&self, x: &[F], y: &[F]) -> F {
        Vector(x.to_vec()).dot(&self.gram.apply(y))
    }

    pub fn is_symmetric(&self) -> bool {
        self.gram == self.gram.transpose()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gram.rank() == self.dim()
    }
}

/// Symmetry (`sym`, witness `[i,j]`) and the cyclic identity
/// `ω(x·y,z) + ω(y·z,x) + ω(z·x,y) = 0` (`Connes`, witness `[i,j,k]`).
/// Failures of associativity of the product are reported as `AS`.
pub fn check_connes_cocycle<F: Field>(product: &BilinearOp<F>, w: &BilinearForm<F>) -> Result<Report> {
    let n = w.dim();
    if product.dims() != (n, n, n) {
        return Err(Error::dim(format!(
            "product of shape {:?} does not match a form on k^{n}",
            product.dims()
        )));
    }
    let mut c = Checker::new();
    check_associative(product, &mut c);
    let g = w.gram();
    for i in 0..n {
        for j in 0..n {
            c.equal("sym", &[i, j], &[g[(i, j)].clone()], &[g[(j, i)].clone()]);
        }
    }
    let e = |i| Vector::<F>::basis(n, i);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = w.eval(product.basis_product(i, j), &e(k))
                    + w.eval(product.basis_product(j, k), &e(i))
                    + w.eval(product.basis_product(k, i), &e(j));
                c.zero("Connes", &[i, j, k], &[v]);
            }
        }
    }
    Ok(c.finish())
}

/// The anti-dendriform structure compatible with a nondegenerate commutative
/// Connes cocycle, defined by
///
/// ```text
/// ω(x≻y, z) = -ω(y, z·x),    ω(x≺y, z) = -ω(x, y·z).
/// ```
///
/// Its products sum to the given associative product.
pub fn derive_compatible_ad<F: Field>(product: &BilinearOp<F>, w: &BilinearForm<F>) -> Result<AdAlgebra<F>> {
    let r = check_connes_cocycle(product, w)?;
    if let Some(v) = r.first_violation() {
        return Err(Error::precondition(format!(
            "not a commutative Connes cocycle: {} fails at {:?}",
            v.equation, v.witness
        )));
    }
    let ginv = w
        .gram()
        .inverse()
        .ok_or_else(|| Error::precondition("the form is degenerate"))?;
    let n = w.dim();
    let e = |i| Vector::<F>::basis(n, i);
    // With G symmetric, ω(u, z) = <Gu, z>, so u = G⁻¹ (ω(u, e_z))_z.
    let solve = |pairing: &dyn Fn(usize, usize, usize) -> F| {
        BilinearOp::from_fn(n, n, n, |i, j| ginv.apply(&(0..n).map(|z| pairing(i, j, z)).collect::<Vec<_>>()))
    };
    let succ = solve(&|i, j, z| -w.eval(&e(j), product.basis_product(z, i)));
    let prec = solve(&|i, j, z| -w.eval(&e(i), product.basis_product(j, z)));
    let alg = AdAlgebra::from_tables(succ, prec)?;
    debug_assert_eq!(alg.dot_table(), *product);
    Ok(alg)
}

/// The associative matched pair `(A, A*, -R≺*, -L≻*, -R≺*_{A*}, -L≻*_{A*})`.
pub fn double_construction_pair<F: Field>(a: &AdAlgebra<F>, astar: &AdAlgebra<F>) -> Result<AssocMatchedPair<F>> {
    if a.dim() != astar.dim() {
        return Err(Error::dim(format!(
            "the dual algebra must have dimension {}, got {}",
            a.dim(),
            astar.dim()
        )));
    }
    let (oa, ob) = (a.mul_operators(), astar.mul_operators());
    Ok(AssocMatchedPair {
        prod1: a.dot_table(),
        prod2: astar.dot_table(),
        l1: oa.r_prec.transpose().neg(),
        r1: oa.l_succ.transpose().neg(),
        l2: ob.r_prec.transpose().neg(),
        r2: ob.l_succ.transpose().neg(),
    })
}

#[derive(Clone, Debug)]
pub struct DoubleConstruction<F> {
    /// `AM*`, `Connes` and the restriction checks `restrict-A≻` etc.
    pub report: Report,
    /// Associative product on `A ⊕ A*` when the matched-pair check passes.
    pub product: Option<BilinearOp<F>>,
    pub form: BilinearForm<F>,
    /// The compatible anti-dendriform structure on `A ⊕ A*`.
    pub compatible: Option<AdAlgebra<F>>,
}

/// Checks the candidate associative matched pair and, when it passes,
/// assembles `A ⊕ A*` with the canonical pairing, checks that the pairing
/// is a commutative Connes cocycle and that the compatible structure
/// restricts to the given ones on `A` and on `A*`.
pub fn build_double_construction<F: Field>(a: &AdAlgebra<F>, astar: &AdAlgebra<F>) -> Result<DoubleConstruction<F>> {
    let pair = double_construction_pair(a, astar)?;
    let n = a.dim();
    let form = BilinearForm::hyperbolic(n);
    let mut c = Checker::new();
    c.absorb(pair.check()?);
    if !c.passed_so_far() {
        return Ok(DoubleConstruction {
            report: c.finish(),
            product: None,
            form,
            compatible: None,
        });
    }
    let product = pair.product()?;
    c.absorb(check_connes_cocycle(&product, &form)?);
    let compatible = if c.passed_so_far() {
        let ad = derive_compatible_ad(&product, &form)?;
        c.absorb(ad.check());
        for (part, sub, offset) in [("A", a, 0), ("A*", astar, n)] {
            for (sym, big, small) in [
                ("≻", ad.succ_table(), sub.succ_table()),
                ("≺", ad.prec_table(), sub.prec_table()),
            ] {
                for i in 0..n {
                    for j in 0..n {
                        let mut expect = vec![F::zero(); 2 * n];
                        expect[offset..offset + n].clone_from_slice(small.basis_product(i, j));
                        c.equal(
                            &format!("restrict-{part}{sym}"),
                            &[i, j],
                            big.basis_product(offset + i, offset + j),
                            &expect,
                        );
                    }
                }
            }
        }
        Some(ad)
    } else {
        None
    };
    Ok(DoubleConstruction {
        report: c.finish(),
        product: Some(product),
        form,
        compatible,
    })
}

/// `Δ≻(e_x)` and `Δ≺(e_x)` as tensors, one per basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoproductPair<F> {
    pub dsucc: Vec<Tensor2<F>>,
    pub dprec: Vec<Tensor2<F>>,
}

impl<F: Field> CoproductPair<F> {
    pub fn zeros(n: usize) -> Self {
        CoproductPair {
            dsucc: vec![Tensor2::zeros(n, n); n],
            dprec: vec![Tensor2::zeros(n, n); n],
        }
    }

    /// Entries `(x, i, j, c)`: `Δ(e_x)` has coefficient `c` on `e_i ⊗ e_j`.
    pub fn from_entries(
        n: usize,
        succ: impl IntoIterator<Item = (usize, usize, usize, F)>,
        prec: impl IntoIterator<Item = (usize, usize, usize, F)>,
    ) -> Result<Self> {
        let mut cp = Self::zeros(n);
        for (target, entries) in [(&mut cp.dsucc, succ.into_iter().collect::<Vec<_>>()), (&mut cp.dprec, prec.into_iter().collect())] {
            for (x, i, j, v) in entries {
                if x >= n || i >= n || j >= n {
                    return Err(Error::Index(format!("coproduct entry ({x}, {i}, {j}) outside dimension {n}")));
                }
                let t = &mut target[x];
                let old = t.get(i, j).clone();
                t.set(i, j, old + v);
            }
        }
        Ok(cp)
    }

    /// The coproducts dual to the products of an algebra on `A*`:
    /// `<Δ(x), a ⊗ b> = <x, a ∘ b>`.
    pub fn dual_of(astar: &AdAlgebra<F>) -> Self {
        let n = astar.dim();
        let read = |op: &BilinearOp<F>| {
            (0..n)
                .map(|x| Tensor2::from_matrix(&Matrix::from_fn(n, n, |i, j| op.get(i, j, x).clone())))
                .collect()
        };
        CoproductPair {
            dsucc: read(astar.succ_table()),
            dprec: read(astar.prec_table()),
        }
    }

    /// The algebra on the dual space whose products these coproducts dualize.
    pub fn dual_algebra(&self) -> Result<AdAlgebra<F>> {
        let n = self.dim();
        let build = |d: &[Tensor2<F>]| BilinearOp::from_fn(n, n, n, |i, j| Vector((0..n).map(|x| d[x].get(i, j).clone()).collect()));
        AdAlgebra::new(
            crate::algebra::default_basis("e*", n),
            build(&self.dsucc),
            build(&self.dprec),
        )
    }

    pub fn dim(&self) -> usize {
        self.dsucc.len()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        if self.dprec.len() != n {
            return Err(Error::dim("Δ≻ and Δ≺ are given on different numbers of basis elements"));
        }
        for t in self.dsucc.iter().chain(&self.dprec) {
            if t.dims() != (n, n) {
                return Err(Error::dim(format!("coproduct value of shape {:?} in dimension {n}", t.dims())));
            }
        }
        Ok(())
    }

    pub fn delta(&self) -> Vec<Tensor2<F>> {
        self.dsucc.iter().zip(&self.dprec).map(|(a, b)| a.add(b)).collect()
    }

    pub fn map_field<G: Field>(&self, f: impl Fn(&F) -> G) -> CoproductPair<G> {
        CoproductPair {
            dsucc: self.dsucc.iter().map(|t| t.map_field(&f)).collect(),
            dprec: self.dprec.iter().map(|t| t.map_field(&f)).collect(),
        }
    }
}

/// `Δ(v)` for a coordinate vector `v`.
fn apply_cop<F: Field>(d: &[Tensor2<F>], v: &[F]) -> Tensor2<F> {
    let n = d.len();
    let mut t = Tensor2::zeros(n, n);
    for (k, c) in v.iter().enumerate() {
        if !c.is_zero() {
            t = t.add(&d[k].scale(c));
        }
    }
    t
}

/// `(Δ ⊗ I) t`.
fn cop_first<F: Field>(d: &[Tensor2<F>], t: &Tensor2<F>) -> Tensor3<F> {
    let n = d.len();
    let mut out = Tensor3::cube(n);
    for (i, j, c) in t.entries() {
        for (a, b, v) in d[i].entries() {
            out.add_at(a, b, j, c.clone() * v);
        }
    }
    out
}

/// `(I ⊗ Δ) t`.
fn cop_second<F: Field>(d: &[Tensor2<F>], t: &Tensor2<F>) -> Tensor3<F> {
    let n = d.len();
    let mut out = Tensor3::cube(n);
    for (i, j, c) in t.entries() {
        for (a, b, v) in d[j].entries() {
            out.add_at(i, a, b, c.clone() * v);
        }
    }
    out
}

/// Residuals of the coalgebra axioms at one basis element: `Ca1` as
/// `(Δ≻⊗I)Δ≺ - (I⊗Δ≺)Δ≻` and the three links of the `Ca2` chain
/// `(I⊗Δ≻)Δ≻ = -(Δ⊗I)Δ≻ = (Δ≺⊗I)Δ≺ = -(I⊗Δ)Δ≺`.
pub(crate) fn coalgebra_terms<F: Field>(cp: &CoproductPair<F>, x: usize) -> (Tensor3<F>, [Tensor3<F>; 4]) {
    let (ds, dp, d) = (&cp.dsucc, &cp.dprec, cp.delta());
    let ca1 = cop_first(ds, &dp[x]).sub(&cop_second(dp, &ds[x]));
    let ca2 = [
        cop_second(ds, &ds[x]),
        cop_first(&d, &ds[x]).neg(),
        cop_first(dp, &dp[x]),
        cop_second(&d, &dp[x]).neg(),
    ];
    (ca1, ca2)
}

/// `Ca1` and `Ca2` on every basis element (witness `[x]`).
pub fn check_coalgebra<F: Field>(cp: &CoproductPair<F>) -> Result<Report> {
    cp.validate()?;
    let mut c = Checker::new();
    coalgebra_into(cp, &mut c);
    Ok(c.finish())
}

fn coalgebra_into<F: Field>(cp: &CoproductPair<F>, c: &mut Checker) {
    for x in 0..cp.dim() {
        let (ca1, ca2) = coalgebra_terms(cp, x);
        c.zero("Ca1", &[x], ca1.coefficients());
        let terms: Vec<&[F]> = ca2.iter().map(|t| t.coefficients()).collect();
        c.chain("Ca2", &[x], &terms);
    }
}

fn leg1<F: Field>(t: &Tensor2<F>, m: &Matrix<F>) -> Tensor2<F> {
    t.apply_legs(Some(m), None)
}

fn leg2<F: Field>(t: &Tensor2<F>, m: &Matrix<F>) -> Tensor2<F> {
    t.apply_legs(None, Some(m))
}

/// Residuals `lhs - rhs` of `D1`-`D6` at basis elements `(x, y)`.
pub(crate) fn d_residuals<F: Field>(
    alg: &AdAlgebra<F>,
    ops: &MulOperators<F>,
    cp: &CoproductPair<F>,
    x: usize,
    y: usize,
) -> [Tensor2<F>; 6] {
    let (ds, dp, d) = (&cp.dsucc, &cp.dprec, cp.delta());
    let m = |f: &crate::tables::ActionFamily<F>, i: usize| f.matrix(i).clone();
    let (ex, ey) = (alg.e(x), alg.e(y));
    let d1 = apply_cop(dp, &alg.dot(&ex, &ey))
        .sub(&leg1(&dp[x], &m(&ops.r_dot, y)))
        .add(&leg2(&dp[y], &m(&ops.l_succ, x)));
    let d2 = apply_cop(ds, &alg.dot(&ex, &ey))
        .sub(&leg2(&ds[y], &m(&ops.l_dot, x)))
        .add(&leg1(&ds[x], &m(&ops.r_prec, y)));
    let d3 = leg2(&ds[x], &m(&ops.r_dot, y))
        .add(&leg1(&ds[x], &m(&ops.l_succ, y)))
        .sub(&leg2(&dp[y], &m(&ops.r_prec, x)).twist())
        .sub(&leg1(&dp[y], &m(&ops.l_dot, x)).twist());
    let d4 = apply_cop(&d, &alg.prec(&ex, &ey))
        .sub(&leg1(&d[x], &m(&ops.r_prec, y)))
        .add(&leg2(&ds[y], &m(&ops.l_prec, x)));
    let d5 = apply_cop(&d, &alg.succ(&ex, &ey))
        .sub(&leg2(&d[y], &m(&ops.l_succ, x)))
        .add(&leg1(&dp[x], &m(&ops.r_succ, y)));
    let d6 = leg1(&d[y], &m(&ops.l_succ, x))
        .add(&leg1(&ds[x].twist(), &m(&ops.r_succ, y)))
        .sub(&leg2(&dp[x].twist(), &m(&ops.l_prec, y)))
        .sub(&leg2(&d[y], &m(&ops.r_prec, x)));
    [d1, d2, d3, d4, d5, d6]
}

const D_LABELS: [&str; 6] = ["D1", "D2", "D3", "D4", "D5", "D6"];

/// The full definition: algebra axioms (`A1`, `A2`), coalgebra axioms
/// (`Ca1`, `Ca2`, witness `[x]`) and `D1`-`D6` (witness `[x, y]`).
pub fn check_d_bialgebra<F: Field>(alg: &AdAlgebra<F>, cp: &CoproductPair<F>) -> Result<Report> {
    cp.validate()?;
    if cp.dim() != alg.dim() {
        return Err(Error::dim(format!(
            "coproducts on dimension {} for an algebra of dimension {}",
            cp.dim(),
            alg.dim()
        )));
    }
    let mut c = Checker::new();
    alg.check_into(&mut c);
    coalgebra_into(cp, &mut c);
    let ops = alg.mul_operators();
    let n = alg.dim();
    for x in 0..n {
        for y in 0..n {
            for (label, t) in D_LABELS.iter().zip(d_residuals(alg, &ops, cp, x, y)) {
                c.zero(label, &[x, y], t.coefficients());
            }
        }
    }
    Ok(c.finish())
}

fn check_tensor_shape<F: Field>(name: &str, r: &Tensor2<F>, n: usize) -> Result<()> {
    if r.dims() != (n, n) {
        return Err(Error::dim(format!("{name} has shape {:?}, expected {n}x{n}", r.dims())));
    }
    Ok(())
}

/// `Δ≻(x) = -(R≺(x)⊗I + I⊗L·(x)) r≻` and `Δ≺(x) = (R·(x)⊗I + I⊗L≻(x)) r≺`.
pub fn coboundary_coproducts<F: Field>(alg: &AdAlgebra<F>, rsucc: &Tensor2<F>, rprec: &Tensor2<F>) -> Result<CoproductPair<F>> {
    let n = alg.dim();
    check_tensor_shape("r≻", rsucc, n)?;
    check_tensor_shape("r≺", rprec, n)?;
    let ops = alg.mul_operators();
    let dsucc = (0..n)
        .map(|x| {
            leg1(rsucc, ops.r_prec.matrix(x))
                .add(&leg2(rsucc, ops.l_dot.matrix(x)))
                .neg()
        })
        .collect();
    let dprec = (0..n)
        .map(|x| leg1(rprec, ops.r_dot.matrix(x)).add(&leg2(rprec, ops.l_succ.matrix(x))))
        .collect();
    Ok(CoproductPair { dsucc, dprec })
}

/// `u ↦ (f⊗I⊗I)u` and friends.
fn on_leg<F: Field>(t: Tensor3<F>, leg: usize, m: &Matrix<F>) -> Tensor3<F> {
    t.apply_leg(leg, m)
}

/// Left-hand sides of `CD3`-`CD6` at `(x, y)`.
pub(crate) fn cd_pair_terms<F: Field>(
    alg: &AdAlgebra<F>,
    ops: &MulOperators<F>,
    rs: &Tensor2<F>,
    rp: &Tensor2<F>,
    x: usize,
    y: usize,
) -> [Tensor2<F>; 4] {
    let (ex, ey) = (alg.e(x), alg.e(y));
    let m = |f: &crate::tables::ActionFamily<F>, i: usize| f.matrix(i).clone();
    let diff = rs.sub(rp);
    let s_tp = rs.add(&rp.twist());
    let p_ts = rp.add(&rs.twist());

    let inner = leg1(&s_tp, &m(&ops.l_succ, y)).add(&leg2(&s_tp, &m(&ops.r_dot, y)));
    let cd3 = leg1(&inner, &m(&ops.r_prec, x)).add(&leg2(&inner, &m(&ops.l_dot, x)));

    let x_prec_y = alg.prec(&ex, &ey);
    let cd4 = leg2(&diff, &ops.l_succ.matrix_of(&x_prec_y))
        .sub(&diff.apply_legs(Some(&m(&ops.r_prec, y)), Some(&m(&ops.l_succ, x))))
        .add(&leg1(&diff, &ops.r_prec.matrix_of(&(x_prec_y.clone() + alg.dot(&ex, &ey)))));

    let x_succ_y = alg.succ(&ex, &ey);
    let cd5 = leg2(&diff, &ops.l_succ.matrix_of(&(x_succ_y.clone() + alg.dot(&ex, &ey))))
        .add(&leg1(&diff, &ops.r_prec.matrix_of(&x_succ_y)))
        .sub(&diff.apply_legs(Some(&m(&ops.r_prec, y)), Some(&m(&ops.l_succ, x))));

    let (lsx, rsy, rpx, lpy, rpy, lsy) = (
        m(&ops.l_succ, x),
        m(&ops.r_succ, y),
        m(&ops.r_prec, x),
        m(&ops.l_prec, y),
        m(&ops.r_prec, y),
        m(&ops.l_succ, y),
    );
    let cd6 = leg1(&p_ts, &lsx.mul(&rsy))
        .sub(&p_ts.apply_legs(Some(&rsy), Some(&rpx)))
        .add(&leg2(&s_tp, &rpx.mul(&lpy)))
        .sub(&s_tp.apply_legs(Some(&lsx), Some(&lpy)))
        .sub(&leg1(&diff, &lsx.mul(&rpy)))
        .add(&diff.apply_legs(Some(&rpy), Some(&rpx)))
        .sub(&diff.apply_legs(Some(&lsx), Some(&lsy)))
        .add(&leg2(&diff, &rpx.mul(&lsy)));
    [cd3, cd4, cd5, cd6]
}

/// Left-hand sides of `CD7`-`CD10` at `x`.
pub(crate) fn cd_single_terms<F: Field>(
    alg: &AdAlgebra<F>,
    ops: &MulOperators<F>,
    rs: &Tensor2<F>,
    rp: &Tensor2<F>,
    x: usize,
) -> [Tensor3<F>; 4] {
    let (succ, prec, dot) = (alg.succ_table(), alg.prec_table(), alg.dot_table());
    let rpx = ops.r_prec.matrix(x);
    let lsx = ops.l_succ.matrix(x);
    let ldx = ops.l_dot.matrix(x);
    let rdx = ops.r_dot.matrix(x);
    let diff = rs.sub(rp);

    let core7 = prod_12_13(rs, rp, prec)
        .add(&prod_23_12(rp, rs, &dot))
        .add(&prod_13_23(rs, rp, succ));
    let cd7 = on_leg(core7.clone(), 0, rpx).sub(&on_leg(core7, 2, lsx));

    let cd8 = prod_12_13(&diff, &leg1(rs, rpx), prec)
        .add(&prod_23_12(&leg1(rs, rpx), &diff, succ))
        .add(&on_leg(
            prod_13_23(rs, rs, &dot)
                .sub(&prod_12_13(rp, rs, &dot))
                .sub(&prod_23_12(rs, rp, succ))
                .add(&prod_12_13(rs, rs, prec))
                .add(&prod_23_12(rs, rs, &dot)),
            2,
            ldx,
        ))
        .add(&on_leg(
            prod_23_12(rs, rs, prec)
                .add(&prod_13_23(rs, rs, &dot))
                .sub(&prod_12_13(rp, rs, succ)),
            0,
            rpx,
        ));

    let pdiff = rp.sub(rs);
    let cd9 = on_leg(
        prod_12_13(rp, rp, &dot)
            .sub(&prod_23_12(rs, rp, prec))
            .sub(&prod_13_23(rp, rs, &dot))
            .add(&prod_23_12(rp, rp, &dot))
            .add(&prod_13_23(rp, rp, succ)),
        0,
        rdx,
    )
    .add(&on_leg(
        prod_12_13(rp, rp, &dot)
            .add(&prod_23_12(rp, rp, succ))
            .sub(&prod_13_23(rp, rs, prec)),
        2,
        lsx,
    ))
    .add(&on_leg(prod_13_23(rp, &pdiff, succ), 2, lsx))
    .add(&prod_23_12(&pdiff, &leg2(rp, lsx), prec));

    let cd10 = on_leg(
        prod_23_12(rs, rs, prec)
            .add(&prod_13_23(rs, rs, &dot))
            .sub(&prod_12_13(rp, rp, succ)),
        0,
        rpx,
    )
    .sub(&on_leg(
        prod_12_13(rp, rp, &dot)
            .add(&prod_23_12(rp, rp, succ))
            .sub(&prod_13_23(rs, rs, prec)),
        2,
        lsx,
    ))
    .sub(&prod_23_12(&leg1(rs, rpx), rs, prec))
    .add(&prod_23_12(&leg1(rp, rpx), rp, prec));
    [cd7, cd8, cd9, cd10]
}

/// `CD3`-`CD6` at every `(x, y)` and `CD7`-`CD10` at every `x`. Together
/// they hold exactly when the coboundary coproducts make a D-bialgebra.
pub fn check_coboundary_conditions<F: Field>(alg: &AdAlgebra<F>, rsucc: &Tensor2<F>, rprec: &Tensor2<F>) -> Result<Report> {
    let n = alg.dim();
    check_tensor_shape("r≻", rsucc, n)?;
    check_tensor_shape("r≺", rprec, n)?;
    let ops = alg.mul_operators();
    let mut c = Checker::new();
    for x in 0..n {
        for y in 0..n {
            for (label, t) in ["CD3", "CD4", "CD5", "CD6"].iter().zip(cd_pair_terms(alg, &ops, rsucc, rprec, x, y)) {
                c.zero(label, &[x, y], t.coefficients());
            }
        }
    }
    for x in 0..n {
        for (label, t) in ["CD7", "CD8", "CD9", "CD10"].iter().zip(cd_single_terms(alg, &ops, rsucc, rprec, x)) {
            c.zero(label, &[x], t.coefficients());
        }
    }
    Ok(c.finish())
}

/// `r₁₂·r₁₃ + r₂₃≻r₁₂ - r₁₃≺r₂₃`.
pub fn adybe_residual<F: Field>(alg: &AdAlgebra<F>, r: &Tensor2<F>) -> Result<Tensor3<F>> {
    check_tensor_shape("r", r, alg.dim())?;
    Ok(prod_12_13(r, r, &alg.dot_table())
        .add(&prod_23_12(r, r, alg.succ_table()))
        .sub(&prod_13_23(r, r, alg.prec_table())))
}

/// `T_r(w*) = Σ <w*, a_i> b_i` for `r = Σ a_i ⊗ b_i`, as a matrix from dual
/// coordinates to primal ones.
pub fn t_r<F: Field>(r: &Tensor2<F>) -> Matrix<F> {
    r.to_matrix().transpose()
}

/// `T(u*)·T(v*) + T(R≺*(T u*) v* + L≻*(T v*) u*) = 0` over dual basis pairs,
/// label `Tr`, witness `[u, v]`.
pub fn check_t_r_identity<F: Field>(alg: &AdAlgebra<F>, r: &Tensor2<F>) -> Result<Report> {
    let n = alg.dim();
    check_tensor_shape("r", r, n)?;
    let t = t_r(r);
    let ops = alg.mul_operators();
    let mut c = Checker::new();
    for u in 0..n {
        for v in 0..n {
            let (tu, tv) = (t.column(u), t.column(v));
            let (du, dv) = (Vector::<F>::basis(n, u), Vector::<F>::basis(n, v));
            let inner = ops.r_prec.matrix_of(&tu).transpose().apply(&dv) + ops.l_succ.matrix_of(&tv).transpose().apply(&du);
            let value = alg.dot(&tu, &tv) + t.apply(&inner);
            c.zero("Tr", &[u, v], &value);
        }
    }
    Ok(c.finish())
}
