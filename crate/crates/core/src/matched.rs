//! Matched pairs of anti-dendriform algebras and bicrossed products.
//!
//! On `A₁ ⊕ A₂`:
//!
//! ```text
//! (x,a) ≻ (y,b) = (x≻₁y + l≻₂(a)y + r≻₂(b)x, a≻₂b + l≻₁(x)b + r≻₁(y)a)
//! ```
//!
//! and likewise for `≺`. This is the unified product of `A₁` through `A₂`
//! with `ρ = l₂`, `μ = r₂` and zero cocycles, so `M1`-`M12` are the
//! corresponding extending-structure conditions.

use crate::algebra::{check_associative, AdAlgebra};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Vector};
use crate::report::{Checker, Report};
use crate::representation::{check_family_shape, AdRep, AssocRep};
use crate::tables::{ActionFamily, BilinearOp};
use crate::unified::ExtendingDatum;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPairDatum<F> {
    pub alg1: AdAlgebra<F>,
    pub alg2: AdAlgebra<F>,
    /// Actions of `A₁` on `A₂`.
    pub l1_succ: ActionFamily<F>,
    pub r1_succ: ActionFamily<F>,
    pub l1_prec: ActionFamily<F>,
    pub r1_prec: ActionFamily<F>,
    /// Actions of `A₂` on `A₁`.
    pub l2_succ: ActionFamily<F>,
    pub r2_succ: ActionFamily<F>,
    pub l2_prec: ActionFamily<F>,
    pub r2_prec: ActionFamily<F>,
}

/// Extending-structure label for each matched-pair condition.
const M_LABELS: [(&str, &str); 12] = [
    ("S2", "M1"),
    ("S3", "M2"),
    ("S4", "M3"),
    ("S6", "M4"),
    ("S8", "M5"),
    ("S10", "M6"),
    ("S13", "M7"),
    ("S14", "M8"),
    ("S15", "M9"),
    ("S17b", "M10"),
    ("S17d", "M11"),
    ("S17f", "M12"),
];

impl<F: Field> MatchedPairDatum<F> {
    /// Zero actions: the bicrossed product is the direct product.
    pub fn trivial(alg1: &AdAlgebra<F>, alg2: &AdAlgebra<F>) -> Self {
        let (n, m) = (alg1.dim(), alg2.dim());
        let on2 = ActionFamily::zeros(n, m);
        let on1 = ActionFamily::zeros(m, n);
        MatchedPairDatum {
            alg1: alg1.clone(),
            alg2: alg2.clone(),
            l1_succ: on2.clone(),
            r1_succ: on2.clone(),
            l1_prec: on2.clone(),
            r1_prec: on2,
            l2_succ: on1.clone(),
            r2_succ: on1.clone(),
            l2_prec: on1.clone(),
            r2_prec: on1,
        }
    }

    /// `A₁` acting on `A₂` through a representation, nothing acting back.
    pub fn from_representation(rep: &AdRep<F>, module: &AdAlgebra<F>) -> Result<Self> {
        if module.dim() != rep.mod_dim() {
            return Err(Error::dim("module algebra dimension differs from the representation"));
        }
        let mut d = Self::trivial(rep.algebra(), module);
        d.l1_succ = rep.l_succ().clone();
        d.r1_succ = rep.r_succ().clone();
        d.l1_prec = rep.l_prec().clone();
        d.r1_prec = rep.r_prec().clone();
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        let (n, m) = (self.alg1.dim(), self.alg2.dim());
        for (name, f) in [
            ("l≻₁", &self.l1_succ),
            ("r≻₁", &self.r1_succ),
            ("l≺₁", &self.l1_prec),
            ("r≺₁", &self.r1_prec),
        ] {
            check_family_shape(name, f, n, m)?;
        }
        for (name, f) in [
            ("l≻₂", &self.l2_succ),
            ("r≻₂", &self.r2_succ),
            ("l≺₂", &self.l2_prec),
            ("r≺₂", &self.r2_prec),
        ] {
            check_family_shape(name, f, m, n)?;
        }
        Ok(())
    }

    /// `(A₂, l₁, r₁)` as a representation of `A₁`.
    pub fn rep1(&self) -> AdRep<F> {
        AdRep::new(
            self.alg1.clone(),
            self.l1_succ.clone(),
            self.r1_succ.clone(),
            self.l1_prec.clone(),
            self.r1_prec.clone(),
        )
        .expect("validated shapes")
    }

    /// `(A₁, l₂, r₂)` as a representation of `A₂`.
    pub fn rep2(&self) -> AdRep<F> {
        AdRep::new(
            self.alg2.clone(),
            self.l2_succ.clone(),
            self.r2_succ.clone(),
            self.l2_prec.clone(),
            self.r2_prec.clone(),
        )
        .expect("validated shapes")
    }

    pub fn as_extending_datum(&self) -> ExtendingDatum<F> {
        let mut d = ExtendingDatum::trivial(&self.alg1, self.alg2.dim());
        d.l_succ = self.l1_succ.clone();
        d.r_succ = self.r1_succ.clone();
        d.l_prec = self.l1_prec.clone();
        d.r_prec = self.r1_prec.clone();
        d.rho_succ = self.l2_succ.clone();
        d.mu_succ = self.r2_succ.clone();
        d.rho_prec = self.l2_prec.clone();
        d.mu_prec = self.r2_prec.clone();
        d.succ_v = self.alg2.succ_table().clone();
        d.prec_v = self.alg2.prec_table().clone();
        d
    }

    pub fn check(&self) -> Result<Report> {
        self.check_with(Checker::new())
    }

    /// Axioms of both algebras (`alg1/…`, `alg2/…`), both representation
    /// conditions (`rep1/R…` for `A₁` on `A₂`, `rep2/R…` for `A₂` on `A₁`)
    /// and `M1`-`M12`. Witnesses of `M*` list the arguments in the order
    /// they appear in the condition.
    pub fn check_with(&self, mut c: Checker) -> Result<Report> {
        self.validate()?;
        let ex = c.is_exhaustive();
        let sub = |f: &dyn Fn(&mut Checker)| {
            let mut s = Checker::with_mode(ex);
            f(&mut s);
            s.finish()
        };
        c.absorb(sub(&|s| self.alg1.check_into(s)).relabel(|e| format!("alg1/{e}")));
        c.absorb(sub(&|s| self.alg2.check_into(s)).relabel(|e| format!("alg2/{e}")));
        c.absorb(sub(&|s| self.rep1().check_into(s)).relabel(|e| format!("rep1/{e}")));
        c.absorb(sub(&|s| self.rep2().check_into(s)).relabel(|e| format!("rep2/{e}")));
        self.as_extending_datum().visit_conditions(&mut |inst| {
            if let Some((_, m)) = M_LABELS.iter().find(|(s, _)| *s == inst.label) {
                c.chain(m, &inst.witness, &inst.terms);
            }
        });
        Ok(c.finish())
    }

    pub fn bicrossed_product(&self) -> Result<AdAlgebra<F>> {
        let r = self.check()?;
        if let Some(v) = r.first_violation() {
            return Err(Error::precondition(format!(
                "not a matched pair: {} fails at {:?}",
                v.equation, v.witness
            )));
        }
        self.bicrossed_product_unchecked()
    }

    /// Products on `A₁ ⊕ A₂`, basis of `A₁` first.
    pub fn bicrossed_product_unchecked(&self) -> Result<AdAlgebra<F>> {
        self.validate()?;
        let u = self.as_extending_datum().unified_product_unchecked()?;
        let mut names = self.alg1.basis().to_vec();
        if self.alg2.basis().iter().any(|b| names.contains(b)) {
            names.extend((1..=self.alg2.dim()).map(|i| format!("f{i}")));
        } else {
            names.extend(self.alg2.basis().iter().cloned());
        }
        u.with_basis(names)
    }

    /// Summed actions and associated products, per the corollary that they
    /// form an associative matched pair.
    pub fn induced_associative(&self) -> AssocMatchedPair<F> {
        AssocMatchedPair {
            prod1: self.alg1.dot_table(),
            prod2: self.alg2.dot_table(),
            l1: self.l1_succ.add(&self.l1_prec),
            r1: self.r1_succ.add(&self.r1_prec),
            l2: self.l2_succ.add(&self.l2_prec),
            r2: self.r2_succ.add(&self.r2_prec),
        }
    }

    pub fn map_field<G: Field>(&self, f: impl Fn(&F) -> G) -> MatchedPairDatum<G> {
        MatchedPairDatum {
            alg1: self.alg1.map_field(&f),
            alg2: self.alg2.map_field(&f),
            l1_succ: self.l1_succ.map_field(&f),
            r1_succ: self.r1_succ.map_field(&f),
            l1_prec: self.l1_prec.map_field(&f),
            r1_prec: self.r1_prec.map_field(&f),
            l2_succ: self.l2_succ.map_field(&f),
            r2_succ: self.r2_succ.map_field(&f),
            l2_prec: self.l2_prec.map_field(&f),
            r2_prec: self.r2_prec.map_field(&f),
        }
    }
}

pub fn check_matched_pair<F: Field>(d: &MatchedPairDatum<F>) -> Result<Report> {
    d.check()
}

/// Splits `C` along two complementary sets of basis indices. The outer
/// error is for malformed index sets; the inner one explains why `C` does
/// not factorize through the given pair.
pub fn factorize<F: Field>(
    c: &AdAlgebra<F>,
    basis_a: &[usize],
    basis_b: &[usize],
) -> Result<std::result::Result<MatchedPairDatum<F>, String>> {
    let n = c.dim();
    let mut all: Vec<usize> = basis_a.iter().chain(basis_b).copied().collect();
    all.sort_unstable();
    if all != (0..n).collect::<Vec<_>>() {
        return Err(Error::malformed(format!(
            "index sets must partition 0..{n}, got {basis_a:?} and {basis_b:?}"
        )));
    }
    let order: Vec<usize> = basis_a.iter().chain(basis_b).copied().collect();
    let perm = Matrix::from_fn(n, n, |r, col| if order[col] == r { F::one() } else { F::zero() });
    let names: Vec<String> = order.iter().map(|&i| c.basis()[i].clone()).collect();
    let moved = c.transform(&perm)?.with_basis(names.clone())?;
    let k = basis_a.len();
    for (which, range) in [("A", 0..k), ("B", k..n)] {
        for op in [moved.succ_table(), moved.prec_table()] {
            for i in range.clone() {
                for j in range.clone() {
                    let p = op.basis_product(i, j);
                    let leaks = (0..n).any(|t| !range.contains(&t) && !p[t].is_zero());
                    if leaks {
                        return Ok(Err(format!(
                            "span of {which} is not a subalgebra: {} and {} multiply outside it",
                            names[i], names[j]
                        )));
                    }
                }
            }
        }
    }
    let restrict = |op: &BilinearOp<F>, range: std::ops::Range<usize>| {
        let s = range.start;
        let d = range.len();
        BilinearOp::from_fn(d, d, d, |i, j| Vector(op.basis_product(s + i, s + j)[range.clone()].to_vec()))
    };
    let alg1 = AdAlgebra::new(
        names[..k].to_vec(),
        restrict(moved.succ_table(), 0..k),
        restrict(moved.prec_table(), 0..k),
    )?;
    let alg2 = AdAlgebra::new(
        names[k..].to_vec(),
        restrict(moved.succ_table(), k..n),
        restrict(moved.prec_table(), k..n),
    )?;
    let ext = ExtendingDatum::from_product_on_sum(&alg1, &moved)?;
    let d = MatchedPairDatum {
        alg1,
        alg2,
        l1_succ: ext.l_succ,
        r1_succ: ext.r_succ,
        l1_prec: ext.l_prec,
        r1_prec: ext.r_prec,
        l2_succ: ext.rho_succ,
        r2_succ: ext.mu_succ,
        l2_prec: ext.rho_prec,
        r2_prec: ext.mu_prec,
    };
    let r = d.check()?;
    if let Some(v) = r.first_violation() {
        return Ok(Err(format!(
            "read-off data is not a matched pair: {} fails at {:?}",
            v.equation, v.witness
        )));
    }
    if d.bicrossed_product_unchecked()? != moved {
        return Ok(Err("bicrossed product does not reproduce the algebra".to_string()));
    }
    Ok(Ok(d))
}

/// A matched pair of associative algebras `(A₁, A₂, l₁, r₁, l₂, r₂)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssocMatchedPair<F> {
    pub prod1: BilinearOp<F>,
    pub prod2: BilinearOp<F>,
    pub l1: ActionFamily<F>,
    pub r1: ActionFamily<F>,
    pub l2: ActionFamily<F>,
    pub r2: ActionFamily<F>,
}

impl<F: Field> AssocMatchedPair<F> {
    pub fn dims(&self) -> (usize, usize) {
        (self.prod1.dims().0, self.prod2.dims().0)
    }

    pub fn validate(&self) -> Result<()> {
        let (n, m) = self.dims();
        check_family_shape("l₁", &self.l1, n, m)?;
        check_family_shape("r₁", &self.r1, n, m)?;
        check_family_shape("l₂", &self.l2, m, n)?;
        check_family_shape("r₂", &self.r2, m, n)?;
        Ok(())
    }

    /// Associativity of both products (`alg1/AS`, `alg2/AS`), both
    /// bimodules (`rep1/AB…`, `rep2/AB…`) and `AM1`-`AM6`.
    ///
    /// * `AM1` `(x,a,b)`: `l₁(x)(a∘b) = l₁(r₂(a)x)b + (l₁(x)a)∘b`
    /// * `AM2` `(x,a,b)`: `r₁(x)(a∘b) = r₁(l₂(b)x)a + a∘(r₁(x)b)`
    /// * `AM3` `(a,x,y)`: `l₂(a)(x∘y) = l₂(r₁(x)a)y + (l₂(a)x)∘y`
    /// * `AM4` `(a,x,y)`: `r₂(a)(x∘y) = r₂(l₁(y)a)x + x∘(r₂(a)y)`
    /// * `AM5` `(x,a,b)`: `l₁(l₂(a)x)b + (r₁(x)a)∘b = r₁(r₂(b)x)a + a∘(l₁(x)b)`
    /// * `AM6` `(x,a,y)`: `l₂(l₁(x)a)y + (r₂(a)x)∘y = r₂(r₁(y)a)x + x∘(l₂(a)y)`
    pub fn check(&self) -> Result<Report> {
        self.validate()?;
        let (n, m) = self.dims();
        let mut c = Checker::new();
        let sub = |f: &dyn Fn(&mut Checker)| {
            let mut s = Checker::new();
            f(&mut s);
            s.finish()
        };
        c.absorb(sub(&|s| check_associative(&self.prod1, s)).relabel(|e| format!("alg1/{e}")));
        c.absorb(sub(&|s| check_associative(&self.prod2, s)).relabel(|e| format!("alg2/{e}")));
        let b1 = AssocRep::new(self.prod1.clone(), self.l1.clone(), self.r1.clone())?;
        let b2 = AssocRep::new(self.prod2.clone(), self.l2.clone(), self.r2.clone())?;
        c.absorb(sub(&|s| b1.check_bimodule_into(s)).relabel(|e| format!("rep1/{e}")));
        c.absorb(sub(&|s| b2.check_bimodule_into(s)).relabel(|e| format!("rep2/{e}")));
        let p1 = |x: &[F], y: &[F]| self.prod1.apply(x, y);
        let p2 = |a: &[F], b: &[F]| self.prod2.apply(a, b);
        let (l1, r1, l2, r2) = (&self.l1, &self.r1, &self.l2, &self.r2);
        for i in 0..n {
            let x = Vector::<F>::basis(n, i);
            for k in 0..m {
                let a = Vector::<F>::basis(m, k);
                for l in 0..m {
                    let b = Vector::<F>::basis(m, l);
                    let w = [i, k, l];
                    c.equal(
                        "AM1",
                        &w,
                        &l1.apply(&x, &p2(&a, &b)),
                        &(l1.apply(&r2.apply(&a, &x), &b) + p2(&l1.apply(&x, &a), &b)),
                    );
                    c.equal(
                        "AM2",
                        &w,
                        &r1.apply(&x, &p2(&a, &b)),
                        &(r1.apply(&l2.apply(&b, &x), &a) + p2(&a, &r1.apply(&x, &b))),
                    );
                    c.equal(
                        "AM5",
                        &w,
                        &(l1.apply(&l2.apply(&a, &x), &b) + p2(&r1.apply(&x, &a), &b)),
                        &(r1.apply(&r2.apply(&b, &x), &a) + p2(&a, &l1.apply(&x, &b))),
                    );
                }
                for j in 0..n {
                    let y = Vector::<F>::basis(n, j);
                    let w = [k, i, j];
                    c.equal(
                        "AM3",
                        &w,
                        &l2.apply(&a, &p1(&x, &y)),
                        &(l2.apply(&r1.apply(&x, &a), &y) + p1(&l2.apply(&a, &x), &y)),
                    );
                    c.equal(
                        "AM4",
                        &w,
                        &r2.apply(&a, &p1(&x, &y)),
                        &(r2.apply(&l1.apply(&y, &a), &x) + p1(&x, &r2.apply(&a, &y))),
                    );
                    c.equal(
                        "AM6",
                        &[i, k, j],
                        &(l2.apply(&l1.apply(&x, &a), &y) + p1(&r2.apply(&a, &x), &y)),
                        &(r2.apply(&r1.apply(&y, &a), &x) + p1(&x, &l2.apply(&a, &y))),
                    );
                }
            }
        }
        Ok(c.finish())
    }

    /// `(x,a)(y,b) = (x∘y + l₂(a)y + r₂(b)x, a∘b + l₁(x)b + r₁(y)a)`.
    pub fn product(&self) -> Result<BilinearOp<F>> {
        self.validate()?;
        let (n, m) = self.dims();
        Ok(BilinearOp::from_fn(n + m, n + m, n + m, |i, j| match (i < n, j < n) {
            (true, true) => Vector(self.prod1.basis_product(i, j).to_vec()).concat(&vec![F::zero(); m]),
            (true, false) => self.r2.matrix(j - n).column(i).concat(&self.l1.matrix(i).column(j - n)),
            (false, true) => self.l2.matrix(i - n).column(j).concat(&self.r1.matrix(j).column(i - n)),
            (false, false) => Vector(vec![F::zero(); n]).concat(self.prod2.basis_product(i - n, j - n)),
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    type Q = Rational;

    fn nilpotent() -> AdAlgebra<Q> {
        AdAlgebra::from_entries(2, [(0, 0, 1, Q::from(1))], []).unwrap()
    }

    fn semidirect_datum() -> MatchedPairDatum<Q> {
        let rep = AdRep::regular(&nilpotent()).dual();
        MatchedPairDatum::from_representation(&rep, &AdAlgebra::zero(2)).unwrap()
    }

    #[test]
    fn zero_actions_give_the_direct_product() {
        let d = MatchedPairDatum::trivial(&nilpotent(), &nilpotent());
        assert!(d.check().unwrap().passed());
        let p = d.bicrossed_product().unwrap();
        assert!(p.check().passed());
        assert_eq!(p.succ(&p.e(2), &p.e(2)), Vector::from_i64(&[0, 0, 0, 1]));
        assert!(d.induced_associative().check().unwrap().passed());
    }

    #[test]
    fn representation_reduces_to_the_semidirect_product() {
        let d = semidirect_datum();
        assert!(d.check().unwrap().passed());
        let p = d.bicrossed_product().unwrap();
        let s = AdRep::regular(&nilpotent()).dual().semidirect_product().unwrap();
        assert_eq!(p.succ_table(), s.succ_table());
        assert_eq!(p.prec_table(), s.prec_table());
        let am = d.induced_associative();
        assert!(am.check().unwrap().passed());
    }

    #[test]
    fn perturbation_is_caught() {
        let mut d = semidirect_datum();
        // Let A₂ act back on A₁ by a nilpotent map; this breaks M3 at once.
        d.l2_succ = ActionFamily::from_fn(2, 2, |a| {
            if a == 0 {
                Matrix::from_i64(&[&[0, 0], &[1, 0]])
            } else {
                Matrix::zeros(2, 2)
            }
        });
        let r = d.check().unwrap();
        assert!(!r.passed());
        assert!(!d.bicrossed_product_unchecked().unwrap().check().passed());
        assert!(d.bicrossed_product().is_err());
    }

    #[test]
    fn factorization_round_trip() {
        let d = semidirect_datum();
        let p = d.bicrossed_product().unwrap();
        let back = factorize(&p, &[0, 1], &[2, 3]).unwrap().unwrap();
        assert_eq!(back.bicrossed_product().unwrap(), p);
        assert_eq!(back.l1_succ, d.l1_succ);
        assert_eq!(back.r1_prec, d.r1_prec);
        // Swapping the factors reads the action the other way round.
        let swapped = factorize(&p, &[2, 3], &[0, 1]).unwrap().unwrap();
        assert_eq!(swapped.l2_succ, d.l1_succ);
    }

    #[test]
    fn factorization_needs_subalgebras() {
        let r = factorize(&nilpotent(), &[0], &[1]).unwrap();
        assert!(r.unwrap_err().contains("not a subalgebra"));
        assert!(factorize(&nilpotent(), &[0], &[0]).is_err());
    }

    #[test]
    fn associative_matched_pair_matches_associativity() {
        // Corrupting the summed family is caught by AM checks exactly when
        // the associative bicrossed product stops being associative.
        let good = semidirect_datum().induced_associative();
        let mut bad = good.clone();
        bad.r2 = ActionFamily::from_fn(2, 2, |a| if a == 1 { Matrix::from_i64(&[&[0, 1], &[0, 0]]) } else { Matrix::zeros(2, 2) });
        for am in [good, bad] {
            let mut c = Checker::new();
            check_associative(&am.product().unwrap(), &mut c);
            assert_eq!(am.check().unwrap().passed(), c.finish().passed());
        }
    }

    #[test]
    fn verdict_agrees_with_bicrossed_product_over_f3() {
        use crate::field::Fp;
        use rand::{Rng, SeedableRng};
        type F3 = Fp<3>;
        // One-dimensional AD algebras over F3 are exactly those with s = p.
        let alg = |s: i64| AdAlgebra::from_entries(1, [(0, 0, 0, F3::new(s))], [(0, 0, 0, F3::new(s))]).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut sparse = || {
            let v = if rng.gen_bool(0.4) { rng.gen_range(1..3) } else { 0 };
            ActionFamily::from_fn(1, 1, |_| Matrix::from_fn(1, 1, |_, _| F3::new(v)))
        };
        let (mut passing, mut total) = (0, 0);
        for round in 0..3000 {
            let mut d = MatchedPairDatum::trivial(&alg(round % 3), &alg((round / 3) % 3));
            d.l1_succ = sparse();
            d.r1_succ = sparse();
            d.l1_prec = sparse();
            d.r1_prec = sparse();
            d.l2_succ = sparse();
            d.r2_succ = sparse();
            d.l2_prec = sparse();
            d.r2_prec = sparse();
            let verdict = d.check().unwrap().passed();
            let ad = d.bicrossed_product_unchecked().unwrap().check().passed();
            assert_eq!(verdict, ad, "round {round}: {d:?}");
            if verdict {
                passing += 1;
                assert!(d.induced_associative().check().unwrap().passed(), "round {round}");
            }
            total += 1;
        }
        assert!(passing > 20 && passing < total, "{passing} of {total}");
    }

    #[test]
    fn associative_verdict_agrees_with_associativity_over_f2() {
        use crate::field::Fp;
        use rand::{Rng, SeedableRng};
        type F2 = Fp<2>;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut bit = || F2::new(rng.gen_bool(0.07) as i64);
        let (n, m) = (2, 2);
        let mut passing = 0;
        for round in 0..4000 {
            let mut op = |k: usize| BilinearOp::from_fn(k, k, k, |_, _| Vector((0..k).map(|_| bit()).collect()));
            let (prod1, prod2) = (op(n), op(m));
            let mut fam = |a: usize, d: usize| ActionFamily::from_fn(a, d, |_| Matrix::from_fn(d, d, |_, _| bit()));
            let am = AssocMatchedPair {
                prod1,
                prod2,
                l1: fam(n, m),
                r1: fam(n, m),
                l2: fam(m, n),
                r2: fam(m, n),
            };
            let mut c = Checker::new();
            check_associative(&am.product().unwrap(), &mut c);
            let assoc = c.finish().passed();
            assert_eq!(am.check().unwrap().passed(), assoc, "round {round}: {am:?}");
            passing += assoc as usize;
        }
        assert!(passing > 10, "{passing}");
    }
}
