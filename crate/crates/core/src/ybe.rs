//! O-operators, the lift of an O-operator to a skew-symmetric solution of the
//! AD-YBE, and exhaustive searches for skew-symmetric solutions and for
//! O-operators over a finite grid of scalars.

use rayon::prelude::*;

use crate::algebra::AdAlgebra;
use crate::bialgebra::adybe_residual;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Vector};
use crate::report::{Checker, Report};
use crate::representation::{AdRep, AssocRep};
use crate::tensor::{Tensor2, Tensor3};

/// Largest algebra dimension accepted by [`search_skew_solutions`].
pub const MAX_SEARCH_DIM: usize = 4;

/// An element of `A ⊗ A`, optionally claimed skew-symmetric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix<F> {
    pub r: Tensor2<F>,
    pub skew: bool,
}

impl<F: Field> RMatrix<F> {
    pub fn new(r: Tensor2<F>, skew: bool) -> Result<Self> {
        let (n1, n2) = r.dims();
        if n1 != n2 {
            return Err(Error::dim(format!("r must be square, got {n1}x{n2}")));
        }
        if skew && !r.is_skew() {
            return Err(Error::precondition("r is claimed skew-symmetric but is not"));
        }
        Ok(RMatrix { r, skew })
    }
}

/// The representation an O-operator is taken against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OOperatorRep<F> {
    AntiDendriform(AdRep<F>),
    Associative(AssocRep<F>),
}

impl<F: Field> OOperatorRep<F> {
    fn dims(&self) -> (usize, usize) {
        match self {
            OOperatorRep::AntiDendriform(r) => (r.algebra().dim(), r.mod_dim()),
            OOperatorRep::Associative(r) => (r.product().dims().0, r.mod_dim()),
        }
    }

    pub fn check(&self) -> Report {
        match self {
            OOperatorRep::AntiDendriform(r) => r.check(),
            OOperatorRep::Associative(r) => r.check(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OOperator<F> {
    /// `T: V → A`, one column per basis element of `V`.
    pub t: Matrix<F>,
    pub rep: OOperatorRep<F>,
}

impl<F: Field> OOperator<F> {
    pub fn check(&self) -> Result<Report> {
        check_o_operator(&self.t, &self.rep)
    }
}

/// `T(u)≻T(v) = T(l≻(Tu)v + r≻(Tv)u)` (`O≻`) and the same for `≺` (`O≺`),
/// or `T(u)·T(v) = T(l(Tu)v + r(Tv)u)` (`O·`) in the associative case.
/// Witness `[u, v]` over basis pairs of `V`.
pub fn check_o_operator<F: Field>(t: &Matrix<F>, rep: &OOperatorRep<F>) -> Result<Report> {
    let (n, m) = rep.dims();
    if t.shape() != (n, m) {
        return Err(Error::dim(format!(
            "T must be {n}x{m} (algebra by module), got {:?}",
            t.shape()
        )));
    }
    let mut c = Checker::new();
    let side = |c: &mut Checker,
                label: &str,
                op: &dyn Fn(&[F], &[F]) -> Vector<F>,
                l: &crate::tables::ActionFamily<F>,
                r: &crate::tables::ActionFamily<F>| {
        for u in 0..m {
            for v in 0..m {
                let (tu, tv) = (t.column(u), t.column(v));
                let inner = l.apply(&tu, &Vector::basis(m, v)) + r.apply(&tv, &Vector::basis(m, u));
                c.equal(label, &[u, v], &op(&tu, &tv), &t.apply(&inner));
            }
        }
    };
    match rep {
        OOperatorRep::AntiDendriform(rep) => {
            let a = rep.algebra();
            side(&mut c, "O≻", &|x, y| a.succ(x, y), rep.l_succ(), rep.r_succ());
            side(&mut c, "O≺", &|x, y| a.prec(x, y), rep.l_prec(), rep.r_prec());
        }
        OOperatorRep::Associative(rep) => {
            let p = rep.product();
            side(&mut c, "O·", &|x, y| p.apply(x, y), rep.left(), rep.right());
        }
    }
    Ok(c.finish())
}

#[derive(Clone, Debug)]
pub struct OLift<F> {
    /// `Â = A ⋉ V*` through the dual representation, basis of `A` first.
    pub ambient: AdAlgebra<F>,
    /// `T - τ(T)` with `T = Σ T(v_i) ⊗ v_i*`.
    pub r: Tensor2<F>,
    pub residual: Tensor3<F>,
}

impl<F: Field> OLift<F> {
    /// Zero residual, i.e. `r` solves the AD-YBE in `Â`.
    pub fn solves(&self) -> bool {
        self.residual.is_zero()
    }
}

/// Lifts `T: V → A` to `r = T - τ(T)` in `A ⋉ V*` and evaluates the AD-YBE
/// residual there. The residual vanishes exactly when `T` is an O-operator.
pub fn o_operator_to_ybe<F: Field>(t: &Matrix<F>, rep: &AdRep<F>) -> Result<OLift<F>> {
    let checked = rep.check();
    if let Some(v) = checked.first_violation() {
        return Err(Error::precondition(format!(
            "not a representation: {} fails at {:?}",
            v.equation, v.witness
        )));
    }
    let (n, m) = (rep.algebra().dim(), rep.mod_dim());
    if t.shape() != (n, m) {
        return Err(Error::dim(format!("T must be {n}x{m}, got {:?}", t.shape())));
    }
    let ambient = rep.dual().semidirect_product_unchecked();
    let mut basis = rep.algebra().basis().to_vec();
    basis.extend((1..=m).map(|i| format!("v{i}*")));
    let ambient = ambient.with_basis(basis)?;
    let mut tt = Tensor2::zeros(n + m, n + m);
    for a in 0..n {
        for i in 0..m {
            tt.set(a, n + i, t[(a, i)].clone());
        }
    }
    let r = tt.sub(&tt.twist());
    let residual = adybe_residual(&ambient, &r)?;
    Ok(OLift { ambient, r, residual })
}

/// Every tuple over `grid` of length `k`, in lexicographic order of grid
/// positions with the first coordinate most significant.
fn grid_point<F: Field>(grid: &[F], k: usize, mut code: usize) -> Vec<F> {
    let g = grid.len();
    let mut out = vec![F::zero(); k];
    for slot in out.iter_mut().rev() {
        *slot = grid[code % g].clone();
        code /= g;
    }
    out
}

fn grid_size(g: usize, k: usize) -> Result<usize> {
    g.checked_pow(k as u32)
        .filter(|&s| s <= 50_000_000)
        .ok_or_else(|| Error::precondition(format!("search space {g}^{k} is too large")))
}

/// The skew tensor with the given coefficients on `e_i ⊗ e_j`, `i < j`, in
/// row order.
pub fn skew_from_coefficients<F: Field>(n: usize, coeffs: &[F]) -> Tensor2<F> {
    let mut t = Tensor2::zeros(n, n);
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            t.set(i, j, coeffs[k].clone());
            t.set(j, i, -coeffs[k].clone());
            k += 1;
        }
    }
    t
}

/// All skew-symmetric solutions of the AD-YBE with coefficients from `grid`
/// (for a prime field, pass every element). The search is split across
/// worker threads; the output order is lexicographic in grid positions and
/// does not depend on the number of workers.
pub fn search_skew_solutions<F: Field>(alg: &AdAlgebra<F>, grid: &[F]) -> Result<Vec<Tensor2<F>>> {
    let n = alg.dim();
    if n > MAX_SEARCH_DIM {
        return Err(Error::precondition(format!(
            "skew search is limited to dimension {MAX_SEARCH_DIM}, got {n}"
        )));
    }
    if grid.is_empty() {
        return Err(Error::malformed("empty search grid"));
    }
    let k = n * (n - 1) / 2;
    let size = grid_size(grid.len(), k)?;
    let found = (0..size)
        .into_par_iter()
        .filter_map(|code| {
            let r = skew_from_coefficients(n, &grid_point(grid, k, code));
            adybe_residual(alg, &r).ok().filter(|t| t.is_zero()).map(|_| r)
        })
        .collect();
    Ok(found)
}

/// All O-operators `T: V → A` with entries from `grid`, in lexicographic
/// order of the row-major entries.
pub fn search_o_operators<F: Field>(rep: &OOperatorRep<F>, grid: &[F]) -> Result<Vec<Matrix<F>>> {
    let (n, m) = rep.dims();
    if grid.is_empty() {
        return Err(Error::malformed("empty search grid"));
    }
    let size = grid_size(grid.len(), n * m)?;
    let found = (0..size)
        .into_par_iter()
        .filter_map(|code| {
            let entries = grid_point(grid, n * m, code);
            let t = Matrix::from_fn(n, m, |i, j| entries[i * m + j].clone());
            match check_o_operator(&t, rep) {
                Ok(r) if r.passed() => Some(t),
                _ => None,
            }
        })
        .collect();
    Ok(found)
}
