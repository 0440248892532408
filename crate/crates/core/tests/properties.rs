use adw_core::algebra::{check_associative, AdAlgebra};
use adw_core::field::{Field, Fp, Rational};
use adw_core::io::{from_json, to_json, Context};
use adw_core::linalg::{solve_linear, LinearSolve, Matrix, Vector};
use adw_core::report::Checker;
use adw_core::representation::AdRep;
use adw_core::tables::BilinearOp;
use adw_core::tensor::Tensor2;
use proptest::prelude::*;

type Q = Rational;

fn q(n: i64) -> Q {
    Q::from(n)
}

fn rational() -> impl Strategy<Value = Q> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| Q::new(n, d))
}

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Q>> {
    prop::collection::vec(-3i64..=3, rows * cols).prop_map(move |v| Matrix::from_fn(rows, cols, |r, c| q(v[r * cols + c])))
}

/// Unit triangular factors, hence invertible.
fn invertible(n: usize) -> impl Strategy<Value = Matrix<Q>> {
    (small_matrix(n, n), small_matrix(n, n)).prop_map(move |(l, u)| {
        let lower = Matrix::from_fn(n, n, |r, c| if r > c { l[(r, c)].clone() } else if r == c { q(1) } else { q(0) });
        let upper = Matrix::from_fn(n, n, |r, c| if r < c { u[(r, c)].clone() } else if r == c { q(1) } else { q(0) });
        lower.mul(&upper)
    })
}

fn table(n: usize) -> impl Strategy<Value = BilinearOp<Q>> {
    prop::collection::vec(prop_oneof![4 => Just(0i64), 1 => -2i64..=2], n * n * n)
        .prop_map(move |v| BilinearOp::from_fn(n, n, n, |i, j| Vector((0..n).map(|k| q(v[(i * n + j) * n + k])).collect())))
}

fn any_algebra(n: usize) -> impl Strategy<Value = AdAlgebra<Q>> {
    (table(n), table(n)).prop_map(|(s, p)| AdAlgebra::from_tables(s, p).unwrap())
}

/// Anti-dendriform algebras: the e2-valued family and the regular
/// semidirect square of the nilpotent one, in a random basis.
fn ad_algebra() -> impl Strategy<Value = AdAlgebra<Q>> {
    let two = (-3i64..=3, -3i64..=3, invertible(2))
        .prop_map(|(a, b, p)| AdAlgebra::from_entries(2, [(0, 0, 1, q(a))], [(0, 0, 1, q(b))]).unwrap().transform(&p).unwrap());
    let four = invertible(4).prop_map(|p| {
        let n = AdAlgebra::from_entries(2, [(0, 0, 1, q(1))], []).unwrap();
        AdRep::regular(&n).dual().semidirect_product().unwrap().transform(&p).unwrap()
    });
    prop_oneof![two, four]
}

proptest! {
    #[test]
    fn rational_text_round_trips(x in rational()) {
        let back: Q = x.to_string().parse().unwrap();
        prop_assert_eq!(&back, &x);
        prop_assert_eq!(Q::parse(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn prime_field_parses_fractions(n in -100i64..=100, d in 1i64..=6) {
        prop_assume!(d % 7 != 0);
        let x = <Fp<7>>::parse(&format!("{n}/{d}")).unwrap();
        prop_assert_eq!(x * Fp::<7>::from_i64(d), Fp::<7>::from_i64(n));
    }

    #[test]
    fn basis_change_keeps_the_verdict(a in any_algebra(2), p in invertible(2)) {
        let moved = a.transform(&p).unwrap();
        prop_assert_eq!(moved.check().passed(), a.check().passed());
        let back = moved.transform(&p.inverse().unwrap()).unwrap();
        prop_assert_eq!(back.succ_table(), a.succ_table());
        prop_assert_eq!(back.prec_table(), a.prec_table());
        prop_assert!(moved.check_homomorphism(&a, &p).unwrap().passed());
    }

    #[test]
    fn anti_dendriform_implies_associative(a in ad_algebra()) {
        prop_assert!(a.check().passed());
        let mut c = Checker::new();
        check_associative(&a.dot_table(), &mut c);
        prop_assert!(c.finish().passed());
    }

    #[test]
    fn left_multiplications_rebuild_the_product(a in ad_algebra(), x in prop::collection::vec(-3i64..=3, 4), y in prop::collection::vec(-3i64..=3, 4)) {
        let n = a.dim();
        let (x, y) = (Vector::from_i64(&x[..n]), Vector::from_i64(&y[..n]));
        let ops = a.mul_operators();
        prop_assert_eq!(ops.l_succ.apply(&x, &y), a.succ(&x, &y));
        prop_assert_eq!(ops.r_prec.apply(&y, &x), a.prec(&x, &y));
        let reg = AdRep::regular(&a);
        prop_assert!(reg.check().passed());
        prop_assert!(reg.dual().check().passed());
    }

    #[test]
    fn algebra_json_round_trips(a in any_algebra(3)) {
        let text = to_json(&a).unwrap();
        let back: AdAlgebra<Q> = from_json(&text, &Context::here()).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(to_json(&back).unwrap(), text);
    }

    #[test]
    fn matrix_json_round_trips(m in small_matrix(3, 2), d in 1i64..=5) {
        let m = m.scale(&Q::new(1, d));
        let back: Matrix<Q> = from_json(&to_json(&m).unwrap(), &Context::here()).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn linear_solutions_and_certificates_are_valid(m in small_matrix(4, 3), b in prop::collection::vec(-3i64..=3, 4)) {
        let b = Vector::from_i64(&b);
        match solve_linear(&m, &b).unwrap() {
            LinearSolve::Consistent(s) => {
                prop_assert_eq!(m.apply(&s.particular), b);
                for v in &s.nullspace {
                    prop_assert!(m.apply(v).is_zero());
                }
                prop_assert_eq!(s.nullspace.len(), 3 - m.rank());
            }
            LinearSolve::Inconsistent { certificate } => {
                prop_assert!(m.transpose().apply(&certificate).is_zero());
                prop_assert!(!certificate.dot(&b).is_zero());
            }
        }
    }

    #[test]
    fn twist_is_an_involution(m in small_matrix(3, 3)) {
        let t = Tensor2::from_matrix(&m);
        prop_assert_eq!(t.twist().twist(), t.clone());
        prop_assert!(t.sub(&t.twist()).is_skew());
        prop_assert_eq!(t.is_skew(), t.twist() == t.neg());
    }
}
