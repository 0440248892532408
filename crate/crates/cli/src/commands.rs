use std::path::Path;

use adw_core::algebra::{check_associative, AdAlgebra};
use adw_core::bialgebra::{
    build_double_construction, check_coboundary_conditions, check_connes_cocycle, check_d_bialgebra,
    check_t_r_identity, coboundary_coproducts, derive_compatible_ad, BilinearForm, CoproductPair,
};
use adw_core::extension::{
    check_cocycles_cohomologous, check_inducible, cocycle_from_section, find_cohomologous_zeta,
    gh2_tuples_cohomologous, wells_map, z1_basis, AutPair, CrossedDatum, Gh2Tuple, Gh2Verdict, WellsVerdict,
    ZetaSearch,
};
use adw_core::field::{Field, Rational};
use adw_core::io::{self, Codec};
use adw_core::linalg::{Matrix, Vector};
use adw_core::matched::{factorize, MatchedPairDatum};
use adw_core::report::{Checker, Report};
use adw_core::representation::{AdRep, AssocRep, InducedAssoc};
use adw_core::tables::BilinearOp;
use adw_core::tensor::Tensor3;
use adw_core::unified::{check_equivalence, extract_extending_structure, find_cohomology, CohomologySearch, ExtendingDatum};
use adw_core::ybe::{check_o_operator, o_operator_to_ybe, OOperatorRep, RMatrix};
use anyhow::{bail, Context as _, Result};

use crate::output::Outcome;
use crate::*;

type Q = Rational;

pub fn name(g: &Group) -> String {
    let (group, action) = match g {
        Group::Algebra(c) => ("algebra", action_name(c)),
        Group::Rep(c) => ("rep", action_name(c)),
        Group::Unified(c) => ("unified", action_name(c)),
        Group::Crossed(c) => ("crossed", action_name(c)),
        Group::Gh2(c) => ("gh2", action_name(c)),
        Group::Inducible(c) => ("inducible", action_name(c)),
        Group::Wells(c) => ("wells", action_name(c)),
        Group::Z1(c) => ("z1", action_name(c)),
        Group::Matched(c) => ("matched", action_name(c)),
        Group::Connes(c) => ("connes", action_name(c)),
        Group::Bialgebra(c) => ("bialgebra", action_name(c)),
        Group::Ybe(c) => ("ybe", action_name(c)),
        Group::Oop(c) => ("oop", action_name(c)),
    };
    format!("{group} {action}")
}

/// Whether the command can write an object with `--out`.
pub fn constructs(g: &Group) -> bool {
    !matches!(
        g,
        Group::Algebra(AlgebraCmd::Check { .. })
            | Group::Rep(RepCmd::Check { .. })
            | Group::Unified(UnifiedCmd::Check { .. } | UnifiedCmd::Equiv { .. })
            | Group::Crossed(CrossedCmd::Check { .. } | CrossedCmd::Cohomologous { .. })
            | Group::Gh2(_)
            | Group::Wells(_)
            | Group::Z1(_)
            | Group::Matched(MatchedCmd::Check { .. })
            | Group::Connes(ConnesCmd::Check { .. })
            | Group::Bialgebra(BialgebraCmd::Check { .. })
            | Group::Ybe(_)
            | Group::Oop(OopCmd::Check { .. })
    )
}

/// `FromSection { .. }` -> `from-section`.
fn action_name(c: &impl std::fmt::Debug) -> String {
    let debug = format!("{c:?}");
    let head = debug.split([' ', '{', '(']).next().unwrap_or_default();
    let mut out = String::new();
    for (i, ch) in head.chars().enumerate() {
        if ch.is_uppercase() && i > 0 {
            out.push('-');
        }
        out.push(ch.to_ascii_lowercase());
    }
    out
}

fn load<T: Codec>(path: &Path) -> Result<T> {
    io::load(path).with_context(|| format!("reading {}", path.display()))
}

fn checker(cli: &Cli) -> Checker {
    Checker::with_mode(cli.opts.exhaustive)
}

/// One `label` violation per nonzero entry.
pub fn residual_report<F: Field>(t: &Tensor3<F>, label: &str, exhaustive: bool) -> Report {
    let mut c = Checker::with_mode(exhaustive);
    let [a, b, d] = t.dims();
    for i in 0..a {
        for j in 0..b {
            for k in 0..d {
                c.zero(label, &[i, j, k], std::slice::from_ref(t.get(i, j, k)));
            }
        }
    }
    c.finish()
}

/// A decision that failed without coordinates, with the certificate.
fn refuted(label: &str, certificate: &Vector<Q>) -> Report {
    let mut c = Checker::new();
    let cert: Vec<String> = certificate.iter().map(|x| x.to_string()).collect();
    c.fail_with(label, &[], &format!("certificate [{}]", cert.join(", ")));
    c.finish()
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Group::Algebra(c) => algebra(cli, c),
        Group::Rep(c) => rep(cli, c),
        Group::Unified(c) => unified(cli, c),
        Group::Crossed(c) => crossed(cli, c),
        Group::Gh2(c) => gh2(c),
        Group::Inducible(InducibleCmd::Check { datum, pair, phi }) => {
            let d: CrossedDatum<Q> = load(datum)?;
            let pair: AutPair<Q> = load(pair)?;
            let phi: Matrix<Q> = load(phi)?;
            let r = check_inducible(&d, &pair, &phi)?;
            let mut o = Outcome::new(r.report);
            if let Some(g) = &r.gamma {
                o = o.produce(g);
            }
            Ok(o)
        }
        Group::Wells(WellsCmd::Eval { datum, pair }) => {
            let d: CrossedDatum<Q> = load(datum)?;
            let pair: AutPair<Q> = load(pair)?;
            let aut = pair.check(&d.algebra, &d.v_algebra)?;
            if !aut.passed() {
                return Ok(Outcome::new(aut));
            }
            let class = wells_map(&d, &pair)?;
            let o = Outcome::new(aut).with_object("transformed", &class.transformed);
            Ok(match class.decide()? {
                WellsVerdict::Vanishes { zeta } => o.with("vanishes", true).with_object("zeta", &zeta),
                WellsVerdict::NonVanishing { certificate } => Outcome {
                    report: refuted("Wells", &certificate),
                    ..o.with("vanishes", false)
                },
            })
        }
        Group::Z1(Z1Cmd::Basis { datum }) => {
            let d: CrossedDatum<Q> = load(datum)?;
            let basis = z1_basis(&d)?;
            let encoded: Vec<_> = basis.iter().map(Codec::encode).collect();
            Ok(Outcome::new(Report::default())
                .with("dimension", basis.len())
                .with("basis", encoded))
        }
        Group::Matched(c) => matched(cli, c),
        Group::Connes(c) => connes(c),
        Group::Bialgebra(c) => bialgebra(c),
        Group::Ybe(c) => ybe(cli, c),
        Group::Oop(c) => oop(cli, c),
    }
}

fn algebra(cli: &Cli, cmd: &AlgebraCmd) -> Result<Outcome> {
    match cmd {
        AlgebraCmd::Check { algebra } => {
            let a: AdAlgebra<Q> = load(algebra)?;
            let mut c = checker(cli);
            a.check_into(&mut c);
            Ok(Outcome::new(c.finish())
                .with("dimension", a.dim())
                .with("antiZinbiel", a.is_anti_zinbiel()))
        }
        AlgebraCmd::Dual { algebra } => {
            let a: AdAlgebra<Q> = load(algebra)?;
            let dual = AdRep::regular(&a).dual();
            let mut c = checker(cli);
            dual.check_into(&mut c);
            Ok(Outcome::new(c.finish()).produce(&dual))
        }
        AlgebraCmd::Assoc { algebra } => {
            let a: AdAlgebra<Q> = load(algebra)?;
            let dot = a.dot_table();
            let mut c = checker(cli);
            check_associative(&dot, &mut c);
            Ok(Outcome::new(c.finish()).produce(&dot))
        }
    }
}

fn rep(cli: &Cli, cmd: &RepCmd) -> Result<Outcome> {
    let (RepCmd::Check { rep } | RepCmd::Dual { rep } | RepCmd::Semidirect { rep }) = cmd;
    let rep: AdRep<Q> = load(rep)?;
    let mut c = checker(cli);
    rep.check_into(&mut c);
    let report = c.finish();
    match cmd {
        RepCmd::Check { .. } => {
            let induced: serde_json::Map<String, serde_json::Value> = InducedAssoc::ALL
                .iter()
                .map(|k| (format!("{k:?}"), rep.induced_assoc(*k).check().passed().into()))
                .collect();
            Ok(Outcome::new(report).with("inducedAssociative", induced))
        }
        RepCmd::Dual { .. } => {
            let dual = rep.dual();
            let mut c = checker(cli);
            dual.check_into(&mut c);
            Ok(Outcome::new(c.finish()).produce(&dual))
        }
        RepCmd::Semidirect { .. } => {
            if !report.passed() {
                return Ok(Outcome::new(report));
            }
            let sd = rep.semidirect_product_unchecked();
            Ok(Outcome::new(report).produce(&sd))
        }
    }
}

fn unified(cli: &Cli, cmd: &UnifiedCmd) -> Result<Outcome> {
    match cmd {
        UnifiedCmd::Check { datum } => {
            let d: ExtendingDatum<Q> = load(datum)?;
            Ok(Outcome::new(d.check_with(checker(cli))?))
        }
        UnifiedCmd::Build { datum } => {
            let d: ExtendingDatum<Q> = load(datum)?;
            let report = d.check_with(checker(cli))?;
            if !report.passed() {
                return Ok(Outcome::new(report));
            }
            let e = d.unified_product_unchecked()?;
            Ok(Outcome::new(report).produce(&e))
        }
        UnifiedCmd::Extract {
            algebra,
            inclusion,
            projector,
        } => {
            let e: AdAlgebra<Q> = load(algebra)?;
            let inc: Matrix<Q> = load(inclusion)?;
            let proj: Matrix<Q> = load(projector)?;
            let x = extract_extending_structure(&e, &inc, &proj)?;
            let report = x.datum.check_with(checker(cli))?;
            Ok(Outcome::new(report)
                .with_object("iso", &x.iso)
                .with_object("kernel", &x.kernel)
                .produce(&x.datum))
        }
        UnifiedCmd::Equiv { datum, other, zeta, eta } => {
            let d: ExtendingDatum<Q> = load(datum)?;
            let d2: ExtendingDatum<Q> = load(other)?;
            match (zeta, eta) {
                (Some(z), Some(h)) => {
                    let z: Matrix<Q> = load(z)?;
                    let h: Matrix<Q> = load(h)?;
                    Ok(Outcome::new(check_equivalence(&d, &d2, &z, &h)?))
                }
                (None, None) => Ok(match find_cohomology(&d, &d2)? {
                    CohomologySearch::Found(z) => Outcome::new(Report::default()).with_object("zeta", &z),
                    CohomologySearch::Infeasible { certificate } => Outcome::new(refuted("cohomologous", &certificate)),
                }),
                _ => bail!("give both --zeta and --eta, or neither to search with η = id"),
            }
        }
    }
}

fn crossed(cli: &Cli, cmd: &CrossedCmd) -> Result<Outcome> {
    match cmd {
        CrossedCmd::Check { datum } => {
            let d: CrossedDatum<Q> = load(datum)?;
            Ok(Outcome::new(d.check_with(checker(cli))?))
        }
        CrossedCmd::Build { datum } => {
            let d: CrossedDatum<Q> = load(datum)?;
            let report = d.check_with(checker(cli))?;
            if !report.passed() {
                return Ok(Outcome::new(report));
            }
            let e = d.crossed_product_unchecked()?;
            Ok(Outcome::new(report).produce(&e))
        }
        CrossedCmd::FromSection {
            extension,
            algebra,
            projection,
            section,
        } => {
            let e: AdAlgebra<Q> = load(extension)?;
            let a: AdAlgebra<Q> = load(algebra)?;
            let p: Matrix<Q> = load(projection)?;
            let s: Matrix<Q> = load(section)?;
            let sc = cocycle_from_section(&e, &a, &p, &s)?;
            let report = sc.datum.check_with(checker(cli))?;
            Ok(Outcome::new(report)
                .with_object("iso", &sc.iso)
                .with_object("kernel", &sc.kernel)
                .produce(&sc.datum))
        }
        CrossedCmd::Cohomologous { datum, other, zeta } => {
            let d: CrossedDatum<Q> = load(datum)?;
            let d2: CrossedDatum<Q> = load(other)?;
            if let Some(z) = zeta {
                let z: Matrix<Q> = load(z)?;
                return Ok(Outcome::new(check_cocycles_cohomologous(&d, &d2, &z)?));
            }
            Ok(match find_cohomologous_zeta(&d, &d2)? {
                ZetaSearch::Found(z) => Outcome::new(Report::default()).with_object("zeta", &z),
                ZetaSearch::Infeasible { certificate } => Outcome::new(refuted("cohomologous", &certificate)),
            })
        }
    }
}

fn gh2(cmd: &Gh2Cmd) -> Result<Outcome> {
    match cmd {
        Gh2Cmd::Check { tuple } => {
            let t: Gh2Tuple<Q> = load(tuple)?;
            Ok(Outcome::new(t.check()?))
        }
        Gh2Cmd::Cohomologous { tuple, other } => {
            let t1: Gh2Tuple<Q> = load(tuple)?;
            let t2: Gh2Tuple<Q> = load(other)?;
            Ok(match gh2_tuples_cohomologous(&t1, &t2)? {
                Gh2Verdict::Cohomologous { w } => {
                    let w: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                    Outcome::new(Report::default()).with("w", w)
                }
                Gh2Verdict::MatricesDiffer { which } => {
                    let mut c = Checker::new();
                    c.fail_with("cohomologous", &[], &format!("matrix {which} differs"));
                    Outcome::new(c.finish())
                }
                Gh2Verdict::NotCohomologous { certificate } => Outcome::new(refuted("cohomologous", &certificate)),
            })
        }
    }
}

fn matched(cli: &Cli, cmd: &MatchedCmd) -> Result<Outcome> {
    match cmd {
        MatchedCmd::Check { datum } => {
            let d: MatchedPairDatum<Q> = load(datum)?;
            Ok(Outcome::new(d.check_with(checker(cli))?))
        }
        MatchedCmd::Build { datum } => {
            let d: MatchedPairDatum<Q> = load(datum)?;
            let report = d.check_with(checker(cli))?;
            if !report.passed() {
                return Ok(Outcome::new(report));
            }
            let e = d.bicrossed_product_unchecked()?;
            Ok(Outcome::new(report).produce(&e))
        }
        MatchedCmd::Factorize {
            algebra,
            basis_a,
            basis_b,
        } => {
            let c: AdAlgebra<Q> = load(algebra)?;
            match factorize(&c, basis_a, basis_b)? {
                Ok(d) => Ok(Outcome::new(d.check_with(checker(cli))?).produce(&d)),
                Err(why) => {
                    let mut ch = Checker::new();
                    ch.fail_with("factorize", &[], &why);
                    Ok(Outcome::new(ch.finish()))
                }
            }
        }
    }
}

fn connes(cmd: &ConnesCmd) -> Result<Outcome> {
    match cmd {
        ConnesCmd::Check { product, form } => {
            let p: BilinearOp<Q> = load(product)?;
            let w: BilinearForm<Q> = load(form)?;
            Ok(Outcome::new(check_connes_cocycle(&p, &w)?).with("nondegenerate", w.is_nondegenerate()))
        }
        ConnesCmd::Derive { product, form } => {
            let p: BilinearOp<Q> = load(product)?;
            let w: BilinearForm<Q> = load(form)?;
            let mut report = check_connes_cocycle(&p, &w)?;
            if !w.is_nondegenerate() {
                let mut c = Checker::new();
                c.fail_with("nondegenerate", &[], "the form is degenerate");
                report.merge(c.finish());
            }
            if !report.passed() {
                return Ok(Outcome::new(report));
            }
            let a = derive_compatible_ad(&p, &w)?;
            report.merge(a.check());
            Ok(Outcome::new(report).produce(&a))
        }
        ConnesCmd::Double { algebra, dual } => {
            let a: AdAlgebra<Q> = load(algebra)?;
            let astar: AdAlgebra<Q> = load(dual)?;
            let dc = build_double_construction(&a, &astar)?;
            let mut o = Outcome::new(dc.report).with_object("form", &dc.form);
            if let Some(p) = &dc.product {
                o = o.with_object("product", p);
            }
            if let Some(c) = &dc.compatible {
                o = o.produce(c);
            }
            Ok(o)
        }
    }
}

fn bialgebra(cmd: &BialgebraCmd) -> Result<Outcome> {
    match cmd {
        BialgebraCmd::Check { algebra, coproducts } => {
            let a: AdAlgebra<Q> = load(algebra)?;
            let cp: CoproductPair<Q> = load(coproducts)?;
            Ok(Outcome::new(check_d_bialgebra(&a, &cp)?))
        }
        BialgebraCmd::Coboundary { algebra, rsucc, rprec } => {
            let a: AdAlgebra<Q> = load(algebra)?;
            let rs: RMatrix<Q> = load(rsucc)?;
            let rp: RMatrix<Q> = load(rprec)?;
            let report = check_coboundary_conditions(&a, &rs.r, &rp.r)?;
            let cp = coboundary_coproducts(&a, &rs.r, &rp.r)?;
            Ok(Outcome::new(report).produce(&cp))
        }
    }
}

fn ybe(cli: &Cli, cmd: &YbeCmd) -> Result<Outcome> {
    match cmd {
        YbeCmd::Residual { algebra, r } => {
            let a: AdAlgebra<Q> = load(algebra)?;
            let r: RMatrix<Q> = load(r)?;
            let residual = adw_core::bialgebra::adybe_residual(&a, &r.r)?;
            let report = residual_report(&residual, "YE6", cli.opts.exhaustive);
            let mut o = Outcome::new(report).with_object("residual", &residual);
            if r.skew {
                o = o.with("trIdentity", check_t_r_identity(&a, &r.r)?.passed());
            }
            Ok(o)
        }
        YbeCmd::Search { algebra, grid } => crate::search::ybe_search(&cli.opts.field, algebra, *grid),
    }
}

fn oop(cli: &Cli, cmd: &OopCmd) -> Result<Outcome> {
    match cmd {
        OopCmd::Check { t, rep, mode } => {
            let t: Matrix<Q> = load(t)?;
            let rep = match mode {
                Mode::Ad => OOperatorRep::AntiDendriform(load::<AdRep<Q>>(rep).context("--mode ad expects a representation file")?),
                Mode::Assoc => OOperatorRep::Associative(
                    load::<AssocRep<Q>>(rep).context("--mode assoc expects an associative representation file")?,
                ),
            };
            let rep_report = rep.check();
            if !rep_report.passed() {
                bail!("not a representation: {} fails", rep_report.violations[0].equation);
            }
            Ok(Outcome::new(check_o_operator(&t, &rep)?))
        }
        OopCmd::Lift { t, rep } => {
            let t: Matrix<Q> = load(t)?;
            let rep: AdRep<Q> = load(rep)?;
            let lift = o_operator_to_ybe(&t, &rep)?;
            let mut report = check_o_operator(&t, &OOperatorRep::AntiDendriform(rep))?;
            report.merge(residual_report(&lift.residual, "YE6", cli.opts.exhaustive));
            let r = RMatrix::new(lift.r.clone(), true)?;
            Ok(Outcome::new(report)
                .with_object("r", &r)
                .with_object("residual", &lift.residual)
                .produce(&lift.ambient))
        }
    }
}
