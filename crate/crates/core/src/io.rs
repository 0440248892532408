//! JSON files. Tables are stored sparsely with 0-based indices and
//! coefficients as fraction strings; readers also accept plain integers.
//! Writers emit canonical JSON: keys sorted, fractions in lowest terms, zero
//! entries omitted, entries in index order. Unknown keys are rejected.
//!
//! Nested algebras may be given inline or as a path, resolved relative to the
//! file that mentions them.

use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::algebra::{default_basis, AdAlgebra};
use crate::bialgebra::{BilinearForm, CoproductPair};
use crate::error::{Error, Result};
use crate::extension::{AutPair, CrossedDatum, Gh2Tuple};
use crate::field::Field;
use crate::linalg::{Matrix, Vector};
use crate::matched::MatchedPairDatum;
use crate::representation::{AdRep, AssocRep};
use crate::tables::{ActionFamily, BilinearOp};
use crate::tensor::{Tensor2, Tensor3};
use crate::unified::ExtendingDatum;
use crate::ybe::RMatrix;

/// A coefficient as written in a file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RawScalar {
    Int(i64),
    Text(String),
}

impl RawScalar {
    fn of<F: Field>(x: &F) -> Self {
        RawScalar::Text(x.to_string())
    }

    fn value<F: Field>(&self) -> Result<F> {
        match self {
            RawScalar::Int(n) => Ok(F::from_i64(*n)),
            RawScalar::Text(s) => Ok(F::parse(s)?),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: RawScalar,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionEntry {
    pub x: usize,
    pub r: usize,
    pub c: usize,
    pub v: RawScalar,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixEntry {
    pub r: usize,
    pub c: usize,
    pub v: RawScalar,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorEntry {
    pub i: usize,
    pub j: usize,
    pub c: RawScalar,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoproductEntry {
    pub x: usize,
    pub i: usize,
    pub j: usize,
    pub c: RawScalar,
}

/// Either a path to another file or the object itself.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Nested<T> {
    Path(String),
    Inline(Box<T>),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dimension: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub succ: Vec<ProductEntry>,
    #[serde(default)]
    pub prec: Vec<ProductEntry>,
}

/// An associative (or any single bilinear) product on `k^n`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductFile {
    pub dimension: usize,
    #[serde(default)]
    pub product: Vec<ProductEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct RepresentationFile {
    pub algebra: Nested<AlgebraFile>,
    pub mod_dim: usize,
    #[serde(default)]
    pub lsucc: Vec<ActionEntry>,
    #[serde(default)]
    pub rsucc: Vec<ActionEntry>,
    #[serde(default)]
    pub lprec: Vec<ActionEntry>,
    #[serde(default)]
    pub rprec: Vec<ActionEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct AssocRepresentationFile {
    pub algebra: Nested<ProductFile>,
    pub mod_dim: usize,
    #[serde(default)]
    pub left: Vec<ActionEntry>,
    #[serde(default)]
    pub right: Vec<ActionEntry>,
}

/// Actions of `A` on `V` use `x` in `A`; `rho`, `mu` use `x` in `V`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct ExtendingDatumFile {
    pub algebra: Nested<AlgebraFile>,
    pub v_dim: usize,
    #[serde(default)]
    pub lsucc: Vec<ActionEntry>,
    #[serde(default)]
    pub rsucc: Vec<ActionEntry>,
    #[serde(default)]
    pub lprec: Vec<ActionEntry>,
    #[serde(default)]
    pub rprec: Vec<ActionEntry>,
    #[serde(default)]
    pub rhosucc: Vec<ActionEntry>,
    #[serde(default)]
    pub musucc: Vec<ActionEntry>,
    #[serde(default)]
    pub rhoprec: Vec<ActionEntry>,
    #[serde(default)]
    pub muprec: Vec<ActionEntry>,
    #[serde(default)]
    pub varpi1: Vec<ProductEntry>,
    #[serde(default)]
    pub varpi2: Vec<ProductEntry>,
    #[serde(default)]
    pub vsucc: Vec<ProductEntry>,
    #[serde(default)]
    pub vprec: Vec<ProductEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct CrossedDatumFile {
    pub algebra: Nested<AlgebraFile>,
    pub v_algebra: Nested<AlgebraFile>,
    #[serde(default)]
    pub lsucc: Vec<ActionEntry>,
    #[serde(default)]
    pub rsucc: Vec<ActionEntry>,
    #[serde(default)]
    pub lprec: Vec<ActionEntry>,
    #[serde(default)]
    pub rprec: Vec<ActionEntry>,
    #[serde(default)]
    pub omega1: Vec<ProductEntry>,
    #[serde(default)]
    pub omega2: Vec<ProductEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatchedPairFile {
    pub alg1: Nested<AlgebraFile>,
    pub alg2: Nested<AlgebraFile>,
    #[serde(default)]
    pub l1succ: Vec<ActionEntry>,
    #[serde(default)]
    pub r1succ: Vec<ActionEntry>,
    #[serde(default)]
    pub l1prec: Vec<ActionEntry>,
    #[serde(default)]
    pub r1prec: Vec<ActionEntry>,
    #[serde(default)]
    pub l2succ: Vec<ActionEntry>,
    #[serde(default)]
    pub r2succ: Vec<ActionEntry>,
    #[serde(default)]
    pub l2prec: Vec<ActionEntry>,
    #[serde(default)]
    pub r2prec: Vec<ActionEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    #[serde(default)]
    pub entries: Vec<MatrixEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutPairFile {
    pub alpha: MatrixFile,
    pub beta: MatrixFile,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Gh2File {
    pub n: usize,
    #[serde(default)]
    pub a: Vec<MatrixEntry>,
    #[serde(default)]
    pub b: Vec<MatrixEntry>,
    #[serde(default)]
    pub c: Vec<MatrixEntry>,
    #[serde(default)]
    pub d: Vec<MatrixEntry>,
    pub theta0: Vec<RawScalar>,
    pub epsilon0: Vec<RawScalar>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RMatrixFile {
    pub dimension: usize,
    #[serde(default)]
    pub entries: Vec<TensorEntry>,
    #[serde(default)]
    pub skew: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tensor2File {
    pub dims: [usize; 2],
    #[serde(default)]
    pub entries: Vec<TensorEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tensor3File {
    pub dims: [usize; 3],
    #[serde(default)]
    pub entries: Vec<ProductEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoproductFile {
    pub dimension: usize,
    #[serde(default)]
    pub succ: Vec<CoproductEntry>,
    #[serde(default)]
    pub prec: Vec<CoproductEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BilinearFormFile {
    pub dimension: usize,
    #[serde(default)]
    pub gram: Vec<TensorEntry>,
}

/// Where relative paths in a file are resolved.
#[derive(Clone, Debug, Default)]
pub struct Context {
    base: Option<PathBuf>,
}

impl Context {
    pub fn here() -> Self {
        Context::default()
    }

    pub fn relative_to(file: &Path) -> Self {
        Context {
            base: file.parent().map(Path::to_path_buf),
        }
    }

    fn resolve(&self, p: &str) -> PathBuf {
        match &self.base {
            Some(b) if Path::new(p).is_relative() => b.join(p),
            _ => PathBuf::from(p),
        }
    }
}

/// A value with a JSON file format.
pub trait Codec: Sized {
    type File: Serialize + DeserializeOwned;
    fn encode(&self) -> Self::File;
    fn decode(file: Self::File, ctx: &Context) -> Result<Self>;
}

/// Sorted keys, two-space indent, trailing newline.
pub fn to_canonical_json<T: Serialize>(x: &T) -> Result<String> {
    // serde_json's Map is a BTreeMap, so going through Value sorts keys.
    let v = serde_json::to_value(x)?;
    let mut s = serde_json::to_string_pretty(&v)?;
    s.push('\n');
    Ok(s)
}

pub fn to_json<T: Codec>(x: &T) -> Result<String> {
    to_canonical_json(&x.encode())
}

pub fn from_json<T: Codec>(text: &str, ctx: &Context) -> Result<T> {
    let file: T::File = serde_json::from_str(text)?;
    T::decode(file, ctx)
}

pub fn load<T: Codec>(path: impl AsRef<Path>) -> Result<T> {
    let path = path.as_ref();
    let text = read(path)?;
    from_json(&text, &Context::relative_to(path))
}

pub fn save<T: Codec>(path: impl AsRef<Path>, x: &T) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, to_json(x)?).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

fn nested<T: Codec>(n: Nested<T::File>, ctx: &Context) -> Result<T> {
    match n {
        Nested::Inline(f) => T::decode(*f, ctx),
        Nested::Path(p) => load(ctx.resolve(&p)),
    }
}

fn products<F: Field>(op: &BilinearOp<F>) -> Vec<ProductEntry> {
    op.entries()
        .map(|(i, j, k, c)| ProductEntry {
            i,
            j,
            k,
            c: RawScalar::of(c),
        })
        .collect()
}

fn product_table<F: Field>(dims: (usize, usize, usize), es: &[ProductEntry]) -> Result<BilinearOp<F>> {
    let parsed = es
        .iter()
        .map(|e| Ok((e.i, e.j, e.k, e.c.value()?)))
        .collect::<Result<Vec<_>>>()?;
    BilinearOp::from_entries(dims.0, dims.1, dims.2, parsed)
}

fn actions<F: Field>(f: &ActionFamily<F>) -> Vec<ActionEntry> {
    f.entries()
        .map(|(x, r, c, v)| ActionEntry {
            x,
            r,
            c,
            v: RawScalar::of(v),
        })
        .collect()
}

fn action_family<F: Field>(alg_dim: usize, mod_dim: usize, es: &[ActionEntry]) -> Result<ActionFamily<F>> {
    let parsed = es
        .iter()
        .map(|e| Ok((e.x, e.r, e.c, e.v.value()?)))
        .collect::<Result<Vec<_>>>()?;
    ActionFamily::from_entries(alg_dim, mod_dim, parsed)
}

fn matrix_entries<F: Field>(m: &Matrix<F>) -> Vec<MatrixEntry> {
    let mut out = Vec::new();
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let v = &m[(r, c)];
            if !v.is_zero() {
                out.push(MatrixEntry {
                    r,
                    c,
                    v: RawScalar::of(v),
                });
            }
        }
    }
    out
}

fn matrix_of<F: Field>(rows: usize, cols: usize, es: &[MatrixEntry]) -> Result<Matrix<F>> {
    let mut m = Matrix::zeros(rows, cols);
    for e in es {
        if e.r >= rows || e.c >= cols {
            return Err(Error::Index(format!("matrix entry ({}, {}) outside {rows}x{cols}", e.r, e.c)));
        }
        m[(e.r, e.c)] += e.v.value::<F>()?;
    }
    Ok(m)
}

fn tensor_entries<F: Field>(t: &Tensor2<F>) -> Vec<TensorEntry> {
    t.entries()
        .map(|(i, j, c)| TensorEntry {
            i,
            j,
            c: RawScalar::of(c),
        })
        .collect()
}

fn tensor_of<F: Field>(n1: usize, n2: usize, es: &[TensorEntry]) -> Result<Tensor2<F>> {
    let parsed = es
        .iter()
        .map(|e| Ok((e.i, e.j, e.c.value()?)))
        .collect::<Result<Vec<_>>>()?;
    Tensor2::from_entries(n1, n2, parsed)
}

fn scalars<F: Field>(v: &Vector<F>) -> Vec<RawScalar> {
    v.iter().map(RawScalar::of).collect()
}

fn vector_of<F: Field>(n: usize, xs: &[RawScalar], name: &str) -> Result<Vector<F>> {
    if xs.len() != n {
        return Err(Error::dim(format!("{name} has {} entries, expected {n}", xs.len())));
    }
    Ok(Vector(xs.iter().map(RawScalar::value).collect::<Result<_>>()?))
}

impl<F: Field> Codec for AdAlgebra<F> {
    type File = AlgebraFile;

    fn encode(&self) -> AlgebraFile {
        let n = self.dim();
        let basis = (self.basis() != default_basis("e", n).as_slice()).then(|| self.basis().to_vec());
        AlgebraFile {
            dimension: n,
            basis,
            succ: products(self.succ_table()),
            prec: products(self.prec_table()),
        }
    }

    fn decode(f: AlgebraFile, _: &Context) -> Result<Self> {
        let n = f.dimension;
        let basis = f.basis.unwrap_or_else(|| default_basis("e", n));
        if basis.len() != n {
            return Err(Error::dim(format!("basis has {} names but dimension is {n}", basis.len())));
        }
        AdAlgebra::new(basis, product_table(n3(n), &f.succ)?, product_table(n3(n), &f.prec)?)
    }
}

fn n3(n: usize) -> (usize, usize, usize) {
    (n, n, n)
}

impl<F: Field> Codec for BilinearOp<F> {
    type File = ProductFile;

    fn encode(&self) -> ProductFile {
        ProductFile {
            dimension: self.dims().0,
            product: products(self),
        }
    }

    fn decode(f: ProductFile, _: &Context) -> Result<Self> {
        product_table(n3(f.dimension), &f.product)
    }
}

impl<F: Field> Codec for AdRep<F> {
    type File = RepresentationFile;

    fn encode(&self) -> RepresentationFile {
        RepresentationFile {
            algebra: Nested::Inline(Box::new(self.algebra().encode())),
            mod_dim: self.mod_dim(),
            lsucc: actions(self.l_succ()),
            rsucc: actions(self.r_succ()),
            lprec: actions(self.l_prec()),
            rprec: actions(self.r_prec()),
        }
    }

    fn decode(f: RepresentationFile, ctx: &Context) -> Result<Self> {
        let algebra: AdAlgebra<F> = nested(f.algebra, ctx)?;
        let (n, m) = (algebra.dim(), f.mod_dim);
        AdRep::new(
            algebra,
            action_family(n, m, &f.lsucc)?,
            action_family(n, m, &f.rsucc)?,
            action_family(n, m, &f.lprec)?,
            action_family(n, m, &f.rprec)?,
        )
    }
}

impl<F: Field> Codec for AssocRep<F> {
    type File = AssocRepresentationFile;

    fn encode(&self) -> AssocRepresentationFile {
        AssocRepresentationFile {
            algebra: Nested::Inline(Box::new(self.product().encode())),
            mod_dim: self.mod_dim(),
            left: actions(self.left()),
            right: actions(self.right()),
        }
    }

    fn decode(f: AssocRepresentationFile, ctx: &Context) -> Result<Self> {
        let product: BilinearOp<F> = nested(f.algebra, ctx)?;
        let (n, m) = (product.dims().0, f.mod_dim);
        AssocRep::new(product, action_family(n, m, &f.left)?, action_family(n, m, &f.right)?)
    }
}

impl<F: Field> Codec for ExtendingDatum<F> {
    type File = ExtendingDatumFile;

    fn encode(&self) -> ExtendingDatumFile {
        ExtendingDatumFile {
            algebra: Nested::Inline(Box::new(self.algebra.encode())),
            v_dim: self.v_dim,
            lsucc: actions(&self.l_succ),
            rsucc: actions(&self.r_succ),
            lprec: actions(&self.l_prec),
            rprec: actions(&self.r_prec),
            rhosucc: actions(&self.rho_succ),
            musucc: actions(&self.mu_succ),
            rhoprec: actions(&self.rho_prec),
            muprec: actions(&self.mu_prec),
            varpi1: products(&self.varpi1),
            varpi2: products(&self.varpi2),
            vsucc: products(&self.succ_v),
            vprec: products(&self.prec_v),
        }
    }

    fn decode(f: ExtendingDatumFile, ctx: &Context) -> Result<Self> {
        let algebra: AdAlgebra<F> = nested(f.algebra, ctx)?;
        let (n, m) = (algebra.dim(), f.v_dim);
        let d = ExtendingDatum {
            algebra,
            v_dim: m,
            l_succ: action_family(n, m, &f.lsucc)?,
            r_succ: action_family(n, m, &f.rsucc)?,
            l_prec: action_family(n, m, &f.lprec)?,
            r_prec: action_family(n, m, &f.rprec)?,
            rho_succ: action_family(m, n, &f.rhosucc)?,
            mu_succ: action_family(m, n, &f.musucc)?,
            rho_prec: action_family(m, n, &f.rhoprec)?,
            mu_prec: action_family(m, n, &f.muprec)?,
            varpi1: product_table((m, m, n), &f.varpi1)?,
            varpi2: product_table((m, m, n), &f.varpi2)?,
            succ_v: product_table(n3(m), &f.vsucc)?,
            prec_v: product_table(n3(m), &f.vprec)?,
        };
        d.validate()?;
        Ok(d)
    }
}

impl<F: Field> Codec for CrossedDatum<F> {
    type File = CrossedDatumFile;

    fn encode(&self) -> CrossedDatumFile {
        CrossedDatumFile {
            algebra: Nested::Inline(Box::new(self.algebra.encode())),
            v_algebra: Nested::Inline(Box::new(self.v_algebra.encode())),
            lsucc: actions(&self.l_succ),
            rsucc: actions(&self.r_succ),
            lprec: actions(&self.l_prec),
            rprec: actions(&self.r_prec),
            omega1: products(&self.omega1),
            omega2: products(&self.omega2),
        }
    }

    fn decode(f: CrossedDatumFile, ctx: &Context) -> Result<Self> {
        let algebra: AdAlgebra<F> = nested(f.algebra, ctx)?;
        let v_algebra: AdAlgebra<F> = nested(f.v_algebra, ctx)?;
        let (n, m) = (algebra.dim(), v_algebra.dim());
        let d = CrossedDatum {
            algebra,
            v_algebra,
            l_succ: action_family(n, m, &f.lsucc)?,
            r_succ: action_family(n, m, &f.rsucc)?,
            l_prec: action_family(n, m, &f.lprec)?,
            r_prec: action_family(n, m, &f.rprec)?,
            omega1: product_table((n, n, m), &f.omega1)?,
            omega2: product_table((n, n, m), &f.omega2)?,
        };
        d.validate()?;
        Ok(d)
    }
}

impl<F: Field> Codec for MatchedPairDatum<F> {
    type File = MatchedPairFile;

    fn encode(&self) -> MatchedPairFile {
        MatchedPairFile {
            alg1: Nested::Inline(Box::new(self.alg1.encode())),
            alg2: Nested::Inline(Box::new(self.alg2.encode())),
            l1succ: actions(&self.l1_succ),
            r1succ: actions(&self.r1_succ),
            l1prec: actions(&self.l1_prec),
            r1prec: actions(&self.r1_prec),
            l2succ: actions(&self.l2_succ),
            r2succ: actions(&self.r2_succ),
            l2prec: actions(&self.l2_prec),
            r2prec: actions(&self.r2_prec),
        }
    }

    fn decode(f: MatchedPairFile, ctx: &Context) -> Result<Self> {
        let alg1: AdAlgebra<F> = nested(f.alg1, ctx)?;
        let alg2: AdAlgebra<F> = nested(f.alg2, ctx)?;
        let (n, m) = (alg1.dim(), alg2.dim());
        let d = MatchedPairDatum {
            alg1,
            alg2,
            l1_succ: action_family(n, m, &f.l1succ)?,
            r1_succ: action_family(n, m, &f.r1succ)?,
            l1_prec: action_family(n, m, &f.l1prec)?,
            r1_prec: action_family(n, m, &f.r1prec)?,
            l2_succ: action_family(m, n, &f.l2succ)?,
            r2_succ: action_family(m, n, &f.r2succ)?,
            l2_prec: action_family(m, n, &f.l2prec)?,
            r2_prec: action_family(m, n, &f.r2prec)?,
        };
        d.validate()?;
        Ok(d)
    }
}

impl<F: Field> Codec for Matrix<F> {
    type File = MatrixFile;

    fn encode(&self) -> MatrixFile {
        MatrixFile {
            rows: self.rows(),
            cols: self.cols(),
            entries: matrix_entries(self),
        }
    }

    fn decode(f: MatrixFile, _: &Context) -> Result<Self> {
        matrix_of(f.rows, f.cols, &f.entries)
    }
}

impl<F: Field> Codec for AutPair<F> {
    type File = AutPairFile;

    fn encode(&self) -> AutPairFile {
        AutPairFile {
            alpha: self.alpha.encode(),
            beta: self.beta.encode(),
        }
    }

    fn decode(f: AutPairFile, ctx: &Context) -> Result<Self> {
        Ok(AutPair {
            alpha: Matrix::decode(f.alpha, ctx)?,
            beta: Matrix::decode(f.beta, ctx)?,
        })
    }
}

impl<F: Field> Codec for Gh2Tuple<F> {
    type File = Gh2File;

    fn encode(&self) -> Gh2File {
        Gh2File {
            n: self.n(),
            a: matrix_entries(&self.a),
            b: matrix_entries(&self.b),
            c: matrix_entries(&self.c),
            d: matrix_entries(&self.d),
            theta0: scalars(&self.theta0),
            epsilon0: scalars(&self.epsilon0),
        }
    }

    fn decode(f: Gh2File, _: &Context) -> Result<Self> {
        let n = f.n;
        let t = Gh2Tuple {
            a: matrix_of(n, n, &f.a)?,
            b: matrix_of(n, n, &f.b)?,
            c: matrix_of(n, n, &f.c)?,
            d: matrix_of(n, n, &f.d)?,
            theta0: vector_of(n, &f.theta0, "theta0")?,
            epsilon0: vector_of(n, &f.epsilon0, "epsilon0")?,
        };
        t.validate()?;
        Ok(t)
    }
}

impl<F: Field> Codec for RMatrix<F> {
    type File = RMatrixFile;

    fn encode(&self) -> RMatrixFile {
        RMatrixFile {
            dimension: self.r.dims().0,
            entries: tensor_entries(&self.r),
            skew: self.skew,
        }
    }

    fn decode(f: RMatrixFile, _: &Context) -> Result<Self> {
        RMatrix::new(tensor_of(f.dimension, f.dimension, &f.entries)?, f.skew)
    }
}

impl<F: Field> Codec for Tensor2<F> {
    type File = Tensor2File;

    fn encode(&self) -> Tensor2File {
        let (a, b) = self.dims();
        Tensor2File {
            dims: [a, b],
            entries: tensor_entries(self),
        }
    }

    fn decode(f: Tensor2File, _: &Context) -> Result<Self> {
        tensor_of(f.dims[0], f.dims[1], &f.entries)
    }
}

impl<F: Field> Codec for Tensor3<F> {
    type File = Tensor3File;

    fn encode(&self) -> Tensor3File {
        Tensor3File {
            dims: self.dims(),
            entries: self
                .entries()
                .map(|([i, j, k], c)| ProductEntry {
                    i,
                    j,
                    k,
                    c: RawScalar::of(c),
                })
                .collect(),
        }
    }

    fn decode(f: Tensor3File, _: &Context) -> Result<Self> {
        let parsed = f
            .entries
            .iter()
            .map(|e| Ok((e.i, e.j, e.k, e.c.value()?)))
            .collect::<Result<Vec<_>>>()?;
        Tensor3::from_entries(f.dims, parsed)
    }
}

impl<F: Field> Codec for CoproductPair<F> {
    type File = CoproductFile;

    fn encode(&self) -> CoproductFile {
        let side = |ds: &[Tensor2<F>]| {
            ds.iter()
                .enumerate()
                .flat_map(|(x, t)| {
                    t.entries().map(move |(i, j, c)| CoproductEntry {
                        x,
                        i,
                        j,
                        c: RawScalar::of(c),
                    })
                })
                .collect()
        };
        CoproductFile {
            dimension: self.dim(),
            succ: side(&self.dsucc),
            prec: side(&self.dprec),
        }
    }

    fn decode(f: CoproductFile, _: &Context) -> Result<Self> {
        let parse = |es: &[CoproductEntry]| {
            es.iter()
                .map(|e| Ok((e.x, e.i, e.j, e.c.value()?)))
                .collect::<Result<Vec<_>>>()
        };
        CoproductPair::from_entries(f.dimension, parse(&f.succ)?, parse(&f.prec)?)
    }
}

impl<F: Field> Codec for BilinearForm<F> {
    type File = BilinearFormFile;

    fn encode(&self) -> BilinearFormFile {
        BilinearFormFile {
            dimension: self.dim(),
            gram: tensor_entries(&Tensor2::from_matrix(self.gram())),
        }
    }

    fn decode(f: BilinearFormFile, _: &Context) -> Result<Self> {
        BilinearForm::new(tensor_of(f.dimension, f.dimension, &f.gram)?.to_matrix())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};

    type Q = Rational;

    fn q(n: i64, d: i64) -> Q {
        Rational::new(n, d)
    }

    fn round_trip<T: Codec + PartialEq + std::fmt::Debug>(x: &T) {
        let text = to_json(x).unwrap();
        let back: T = from_json(&text, &Context::here()).unwrap();
        assert_eq!(&back, x);
        assert_eq!(to_json(&back).unwrap(), text);
    }

    fn nilpotent() -> AdAlgebra<Q> {
        AdAlgebra::from_entries(2, [(0, 0, 1, q(1, 1))], [(0, 0, 1, q(-1, 2))]).unwrap()
    }

    #[test]
    fn algebra_text_is_canonical() {
        let text = to_json(&nilpotent()).unwrap();
        assert_eq!(
            text,
            "{\n  \"dimension\": 2,\n  \"prec\": [\n    {\n      \"c\": \"-1/2\",\n      \"i\": 0,\n      \"j\": 0,\n      \"k\": 1\n    }\n  ],\n  \"succ\": [\n    {\n      \"c\": \"1\",\n      \"i\": 0,\n      \"j\": 0,\n      \"k\": 1\n    }\n  ]\n}\n"
        );
    }

    #[test]
    fn reader_normalises_fractions_and_integers() {
        let text = r#"{"dimension": 2, "succ": [{"i":0,"j":0,"k":1,"c":"2/2"}], "prec": [{"i":0,"j":0,"k":1,"c":"-2/4"}]}"#;
        let a: AdAlgebra<Q> = from_json(text, &Context::here()).unwrap();
        assert_eq!(a, nilpotent());
        let text = r#"{"dimension": 2, "succ": [{"i":0,"j":0,"k":1,"c":1}]}"#;
        let b: AdAlgebra<Q> = from_json(text, &Context::here()).unwrap();
        assert_eq!(b.succ_table(), nilpotent().succ_table());
    }

    #[test]
    fn unknown_keys_and_bad_indices_are_rejected() {
        let unknown = r#"{"dimension": 1, "succ": [], "extra": 1}"#;
        assert!(from_json::<AdAlgebra<Q>>(unknown, &Context::here()).is_err());
        let unknown_entry = r#"{"dimension": 1, "succ": [{"i":0,"j":0,"k":0,"c":"1","z":0}]}"#;
        assert!(from_json::<AdAlgebra<Q>>(unknown_entry, &Context::here()).is_err());
        let outside = r#"{"dimension": 1, "succ": [{"i":0,"j":1,"k":0,"c":"1"}]}"#;
        assert!(matches!(
            from_json::<AdAlgebra<Q>>(outside, &Context::here()),
            Err(Error::Index(_))
        ));
        let junk = r#"{"dimension": 1, "succ": [{"i":0,"j":0,"k":0,"c":"1/0"}]}"#;
        assert!(from_json::<AdAlgebra<Q>>(junk, &Context::here()).is_err());
    }

    #[test]
    fn named_basis_survives() {
        let a = nilpotent().with_basis(vec!["x".into(), "y".into()]).unwrap();
        round_trip(&a);
        assert!(to_json(&nilpotent()).unwrap().find("basis").is_none());
    }

    #[test]
    fn composite_values_round_trip() {
        let a = nilpotent();
        let rep = AdRep::regular(&a);
        round_trip(&rep);
        round_trip(&rep.dual());
        round_trip(&rep.induced_assoc(crate::representation::InducedAssoc::Sum));
        round_trip(&a.dot_table());
        let ext = ExtendingDatum::trivial(&a, 1);
        round_trip(&ext);
        let crossed = CrossedDatum::trivial(&a, &AdAlgebra::zero(1));
        round_trip(&crossed);
        round_trip(&MatchedPairDatum::trivial(&a, &AdAlgebra::zero(2)));
        round_trip(&Matrix::<Q>::from_i64(&[&[1, 2, 0], &[0, -3, 5]]));
        round_trip(&AutPair::<Q>::identity(2, 1));
        let mut t = Gh2Tuple::<Q>::zero(2);
        t.a[(0, 1)] = q(3, 4);
        t.theta0[1] = q(-1, 3);
        round_trip(&t);
        let r = Tensor2::from_entries(2, 2, [(0, 1, q(1, 1)), (1, 0, q(-1, 1))]).unwrap();
        round_trip(&RMatrix::new(r.clone(), true).unwrap());
        round_trip(&r);
        round_trip(&Tensor3::from_entries([1, 2, 2], [(0, 1, 0, q(7, 3))]).unwrap());
        round_trip(&CoproductPair::dual_of(&a));
        round_trip(&BilinearForm::<Q>::hyperbolic(2));
    }

    #[test]
    fn prime_field_reads_reduce_mod_p() {
        let text = r#"{"dimension": 1, "succ": [{"i":0,"j":0,"k":0,"c":"7"}], "prec": [{"i":0,"j":0,"k":0,"c":"1/2"}]}"#;
        let a: AdAlgebra<Fp<5>> = from_json(text, &Context::here()).unwrap();
        assert_eq!(a.succ_table().get(0, 0, 0), &Fp::new(2));
        assert_eq!(a.prec_table().get(0, 0, 0), &Fp::new(3));
        round_trip(&a);
    }

    #[test]
    fn nested_paths_resolve_next_to_the_file() {
        let dir = std::env::temp_dir().join(format!("adw-io-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        save(dir.join("alg.json"), &nilpotent()).unwrap();
        let rep_text = r#"{"algebra": "alg.json", "modDim": 1, "lsucc": [{"x":0,"r":0,"c":0,"v":"0"}]}"#;
        fs::write(dir.join("rep.json"), rep_text).unwrap();
        let rep: AdRep<Q> = load(dir.join("rep.json")).unwrap();
        assert_eq!(rep.algebra(), &nilpotent());
        assert_eq!(rep, AdRep::trivial(&nilpotent(), 1));
        fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn claimed_skew_must_be_skew() {
        let text = r#"{"dimension": 2, "entries": [{"i":0,"j":1,"c":"1"}], "skew": true}"#;
        assert!(matches!(
            from_json::<RMatrix<Q>>(text, &Context::here()),
            Err(Error::Precondition(_))
        ));
    }
}
