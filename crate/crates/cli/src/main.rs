use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod output;
mod search;

/// Exact checks and constructions for anti-dendriform algebras.
#[derive(Parser, Debug)]
#[command(name = "adw", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Group,
    #[command(flatten)]
    pub opts: GlobalOpts,
}

#[derive(Args, Debug, Clone, Default)]
pub struct GlobalOpts {
    /// Print the run report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the constructed object to this file.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Record every violation, not only the first of each equation.
    #[arg(long, global = true)]
    pub exhaustive: bool,
    /// Scalar field for searches: `rational` or `fp<p>` with p ≤ 251.
    #[arg(long, global = true, env = "ADW_FIELD", default_value = "rational")]
    pub field: String,
}

#[derive(Subcommand, Debug)]
pub enum Group {
    /// Anti-dendriform algebras.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Representations.
    #[command(subcommand)]
    Rep(RepCmd),
    /// Extending structures and unified products.
    #[command(subcommand)]
    Unified(UnifiedCmd),
    /// Crossed systems and non-abelian 2-cocycles.
    #[command(subcommand)]
    Crossed(CrossedCmd),
    /// Six-tuples over the one-dimensional zero algebra.
    #[command(subcommand)]
    Gh2(Gh2Cmd),
    /// Inducibility of automorphism pairs.
    #[command(subcommand)]
    Inducible(InducibleCmd),
    /// The Wells map.
    #[command(subcommand)]
    Wells(WellsCmd),
    /// Non-abelian 1-cocycles.
    #[command(subcommand)]
    Z1(Z1Cmd),
    /// Matched pairs and bicrossed products.
    #[command(subcommand)]
    Matched(MatchedCmd),
    /// Commutative Connes cocycles and double constructions.
    #[command(subcommand)]
    Connes(ConnesCmd),
    /// Anti-dendriform D-bialgebras.
    #[command(subcommand)]
    Bialgebra(BialgebraCmd),
    /// The anti-dendriform Yang-Baxter equation.
    #[command(subcommand)]
    Ybe(YbeCmd),
    /// O-operators.
    #[command(subcommand)]
    Oop(OopCmd),
}

#[derive(Subcommand, Debug)]
pub enum AlgebraCmd {
    /// Check A1 and A2.
    Check { algebra: PathBuf },
    /// The dual of the regular representation.
    Dual { algebra: PathBuf },
    /// The associated associative product x·y = x≻y + x≺y.
    Assoc { algebra: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum RepCmd {
    Check { rep: PathBuf },
    Dual { rep: PathBuf },
    Semidirect { rep: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum UnifiedCmd {
    Check {
        datum: PathBuf,
    },
    Build {
        datum: PathBuf,
    },
    /// Split an algebra along the image of an inclusion with a retraction.
    Extract {
        algebra: PathBuf,
        inclusion: PathBuf,
        projector: PathBuf,
    },
    /// Check a given equivalence (ζ, η), or search for ζ with η = id.
    Equiv {
        datum: PathBuf,
        other: PathBuf,
        #[arg(long)]
        zeta: Option<PathBuf>,
        #[arg(long)]
        eta: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum CrossedCmd {
    Check {
        datum: PathBuf,
    },
    Build {
        datum: PathBuf,
    },
    /// The cocycle of an extension `E -> A` induced by a section.
    FromSection {
        extension: PathBuf,
        algebra: PathBuf,
        projection: PathBuf,
        section: PathBuf,
    },
    /// Check a given ζ, or search for one.
    Cohomologous {
        datum: PathBuf,
        other: PathBuf,
        #[arg(long)]
        zeta: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum Gh2Cmd {
    Check { tuple: PathBuf },
    Cohomologous { tuple: PathBuf, other: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum InducibleCmd {
    Check { datum: PathBuf, pair: PathBuf, phi: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum WellsCmd {
    Eval { datum: PathBuf, pair: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum Z1Cmd {
    Basis { datum: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum MatchedCmd {
    Check {
        datum: PathBuf,
    },
    Build {
        datum: PathBuf,
    },
    /// Split an algebra along two complementary sets of basis indices.
    Factorize {
        algebra: PathBuf,
        #[arg(long = "a", value_delimiter = ',', required = true)]
        basis_a: Vec<usize>,
        #[arg(long = "b", value_delimiter = ',', required = true)]
        basis_b: Vec<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum ConnesCmd {
    Check { product: PathBuf, form: PathBuf },
    /// The compatible anti-dendriform structure of a nondegenerate cocycle.
    Derive { product: PathBuf, form: PathBuf },
    /// Assemble A ⊕ A* from A and an algebra on the dual space.
    Double { algebra: PathBuf, dual: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum BialgebraCmd {
    Check {
        algebra: PathBuf,
        coproducts: PathBuf,
    },
    /// Coproducts of r≻ and r≺ and their conditions.
    Coboundary {
        algebra: PathBuf,
        rsucc: PathBuf,
        rprec: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum YbeCmd {
    Residual {
        algebra: PathBuf,
        r: PathBuf,
    },
    /// All skew-symmetric solutions with coefficients in a grid.
    Search {
        algebra: PathBuf,
        /// Integers -k..=k; defaults to every element of a prime field and
        /// to {-1, 0, 1} over the rationals.
        #[arg(long)]
        grid: Option<i64>,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Four-family anti-dendriform representation.
    Ad,
    /// Associative bimodule.
    Assoc,
}

#[derive(Subcommand, Debug)]
pub enum OopCmd {
    Check {
        t: PathBuf,
        rep: PathBuf,
        #[arg(long, value_enum, default_value = "ad")]
        mode: Mode,
    },
    /// Lift T to a skew r in A ⋉ V* and evaluate the Yang-Baxter residual.
    Lift { t: PathBuf, rep: PathBuf },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return ExitCode::from(if usage { 2 } else { 0 });
        }
    };
    ExitCode::from(output::finish(&cli, commands::run(&cli)))
}
