//! Searches run over the field named by `ADW_FIELD`.

use std::path::Path;

use adw_core::algebra::AdAlgebra;
use adw_core::field::{integer_grid, is_prime, Field, Fp, Rational};
use adw_core::io::{self, Codec};
use adw_core::report::Report;
use adw_core::ybe::search_skew_solutions;
use anyhow::{bail, Context, Result};

use crate::output::Outcome;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldChoice {
    Rational,
    Prime(u32),
}

/// `rational`, `q`, `fp7`, `fp<7>` or `f7`.
pub fn parse_field(s: &str) -> Result<FieldChoice> {
    let t = s.trim().to_ascii_lowercase();
    if t == "rational" || t == "q" {
        return Ok(FieldChoice::Rational);
    }
    let digits = t
        .strip_prefix("fp")
        .or_else(|| t.strip_prefix('f'))
        .map(|d| d.trim_start_matches('<').trim_end_matches('>'));
    let Some(p) = digits.and_then(|d| d.parse::<u32>().ok()) else {
        bail!("unknown field {s:?}; use rational or fp<p>");
    };
    if !is_prime(p) || p > 251 {
        bail!("fp<{p}> is not supported; p must be a prime at most 251");
    }
    Ok(FieldChoice::Prime(p))
}

/// Calls `$f::<Fp<p>>($args)` for the runtime prime `p`.
macro_rules! with_prime {
    ($p:expr, $f:ident $args:tt, [$($q:literal)*]) => {
        match $p {
            $($q => $f::<Fp<$q>> $args,)*
            other => unreachable!("prime {other} was validated"),
        }
    };
}

pub fn ybe_search(field: &str, algebra: &Path, grid: Option<i64>) -> Result<Outcome> {
    match parse_field(field)? {
        FieldChoice::Rational => ybe_search_in::<Rational>(algebra, grid),
        FieldChoice::Prime(p) => with_prime!(
            p,
            ybe_search_in(algebra, grid),
            [2 3 5 7 11 13 17 19 23 29 31 37 41 43 47 53 59 61 67 71 73 79 83 89 97
             101 103 107 109 113 127 131 137 139 149 151 157 163 167 173 179 181 191 193 197 199
             211 223 227 229 233 239 241 251]
        ),
    }
}

fn ybe_search_in<F: Field>(algebra: &Path, grid: Option<i64>) -> Result<Outcome> {
    let a: AdAlgebra<F> = io::load(algebra).with_context(|| format!("reading {}", algebra.display()))?;
    let grid = match (grid, F::elements()) {
        (Some(k), _) => integer_grid(k),
        (None, Some(all)) => all,
        (None, None) => integer_grid(1),
    };
    let found = search_skew_solutions(&a, &grid)?;
    let grid_text: Vec<String> = grid.iter().map(|x| x.to_string()).collect();
    let solutions: Vec<_> = found.iter().map(Codec::encode).collect();
    Ok(Outcome::new(Report::default())
        .with("field", F::name())
        .with("grid", grid_text)
        .with("count", found.len())
        .with("solutions", solutions))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_names() {
        assert_eq!(parse_field("rational").unwrap(), FieldChoice::Rational);
        assert_eq!(parse_field("fp<7>").unwrap(), FieldChoice::Prime(7));
        assert_eq!(parse_field("fp251").unwrap(), FieldChoice::Prime(251));
        assert!(parse_field("fp9").is_err());
        assert!(parse_field("fp257").is_err());
        assert!(parse_field("reals").is_err());
    }
}
