//! Verdicts for identity checks. A check walks basis tuples, compares both
//! sides of every labelled equation, and records violations with the
//! witness indices and the coordinates of both sides.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Equation label, e.g. `A1` or `R3`.
    pub equation: String,
    /// Basis indices of the arguments, in the order the equation takes them.
    pub witness: Vec<usize>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    /// Number of equation instances evaluated.
    pub checked: usize,
    /// Number of instances that failed.
    pub violation_count: usize,
    /// The first violation of each equation, or all of them in exhaustive
    /// mode.
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }

    pub fn first_violation(&self) -> Option<&Violation> {
        self.violations.first()
    }

    pub fn failed_equations(&self) -> BTreeSet<&str> {
        self.violations.iter().map(|v| v.equation.as_str()).collect()
    }

    pub fn fails(&self, equation: &str) -> bool {
        self.violations.iter().any(|v| v.equation == equation)
    }

    /// Renames every violated equation, e.g. to say which factor it is
    /// about.
    pub fn relabel(mut self, f: impl Fn(&str) -> String) -> Report {
        for v in self.violations.iter_mut() {
            v.equation = f(&v.equation);
        }
        self
    }

    pub fn merge(&mut self, other: Report) {
        self.checked += other.checked;
        self.violation_count += other.violation_count;
        self.violations.extend(other.violations);
        self.notes.extend(other.notes);
    }
}

#[derive(Debug, Default)]
pub struct Checker {
    exhaustive: bool,
    report: Report,
    seen: HashSet<String>,
}

impl Checker {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records every violation instead of the first per equation.
    pub fn exhaustive() -> Self {
        Checker {
            exhaustive: true,
            ..Self::default()
        }
    }

    pub fn with_mode(exhaustive: bool) -> Self {
        if exhaustive {
            Self::exhaustive()
        } else {
            Self::new()
        }
    }

    pub fn is_exhaustive(&self) -> bool {
        self.exhaustive
    }

    pub fn passed_so_far(&self) -> bool {
        self.report.passed()
    }

    pub fn record(&mut self, equation: &str, witness: &[usize], lhs: Vec<String>, rhs: Vec<String>) {
        self.report.violation_count += 1;
        if self.exhaustive || self.seen.insert(equation.to_string()) {
            self.report.violations.push(Violation {
                equation: equation.to_string(),
                witness: witness.to_vec(),
                lhs,
                rhs,
            });
        }
    }

    /// Checks `lhs == rhs`.
    pub fn equal<F: Field>(&mut self, equation: &str, witness: &[usize], lhs: &[F], rhs: &[F]) -> bool {
        self.report.checked += 1;
        if lhs == rhs {
            return true;
        }
        self.record(equation, witness, strings(lhs), strings(rhs));
        false
    }

    /// Checks that all terms of a chain `t0 = t1 = ... = tn` agree. A failing
    /// instance counts once and reports the first link that breaks.
    pub fn chain<F: Field, T: AsRef<[F]>>(&mut self, equation: &str, witness: &[usize], terms: &[T]) -> bool {
        self.report.checked += 1;
        let first = terms[0].as_ref();
        for t in &terms[1..] {
            if t.as_ref() != first {
                self.record(equation, witness, strings(first), strings(t.as_ref()));
                return false;
            }
        }
        true
    }

    /// Checks that `value` vanishes.
    pub fn zero<F: Field>(&mut self, equation: &str, witness: &[usize], value: &[F]) -> bool {
        let zeros = vec![F::zero(); value.len()];
        self.equal(equation, witness, value, &zeros)
    }

    /// Records a failed condition that has no coordinate form.
    pub fn fail_with(&mut self, equation: &str, witness: &[usize], detail: &str) {
        self.report.checked += 1;
        self.record(equation, witness, vec![detail.to_string()], Vec::new());
    }

    pub fn note(&mut self, msg: impl Into<String>) {
        self.report.notes.push(msg.into());
    }

    pub fn absorb(&mut self, other: Report) {
        for v in &other.violations {
            self.seen.insert(v.equation.clone());
        }
        self.report.merge(other);
    }

    pub fn finish(self) -> Report {
        self.report
    }
}

fn strings<F: Field>(xs: &[F]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}
