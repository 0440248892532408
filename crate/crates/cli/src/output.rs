//! Run reports: human text by default, JSON with `--json`.

use std::fs;

use adw_core::io::{to_canonical_json, Codec};
use adw_core::report::{Report, Violation};
use serde::Serialize;
use serde_json::{Map, Value};

use crate::Cli;

/// What a command produced.
#[derive(Debug, Default)]
pub struct Outcome {
    pub report: Report,
    pub data: Map<String, Value>,
    /// The constructed object, written by `--out`.
    pub artifact: Option<Value>,
}

impl Outcome {
    pub fn new(report: Report) -> Self {
        Outcome {
            report,
            ..Self::default()
        }
    }

    pub fn with(mut self, key: &str, value: impl Serialize) -> Self {
        let v = serde_json::to_value(value).expect("report data serializes");
        self.data.insert(key.to_string(), v);
        self
    }

    pub fn with_object<T: Codec>(self, key: &str, x: &T) -> Self {
        self.with(key, x.encode())
    }

    pub fn produce<T: Codec>(mut self, x: &T) -> Self {
        self.artifact = Some(serde_json::to_value(x.encode()).expect("object serializes"));
        self
    }
}

#[derive(Serialize)]
struct RunReport<'a> {
    command: String,
    verdict: &'static str,
    checked: usize,
    violation_count: usize,
    violations: &'a [Violation],
    #[serde(skip_serializing_if = "<[String]>::is_empty")]
    notes: &'a [String],
    artifacts: Vec<String>,
    data: &'a Map<String, Value>,
}

/// Prints the report and returns the exit code: 0 pass, 1 fail, 2 error.
pub fn finish(cli: &Cli, result: anyhow::Result<Outcome>) -> u8 {
    let command = crate::commands::name(&cli.command);
    let (mut outcome, mut artifacts) = match result.and_then(|o| write_artifact(cli, o)) {
        Ok(pair) => pair,
        Err(e) => return error(cli, &command, &e),
    };
    if let (Some(a), None) = (outcome.artifact.take(), &cli.opts.out) {
        outcome.data.insert("result".into(), a);
    }
    let passed = outcome.report.passed();
    let report = RunReport {
        command: command.clone(),
        verdict: if passed { "pass" } else { "fail" },
        checked: outcome.report.checked,
        violation_count: outcome.report.violation_count,
        violations: &outcome.report.violations,
        notes: &outcome.report.notes,
        artifacts: std::mem::take(&mut artifacts),
        data: &outcome.data,
    };
    if cli.opts.json {
        print!("{}", to_canonical_json(&report).expect("report serializes"));
    } else {
        print_human(&report);
    }
    if passed {
        0
    } else {
        1
    }
}

fn write_artifact(cli: &Cli, mut o: Outcome) -> anyhow::Result<(Outcome, Vec<String>)> {
    let Some(path) = &cli.opts.out else {
        return Ok((o, Vec::new()));
    };
    if !crate::commands::constructs(&cli.command) {
        anyhow::bail!("--out given but this command constructs nothing");
    }
    // A failed check constructs nothing; the verdict says why.
    let Some(a) = o.artifact.take() else {
        return Ok((o, Vec::new()));
    };
    fs::write(path, to_canonical_json(&a)?).map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))?;
    Ok((o, vec![path.display().to_string()]))
}

fn error(cli: &Cli, command: &str, e: &anyhow::Error) -> u8 {
    let msg = message(e);
    eprintln!("error: {msg}");
    if cli.opts.json {
        let mut data = Map::new();
        data.insert("error".into(), Value::String(msg));
        let report = RunReport {
            command: command.to_string(),
            verdict: "error",
            checked: 0,
            violation_count: 0,
            violations: &[],
            notes: &[],
            artifacts: Vec::new(),
            data: &data,
        };
        print!("{}", to_canonical_json(&report).expect("report serializes"));
    }
    2
}

/// The context chain, skipping causes already quoted by their parent.
fn message(e: &anyhow::Error) -> String {
    let mut parts: Vec<String> = Vec::new();
    for cause in e.chain() {
        let text = cause.to_string();
        if parts.last().is_some_and(|p| p.contains(&text)) {
            continue;
        }
        parts.push(text);
    }
    parts.join(": ")
}

fn print_human(r: &RunReport) {
    println!("{}: {} ({} checked)", r.command, r.verdict, r.checked);
    for v in r.violations {
        let at: Vec<String> = v.witness.iter().map(usize::to_string).collect();
        println!(
            "  {} at ({}): lhs [{}] rhs [{}]",
            v.equation,
            at.join(","),
            v.lhs.join(", "),
            v.rhs.join(", ")
        );
    }
    let hidden = r.violation_count.saturating_sub(r.violations.len());
    if hidden > 0 {
        println!("  ... {hidden} more (use --exhaustive)");
    }
    for n in r.notes {
        println!("  note: {n}");
    }
    for (k, v) in r.data {
        match v {
            Value::String(s) => println!("{k}: {s}"),
            Value::Bool(_) | Value::Number(_) => println!("{k}: {v}"),
            _ => print!("{k}:\n{}", to_canonical_json(v).expect("value serializes")),
        }
    }
    for a in &r.artifacts {
        println!("wrote {a}");
    }
}
