use std::fmt::Write as _;

use clap::ValueEnum;
use num_bigint::BigInt;
use orbeuler::Rational;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

enum Entry {
    Value(Rational),
    Label(String),
}

/// Everything one invocation prints. Values are kept exact; the text form
/// adds a decimal annotation, the machine form emits `p/q` strings only.
pub struct Report {
    command: &'static str,
    verdict: String,
    headlines: Vec<String>,
    entries: Vec<(String, Entry)>,
    notes: Vec<String>,
    paper_refs: Vec<&'static str>,
}

impl Report {
    pub fn new(command: &'static str, verdict: impl ToString) -> Self {
        Report {
            command,
            verdict: verdict.to_string(),
            headlines: Vec::new(),
            entries: Vec::new(),
            notes: Vec::new(),
            paper_refs: Vec::new(),
        }
    }

    pub fn headline(&mut self, line: impl Into<String>) -> &mut Self {
        self.headlines.push(line.into());
        self
    }

    pub fn value(&mut self, key: impl Into<String>, v: &Rational) -> &mut Self {
        self.entries.push((key.into(), Entry::Value(v.clone())));
        self
    }

    pub fn integer(&mut self, key: impl Into<String>, v: impl Into<BigInt>) -> &mut Self {
        self.entries.push((key.into(), Entry::Value(Rational::from_integer(v.into()))));
        self
    }

    pub fn label(&mut self, key: impl Into<String>, v: impl ToString) -> &mut Self {
        self.entries.push((key.into(), Entry::Label(v.to_string())));
        self
    }

    pub fn note(&mut self, line: impl Into<String>) -> &mut Self {
        self.notes.push(line.into());
        self
    }

    pub fn refs(&mut self, refs: &[&'static str]) -> &mut Self {
        for r in refs {
            if !self.paper_refs.contains(r) {
                self.paper_refs.push(r);
            }
        }
        self
    }

    /// 0 unless a checker found a violation or an unmet hypothesis.
    pub fn exit_code(&self) -> i32 {
        exit_code_for(&self.verdict)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Machine => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report is valid JSON");
                s.push('\n');
                s
            }
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        for h in &self.headlines {
            let _ = writeln!(out, "{h}");
        }
        let width = self.entries.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, e) in &self.entries {
            match e {
                Entry::Value(v) if v.is_integer() => {
                    let _ = writeln!(out, "{k:<width$} = {v}");
                }
                Entry::Value(v) => {
                    let _ = writeln!(out, "{k:<width$} = {v}  (~ {})", significant(v, 7));
                }
                Entry::Label(s) => {
                    let _ = writeln!(out, "{k:<width$} : {s}");
                }
            }
        }
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        let _ = writeln!(out, "verdict: {}", self.verdict);
        out
    }

    pub fn to_json(&self) -> Value {
        let mut values = Map::new();
        let mut labels = Map::new();
        for (k, e) in &self.entries {
            match e {
                Entry::Value(v) => values.insert(k.clone(), Value::String(v.to_string())),
                Entry::Label(s) => labels.insert(k.clone(), Value::String(s.clone())),
            };
        }
        json!({
            "command": self.command,
            "verdict": self.verdict,
            "values": values,
            "labels": labels,
            "notes": self.notes,
            "paper_refs": self.paper_refs,
        })
    }
}

pub fn exit_code_for(verdict: &str) -> i32 {
    match verdict {
        "violation" | "hypothesis-not-met" => 1,
        _ => 0,
    }
}

/// Decimal rendering with `digits` significant digits.
pub fn significant(v: &Rational, digits: usize) -> String {
    let x = v.to_f64();
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}
