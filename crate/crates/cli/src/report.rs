use std::fmt::Write as _;
use std::time::Duration;

use fcomplex::FieldSpec;
use serde::Serialize;
use sha2::{Digest, Sha256};

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Exit {
    Ok = 0,
    Negative = 1,
    InputError = 2,
    BudgetExhausted = 3,
    Falsified = 4,
}

/// One verdict line; also the JSON-lines object shape.
#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub check: String,
    pub input: String,
    pub field: String,
    pub verdict: String,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub kind: &'static str,
    pub text: String,
}

#[derive(Clone, Debug)]
pub struct RunReport {
    pub command: String,
    /// `(path, sha256 hex)` per input file.
    pub inputs: Vec<(String, String)>,
    pub field: FieldSpec,
    pub records: Vec<Record>,
    pub certificates: Vec<Certificate>,
    pub exit: Exit,
    pub timing: Option<Duration>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().fold(String::with_capacity(64), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

impl RunReport {
    pub fn new(command: String, field: FieldSpec) -> Self {
        RunReport {
            command,
            inputs: Vec::new(),
            field,
            records: Vec::new(),
            certificates: Vec::new(),
            exit: Exit::Ok,
            timing: None,
        }
    }

    /// Adds a verdict and raises the exit status to at least `exit`.
    pub fn record(&mut self, check: &str, input: &str, verdict: impl Into<String>, detail: impl Into<String>, exit: Exit) {
        self.records.push(Record {
            check: check.into(),
            input: input.into(),
            field: self.field.to_string(),
            verdict: verdict.into(),
            detail: detail.into(),
        });
        self.exit = self.exit.max(exit);
    }

    pub fn certificate(&mut self, kind: &'static str, text: String) {
        self.certificates.push(Certificate { kind, text });
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# command: {}", self.command);
        for (path, digest) in &self.inputs {
            let _ = writeln!(out, "# input: {path} sha256:{digest}");
        }
        let _ = writeln!(out, "# field: {}", self.field);
        for r in &self.records {
            let _ = writeln!(out, "{}: {}", r.check, r.verdict);
            for line in r.detail.lines() {
                let _ = writeln!(out, "  {line}");
            }
        }
        for c in &self.certificates {
            let _ = writeln!(out, "--- certificate: {}", c.kind);
            out.push_str(&c.text);
        }
        if let Some(t) = self.timing {
            let _ = writeln!(out, "# timing: {:.3} ms", t.as_secs_f64() * 1e3);
        }
        out
    }

    /// One object per verdict; certificates become records of their own.
    pub fn render_json_lines(&self) -> String {
        let mut out = String::new();
        let certs = self.certificates.iter().map(|c| Record {
            check: format!("certificate.{}", c.kind),
            input: self.inputs.first().map(|(p, _)| p.clone()).unwrap_or_default(),
            field: self.field.to_string(),
            verdict: "certificate".into(),
            detail: c.text.clone(),
        });
        for r in self.records.iter().cloned().chain(certs) {
            out.push_str(&serde_json::to_string(&r).expect("record serializes"));
            out.push('\n');
        }
        if let Some(t) = self.timing {
            let timing = Record {
                check: "timing".into(),
                input: String::new(),
                field: self.field.to_string(),
                verdict: "info".into(),
                detail: format!("{:.3} ms", t.as_secs_f64() * 1e3),
            };
            out.push_str(&serde_json::to_string(&timing).expect("record serializes"));
            out.push('\n');
        }
        out
    }
}
