//! Report assembly and rendering.
//!
//! Reports are deterministic for fixed inputs and seed: checks are sorted by
//! name, the input digest is a SHA-256 of the raw input bytes, and the JSON
//! rendering uses sorted keys with no timestamps, so identical invocations
//! produce byte-identical output.

use gencx_core::verify::{Check, Status};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub inputs: String,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub result: Option<Value>,
}

impl Report {
    pub fn new(command: &str, input_bytes: Option<&[u8]>, seed: u64, mut checks: Vec<Check>, result: Option<Value>) -> Report {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let inputs = match input_bytes {
            Some(bytes) => {
                let mut hasher = Sha256::new();
                hasher.update(bytes);
                format!("sha256:{:x}", hasher.finalize())
            }
            None => "none".into(),
        };
        Report { command: command.into(), inputs, seed, checks, result }
    }

    pub fn exit_code(&self) -> i32 {
        if self.checks.iter().all(Check::passed) {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "seed": self.seed,
            "checks": self
                .checks
                .iter()
                .map(|c| {
                    json!({
                        "name": c.name,
                        "status": match c.status {
                            Status::Pass => "pass",
                            Status::Fail => "fail",
                            Status::Skip => "skip",
                        },
                        "detail": c.detail,
                    })
                })
                .collect::<Vec<_>>(),
            "exit_code": self.exit_code(),
            "result": self.result.clone().unwrap_or(Value::Null),
        })
    }

    pub fn render_text(&self, quiet: bool) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\nseed: {}\ninputs: {}\n", self.command, self.seed, self.inputs));
        if !quiet {
            for c in &self.checks {
                let label = match c.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skip => "SKIP",
                };
                out.push_str(&format!("{label} {} — {}\n", c.name, c.detail));
            }
            if let Some(result) = &self.result {
                out.push_str(&format!("result: {result}\n"));
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        out.push_str(&format!(
            "{} checks, {} failed, exit code {}\n",
            self.checks.len(),
            failed,
            self.exit_code()
        ));
        out
    }
}
