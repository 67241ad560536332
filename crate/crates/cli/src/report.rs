//! Report records: one per command invocation, deterministic by
//! construction (sorted keys, no floats in verdicts, timing emitted
//! only on request so default output is byte-identical across runs).

use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub name: String,
    pub pass: bool,
    pub evidence: serde_json::Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub verdicts: Vec<Verdict>,
    /// Display-only; absent unless --timings was passed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            verdicts: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn verdict(&mut self, name: impl Into<String>, pass: bool, evidence: serde_json::Value) {
        self.verdicts.push(Verdict {
            name: name.into(),
            pass,
            evidence,
        });
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("== {} ==\n", self.command));
        for (k, v) in &self.parameters {
            out.push_str(&format!("   {k} = {v}\n"));
        }
        let width = self
            .verdicts
            .iter()
            .map(|v| v.name.len())
            .max()
            .unwrap_or(0);
        for v in &self.verdicts {
            out.push_str(&format!(
                "{} {:width$}  {}\n",
                if v.pass { "PASS" } else { "FAIL" },
                v.name,
                compact(&v.evidence),
                width = width
            ));
        }
        let (p, f) = (
            self.verdicts.iter().filter(|v| v.pass).count(),
            self.verdicts.iter().filter(|v| !v.pass).count(),
        );
        out.push_str(&format!("{p} passed, {f} failed\n"));
        if let Some(ms) = self.timing_ms {
            out.push_str(&format!("elapsed: {ms} ms\n"));
        }
        out
    }
}

fn compact(v: &serde_json::Value) -> String {
    serde_json::to_string(v).unwrap_or_default()
}
