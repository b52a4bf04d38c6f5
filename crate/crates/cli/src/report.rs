use serde::de::DeserializeOwned;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};
use std::fmt::Display;
use std::path::Path;
use std::time::Duration;

pub enum Failure {
    /// Bad arguments or malformed input; exit code 2.
    Input(String),
    /// The computation itself failed; exit code 1.
    Compute(String),
}

impl Failure {
    pub fn input(e: impl Display) -> Self {
        Failure::Input(e.to_string())
    }

    pub fn compute(e: impl Display) -> Self {
        Failure::Compute(e.to_string())
    }
}

/// Hashes the argument vector and the bytes of every file read.
pub struct Inputs {
    hasher: Sha256,
}

impl Inputs {
    pub fn new(args: &[String]) -> Self {
        let mut hasher = Sha256::new();
        for a in args {
            hasher.update(a.as_bytes());
            hasher.update([0]);
        }
        Inputs { hasher }
    }

    pub fn read_json<T: DeserializeOwned>(&mut self, path: &Path) -> Result<T, Failure> {
        let bytes =
            std::fs::read(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        self.hasher.update(&bytes);
        serde_json::from_slice(&bytes)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
    }

    fn digest(&self) -> String {
        self.hasher
            .clone()
            .finalize()
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }
}

pub struct Outcome {
    outputs: Value,
    checks: Map<String, Value>,
}

impl Outcome {
    pub fn new(outputs: Value) -> Self {
        Outcome {
            outputs,
            checks: Map::new(),
        }
    }

    pub fn check(mut self, name: &str, pass: bool) -> Self {
        self.checks.insert(name.to_string(), json!(pass));
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.values().all(|v| v == &json!(true))
    }
}

pub fn render(command: &str, inputs: &Inputs, outcome: Outcome, elapsed: Duration) -> String {
    let report = json!({
        "command": command,
        "inputs_digest": inputs.digest(),
        "outputs": outcome.outputs,
        "checks": outcome.checks,
        "wall_time_ms": elapsed.as_secs_f64() * 1e3,
    });
    serde_json::to_string_pretty(&report).expect("report is valid JSON")
}
