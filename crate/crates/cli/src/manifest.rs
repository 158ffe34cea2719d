//! Per-run manifest emitted to standard error after a command finishes.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Serialize)]
pub struct RunManifest {
    pub schema: &'static str,
    pub kind: &'static str,
    pub command: String,
    pub inputs: Vec<String>,
    /// SHA-256 over the command, normalized flags, and input bytes; stable
    /// across reruns of identical inputs.
    pub config_digest: String,
    pub tool_version: &'static str,
    pub items: u64,
    /// Per-item verdicts; sums to `items`.
    pub verdict_counts: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u128>,
}

pub struct ManifestBuilder {
    command: String,
    inputs: Vec<String>,
    hasher: Sha256,
    started: Instant,
    verdicts: BTreeMap<String, u64>,
    items: u64,
}

impl ManifestBuilder {
    pub fn new(command: &str) -> Self {
        let mut hasher = Sha256::new();
        hasher.update(command.as_bytes());
        ManifestBuilder {
            command: command.to_string(),
            inputs: Vec::new(),
            hasher,
            started: Instant::now(),
            verdicts: BTreeMap::new(),
            items: 0,
        }
    }

    pub fn digest_config(&mut self, key: &str, value: &str) {
        self.hasher.update([0u8]);
        self.hasher.update(key.as_bytes());
        self.hasher.update([1u8]);
        self.hasher.update(value.as_bytes());
    }

    pub fn add_input(&mut self, label: &str, bytes: &[u8]) {
        self.inputs.push(label.to_string());
        self.hasher.update([2u8]);
        self.hasher.update(bytes);
    }

    pub fn count_item(&mut self, verdict: &str) {
        self.items += 1;
        *self.verdicts.entry(verdict.to_string()).or_insert(0) += 1;
    }

    pub fn finish(self, with_timestamp: bool) -> RunManifest {
        let digest = self.hasher.finalize();
        RunManifest {
            schema: "btr/1",
            kind: "run_manifest",
            command: self.command,
            inputs: self.inputs,
            config_digest: format!("sha256:{}", hex(&digest)),
            tool_version: env!("CARGO_PKG_VERSION"),
            items: self.items,
            verdict_counts: self.verdicts,
            wall_ms: with_timestamp.then(|| self.started.elapsed().as_millis()),
        }
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn emit(manifest: &RunManifest) {
    eprintln!("{}", serde_json::to_string(manifest).expect("manifest serializes"));
}
