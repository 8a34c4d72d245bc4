use serde::Serialize;
use sha2::{Digest, Sha256};

/// Record of one run: command, fully resolved configuration, digests of every
/// file read, and the files written. Deliberately excludes timestamps and
/// host details so reruns of the same inputs produce byte-identical
/// manifests.
#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RunManifest {
    pub schema_version: u32,
    pub tool: ToolInfo,
    pub command: String,
    pub config: serde_json::Value,
    pub inputs: Vec<InputDigest>,
    pub outputs: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct ToolInfo {
    pub name: &'static str,
    pub version: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

impl RunManifest {
    pub fn new(
        command: &str,
        config: serde_json::Value,
        mut inputs: Vec<InputDigest>,
        mut outputs: Vec<String>,
    ) -> Self {
        inputs.sort_by(|x, y| x.path.cmp(&y.path));
        inputs.dedup_by(|x, y| x.path == y.path);
        outputs.sort();
        RunManifest {
            schema_version: 1,
            tool: ToolInfo {
                name: "slowgrowth",
                version: env!("CARGO_PKG_VERSION"),
            },
            command: command.to_string(),
            config,
            inputs,
            outputs,
        }
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let digest = hasher.finalize();
    let mut out = String::with_capacity(64);
    for b in digest {
        out.push_str(&format!("{b:02x}"));
    }
    out
}
