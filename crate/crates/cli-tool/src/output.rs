use crate::error::CliError;
use crate::manifest::{InputDigest, RunManifest};
use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Dot,
    Text,
}

pub struct OutFile {
    pub name: String,
    pub content: String,
}

impl OutFile {
    pub fn new(name: impl Into<String>, content: impl Into<String>) -> Self {
        OutFile {
            name: name.into(),
            content: content.into(),
        }
    }
}

/// Everything a command produced. The first file is the primary one: it goes
/// to stdout when no output directory was given.
pub struct CommandResult {
    pub files: Vec<OutFile>,
    pub config: serde_json::Value,
    pub inputs: Vec<InputDigest>,
}

pub fn emit(
    command: &str,
    result: CommandResult,
    out_dir: Option<&Path>,
) -> Result<(), CliError> {
    match out_dir {
        None => {
            let primary = result
                .files
                .first()
                .ok_or_else(|| CliError::Internal("command produced no output".into()))?;
            print!("{}", primary.content);
            Ok(())
        }
        Some(dir) => {
            std::fs::create_dir_all(dir)?;
            for file in &result.files {
                std::fs::write(dir.join(&file.name), &file.content)?;
            }
            let names = result.files.iter().map(|f| f.name.clone()).collect();
            let manifest = RunManifest::new(command, result.config, result.inputs, names);
            std::fs::write(dir.join("manifest.json"), json_pretty(&manifest)?)?;
            Ok(())
        }
    }
}

/// Pretty JSON with a trailing newline. All JSON maps in this crate are
/// BTree-backed, so the rendering is deterministic.
pub fn json_pretty<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// First two CSV lines: a schema marker comment, then the column names.
pub fn csv_header(schema: &str, columns: &str) -> String {
    format!("# schema: {schema}/1\n{columns}\n")
}
