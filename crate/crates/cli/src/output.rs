//! Writing reports to stdout or a file.

use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::Context;
use serde::Serialize;

use crate::{Failure, Format, OutputArgs};

/// Writes `body` to `--out` when given, stdout otherwise.
pub fn emit(args: &OutputArgs, body: &str) -> Result<(), Failure> {
    match &args.out {
        Some(path) => write_file(path, body),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())
                .and_then(|_| out.flush())
                .context("cannot write to stdout")
                .map_err(Failure::internal)
        }
    }
}

pub fn write_file(path: &Path, body: &str) -> Result<(), Failure> {
    fs::write(path, body)
        .with_context(|| format!("cannot write {}", path.display()))
        .map_err(Failure::input)
}

pub fn json<T: Serialize>(value: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(value)
        .context("cannot serialise report")
        .map_err(Failure::internal)?;
    s.push('\n');
    Ok(s)
}

/// Renders with `text` or `csv` for those formats, JSON otherwise.
pub fn render<T: Serialize>(
    format: Format,
    value: &T,
    text: impl FnOnce() -> String,
    csv: impl FnOnce() -> String,
) -> Result<String, Failure> {
    match format {
        Format::Text => Ok(text()),
        Format::Csv => Ok(csv()),
        Format::Json => json(value),
    }
}
