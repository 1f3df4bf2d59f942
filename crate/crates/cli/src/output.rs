use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::ValueEnum;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

const CELL_WIDTH: usize = 72;

pub fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("json value serializes");
            s.push('\n');
            s
        }
        Format::Table => table(value),
    }
}

/// One row per top-level field; nested values are shown compactly and cut
/// to a fixed width.
fn table(value: &Value) -> String {
    let Value::Object(map) = value else {
        return format!("{}\n", cell(value));
    };
    let width = map.keys().map(String::len).max().unwrap_or(0);
    let mut out = String::new();
    for (key, v) in map {
        out.push_str(&format!("{key:<width$}  {}\n", cell(v)));
    }
    out
}

fn cell(v: &Value) -> String {
    let s = match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    if s.chars().count() > CELL_WIDTH {
        let cut: String = s.chars().take(CELL_WIDTH - 3).collect();
        format!("{cut}...")
    } else {
        s
    }
}

pub fn emit(text: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}
