//! Defaults from a `key = value` file. Blank lines and `#` comments are
//! skipped.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::ValueEnum;

use crate::args::{FormatKind, GlobalOpts, StyleKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Settings {
    pub format: FormatKind,
    pub style: StyleKind,
    pub leading_one: bool,
    pub data: Option<PathBuf>,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            format: FormatKind::Pretty,
            style: StyleKind::Canonical,
            leading_one: true,
            data: None,
        }
    }
}

fn value_enum<T: ValueEnum>(key: &str, v: &str) -> Result<T> {
    T::from_str(v, true).map_err(|_| anyhow::anyhow!("config: invalid value `{v}` for `{key}`"))
}

pub fn parse_config(text: &str, base: &Settings) -> Result<Settings> {
    let mut s = base.clone();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            bail!("config line {}: expected key = value", i + 1);
        };
        let (key, value) = (key.trim(), value.trim());
        match key {
            "format" => s.format = value_enum(key, value)?,
            "style" => s.style = value_enum(key, value)?,
            "leading_one" => {
                s.leading_one = value.parse().with_context(|| {
                    format!("config line {}: leading_one takes true or false", i + 1)
                })?
            }
            "data" => s.data = Some(PathBuf::from(value)),
            other => bail!("config line {}: unknown key `{other}`", i + 1),
        }
    }
    Ok(s)
}

fn load(path: &Path) -> Result<Settings> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading config {}", path.display()))?;
    parse_config(&text, &Settings::default())
}

/// Config file values, overridden by flags.
pub fn resolve(opts: &GlobalOpts) -> Result<Settings> {
    let mut s = match &opts.config {
        Some(path) => load(path)?,
        None => Settings::default(),
    };
    if let Some(f) = opts.format {
        s.format = f;
    }
    if let Some(st) = opts.style {
        s.style = st;
    }
    if let Some(l) = opts.leading_one {
        s.leading_one = l;
    }
    if let Some(d) = &opts.data {
        s.data = Some(d.clone());
    }
    Ok(s)
}
