//! `key = value` config files. Each key names a long flag; file values are
//! spliced into the argument list ahead of the command line so that flags
//! given explicitly win.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{ArgAction, Command};

use crate::error::{CliError, Result};

const GLOBAL_WITH_VALUE: [&str; 3] = ["--format", "--jobs", "--config"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub key: String,
    pub value: String,
    pub line: usize,
}

/// Blank lines and `#` comments are skipped; keys may carry a leading `--`.
pub fn parse(text: &str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| CliError::Invalid(format!("config line {}: expected key = value", i + 1)))?;
        let key = key.trim().trim_start_matches("--").to_owned();
        if key.is_empty() {
            return Err(CliError::Invalid(format!("config line {}: empty key", i + 1)));
        }
        out.push(Entry {
            key,
            value: value.trim().to_owned(),
            line: i + 1,
        });
    }
    Ok(out)
}

fn config_path(args: &[OsString]) -> Option<PathBuf> {
    let mut iter = args.iter().skip(1);
    while let Some(arg) = iter.next() {
        let s = arg.to_string_lossy();
        if s == "--" {
            break;
        }
        if s == "--config" {
            return iter.next().map(PathBuf::from);
        }
        if let Some(rest) = s.strip_prefix("--config=") {
            return Some(PathBuf::from(rest));
        }
    }
    None
}

fn subcommand_index(args: &[OsString], command: &Command) -> Option<usize> {
    let mut i = 1;
    while i < args.len() {
        let s = args[i].to_string_lossy();
        if GLOBAL_WITH_VALUE.contains(&s.as_ref()) {
            i += 2;
            continue;
        }
        if command.find_subcommand(s.as_ref()).is_some() {
            return Some(i);
        }
        i += 1;
    }
    None
}

fn is_flag(action: &ArgAction) -> bool {
    matches!(action, ArgAction::SetTrue | ArgAction::SetFalse)
}

fn truthy(entry: &Entry) -> Result<bool> {
    match entry.value.to_ascii_lowercase().as_str() {
        "true" | "yes" | "on" | "1" => Ok(true),
        "false" | "no" | "off" | "0" => Ok(false),
        _ => Err(CliError::Invalid(format!(
            "config line {}: {} expects true or false, got {:?}",
            entry.line, entry.key, entry.value
        ))),
    }
}

/// Returns `args` with the config file's entries spliced in, or unchanged
/// when no `--config` is given.
pub fn expand(args: Vec<OsString>, command: &Command) -> Result<Vec<OsString>> {
    let Some(path) = config_path(&args) else {
        return Ok(args);
    };
    let text = read(&path)?;
    let entries = parse(&text)?;
    let Some(sub_at) = subcommand_index(&args, command) else {
        return Ok(args);
    };
    let sub_name = args[sub_at].to_string_lossy().into_owned();
    let sub = command.find_subcommand(&sub_name).expect("index points at a subcommand");

    let mut globals = Vec::new();
    let mut locals = Vec::new();
    for entry in &entries {
        if entry.key == "config" {
            return Err(CliError::Invalid(format!("config line {}: nested config files are not supported", entry.line)));
        }
        let global = command.get_arguments().find(|a| a.get_long() == Some(entry.key.as_str()));
        let local = sub.get_arguments().find(|a| a.get_long() == Some(entry.key.as_str()));
        let (arg, target) = match (global, local) {
            (Some(a), _) => (a, &mut globals),
            (None, Some(a)) => (a, &mut locals),
            (None, None) => {
                let elsewhere = command
                    .get_subcommands()
                    .any(|s| s.get_arguments().any(|a| a.get_long() == Some(entry.key.as_str())));
                if elsewhere {
                    continue;
                }
                return Err(CliError::Invalid(format!("config line {}: unknown key {:?}", entry.line, entry.key)));
            }
        };
        if is_flag(arg.get_action()) {
            if truthy(entry)? {
                target.push(OsString::from(format!("--{}", entry.key)));
            }
        } else {
            target.push(OsString::from(format!("--{}={}", entry.key, entry.value)));
        }
    }

    let mut out = Vec::with_capacity(args.len() + globals.len() + locals.len());
    out.push(args[0].clone());
    out.extend(globals);
    out.extend(args[1..=sub_at].iter().cloned());
    out.extend(locals);
    out.extend(args[sub_at + 1..].iter().cloned());
    Ok(out)
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}
