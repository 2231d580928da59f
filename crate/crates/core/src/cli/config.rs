//! Flat `key = value` configuration files and their merge into the command line.

use std::ffi::OsString;

use clap::parser::ValueSource;
use clap::{ArgMatches, Command};

use crate::error::{Error, Result};

/// Parse `key = value` lines. Blank lines and `#` comments are skipped; keys
/// are normalised to flag spelling (`rms_decay` becomes `rms-decay`).
pub fn parse(text: &str) -> Result<Vec<(String, String)>> {
    let mut out: Vec<(String, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            return Err(Error::Parse { line: i + 1, message: format!("expected key = value, got {line:?}") });
        };
        let key = k.trim().replace('_', "-");
        if key.is_empty() {
            return Err(Error::Parse { line: i + 1, message: "empty key".into() });
        }
        if out.iter().any(|(existing, _)| *existing == key) {
            return Err(Error::Parse { line: i + 1, message: format!("duplicate key {key}") });
        }
        out.push((key, v.trim().to_string()));
    }
    Ok(out)
}

fn given(m: &ArgMatches, id: &str) -> bool {
    matches!(m.value_source(id), Some(ValueSource::CommandLine))
}

/// Append file entries as flags, skipping any flag already given on the
/// command line, so that flags always win over the file.
pub fn merge(
    cmd: &Command,
    matches: &ArgMatches,
    args: Vec<OsString>,
    entries: &[(String, String)],
) -> Result<Vec<OsString>> {
    let Some((name, sub_matches)) = matches.subcommand() else {
        return Ok(args);
    };
    let sub = cmd.find_subcommand(name).expect("matched subcommand exists");
    let mut out = args;
    for (key, value) in entries {
        if key == "config" {
            return Err(Error::param("config files cannot name another config file"));
        }
        let (arg, m) = match cmd.get_arguments().find(|a| a.get_long() == Some(key.as_str())) {
            Some(a) => (a, matches),
            None => match sub.get_arguments().find(|a| a.get_long() == Some(key.as_str())) {
                Some(a) => (a, sub_matches),
                None => return Err(Error::param(format!("unknown key {key:?} for command {name}"))),
            },
        };
        if given(m, arg.get_id().as_str()) {
            continue;
        }
        if arg.get_action().takes_values() {
            out.push(format!("--{key}").into());
            out.push(value.into());
        } else {
            match value.as_str() {
                "true" => out.push(format!("--{key}").into()),
                "false" => {}
                other => return Err(Error::param(format!("{key} expects true or false, got {other:?}"))),
            }
        }
    }
    Ok(out)
}
