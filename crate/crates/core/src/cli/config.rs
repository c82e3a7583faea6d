//! `--config` files: one `key = value` per line, `#` comments. Keys are long
//! option names; `subcommand` names the command when none is given on the
//! command line. Options given on the command line win.

use std::collections::HashSet;

use crate::error::{Error, Result};

fn parse_lines(text: &str) -> Result<Vec<(String, String)>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let line = line.split('#').next().unwrap_or("").trim();
            (!line.is_empty()).then_some((i, line))
        })
        .map(|(i, line)| {
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::parse(i + 1, format!("expected `key = value`, got `{line}`")))?;
            let v = v.trim().trim_matches('"');
            Ok((k.trim().trim_start_matches("--").replace('_', "-"), v.to_string()))
        })
        .collect()
}

/// Global options that consume the following argument.
const VALUED_GLOBALS: [&str; 3] = ["--threads", "--out", "--format"];

fn subcommand_position(args: &[String]) -> Option<usize> {
    let mut i = 1;
    while i < args.len() {
        let a = &args[i];
        if VALUED_GLOBALS.contains(&a.as_str()) {
            i += 2;
        } else if a.starts_with('-') {
            i += 1;
        } else {
            return Some(i);
        }
    }
    None
}

fn leading_globals_end(args: &[String]) -> usize {
    let mut i = 1;
    while i < args.len() {
        let a = args[i].as_str();
        if VALUED_GLOBALS.contains(&a) {
            i += 2;
        } else if VALUED_GLOBALS.iter().any(|g| a.starts_with(&format!("{g}="))) {
            i += 1;
        } else {
            break;
        }
    }
    i.min(args.len())
}

/// Replaces `--config <path>` in `args` by the options the file supplies.
pub fn expand_config(args: Vec<String>) -> Result<Vec<String>> {
    let mut rest = Vec::with_capacity(args.len());
    let mut path = None;
    let mut it = args.into_iter();
    while let Some(a) = it.next() {
        if a == "--config" {
            path = Some(it.next().ok_or_else(|| Error::arg("--config needs a path"))?);
        } else if let Some(p) = a.strip_prefix("--config=") {
            path = Some(p.to_string());
        } else {
            rest.push(a);
        }
    }
    let Some(path) = path else {
        return Ok(rest);
    };
    let text = std::fs::read_to_string(&path)
        .map_err(|e| Error::arg(format!("cannot read config `{path}`: {e}")))?;
    let entries = parse_lines(&text)?;

    let given: HashSet<String> = rest
        .iter()
        .filter_map(|a| a.strip_prefix("--"))
        .map(|a| a.split('=').next().unwrap_or(a).to_string())
        .collect();
    let has_subcommand = subcommand_position(&rest).is_some();
    for (k, v) in entries {
        if k == "subcommand" || k == "command" {
            if !has_subcommand {
                // after any leading global options so their values stay paired
                let at = leading_globals_end(&rest);
                rest.insert(at, v);
            }
            continue;
        }
        if given.contains(&k) {
            continue;
        }
        match v.as_str() {
            "true" => rest.push(format!("--{k}")),
            "false" => {}
            _ => rest.push(format!("--{k}={v}")),
        }
    }
    Ok(rest)
}
