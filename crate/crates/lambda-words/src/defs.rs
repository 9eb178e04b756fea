//! The `groupdef` text format: a small line-oriented description of a group
//! table, either through a named construction or through explicit
//! generator words.
//!
//! ```text
//! groupdef v1
//! # a free group
//! free alphabet=a,b
//! ```
//!
//! ```text
//! groupdef v1
//! rank=2
//! alphabet=a,b
//! gen a = a
//! gen b = b
//! gen s = tail(front="ab", back="ab")
//! alias u = a b
//! ```
//!
//! Construction lines (`free`, `hnn_stable`, `hnn_conj`) take `key=value`
//! arguments; `alphabet` may be omitted for the two extensions, in which
//! case it is inferred from the letters of the patterns. A file with
//! `option unchecked` skips semantic validation of the generator table, so
//! that checking suites can be pointed at deliberately corrupted tables.

use crate::constructions::{free_group, hnn_conjugate, hnn_stable, ConstructionError};
use crate::group_core::{GroupDef, GroupError};
use crate::words::{parse_word, Alphabet, WordError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DefsError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error(transparent)]
    Group(#[from] GroupError),
}

fn at(line: usize) -> impl Fn(String) -> DefsError {
    move |msg| DefsError::Line { line, msg }
}

/// Split a directive line into whitespace-separated tokens, keeping quoted
/// spans (and their quotes) intact.
fn split_tokens(line: &str) -> Result<Vec<String>, String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut in_quotes = false;
    for ch in line.chars() {
        match ch {
            '"' => {
                in_quotes = !in_quotes;
                cur.push(ch);
            }
            c if c.is_whitespace() && !in_quotes => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
            }
            c => cur.push(c),
        }
    }
    if in_quotes {
        return Err("unterminated string".into());
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    Ok(out)
}

/// Split `key=value`, unquoting the value if it is quoted.
fn key_value(token: &str) -> Result<(&str, &str), String> {
    let (k, v) = token
        .split_once('=')
        .ok_or_else(|| format!("expected key=value, found {token:?}"))?;
    let v = v.strip_prefix('"').and_then(|s| s.strip_suffix('"')).unwrap_or(v);
    Ok((k, v))
}

struct ConstructionArgs {
    alphabet: Option<Vec<String>>,
    u: Option<String>,
    v: Option<String>,
}

fn construction_args(tokens: &[String]) -> Result<ConstructionArgs, String> {
    let mut args = ConstructionArgs { alphabet: None, u: None, v: None };
    for tok in tokens {
        let (k, v) = key_value(tok)?;
        let slot = match k {
            "alphabet" => {
                args.alphabet = Some(v.split(',').map(|s| s.trim().to_string()).collect());
                continue;
            }
            "u" => &mut args.u,
            "v" => &mut args.v,
            other => return Err(format!("unknown argument {other:?}")),
        };
        if slot.is_some() {
            return Err(format!("duplicate argument {k:?}"));
        }
        *slot = Some(v.to_string());
    }
    Ok(args)
}

/// Infer an alphabet from pattern texts: their alphabetic characters in
/// sorted order. Only plain letter strings are inferable.
fn infer_alphabet(patterns: &[&str]) -> Result<Vec<String>, String> {
    let mut symbols: Vec<String> = Vec::new();
    for p in patterns {
        for ch in p.chars() {
            if !ch.is_alphanumeric() {
                return Err(format!(
                    "cannot infer alphabet from {p:?}; add alphabet=... to the line"
                ));
            }
            let s = ch.to_string();
            if !symbols.contains(&s) {
                symbols.push(s);
            }
        }
    }
    symbols.sort();
    Ok(symbols)
}

fn build_construction(
    name: &str,
    tokens: &[String],
    lineno: usize,
) -> Result<GroupDef, DefsError> {
    let err = at(lineno);
    let args = construction_args(tokens).map_err(&err)?;
    let wrap = |e: ConstructionError| DefsError::Line { line: lineno, msg: e.to_string() };
    match name {
        "free" => {
            let alphabet = args.alphabet.ok_or_else(|| err("free requires alphabet=...".into()))?;
            if args.u.is_some() || args.v.is_some() {
                return Err(err("free takes no patterns".into()));
            }
            free_group(&alphabet).map_err(wrap)
        }
        "hnn_stable" => {
            let u = args.u.ok_or_else(|| err("hnn_stable requires u=\"...\"".into()))?;
            if args.v.is_some() {
                return Err(err("hnn_stable takes no v".into()));
            }
            let alphabet = match args.alphabet {
                Some(a) => a,
                None => infer_alphabet(&[&u]).map_err(&err)?,
            };
            hnn_stable(&alphabet, &u).map_err(wrap)
        }
        "hnn_conj" => {
            let u = args.u.ok_or_else(|| err("hnn_conj requires u=\"...\"".into()))?;
            let v = args.v.ok_or_else(|| err("hnn_conj requires v=\"...\"".into()))?;
            let alphabet = match args.alphabet {
                Some(a) => a,
                None => infer_alphabet(&[&u, &v]).map_err(&err)?,
            };
            hnn_conjugate(&alphabet, &u, &v).map_err(wrap)
        }
        _ => unreachable!("caller matched the name"),
    }
}

/// Parse a `groupdef v1` document.
pub fn parse_groupdef(text: &str) -> Result<GroupDef, DefsError> {
    let mut saw_header = false;
    let mut rank: Option<(usize, usize)> = None;
    let mut alphabet: Option<(usize, Vec<String>)> = None;
    let mut raw_gens: Vec<(usize, String, String)> = Vec::new();
    let mut raw_aliases: Vec<(usize, String, String)> = Vec::new();
    let mut unchecked = false;
    let mut construction: Option<(usize, GroupDef)> = None;

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let err = at(lineno);
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !saw_header {
            if line != "groupdef v1" {
                return Err(err("expected header `groupdef v1`".into()));
            }
            saw_header = true;
            continue;
        }
        if let Some(rest) = line.strip_prefix("gen ") {
            let (name, value) = rest
                .split_once('=')
                .ok_or_else(|| err("expected `gen <name> = <word>`".into()))?;
            raw_gens.push((lineno, name.trim().to_string(), value.trim().to_string()));
        } else if let Some(rest) = line.strip_prefix("alias ") {
            let (name, value) = rest
                .split_once('=')
                .ok_or_else(|| err("expected `alias <name> = <word>`".into()))?;
            raw_aliases.push((lineno, name.trim().to_string(), value.trim().to_string()));
        } else if line == "option unchecked" {
            unchecked = true;
        } else if let Some(rest) = line.strip_prefix("rank=") {
            if rank.is_some() {
                return Err(err("duplicate rank".into()));
            }
            let r = rest.trim().parse::<usize>().map_err(|e| err(e.to_string()))?;
            rank = Some((lineno, r));
        } else if let Some(rest) = line.strip_prefix("alphabet=") {
            if alphabet.is_some() {
                return Err(err("duplicate alphabet".into()));
            }
            alphabet = Some((lineno, rest.split(',').map(|s| s.trim().to_string()).collect()));
        } else {
            let tokens = split_tokens(line).map_err(&err)?;
            match tokens[0].as_str() {
                name @ ("free" | "hnn_stable" | "hnn_conj") => {
                    if construction.is_some() {
                        return Err(err("more than one construction line".into()));
                    }
                    construction = Some((lineno, build_construction(name, &tokens[1..], lineno)?));
                }
                other => return Err(err(format!("unknown directive {other:?}"))),
            }
        }
    }

    if !saw_header {
        return Err(DefsError::Line { line: 1, msg: "expected header `groupdef v1`".into() });
    }

    if let Some((lineno, def)) = construction {
        if rank.is_some() || alphabet.is_some() || !raw_gens.is_empty() || !raw_aliases.is_empty() {
            return Err(at(lineno)("cannot mix a construction with explicit directives".into()));
        }
        if unchecked {
            return Err(at(lineno)("option unchecked requires explicit generators".into()));
        }
        return Ok(def);
    }

    let (alpha_line, symbols) = alphabet.ok_or(DefsError::Line {
        line: 1,
        msg: "missing alphabet=...".into(),
    })?;
    let alphabet = Alphabet::new(symbols)
        .map_err(|e: WordError| at(alpha_line)(e.to_string()))?;
    let rank = rank.map(|(_, r)| r).unwrap_or(1);

    let mut gens = Vec::with_capacity(raw_gens.len());
    for (lineno, name, value) in raw_gens {
        let word = parse_word(&value, &alphabet, rank).map_err(|e| at(lineno)(e.to_string()))?;
        gens.push((name, word));
    }
    if gens.is_empty() {
        return Err(DefsError::Line { line: 1, msg: "no generators".into() });
    }
    let mut aliases = Vec::with_capacity(raw_aliases.len());
    for (lineno, name, value) in raw_aliases {
        let word = parse_word(&value, &alphabet, rank).map_err(|e| at(lineno)(e.to_string()))?;
        aliases.push((name, word));
    }

    let def = if unchecked {
        GroupDef::new_unchecked(alphabet, rank, gens, aliases)?
    } else {
        GroupDef::new(alphabet, rank, gens, aliases)?
    };
    Ok(def)
}
