//! Command-line front end: `eval`, `dist`, `act`, `spine`, `check`.
//!
//! Exit codes: 0 on success (all checks passed), 1 when a checking suite
//! found a violation, 2 on input errors. All output is deterministic; the
//! checking suites take an explicit seed, so reports are byte-identical
//! across runs.

use crate::defs::parse_groupdef;
use crate::group_core::{check_length_axioms, evaluate, GroupDef, Report};
use crate::ordered_group::LambdaElem;
use crate::tree::{
    act, action_suite, distance, hyperbolicity_suite, metric_suite, spine, TreePoint,
};
use crate::words::print_word;
use clap::{Parser, Subcommand, ValueEnum};
use std::fmt::Write as _;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "lambda-words", version, about = "Exact arithmetic for groups of infinite words and their trees")]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Evaluate a generator expression to a reduced word
    Eval {
        /// Path to a groupdef file
        defs: PathBuf,
        /// Expression over the generator names, e.g. "s a^-2 (b a)^2"
        expr: String,
    },
    /// Distance between two tree points, written <alpha>@<expr> (or e)
    Dist {
        defs: PathBuf,
        point1: String,
        point2: String,
    },
    /// Apply a group element to a tree point
    Act {
        defs: PathBuf,
        expr: String,
        point: String,
    },
    /// Export the spine spanned by the basepoint and the given elements
    Spine {
        defs: PathBuf,
        #[arg(required = true)]
        exprs: Vec<String>,
        #[arg(long, value_enum, default_value_t = SpineFormat::Text)]
        format: SpineFormat,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run randomized checking suites against the group
    Check {
        defs: PathBuf,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpineFormat {
    Text,
    Dot,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Metric,
    Length,
    Action,
    All,
}

fn load(defs: &PathBuf) -> Result<GroupDef, String> {
    let text = std::fs::read_to_string(defs)
        .map_err(|e| format!("cannot read {}: {e}", defs.display()))?;
    parse_groupdef(&text).map_err(|e| format!("{}: {e}", defs.display()))
}

fn parse_point(g: &GroupDef, text: &str) -> Result<TreePoint, String> {
    let t = text.trim();
    if t == "e" {
        return Ok(TreePoint::base(g.rank()));
    }
    let (alpha_text, expr) = t
        .split_once('@')
        .ok_or_else(|| format!("expected <alpha>@<expr> or e, found {t:?}"))?;
    let alpha = LambdaElem::parse(alpha_text, g.rank()).map_err(|e| e.to_string())?;
    let elem = evaluate(g, expr).map_err(|e| e.to_string())?;
    TreePoint::new(alpha, elem).map_err(|e| e.to_string())
}

/// Run one subcommand. `Ok((stdout, exit_code))`; `Err` messages belong on
/// stderr with exit code 2.
pub fn execute(cmd: &Cmd) -> Result<(String, i32), String> {
    match cmd {
        Cmd::Eval { defs, expr } => {
            let g = load(defs)?;
            let elem = evaluate(&g, expr).map_err(|e| e.to_string())?;
            let w = elem.word();
            let fmt_end = |l: Option<crate::words::Letter>| match l {
                Some(l) => g.alphabet().fmt_letter(l),
                None => "-".to_string(),
            };
            let mut out = String::new();
            writeln!(out, "length: {}", w.length()).unwrap();
            writeln!(out, "reduced: {}", w.is_reduced()).unwrap();
            writeln!(out, "first: {}", fmt_end(w.first_letter())).unwrap();
            writeln!(out, "last: {}", fmt_end(w.last_letter())).unwrap();
            writeln!(out, "blocks: {}", print_word(w, g.alphabet())).unwrap();
            Ok((out, 0))
        }
        Cmd::Dist { defs, point1, point2 } => {
            let g = load(defs)?;
            let p = parse_point(&g, point1)?;
            let q = parse_point(&g, point2)?;
            let d = distance(&p, &q).map_err(|e| e.to_string())?;
            Ok((format!("{d}\n"), 0))
        }
        Cmd::Act { defs, expr, point } => {
            let g = load(defs)?;
            let f = evaluate(&g, expr).map_err(|e| e.to_string())?;
            let p = parse_point(&g, point)?;
            let moved = act(&f, &p).map_err(|e| e.to_string())?;
            Ok((format!("{}\n", moved.text()), 0))
        }
        Cmd::Spine { defs, exprs, format, out } => {
            let g = load(defs)?;
            let elems = exprs
                .iter()
                .map(|e| evaluate(&g, e).map_err(|e| e.to_string()))
                .collect::<Result<Vec<_>, _>>()?;
            let sp = spine(&g, &elems).map_err(|e| e.to_string())?;
            let rendered = match format {
                SpineFormat::Text => sp.to_text(&g),
                SpineFormat::Dot => sp.to_dot(&g),
            };
            match out {
                Some(path) => {
                    std::fs::write(path, &rendered)
                        .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
                    Ok((format!("wrote {}\n", path.display()), 0))
                }
                None => Ok((rendered, 0)),
            }
        }
        Cmd::Check { defs, suite, samples, seed } => {
            let g = load(defs)?;
            let reports: Vec<Report> = match suite {
                Suite::Metric => vec![
                    metric_suite(&g, *samples, *seed),
                    hyperbolicity_suite(&g, *samples, *seed),
                ],
                Suite::Length => vec![check_length_axioms(&g, *samples, *seed)],
                Suite::Action => vec![action_suite(&g, *samples, *seed)],
                Suite::All => vec![
                    metric_suite(&g, *samples, *seed),
                    hyperbolicity_suite(&g, *samples, *seed),
                    check_length_axioms(&g, *samples, *seed),
                    action_suite(&g, *samples, *seed),
                ],
            };
            let mut out = String::new();
            let mut all_pass = true;
            for rep in &reports {
                writeln!(out, "suite {}", rep.suite).unwrap();
                out.push_str(&rep.to_text());
                all_pass &= rep.passed();
            }
            if all_pass {
                out.push_str("ok\n");
                Ok((out, 0))
            } else {
                out.push_str("violations found\n");
                Ok((out, 1))
            }
        }
    }
}
