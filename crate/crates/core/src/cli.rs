//! Command-line frontend. [`run`] parses arguments and returns what the
//! process should print and its exit code, so commands can be exercised
//! without spawning a process.
//!
//! Exit codes: 0 positive answer, 1 negative answer (not in R, no embedding,
//! disagreements found), 2 input error, 3 search budget exceeded.

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use crate::cfrac::{
    neg_eval, neg_expand, negsum, plus_eval, plus_to_minus, reverse_string, riemenschneider_dual,
    Fraction, NegString, PlusString,
};
use crate::error::{Error, Result};
use crate::families::{enumerate_family, family_csv};
use crate::rset::{f_map, g_map, is_in_r, orbit, perfect_square_root};
use crate::search::{
    casson_gordon_check, embed_string_with, SearchConfig, SearchStatus, CG_MAX_M, DEFAULT_MAX_NODES,
};

pub const MAX_NODES_ENV: &str = "LENSBALL_MAX_NODES";
pub const EMBED_SWEEP_BOUND: i64 = 300;
pub const ARITH_SWEEP_BOUND: i64 = 5000;

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "lensball",
    version,
    about = "Which lens spaces bound rational homology balls"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Membership of p/q in R, with a witness.
    Decide { fraction: String },
    /// Search for a standard embedding of the string of p/q into D^n.
    Embed {
        fraction: String,
        /// Search the string of p/(p-q) instead.
        #[arg(long)]
        dual: bool,
        /// Node budget (overrides LENSBALL_MAX_NODES).
        #[arg(long)]
        max_nodes: Option<u64>,
    },
    /// Enumerate family strings and fractions as CSV.
    Family {
        #[arg(long, allow_negative_numbers = true)]
        invariant: i64,
        #[arg(long, default_value_t = 3)]
        max_param: i64,
    },
    /// Sweep every p/q with p <= max-p and compare the decision routes.
    Crosscheck {
        #[arg(long)]
        max_p: i64,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Add the Casson-Gordon column for odd square p.
        #[arg(long)]
        with_cg: bool,
        /// Arithmetic checks only: the negsum identity and orbit closure.
        #[arg(long)]
        arith: bool,
        /// Allow max-p above the safety bound.
        #[arg(long)]
        force: bool,
        /// Node budget per string (overrides LENSBALL_MAX_NODES).
        #[arg(long)]
        max_nodes: Option<u64>,
    },
    /// Casson-Gordon sums for m^2/q.
    Cg { fraction: String },
    /// Continued-fraction utilities for a fraction `p/q` or a string `[a1,...]`.
    Expand {
        input: String,
        /// Read a bracketed input as a positive continued fraction.
        #[arg(long)]
        plus: bool,
    },
}

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String, code: i32) -> Self {
        Output {
            stdout,
            stderr: String::new(),
            code,
        }
    }

    fn error(e: &Error) -> Self {
        let code = match e {
            Error::ResourceExceeded(_) => EXIT_RESOURCE,
            _ => EXIT_INPUT,
        };
        Output {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli.command),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Output {
                    stdout: String::new(),
                    stderr: text,
                    code: EXIT_INPUT,
                }
            } else {
                Output::ok(text, EXIT_YES)
            }
        }
    }
}

pub fn execute(command: Command) -> Output {
    let result = match command {
        Command::Decide { fraction } => cmd_decide(&fraction),
        Command::Embed {
            fraction,
            dual,
            max_nodes,
        } => cmd_embed(&fraction, dual, max_nodes),
        Command::Family {
            invariant,
            max_param,
        } => cmd_family(invariant, max_param),
        Command::Crosscheck {
            max_p,
            jobs,
            with_cg,
            arith,
            force,
            max_nodes,
        } => cmd_crosscheck(&CrosscheckOptions {
            max_p,
            jobs,
            with_cg,
            arith,
            force,
            max_nodes,
        }),
        Command::Cg { fraction } => cmd_cg(&fraction),
        Command::Expand { input, plus } => cmd_expand(&input, plus),
    };
    result.unwrap_or_else(|e| Output::error(&e))
}

fn pretty<T: Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| Error::Internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn line<T: Serialize>(v: &T) -> Result<String> {
    serde_json::to_string(v).map_err(|e| Error::Internal(e.to_string()))
}

/// Node budget: explicit flag, then `LENSBALL_MAX_NODES`, then the default.
pub fn search_config(max_nodes: Option<u64>) -> Result<SearchConfig> {
    let max_nodes = match max_nodes {
        Some(n) => n,
        None => match std::env::var(MAX_NODES_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|e| Error::Parse(format!("{MAX_NODES_ENV}={v:?}: {e}")))?,
            Err(_) => DEFAULT_MAX_NODES,
        },
    };
    Ok(SearchConfig { max_nodes })
}

pub fn cmd_decide(text: &str) -> Result<Output> {
    let fr: Fraction = text.parse()?;
    let r = is_in_r(fr);
    Ok(Output::ok(
        pretty(&r)?,
        if r.in_r { EXIT_YES } else { EXIT_NO },
    ))
}

pub fn cmd_embed(text: &str, dual: bool, max_nodes: Option<u64>) -> Result<Output> {
    let fr: Fraction = text.parse()?;
    let config = search_config(max_nodes)?;
    let target = if dual { fr.complement() } else { fr };
    let r = embed_string_with(&neg_expand(target), &config);
    let code = match r.status {
        SearchStatus::Found => EXIT_YES,
        SearchStatus::NotFound => EXIT_NO,
        SearchStatus::ResourceExceeded => EXIT_RESOURCE,
    };
    Ok(Output::ok(pretty(&r)?, code))
}

pub fn cmd_family(invariant: i64, max_param: i64) -> Result<Output> {
    let rows = enumerate_family(invariant, max_param)?;
    Ok(Output::ok(family_csv(&rows)?, EXIT_YES))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CrosscheckRecord {
    pub p: i64,
    pub q: i64,
    #[serde(rename = "in_R")]
    pub in_r: bool,
    pub embeds_pq: bool,
    pub embeds_dual: bool,
    pub cg_ok: Option<bool>,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArithFailure {
    pub p: i64,
    pub q: i64,
    pub check: &'static str,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrosscheckOptions {
    pub max_p: i64,
    pub jobs: usize,
    pub with_cg: bool,
    pub arith: bool,
    pub force: bool,
    pub max_nodes: Option<u64>,
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Internal(e.to_string()))
}

/// Records for every `p/q` with `p` in `2..=max_p`, sorted by `(p, q)`.
pub fn crosscheck_records(
    max_p: i64,
    with_cg: bool,
    config: &SearchConfig,
) -> Result<Vec<CrosscheckRecord>> {
    let per_p: Vec<Vec<CrosscheckRecord>> = (2..=max_p)
        .into_par_iter()
        .map(|p| crosscheck_numerator(p, with_cg, config))
        .collect::<Result<_>>()?;
    Ok(per_p.into_iter().flatten().collect())
}

fn crosscheck_numerator(
    p: i64,
    with_cg: bool,
    config: &SearchConfig,
) -> Result<Vec<CrosscheckRecord>> {
    // embeds[q]: the string of p/q embeds; shared between q and p - q
    let mut embeds = vec![None; p as usize];
    for fr in Fraction::all_with_numerator(p) {
        embeds[fr.q() as usize] = Some(embed_string_with(&neg_expand(fr), config).decided()?);
    }
    let m = perfect_square_root(p).filter(|m| with_cg && m % 2 == 1 && *m <= CG_MAX_M);
    Fraction::all_with_numerator(p)
        .map(|fr| {
            let in_r = is_in_r(fr).in_r;
            let embeds_pq = embeds[fr.q() as usize].expect("filled above");
            let embeds_dual = embeds[(p - fr.q()) as usize].expect("filled above");
            let cg_ok = match m {
                Some(m) => Some(casson_gordon_check(m, fr.q())?.all_pm_one),
                None => None,
            };
            Ok(CrosscheckRecord {
                p,
                q: fr.q(),
                in_r,
                embeds_pq,
                embeds_dual,
                cg_ok,
                agree: in_r == (embeds_pq && embeds_dual),
            })
        })
        .collect()
}

/// Failures of the negsum identity and of orbit closure for `p <= max_p`,
/// sorted by `(p, q)`, and the number of fractions checked.
pub fn arith_failures(max_p: i64) -> (Vec<ArithFailure>, usize) {
    let per_p: Vec<(Vec<ArithFailure>, usize)> = (2..=max_p)
        .into_par_iter()
        .map(|p| {
            let mut out = Vec::new();
            let mut n = 0;
            for fr in Fraction::all_with_numerator(p) {
                n += 1;
                let mut fail = |check, detail: String| {
                    out.push(ArithFailure {
                        p,
                        q: fr.q(),
                        check,
                        detail,
                    })
                };
                let sum = negsum(&neg_expand(fr)) + negsum(&neg_expand(fr.complement()));
                if sum != -2 {
                    fail("negsum", format!("negsum sum is {sum}"));
                }
                if f_map(f_map(fr)) != fr || g_map(g_map(fr)) != fr {
                    fail("involution", "f or g is not an involution here".into());
                }
                let orb = orbit(fr);
                if orb.len() > 4 {
                    fail("orbit_size", format!("orbit has {} elements", orb.len()));
                }
                let in_r = is_in_r(fr).in_r;
                if orb.iter().any(|&y| is_in_r(y).in_r != in_r) {
                    fail(
                        "orbit_membership",
                        "membership differs across the orbit".into(),
                    );
                }
            }
            (out, n)
        })
        .collect();
    let checked = per_p.iter().map(|(_, n)| n).sum();
    (per_p.into_iter().flat_map(|(f, _)| f).collect(), checked)
}

pub fn cmd_crosscheck(opts: &CrosscheckOptions) -> Result<Output> {
    let bound = if opts.arith {
        ARITH_SWEEP_BOUND
    } else {
        EMBED_SWEEP_BOUND
    };
    if opts.max_p < 2 {
        return Err(Error::Precondition(format!(
            "max-p must be at least 2, got {}",
            opts.max_p
        )));
    }
    if opts.max_p > bound && !opts.force {
        return Err(Error::Precondition(format!(
            "max-p {} exceeds the safety bound {bound}; pass --force to run anyway",
            opts.max_p
        )));
    }
    let config = search_config(opts.max_nodes)?;
    let pool = pool(opts.jobs)?;
    let mut out = Output::default();
    if opts.arith {
        let (failures, checked) = pool.install(|| arith_failures(opts.max_p));
        for f in &failures {
            out.stdout.push_str(&line(f)?);
            out.stdout.push('\n');
        }
        out.stderr = format!(
            "arith: {checked} fractions checked, {} failures\n",
            failures.len()
        );
        out.code = if failures.is_empty() {
            EXIT_YES
        } else {
            EXIT_NO
        };
        return Ok(out);
    }
    let records = pool.install(|| crosscheck_records(opts.max_p, opts.with_cg, &config))?;
    for r in &records {
        out.stdout.push_str(&line(r)?);
        out.stdout.push('\n');
    }
    let disagreements = records.iter().filter(|r| !r.agree).count();
    out.stderr = format!(
        "crosscheck: {} fractions, {disagreements} disagreements\n",
        records.len()
    );
    if opts.with_cg {
        let cg_checked = records.iter().filter(|r| r.cg_ok.is_some()).count();
        let cg_bad = records
            .iter()
            .filter(|r| r.in_r && r.cg_ok == Some(false))
            .count();
        out.stderr.push_str(&format!(
            "cg: {cg_checked} fractions, {cg_bad} in R with a sum away from ±1\n"
        ));
    }
    out.code = if disagreements == 0 {
        EXIT_YES
    } else {
        EXIT_NO
    };
    Ok(out)
}

pub fn cmd_cg(text: &str) -> Result<Output> {
    let fr: Fraction = text.parse()?;
    let m = perfect_square_root(fr.p())
        .ok_or_else(|| Error::Precondition(format!("{} is not a perfect square", fr.p())))?;
    let report = casson_gordon_check(m, fr.q())?;
    Ok(Output::ok(
        pretty(&report)?,
        if report.all_pm_one { EXIT_YES } else { EXIT_NO },
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expansion {
    pub fraction: Fraction,
    #[serde(serialize_with = "display")]
    pub string: NegString,
    pub negsum: i64,
    pub dual: Fraction,
    #[serde(serialize_with = "display")]
    pub dual_string: NegString,
    pub reverse: Fraction,
    #[serde(serialize_with = "display")]
    pub reverse_string: NegString,
}

fn display<S: serde::Serializer, T: std::fmt::Display>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn expansion(fr: Fraction) -> Result<Expansion> {
    let string = neg_expand(fr);
    let reversed = reverse_string(&string);
    Ok(Expansion {
        fraction: fr,
        negsum: negsum(&string),
        dual: fr.complement(),
        dual_string: riemenschneider_dual(&string)?,
        reverse: neg_eval(&reversed)?,
        reverse_string: reversed,
        string,
    })
}

pub fn cmd_expand(text: &str, plus: bool) -> Result<Output> {
    let fr = if text.contains('/') {
        if plus {
            return Err(Error::Parse("--plus expects a bracketed string".into()));
        }
        text.parse()?
    } else if plus {
        let s: PlusString = text.parse()?;
        let v = plus_eval(&s)?;
        let minus = plus_to_minus(&s)?;
        let fr = neg_eval(&minus)?;
        if fr.to_ratio() != v {
            return Err(Error::Internal(format!(
                "{s}+ = {v} but its conversion gives {fr}"
            )));
        }
        fr
    } else {
        neg_eval(&text.parse::<NegString>()?)?
    };
    Ok(Output::ok(pretty(&expansion(fr)?)?, EXIT_YES))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &[&str]) -> Output {
        run(std::iter::once("lensball").chain(args.iter().copied()))
    }

    fn json(out: &Output) -> serde_json::Value {
        serde_json::from_str(&out.stdout).unwrap()
    }

    #[test]
    fn decide() {
        let out = cli(&["decide", "25/11"]);
        assert_eq!(out.code, 0);
        let v = json(&out);
        assert_eq!(v["in_R"], true);
        assert_eq!(v["family"], "Type1");

        assert_eq!(cli(&["decide", "49/2"]).code, 1);
        let out = cli(&["decide", "6/4"]);
        assert_eq!(out.code, 2);
        assert!(out.stderr.contains("not reduced"));
        assert_eq!(cli(&["decide"]).code, 2);
    }

    #[test]
    fn embed() {
        let out = cli(&["embed", "25/11"]);
        assert_eq!(out.code, 0);
        let v = json(&out);
        assert_eq!(v["found"], true);
        assert_eq!(v["matrix"].as_array().unwrap().len(), 5);

        let out = cli(&["embed", "7/5"]);
        assert_eq!(out.code, 1);
        assert_eq!(json(&out)["string"], "[2,2,3]");

        let out = cli(&["embed", "25/11", "--dual"]);
        assert_eq!(out.code, 0);
        assert_eq!(json(&out)["string"], "[2,5,3]");

        let out = cli(&["embed", "25/11", "--max-nodes", "3"]);
        assert_eq!(out.code, 3);
        assert_eq!(json(&out)["status"], "resource_exceeded");
    }

    #[test]
    fn family() {
        let out = cli(&["family", "--invariant", "-3", "--max-param", "3"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.starts_with("invariant,params,string,p,q\n"));
        assert!(out.stdout.contains("Iminus3,c=2,\"[3,2,2,2]\",9,4\n"));

        let out = cli(&["family", "--invariant", "-2", "--max-param", "0"]);
        assert!(out.stdout.contains("\"[3,2,2,3]\",16,7"));

        assert_eq!(cli(&["family", "--invariant", "0"]).code, 2);
    }

    #[test]
    fn crosscheck_small() {
        let out = cli(&["crosscheck", "--max-p", "50", "--jobs", "2"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(out.stderr.contains("0 disagreements"));
        let lines: Vec<&str> = out.stdout.lines().collect();
        assert_eq!(
            lines[0],
            r#"{"p":2,"q":1,"in_R":false,"embeds_pq":false,"embeds_dual":false,"cg_ok":null,"agree":true}"#
        );
        let again = cli(&["crosscheck", "--max-p", "50", "--jobs", "1"]);
        assert_eq!(again.stdout, out.stdout);
    }

    #[test]
    fn crosscheck_cg_column() {
        let out = cli(&["crosscheck", "--max-p", "49", "--with-cg"]);
        let v: serde_json::Value = out
            .stdout
            .lines()
            .find(|l| l.starts_with(r#"{"p":49,"q":2,"#))
            .map(|l| serde_json::from_str(l).unwrap())
            .unwrap();
        assert_eq!(v["cg_ok"], false);
        assert_eq!(v["in_R"], false);
        assert!(out.stdout.lines().any(|l| l.starts_with(
            r#"{"p":25,"q":11,"in_R":true,"embeds_pq":true,"embeds_dual":true,"cg_ok":true"#
        )));
    }

    #[test]
    fn crosscheck_arith_and_bounds() {
        let out = cli(&["crosscheck", "--max-p", "50", "--arith"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.is_empty());
        assert!(out.stderr.contains("0 failures"));
        assert_eq!(cli(&["crosscheck", "--max-p", "301"]).code, 2);
        assert_eq!(cli(&["crosscheck", "--max-p", "5001", "--arith"]).code, 2);
    }

    #[test]
    fn cg() {
        assert_eq!(cli(&["cg", "9/2"]).code, 0);
        let out = cli(&["cg", "49/2"]);
        assert_eq!(out.code, 1);
        assert_eq!(json(&out)["values"].as_array().unwrap().len(), 6);
        assert_eq!(cli(&["cg", "10/3"]).code, 2);
    }

    #[test]
    fn expand() {
        let v = json(&cli(&["expand", "25/11"]));
        assert_eq!(v["string"], "[3,2,2,3,2]");
        assert_eq!(v["dual_string"], "[2,5,3]");
        assert_eq!(v["negsum"], -3);
        let v = json(&cli(&["expand", "[2,2,2]"]));
        assert_eq!(v["fraction"], "4/3");
        let v = json(&cli(&["expand", "--plus", "[1,3]"]));
        assert_eq!(v["fraction"], "4/3");
        assert_eq!(cli(&["expand", "[1,3]"]).code, 2);
    }

    #[test]
    fn help_goes_to_stdout() {
        let out = cli(&["--help"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("crosscheck"));
    }
}
