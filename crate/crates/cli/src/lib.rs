//! Argument handling and output for the `lct` binary.

use clap::{Args, Parser, Subcommand};
use lct_core::cache::Cache;
use lct_core::verdict::render_text;
use lct_core::{parse_polynomial, Error, LctReport, Options};
use rayon::prelude::*;
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "lct", version, about = "Logarithmic comparison theorem checks for isolated hypersurface singularities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Analyze one polynomial or a batch file
    Analyze(AnalyzeArgs),
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["expr", "file", "batch"])))]
#[command(group(clap::ArgGroup::new("format").args(["json", "json_lines", "text"])))]
pub struct AnalyzeArgs {
    #[arg(long)]
    pub expr: Option<String>,
    /// file holding one expression (optionally after a `vars:` line)
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// file with one expression per line
    #[arg(long)]
    pub batch: Option<PathBuf>,
    /// comma separated variable names
    #[arg(long, value_delimiter = ',')]
    pub vars: Option<Vec<String>>,
    #[arg(long)]
    pub json: bool,
    #[arg(long)]
    pub json_lines: bool,
    #[arg(long)]
    pub text: bool,
    /// starting K (power of s kept)
    #[arg(long, value_name = "K")]
    pub truncation: Option<usize>,
    #[arg(long, value_name = "DX")]
    pub x_degree: Option<u32>,
    /// degree bound for logarithmic vector fields
    #[arg(long)]
    pub degree_bound: Option<u32>,
    #[arg(long)]
    pub cache: Option<PathBuf>,
    #[arg(long)]
    pub selfcheck: bool,
    #[arg(long)]
    pub logder: bool,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;

/// A failed input: exit code and message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

fn classify(e: &Error) -> i32 {
    match e {
        Error::TruncationInsufficient { .. } | Error::IrrationalExponent | Error::ConsistencyFailure(_) => EXIT_RESOURCE,
        _ => EXIT_INPUT,
    }
}

fn position(e: &Error) -> Option<usize> {
    match e {
        Error::Syntax { pos, .. } | Error::UnknownVariable { pos, .. } | Error::NegativeExponent { pos } => Some(*pos),
        _ => None,
    }
}

/// An input file: optional `vars:` declaration on the first non-comment
/// line, then expressions with their line numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputFile {
    pub vars: Option<Vec<String>>,
    pub exprs: Vec<(usize, String)>,
}

pub fn parse_input_file(text: &str) -> InputFile {
    let mut vars = None;
    let mut exprs = vec![];
    let mut first = true;
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if first {
            first = false;
            if let Some(rest) = line.strip_prefix("vars:") {
                vars = Some(split_vars(rest));
                continue;
            }
        }
        exprs.push((i + 1, line.to_string()));
    }
    InputFile { vars, exprs }
}

fn split_vars(s: &str) -> Vec<String> {
    s.split(',').map(|v| v.trim().to_string()).filter(|v| !v.is_empty()).collect()
}

/// Parses and analyzes one expression, going through the cache if given.
pub fn analyze_one(expr: &str, vars: &[String], opts: &Options, cache: Option<&Cache>) -> Result<LctReport, Failure> {
    let fail = |e: Error| {
        let mut message = format!("{expr}: {e}");
        if let Some(p) = position(&e) {
            message.push_str(&format!("\n  {expr}\n  {}^", " ".repeat(p.min(expr.len()))));
        }
        Failure { code: classify(&e), message }
    };
    let f = parse_polynomial(expr, vars).map_err(fail)?;
    let key = cache.map(|_| Cache::key(&f, vars, opts));
    if let (Some(c), Some(k)) = (cache, &key) {
        if let Some(r) = c.get(k).and_then(|s| serde_json::from_str::<LctReport>(&s).ok()) {
            if r.input == expr.trim() {
                return Ok(r);
            }
        }
    }
    let report = lct_core::analyze(&f, expr.trim(), vars, opts).map_err(fail)?;
    if let (Some(c), Some(k)) = (cache, &key) {
        if let Err(e) = c.put(k, &report.to_json()) {
            eprintln!("warning: cache write failed: {e}");
        }
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    JsonLines,
    Text,
}

/// Runs the command line `argv` (program name first), writing reports to
/// `out` and diagnostics to `err`; returns the exit code.
pub fn run_cli<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let Command::Analyze(args) = cli.command;
    analyze_cmd(&args, out, err)
}

fn analyze_cmd(args: &AnalyzeArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let (file_vars, exprs, batch) = if let Some(e) = &args.expr {
        (None, vec![(0, e.clone())], false)
    } else {
        let path = args.file.as_ref().or(args.batch.as_ref()).expect("clap enforces a source");
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => {
                let _ = writeln!(err, "error: {}: {e}", path.display());
                return EXIT_INPUT;
            }
        };
        let parsed = parse_input_file(&text);
        if args.file.is_some() && parsed.exprs.len() != 1 {
            let _ = writeln!(
                err,
                "error: {}: expected exactly one expression, found {} (use --batch)",
                path.display(),
                parsed.exprs.len()
            );
            return EXIT_INPUT;
        }
        (parsed.vars, parsed.exprs, args.batch.is_some())
    };
    let Some(vars) = args.vars.clone().or(file_vars) else {
        let _ = writeln!(err, "error: no variables given (use --vars or a `vars:` line)");
        return EXIT_INPUT;
    };
    let cache = match &args.cache {
        Some(d) => match Cache::open(d) {
            Ok(c) => Some(c),
            Err(e) => {
                let _ = writeln!(err, "error: cache {}: {e}", d.display());
                return EXIT_INPUT;
            }
        },
        None => None,
    };
    let opts = Options {
        truncation: args.truncation,
        x_degree: args.x_degree,
        degree_bound: args.degree_bound,
        logder: args.logder,
        selfcheck: args.selfcheck,
    };
    let format = if args.json {
        Format::Json
    } else if args.json_lines {
        Format::JsonLines
    } else {
        Format::Text
    };

    let results: Vec<Result<LctReport, Failure>> =
        exprs.par_iter().map(|(_, e)| analyze_one(e, &vars, &opts, cache.as_ref())).collect();

    let mut code = EXIT_OK;
    let mut docs = vec![];
    for ((line, expr), res) in exprs.iter().zip(results) {
        match res {
            Ok(r) => match format {
                Format::Json => docs.push(r.to_json_pretty()),
                Format::JsonLines => {
                    let _ = writeln!(out, "{}", r.to_json());
                }
                Format::Text => {
                    let _ = writeln!(out, "{}", render_text(&r));
                }
            },
            Err(f) => {
                code = code.max(f.code);
                let at = if *line > 0 { format!("line {line}: ") } else { String::new() };
                let _ = writeln!(err, "error: {at}{}", f.message);
                let obj = serde_json::json!({ "input": expr.trim(), "error": f.message, "exit_code": f.code });
                match format {
                    Format::Json if batch => docs.push(serde_json::to_string_pretty(&obj).expect("json")),
                    Format::JsonLines => {
                        let _ = writeln!(out, "{obj}");
                    }
                    _ => {}
                }
            }
        }
    }
    if format == Format::Json {
        if batch {
            let _ = writeln!(out, "[{}]", docs.join(",\n"));
        } else if let Some(d) = docs.pop() {
            let _ = writeln!(out, "{d}");
        }
    }
    code
}
