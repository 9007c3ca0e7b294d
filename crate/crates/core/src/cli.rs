//! Command-line front end.
//!
//! ```text
//! zetaix eval   --s -2 --x 0.5
//! zetaix table  --s -3:3:1 --x 0.1:0.9:0.1 --format csv --jobs 4
//! zetaix verify --suite bernoulli
//! ```
//!
//! `--s` and `--x` take a scalar, a comma list, `start:stop:step`, or a comma
//! list mixing both. `ZETAIX_TOL` sets the default of `--tol`.

use std::ffi::OsString;
use std::io::Write;
use std::thread;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::value::RawValue;

use crate::hurwitz::{evaluate, EvalConfig, EvalOutcome, EvalPoint};
use crate::verify::{Suite, SuiteReport};
use crate::{Result, ZetaError};

/// Exit status for bad input, domain and pole errors.
pub const EXIT_USAGE: i32 = 2;
/// Exit status when a verification suite fails.
pub const EXIT_VERIFY_FAILED: i32 = 1;

#[derive(Debug, Parser)]
#[command(name = "zetaix", version, about = "Hurwitz zeta ζ_H(s, ix) and ∂_s ζ_H(s, ix) for real s")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate at one or more points; any failing point is an error.
    Eval(GridArgs),
    /// Evaluate over the s × x grid; failing points become error rows.
    Table(GridArgs),
    /// Run the self-verification suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct GridArgs {
    /// s values: scalar, list, or start:stop:step
    #[arg(long, allow_hyphen_values = true)]
    s: String,
    /// x values in (0, 1): scalar, list, or start:stop:step
    #[arg(long, allow_hyphen_values = true)]
    x: String,
    /// 0 for ζ_H, 1 for ∂_s ζ_H
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
    deriv: u8,
    /// Output format (default: text for eval, csv for table)
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Relative truncation tolerance
    #[arg(long, env = "ZETAIX_TOL")]
    tol: Option<f64>,
    /// Maximum terms per series
    #[arg(long)]
    term_cap: Option<usize>,
    /// Snap radius around integers
    #[arg(long)]
    integer_snap: Option<f64>,
    /// Exclusion radius around s = 1
    #[arg(long)]
    pole_guard: Option<f64>,
    /// Worker threads; output order does not depend on it
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Suites to run (repeatable or comma separated); all when omitted
    #[arg(long, value_delimiter = ',')]
    suite: Vec<String>,
}

impl GridArgs {
    fn config(&self) -> Result<EvalConfig> {
        let mut cfg = EvalConfig::default();
        if let Some(t) = self.tol {
            cfg.tol_rel = t;
        }
        if let Some(c) = self.term_cap {
            cfg.term_cap = c;
        }
        if let Some(s) = self.integer_snap {
            cfg.integer_snap = s;
        }
        if let Some(g) = self.pole_guard {
            cfg.pole_guard = g;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Parses `a`, `a,b,c`, `start:stop:step` or a comma list mixing them.
///
/// Range points are start + i·step up to stop inclusive, rounded to 12
/// decimals so that `0.1:0.9:0.1` ends exactly at 0.9.
///
/// ```
/// let v = zetaix::cli::parse_values("-1,0.1:0.3:0.1").unwrap();
/// assert_eq!(v, vec![-1.0, 0.1, 0.2, 0.3]);
/// ```
pub fn parse_values(spec: &str) -> Result<Vec<f64>> {
    let bad = |what: &str| ZetaError::Domain(format!("cannot parse '{what}' as a number or start:stop:step"));
    let num = |t: &str| t.trim().parse::<f64>().map_err(|_| bad(t));
    let mut out = Vec::new();
    for item in spec.split(',') {
        let fields: Vec<&str> = item.split(':').collect();
        match fields.as_slice() {
            [v] => out.push(num(v)?),
            [a, b, c] => {
                let (start, stop, step) = (num(a)?, num(b)?, num(c)?);
                if !step.is_finite() || step <= 0.0 || !start.is_finite() || !stop.is_finite() || stop < start
                {
                    return Err(ZetaError::Domain(format!(
                        "range '{item}' needs start <= stop and step > 0"
                    )));
                }
                let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
                if count > 1_000_000 {
                    return Err(ZetaError::Domain(format!("range '{item}' has {count} points")));
                }
                for i in 0..count {
                    let v = start + i as f64 * step;
                    out.push(format!("{v:.12}").parse().map_err(|_| bad(item))?);
                }
            }
            _ => return Err(bad(item)),
        }
    }
    Ok(out)
}

struct Row {
    point: EvalPoint,
    result: Result<EvalOutcome>,
}

fn evaluate_grid(points: Vec<EvalPoint>, cfg: &EvalConfig, jobs: usize) -> Vec<Row> {
    let run = |p: &EvalPoint| Row { point: *p, result: evaluate(*p, cfg) };
    let jobs = jobs.max(1).min(points.len().max(1));
    if jobs == 1 {
        return points.iter().map(run).collect();
    }
    let chunk = points.len().div_ceil(jobs);
    thread::scope(|scope| {
        let handles: Vec<_> = points
            .chunks(chunk)
            .map(|c| scope.spawn(move || c.iter().map(run).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("evaluation thread panicked")).collect()
    })
}

// 17 significant digits; NaN and infinities become the `nan` sentinel.
fn sci(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        "nan".to_string()
    }
}

fn raw(v: f64) -> Option<Box<RawValue>> {
    if v.is_finite() {
        RawValue::from_string(sci(v)).ok()
    } else {
        None
    }
}

#[derive(Serialize)]
struct JsonRow {
    s: Option<Box<RawValue>>,
    x: Option<Box<RawValue>>,
    deriv: u8,
    re: Option<Box<RawValue>>,
    im: Option<Box<RawValue>>,
    path: Option<&'static str>,
    err: Option<Box<RawValue>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

impl From<&Row> for JsonRow {
    fn from(row: &Row) -> Self {
        let p = row.point;
        match &row.result {
            Ok(o) => JsonRow {
                s: raw(p.s),
                x: raw(p.x),
                deriv: p.deriv,
                re: raw(o.value.re),
                im: raw(o.value.im),
                path: Some(o.path.as_str()),
                err: raw(o.error_estimate),
                error: None,
            },
            Err(e) => JsonRow {
                s: raw(p.s),
                x: raw(p.x),
                deriv: p.deriv,
                re: None,
                im: None,
                path: None,
                err: None,
                error: Some(e.to_string()),
            },
        }
    }
}

fn render(rows: &[Row], format: Format, single_object: bool, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Text => {
            for row in rows {
                let p = row.point;
                match &row.result {
                    Ok(o) => writeln!(
                        out,
                        "s={} x={} deriv={} path={} Re={} Im={} err={:e}",
                        p.s, p.x, p.deriv, o.path, o.value.re, o.value.im, o.error_estimate
                    )?,
                    Err(e) => writeln!(out, "s={} x={} deriv={} error: {e}", p.s, p.x, p.deriv)?,
                }
            }
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
            w.write_record(["s", "x", "re", "im", "path", "err"])?;
            for row in rows {
                let p = row.point;
                let record = match &row.result {
                    Ok(o) => [
                        sci(p.s),
                        sci(p.x),
                        sci(o.value.re),
                        sci(o.value.im),
                        o.path.to_string(),
                        sci(o.error_estimate),
                    ],
                    Err(e) => {
                        [sci(p.s), sci(p.x), "nan".into(), "nan".into(), format!("error: {e}"), "nan".into()]
                    }
                };
                w.write_record(&record)?;
            }
            w.flush()?;
        }
        Format::Json => {
            let json: Vec<JsonRow> = rows.iter().map(JsonRow::from).collect();
            let text = if single_object && json.len() == 1 {
                serde_json::to_string(&json[0])
            } else {
                serde_json::to_string(&json)
            }
            .map_err(std::io::Error::other)?;
            writeln!(out, "{text}")?;
        }
    }
    Ok(())
}

fn grid(args: &GridArgs) -> Result<(EvalConfig, Vec<EvalPoint>)> {
    let cfg = args.config()?;
    let s = parse_values(&args.s)?;
    let x = parse_values(&args.x)?;
    let points = s.iter().flat_map(|&s| x.iter().map(move |&x| EvalPoint::new(s, x, args.deriv))).collect();
    Ok((cfg, points))
}

fn cmd_eval(args: &GridArgs, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let (cfg, points) = match grid(args) {
        Ok(g) => g,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    let rows = evaluate_grid(points, &cfg, args.jobs);
    if let Some(bad) = rows.iter().find(|r| r.result.is_err()) {
        if let Err(e) = &bad.result {
            writeln!(err, "error: s={} x={}: {e}", bad.point.s, bad.point.x)?;
        }
        return Ok(EXIT_USAGE);
    }
    render(&rows, args.format.unwrap_or(Format::Text), true, out)?;
    Ok(0)
}

fn cmd_table(args: &GridArgs, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let (cfg, points) = match grid(args) {
        Ok(g) => g,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    let rows = evaluate_grid(points, &cfg, args.jobs);
    render(&rows, args.format.unwrap_or(Format::Csv), false, out)?;
    Ok(0)
}

fn print_report(r: &SuiteReport, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "{r}")?;
    for p in &r.parts {
        let mark = if p.passed() { "ok " } else { "BAD" };
        writeln!(
            out,
            "       {mark} {:<32} max_err={:.3e} tol={:.0e} at {}",
            p.label, p.max_error, p.tolerance, p.worst_at
        )?;
        for e in p.errors.iter().take(3) {
            writeln!(out, "           {e}")?;
        }
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let suites: Vec<Suite> = if args.suite.is_empty() {
        Suite::ALL.to_vec()
    } else {
        match args.suite.iter().map(|s| s.trim().parse()).collect::<Result<Vec<Suite>>>() {
            Ok(v) => v,
            Err(e) => {
                writeln!(err, "error: {e}")?;
                return Ok(EXIT_USAGE);
            }
        }
    };
    let mut all = true;
    for suite in suites {
        let report = suite.run();
        all &= report.passed();
        print_report(&report, out)?;
    }
    writeln!(out, "{}", if all { "all suites passed" } else { "some suites FAILED" })?;
    Ok(if all { 0 } else { EXIT_VERIFY_FAILED })
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            let _ =
                if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Eval(a) => cmd_eval(a, out, err),
        Command::Table(a) => cmd_table(a, out, err),
        Command::Verify(a) => cmd_verify(a, out, err),
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {e}");
        EXIT_USAGE
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["zetaix"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn ranges() {
        let v = parse_values("0.1:0.9:0.1").unwrap();
        assert_eq!(v.len(), 9);
        assert_eq!(v[8], 0.9);
        assert_eq!(v[2], 0.3);
        assert_eq!(parse_values("-3:3:1").unwrap().len(), 7);
        assert!(parse_values("1:0:0.1").is_err());
        assert!(parse_values("0:1:0").is_err());
        assert!(parse_values("a").is_err());
    }

    #[test]
    fn eval_text() {
        let (code, out, _) = run_str(&["eval", "--s", "-2", "--x", "0.5"]);
        assert_eq!(code, 0);
        assert!(out.contains("path=neg-even") && out.contains("Re=-0.125"), "{out}");
    }

    #[test]
    fn eval_pole() {
        let (code, _, err) = run_str(&["eval", "--s", "1", "--x", "0.5"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("simple pole at s=1"), "{err}");
    }

    #[test]
    fn eval_json_object() {
        let (code, out, _) = run_str(&["eval", "--s", "0", "--x", "0.3", "--deriv", "0", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["re"].as_f64().unwrap(), 0.5);
        assert!((v["im"].as_f64().unwrap() + 0.3).abs() < 1e-15);
        assert_eq!(v["path"], "neg-even");
        assert!(v["err"].is_number());
    }

    #[test]
    fn table_rows_and_errors() {
        let (code, out, _) = run_str(&["table", "--s", "-3:3:1", "--x", "0.1:0.9:0.1"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "s,x,re,im,path,err");
        assert_eq!(lines.len(), 64);
        let pole_rows = lines.iter().filter(|l| l.contains("simple pole")).count();
        assert_eq!(pole_rows, 9);
        assert!(!out.contains('\r'));
    }

    #[test]
    fn jobs_do_not_change_output() {
        let a = run_str(&["table", "--s", "-2.5:2.5:0.5", "--x", "0.2,0.7", "--deriv", "1"]).1;
        let b = run_str(&["table", "--s", "-2.5:2.5:0.5", "--x", "0.2,0.7", "--deriv", "1", "--jobs", "3"]).1;
        assert_eq!(a, b);
    }

    #[test]
    fn bad_config_and_args() {
        assert_eq!(run_str(&["eval", "--s", "0.5", "--x", "0.5", "--tol", "2"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["eval", "--s", "0.5", "--x", "1.5"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["eval", "--s", "0.5", "--x", "0.5", "--deriv", "2"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["verify", "--suite", "nope"]).0, EXIT_USAGE);
    }

    #[test]
    fn verify_one_suite() {
        let (code, out, _) = run_str(&["verify", "--suite", "vanishing"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("[PASS]") && out.contains("vanishing"));
        assert_eq!(out.matches("[PASS]").count(), 1);
    }
}
