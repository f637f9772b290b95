//! The `chainpoly` command line: argument parsing, command dispatch and
//! output. [`run`] is the whole program minus process exit, so tests can
//! drive it in-process.

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::time::Duration;

use anyhow::{anyhow, Context, Result};
use chainpoly::analysis::{selftest, verify_kirillov_one, SelftestConfig};
use chainpoly::{
    cross_verify_with, parse_poset, verify_gasharov, AnalysisError, Budget, IntPolynomial, Method,
    MethodOutcome, MethodSet, Poset, VerificationReport,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub mod json;
pub mod table;

use table::Table;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "chainpoly", version, about = "Ehrhart delta-polynomials of chain polytopes")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verify the delta-vector of P_n (chain polytope of the zig-zag poset)
    Zigzag {
        /// `N` or an inclusive range `A..B`, with A >= 1
        #[arg(value_parser = parse_range)]
        range: RangeInclusive<usize>,
        #[command(flatten)]
        opts: ReportOpts,
    },
    /// Load a poset file and run one computation on it
    Poset {
        file: PathBuf,
        #[arg(value_enum)]
        action: PosetAction,
        #[command(flatten)]
        opts: ReportOpts,
    },
    /// Run the seeded random-poset property suites
    Selftest {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 5)]
        max_size: usize,
        #[arg(long)]
        json: bool,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum PosetAction {
    Chains,
    Rank,
    Extensions,
    Delta,
    Verify,
}

#[derive(Args, Debug)]
struct ReportOpts {
    /// Emit a JSON document instead of a table
    #[arg(long)]
    json: bool,
    /// Comma-separated subset of lattice,omega,descents
    #[arg(long, default_value = "lattice,omega,descents")]
    methods: MethodSet,
    /// Print delta-vectors with their full stored length
    #[arg(long)]
    full: bool,
    /// Leave timings out of the output
    #[arg(long)]
    no_timings: bool,
    #[arg(long, value_name = "D")]
    budget_lattice_dim: Option<usize>,
    #[arg(long, value_name = "M")]
    budget_lattice_dilation: Option<u64>,
    #[arg(long, value_name = "N")]
    budget_extensions: Option<u64>,
    #[arg(long, value_name = "N")]
    budget_omega: Option<u128>,
}

impl ReportOpts {
    fn budget(&self) -> Budget {
        let mut b = Budget::default();
        if let Some(v) = self.budget_lattice_dim {
            b.lattice_max_dim = v;
        }
        if let Some(v) = self.budget_lattice_dilation {
            b.lattice_max_dilation = v;
        }
        if let Some(v) = self.budget_extensions {
            b.max_extensions = v;
        }
        if let Some(v) = self.budget_omega {
            b.omega_max_assignments = v;
        }
        b
    }
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("`{t}` is not a nonnegative integer"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let n = num(s)?;
            (n, n)
        }
    };
    if lo == 0 {
        return Err("n must be at least 1".into());
    }
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(lo..=hi)
}

/// Output of one invocation.
struct Outcome {
    stdout: String,
    stderr: String,
    status: i32,
}

impl Outcome {
    fn new(status: i32) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: String::new(),
            status,
        }
    }
}

/// Runs the program on `args` (including the program name) and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return status;
        }
    };
    let echo: Vec<String> = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let outcome = match dispatch(cli, &echo.join(" ")) {
        Ok(o) => o,
        Err(e) => {
            let mut o = Outcome::new(EXIT_USAGE);
            o.stderr = format!("error: {e:#}\n");
            o
        }
    };
    let _ = out.write_all(outcome.stdout.as_bytes());
    let _ = err.write_all(outcome.stderr.as_bytes());
    outcome.status
}

fn dispatch(cli: Cli, echo: &str) -> Result<Outcome> {
    match cli.command {
        Command::Zigzag { range, opts } => Ok(cmd_zigzag(range, &opts, echo)),
        Command::Poset { file, action, opts } => cmd_poset(&file, action, &opts, echo),
        Command::Selftest {
            seed,
            count,
            max_size,
            json,
            inject_fault,
        } => Ok(cmd_selftest(
            &SelftestConfig {
                seed,
                count,
                max_size,
                inject_fault,
            },
            json,
            echo,
        )),
    }
}

fn show_poly(p: &IntPolynomial, full: bool) -> String {
    if full {
        let cs: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
        format!("({})", cs.join(", "))
    } else {
        p.to_string()
    }
}

fn show_timing(o: Option<&MethodOutcome>) -> String {
    match o {
        None => "-".into(),
        Some(MethodOutcome::Computed { elapsed, .. }) => micros(*elapsed),
        Some(MethodOutcome::OverBudget(_)) => "skipped".into(),
        Some(MethodOutcome::Failed(_)) => "failed".into(),
    }
}

fn micros(d: Duration) -> String {
    format!("{}us", d.as_micros())
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.into()
}

/// Exit status for a batch of reports: failed checks win over budget skips.
fn report_status(reports: &[VerificationReport]) -> i32 {
    if reports.iter().any(|r| !r.passed()) {
        EXIT_CHECK_FAILED
    } else if reports.iter().any(|r| !r.over_budget().is_empty()) {
        EXIT_USAGE
    } else {
        EXIT_OK
    }
}

/// Lines for the diagnostic stream: skipped methods, failed routes and
/// failed checks.
fn diagnostics(r: &VerificationReport) -> String {
    let mut s = String::new();
    for m in Method::ALL {
        match r.outcome(m) {
            Some(MethodOutcome::OverBudget(why)) => {
                s += &format!("{}: {} skipped ({why})\n", r.poset, m.name());
            }
            Some(MethodOutcome::Failed(why)) => {
                s += &format!("{}: {} failed: {why}\n", r.poset, m.name());
            }
            _ => {}
        }
    }
    if !r.identities_ok {
        s += &format!("{}: methods disagree\n", r.poset);
    }
    if !r.nonnegative || !r.delta0_is_one {
        s += &format!("{}: delta has a negative entry or delta_0 != 1\n", r.poset);
    }
    if r.unimodality_asserted && !r.unimodal {
        s += &format!("{}: delta is not unimodal\n", r.poset);
    }
    s
}

fn report_table(reports: &[VerificationReport], first: &str, label: impl Fn(&VerificationReport) -> String, opts: &ReportOpts) -> String {
    let mut header = vec![first, "delta", "agree", "unimodal", "peak", "sum"];
    if !opts.no_timings {
        header.extend(["lattice", "omega", "descents"]);
    }
    let mut t = Table::new(header);
    for r in reports {
        let agree = if r.identities_ok { "yes" } else { "no" };
        let mut row = vec![
            label(r),
            r.delta.as_ref().map_or("-".into(), |p| show_poly(p, opts.full)),
            agree.into(),
            yes_no(r.unimodal),
            r.peak.map_or("-".into(), |p| p.to_string()),
            r.coefficient_sum.as_ref().map_or("-".into(), ToString::to_string),
        ];
        if !opts.no_timings {
            row.extend(Method::ALL.map(|m| show_timing(r.outcome(m))));
        }
        t.push(row);
    }
    t.render()
}

fn pass_line(status: i32) -> &'static str {
    match status {
        EXIT_OK => "result: pass\n",
        EXIT_CHECK_FAILED => "result: FAIL\n",
        _ => "result: incomplete (budget exceeded)\n",
    }
}

fn cmd_zigzag(range: RangeInclusive<usize>, opts: &ReportOpts, echo: &str) -> Outcome {
    let budget = opts.budget();
    let reports: Vec<VerificationReport> = range
        .map(|n| verify_kirillov_one(n, opts.methods, &budget))
        .collect();
    let status = report_status(&reports);
    let mut o = Outcome::new(status);
    o.stderr = reports.iter().map(diagnostics).collect();
    if opts.json {
        let items = reports.iter().map(|r| json::verification(r, !opts.no_timings)).collect();
        o.stdout = json::render(&json::document(echo, items, status == EXIT_OK));
    } else {
        o.stdout = report_table(&reports, "n", |r| r.poset.trim_start_matches("Z_").to_string(), opts);
        o.stdout += pass_line(status);
    }
    o
}

fn load_poset(path: &PathBuf) -> Result<(Poset, String)> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let parsed = parse_poset(&text).map_err(|e| anyhow!("{}: {e}", path.display()))?;
    let warnings: String = parsed
        .dropped
        .iter()
        .map(|(i, j)| format!("warning: {}: dropped redundant cover {i} {j}\n", path.display()))
        .collect();
    Ok((parsed.poset, warnings))
}

fn chains_json(chains: &[chainpoly::Chain]) -> Value {
    Value::Array(chains.iter().map(|c| json!(c.elems())).collect())
}

fn show_chain(c: &chainpoly::Chain) -> String {
    let parts: Vec<String> = c.elems().iter().map(ToString::to_string).collect();
    parts.join(" < ")
}

fn cmd_poset(path: &PathBuf, action: PosetAction, opts: &ReportOpts, echo: &str) -> Result<Outcome> {
    let (poset, warnings) = load_poset(path)?;
    let mut o = match action {
        PosetAction::Chains => poset_chains(&poset, opts, echo),
        PosetAction::Rank => poset_rank(&poset, opts, echo),
        PosetAction::Extensions => poset_extensions(&poset, opts, echo),
        PosetAction::Delta | PosetAction::Verify => poset_verify(&poset, action, opts, echo)?,
    };
    o.stderr.insert_str(0, &warnings);
    Ok(o)
}

fn poset_chains(poset: &Poset, opts: &ReportOpts, echo: &str) -> Outcome {
    let all = poset.all_chains();
    let maximal = poset.maximal_chains();
    let mut o = Outcome::new(EXIT_OK);
    if opts.json {
        let item = json!({"kind": "chains", "chains": chains_json(&all), "maximal_chains": chains_json(&maximal)});
        o.stdout = json::render(&json::document(echo, vec![item], true));
    } else {
        o.stdout = format!("chains ({}):\n", all.len());
        for c in &all {
            o.stdout += &format!("  {}\n", show_chain(c));
        }
        o.stdout += &format!("maximal chains ({}):\n", maximal.len());
        for c in &maximal {
            o.stdout += &format!("  {}\n", show_chain(c));
        }
    }
    o
}

fn poset_rank(poset: &Poset, opts: &ReportOpts, echo: &str) -> Outcome {
    let mut o = Outcome::new(EXIT_OK);
    let rf = poset.rank_function();
    if opts.json {
        let item = match &rf {
            Ok(rf) => json!({"kind": "rank", "graded": true, "rank": rf.rank, "rho": rf.rho}),
            Err(ng) => json!({
                "kind": "rank",
                "graded": false,
                "rank": null,
                "not_graded_witness": [ng.longer.elems(), ng.shorter.elems()],
            }),
        };
        o.stdout = json::render(&json::document(echo, vec![item], true));
    } else {
        o.stdout = match &rf {
            Ok(rf) => {
                let rho: Vec<String> = rf.rho.iter().map(ToString::to_string).collect();
                format!("graded, rank {}\nrho: {}\n", rf.rank, rho.join(" "))
            }
            Err(ng) => format!(
                "not graded: maximal chains {} and {} differ in length\n",
                show_chain(&ng.longer),
                show_chain(&ng.shorter)
            ),
        };
    }
    o
}

fn poset_extensions(poset: &Poset, opts: &ReportOpts, echo: &str) -> Outcome {
    let mut o = Outcome::new(EXIT_OK);
    let mut all: Vec<Vec<usize>> = Vec::new();
    let mut walker = poset.linear_extensions();
    while let Some(ext) = walker.advance() {
        all.push(ext.to_vec());
    }
    if opts.json {
        let item = json!({"kind": "extensions", "count": all.len(), "extensions": all});
        o.stdout = json::render(&json::document(echo, vec![item], true));
    } else {
        o.stdout = format!("linear extensions ({}):\n", all.len());
        for ext in &all {
            let parts: Vec<String> = ext.iter().map(ToString::to_string).collect();
            o.stdout += &format!("  {}\n", parts.join(" "));
        }
    }
    o
}

fn poset_verify(poset: &Poset, action: PosetAction, opts: &ReportOpts, echo: &str) -> Result<Outcome> {
    let report = match cross_verify_with(poset, opts.methods, &opts.budget()) {
        Ok(r) => r,
        Err(AnalysisError::BudgetExceeded(methods)) => {
            let names: Vec<&str> = methods.iter().map(|m| m.name()).collect();
            let mut o = Outcome::new(EXIT_USAGE);
            o.stderr = format!(
                "error: over budget for method(s) {}; raise --budget-* or narrow --methods\n",
                names.join(", ")
            );
            return Ok(o);
        }
        Err(e) => return Err(e.into()),
    };
    let gasharov = if action == PosetAction::Verify {
        Some(verify_gasharov(poset, &poset.natural_labeling())?)
    } else {
        None
    };
    let mut status = report_status(std::slice::from_ref(&report));
    if gasharov.as_ref().is_some_and(|g| !g.passed()) {
        status = EXIT_CHECK_FAILED;
    }
    let mut o = Outcome::new(status);
    o.stderr = diagnostics(&report);
    if opts.json {
        let mut items = vec![json::verification(&report, !opts.no_timings)];
        items.extend(gasharov.as_ref().map(json::gasharov));
        o.stdout = json::render(&json::document(echo, items, status == EXIT_OK));
        return Ok(o);
    }
    o.stdout = report_table(std::slice::from_ref(&report), "poset", |r| r.poset.clone(), opts);
    if let Some(g) = &gasharov {
        let hypotheses = if g.hypotheses_hold() {
            "hold".to_string()
        } else {
            format!("fail ({})", g.failed_hypotheses.join(", "))
        };
        o.stdout += &format!(
            "W-polynomial (natural labeling): {}\n  unimodal: {}  peak: {}  unimodality hypotheses: {}\n",
            show_poly(&g.w, opts.full),
            yes_no(g.unimodal),
            g.peak.map_or("-".into(), |p| p.to_string()),
            hypotheses
        );
    }
    o.stdout += pass_line(status);
    Ok(o)
}

fn cmd_selftest(config: &SelftestConfig, as_json: bool, echo: &str) -> Outcome {
    let suites = selftest(config);
    let pass = suites.iter().all(|s| s.passed());
    let mut o = Outcome::new(if pass { EXIT_OK } else { EXIT_CHECK_FAILED });
    if let Some((s, f)) = suites
        .iter()
        .find_map(|s| s.first_failure.as_ref().map(|f| (s, f)))
    {
        o.stderr = format!("{}: case {} failed: {}\n", s.name, f.case, f.detail);
        if let Some(labels) = &f.labeling {
            let parts: Vec<String> = labels.iter().map(ToString::to_string).collect();
            o.stderr += &format!("labeling: {}\n", parts.join(" "));
        }
        o.stderr += "reproducer poset:\n";
        o.stderr += &f.poset_text;
        if !f.poset_text.ends_with('\n') {
            o.stderr.push('\n');
        }
    }
    if as_json {
        let items = suites.iter().map(json::suite).collect();
        o.stdout = json::render(&json::document(echo, items, pass));
    } else {
        let mut t = Table::new(["suite", "checked", "failures", "result"]);
        for s in &suites {
            t.push(vec![
                s.name.into(),
                s.checked.to_string(),
                s.failures.to_string(),
                if s.passed() { "pass" } else { "FAIL" }.into(),
            ]);
        }
        o.stdout = format!("seed {} count {} max-size {}\n", config.seed, config.count, config.max_size);
        o.stdout += &t.render();
        o.stdout += pass_line(o.status);
    }
    o
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3"), Ok(3..=3));
        assert_eq!(parse_range("1..4"), Ok(1..=4));
        assert_eq!(parse_range("2..=5"), Ok(2..=5));
        assert!(parse_range("0").is_err());
        assert!(parse_range("0..3").is_err());
        assert!(parse_range("4..2").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn status_precedence() {
        let budget = Budget::default();
        let ok = verify_kirillov_one(3, MethodSet::all(), &budget);
        assert_eq!(report_status(std::slice::from_ref(&ok)), EXIT_OK);
        let tight = Budget {
            max_extensions: 1,
            ..Budget::default()
        };
        let skipped = verify_kirillov_one(4, MethodSet::all(), &tight);
        assert_eq!(report_status(&[ok, skipped]), EXIT_USAGE);
    }
}
