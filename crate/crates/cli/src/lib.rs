//! Command-line front end.
//!
//! Exit codes: 0 success (for `check`: nothing found), 1 a verification
//! entry failed, 2 usage or input error, 3 a size cap refused the request,
//! 10 `check` found a copy, 70 an internal invariant failed.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use multex::constructions::{build_ar_lower_coloring, build_turan_c3_c4multi, build_turan_c4multi};
use multex::patterns::{
    contains_pattern, enumerate_copies, enumerate_multicycles, find_rainbow_copy, PatternKind, DEFAULT_CYCLE_CAP,
    FAMILY_F,
};
use multex::search::{
    exact_anti_ramsey_with, exact_turan_with, ForbiddenSet, SearchCertificate, SearchConfig, DEFAULT_EDGE_CAP,
    DEFAULT_VERTEX_CAP,
};
use multex::verify::{
    conjecture1_probe, lemma1_exhaustive, lemma2_property, verify_theorems, VerificationReport,
};
use multex::{EdgeColoring, Error, PartSizes, PartitionedGraph};

/// Overrides the default of `--cap` and `--edge-cap`.
pub const CAP_ENV: &str = "MULTEX_DEFAULT_CAP";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_FOUND: i32 = 10;
pub const EXIT_INTERNAL: i32 = 70;

#[derive(Parser, Debug)]
#[command(name = "multex", version, about = "Exact Turán and anti-Ramsey computations for multipartite 4-cycles")]
struct Cli {
    /// Human-oriented output instead of the plain default.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit an extremal construction.
    Construct {
        #[arg(long, value_enum)]
        kind: ConstructKind,
        #[arg(long, value_parser = parse_parts)]
        parts: PartSizes,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Look for one copy of a pattern; exits 10 if found, 0 if not.
    Check {
        #[arg(long)]
        pattern: PatternArg,
        #[arg(long = "in")]
        input: PathBuf,
        /// Colouring of the complete host, used with --rainbow.
        #[arg(long, requires = "rainbow")]
        coloring: Option<PathBuf>,
        /// Only report copies whose edges all have different colours.
        #[arg(long, requires = "coloring")]
        rainbow: bool,
    },
    /// Largest subgraph of the complete 3-partite host avoiding the given patterns.
    ExactTuran {
        #[arg(long, value_parser = parse_parts)]
        parts: PartSizes,
        /// Comma-separated subset of c4multi, c3.
        #[arg(long)]
        forbid: ForbiddenSet,
        /// Largest n1+n2+n3 searched.
        #[arg(long)]
        cap: Option<usize>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Most colours on the complete 3-partite host with no rainbow multipartite 4-cycle.
    AntiRamsey {
        #[arg(long, value_parser = parse_parts)]
        parts: PartSizes,
        /// Largest host edge count searched.
        #[arg(long)]
        edge_cap: Option<usize>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Compare searches with closed forms and run the property suites.
    Verify {
        #[arg(long)]
        max_sum: usize,
        /// Random colourings per host for the rainbow family property.
        #[arg(long, default_value_t = 1000)]
        lemma2_trials: usize,
        /// Random subgraphs per host for the short-cycle probe.
        #[arg(long, default_value_t = 0)]
        probe_samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        threads: usize,
        /// Write the report as JSON.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// List every copy of a pattern in canonical order.
    Enumerate {
        #[arg(long)]
        pattern: PatternArg,
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Args, Debug)]
struct RunArgs {
    /// Worker threads; 0 lets the runtime choose.
    #[arg(long, default_value_t = 0)]
    threads: usize,
    /// Write the certificate as JSON.
    #[arg(long)]
    cert: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ConstructKind {
    TuranC4multi,
    TuranC3c4multi,
    ArColoring,
}

#[derive(Clone, Copy, Debug)]
enum PatternArg {
    One(PatternKind),
    FamilyF,
}

impl std::str::FromStr for PatternArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "family-f" {
            return Ok(PatternArg::FamilyF);
        }
        s.parse().map(PatternArg::One)
    }
}

impl PatternArg {
    fn kinds(self) -> Vec<PatternKind> {
        match self {
            PatternArg::One(k) => vec![k],
            PatternArg::FamilyF => FAMILY_F.to_vec(),
        }
    }
}

fn parse_parts(s: &str) -> Result<PartSizes, String> {
    let sizes = s
        .split(',')
        .map(|f| {
            let f = f.trim();
            f.parse::<usize>().map_err(|_| format!("`{f}` is not a positive integer"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    PartSizes::sorted(&sizes).map_err(|e| match e {
        Error::Unsorted { sorted, .. } => format!(
            "parts must be non-increasing; did you mean {}?",
            sorted.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
        ),
        other => other.to_string(),
    })
}

/// A failed command: exit code and message for stderr.
#[derive(Debug)]
struct Exit {
    code: i32,
    message: String,
}

impl Exit {
    fn usage(message: impl Into<String>) -> Self {
        Exit {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => EXIT_CAP,
            Error::Invariant(_) => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        };
        Exit {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Exit {
    fn from(e: std::io::Error) -> Self {
        Exit {
            code: EXIT_INTERNAL,
            message: format!("cannot write output: {e}"),
        }
    }
}

/// Parses `args` (program name first) and runs the command. `env_cap` is
/// the value of [`CAP_ENV`], if set.
pub fn run_with<I, T>(args: I, env_cap: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli, env_cap, out) {
        Ok(code) => code,
        Err(exit) => {
            let _ = writeln!(err, "error: {}", exit.message);
            exit.code
        }
    }
}

/// [`run_with`] reading [`CAP_ENV`] from the process environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let env_cap = std::env::var(CAP_ENV).ok();
    run_with(args, env_cap.as_deref(), out, err)
}

fn env_default(env_cap: Option<&str>, fallback: usize) -> Result<usize, Exit> {
    match env_cap {
        None => Ok(fallback),
        Some(v) => v
            .trim()
            .parse()
            .map_err(|_| Exit::usage(format!("{CAP_ENV} must be a non-negative integer, got `{v}`"))),
    }
}

fn read_file(path: &Path) -> Result<String, Exit> {
    fs::read_to_string(path).map_err(|e| Exit::usage(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Exit> {
    fs::write(path, text).map_err(|e| Exit {
        code: EXIT_INTERNAL,
        message: format!("cannot write {}: {e}", path.display()),
    })
}

fn read_graph(path: &Path) -> Result<PartitionedGraph, Exit> {
    PartitionedGraph::from_text(&read_file(path)?).map_err(|e| Exit::usage(format!("{}: {e}", path.display())))
}

fn read_coloring(path: &Path) -> Result<EdgeColoring, Exit> {
    EdgeColoring::from_text(&read_file(path)?).map_err(|e| Exit::usage(format!("{}: {e}", path.display())))
}

fn tripartite(parts: &PartSizes) -> Result<(usize, usize, usize), Exit> {
    match *parts.sizes() {
        [a, b, c] => Ok((a, b, c)),
        _ => Err(Error::NotTripartite(parts.count()).into()),
    }
}

fn require_cycle_cap(kind: PatternKind) -> Result<(), Exit> {
    if let PatternKind::MultiCycle(len) = kind {
        if len > DEFAULT_CYCLE_CAP {
            return Err(Error::CapExceeded {
                what: "cycle length",
                cap: DEFAULT_CYCLE_CAP,
                required: len,
            }
            .into());
        }
    }
    Ok(())
}

fn dispatch(cli: Cli, env_cap: Option<&str>, out: &mut dyn Write) -> Result<i32, Exit> {
    let pretty = cli.pretty;
    match cli.command {
        Command::Construct { kind, parts, out: path } => {
            let (a, b, c) = tripartite(&parts)?;
            let text = match kind {
                ConstructKind::TuranC4multi => build_turan_c4multi(a, b, c)?.to_text(),
                ConstructKind::TuranC3c4multi => build_turan_c3_c4multi(a, b, c)?.to_text(),
                ConstructKind::ArColoring => build_ar_lower_coloring(a, b, c)?.to_text(),
            };
            match path {
                Some(p) => write_file(&p, &text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
        Command::Check {
            pattern,
            input,
            coloring,
            rainbow,
        } => {
            let g = read_graph(&input)?;
            let coloring = coloring.map(|p| read_coloring(&p)).transpose()?;
            let kinds = pattern.kinds();
            if matches!(pattern, PatternArg::FamilyF) && g.part_count() != 3 {
                return Err(Error::NotTripartite(g.part_count()).into());
            }
            let mut found = None;
            for &kind in &kinds {
                require_cycle_cap(kind)?;
                let copy = match (&coloring, rainbow) {
                    (Some(c), true) => find_rainbow_copy(&g, c, kind)?,
                    _ => contains_pattern(&g, kind),
                };
                if copy.is_some() {
                    found = copy;
                    break;
                }
            }
            match found {
                Some(copy) => {
                    if pretty {
                        writeln!(out, "found {} ({} edges)", copy.to_text(g.parts()), copy.edges.len())?;
                    } else {
                        writeln!(out, "{}", copy.to_text(g.parts()))?;
                    }
                    Ok(EXIT_FOUND)
                }
                None => {
                    writeln!(out, "none")?;
                    Ok(EXIT_OK)
                }
            }
        }
        Command::ExactTuran {
            parts,
            forbid,
            cap,
            run,
        } => {
            let config = SearchConfig {
                threads: run.threads,
                vertex_cap: cap.map_or_else(|| env_default(env_cap, DEFAULT_VERTEX_CAP), Ok)?,
                ..SearchConfig::default()
            };
            let cert = exact_turan_with(&parts, forbid, &config)?;
            emit_certificate(&cert, run.cert.as_deref(), pretty, out)
        }
        Command::AntiRamsey { parts, edge_cap, run } => {
            let config = SearchConfig {
                threads: run.threads,
                edge_cap: edge_cap.map_or_else(|| env_default(env_cap, DEFAULT_EDGE_CAP), Ok)?,
                ..SearchConfig::default()
            };
            let cert = exact_anti_ramsey_with(&parts, &config)?;
            emit_certificate(&cert, run.cert.as_deref(), pretty, out)
        }
        Command::Verify {
            max_sum,
            lemma2_trials,
            probe_samples,
            seed,
            threads,
            report: path,
        } => {
            let config = SearchConfig {
                threads,
                vertex_cap: env_default(env_cap, DEFAULT_VERTEX_CAP)?,
                edge_cap: env_default(env_cap, DEFAULT_EDGE_CAP)?,
                ..SearchConfig::default()
            };
            let report = full_verification(max_sum, lemma2_trials, probe_samples, seed, &config)?;
            if let Some(p) = path {
                write_file(&p, &report.to_json())?;
            }
            if pretty {
                out.write_all(report.to_table().as_bytes())?;
            } else {
                for e in report.entries() {
                    writeln!(
                        out,
                        "{}\t{}\t{}\t{}\t{}",
                        e.status.as_str(),
                        e.claim,
                        e.instance,
                        e.expected,
                        e.computed.replace('\n', " | ")
                    )?;
                }
                let s = report.summary();
                writeln!(out, "summary pass={} fail={} skipped={} info={}", s.pass, s.fail, s.skipped, s.info)?;
            }
            Ok(if report.failed() { EXIT_VERIFY_FAILED } else { EXIT_OK })
        }
        Command::Enumerate { pattern, input } => {
            let g = read_graph(&input)?;
            let mut count = 0;
            for kind in pattern.kinds() {
                let copies = match kind {
                    PatternKind::MultiCycle(len) => enumerate_multicycles(&g, len)?,
                    _ => enumerate_copies(&g, kind),
                };
                for copy in copies {
                    writeln!(out, "{}", copy.to_text(g.parts()))?;
                    count += 1;
                }
            }
            if pretty {
                writeln!(out, "{count} copies")?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn emit_certificate(
    cert: &SearchCertificate,
    path: Option<&Path>,
    pretty: bool,
    out: &mut dyn Write,
) -> Result<i32, Exit> {
    if let Some(p) = path {
        write_file(p, &cert.to_json())?;
    }
    writeln!(out, "value {}", cert.value)?;
    if pretty {
        writeln!(
            out,
            "# {} nodes, {:.3} s",
            cert.nodes_explored,
            cert.elapsed.as_secs_f64()
        )?;
    }
    out.write_all(cert.witness.to_text().as_bytes())?;
    Ok(EXIT_OK)
}

fn full_verification(
    max_sum: usize,
    lemma2_trials: usize,
    probe_samples: usize,
    seed: u64,
    config: &SearchConfig,
) -> Result<VerificationReport, Exit> {
    let mut report = verify_theorems(max_sum, config)?;
    for sizes in [[2, 2, 2], [3, 2, 1]] {
        let parts = PartSizes::new(&sizes)?;
        for x in 0..3 {
            for variant in [multex::search::Lemma1Variant::C4Free, multex::search::Lemma1Variant::C3C4Free] {
                report.absorb(lemma1_exhaustive(&parts, x, variant)?);
            }
        }
    }
    if lemma2_trials > 0 {
        for (sizes, colors) in [([2, 2, 2], 12), ([3, 3, 3], 27)] {
            report.absorb(lemma2_property(&PartSizes::new(&sizes)?, lemma2_trials, colors, seed)?);
        }
    }
    for sizes in [[2, 2, 2], [3, 2, 2]] {
        report.absorb(conjecture1_probe(&PartSizes::new(&sizes)?, probe_samples, seed)?);
    }
    Ok(report)
}
