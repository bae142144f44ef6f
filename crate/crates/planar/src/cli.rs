//! Command-line front end. [`run`] parses arguments, dispatches, and returns
//! the process exit code: 0 on success, 1 when an assertion fails, 2 on usage,
//! input or config errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use planar_core::geometry::{detect_families, incidence_report};
use planar_core::rational::parse_rational;
use planar_core::sets::{generate, multiplicity, Construction, ConstructionKind};
use planar_core::{NumberSet, Rational};

use crate::io::{parse_lines, parse_points, read_set, read_text, render_set, write_text};
use crate::report::{set_stats, IncidenceView};
use crate::sweep::{load_config, run_sweep};
use crate::verify::{self, Assertion, Suite, SuiteReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ASSERTION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "planar", version, about = "Sum-product and incidence experiments over dual and double numbers")]
pub struct Cli {
    /// Repeat for more detail on stderr.
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    pub verbose: u8,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a constructed set to a file.
    Gen(GenArgs),
    /// Sumset, product set, multiplicity and energy of a set file.
    Stats(StatsArgs),
    /// Count incidences between a point file and a line file.
    Incidence(IncidenceArgs),
    /// Run a randomized check suite.
    Verify(VerifyArgs),
    /// Run an exponent sweep described by a TOML or JSON config.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// unit-real-dual, dual-grid, double-null-pair or double-diagonal-grid.
    pub kind: String,
    #[arg(long)]
    pub n: u64,
    /// Exact rational in [0, 1]; grid kinds only.
    #[arg(long)]
    pub alpha: Option<String>,
    #[arg(long, default_value = "A.txt")]
    pub out: PathBuf,
    /// Second output for pair constructions.
    #[arg(long, default_value = "B.txt")]
    pub out_b: PathBuf,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    pub file: PathBuf,
    /// Also report |A+B| and |AB| against this set.
    #[arg(long = "with")]
    pub with: Option<PathBuf>,
    /// Largest |A| for the quadruple energy count.
    #[arg(long, default_value_t = 64)]
    pub energy_cutoff: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct IncidenceArgs {
    #[arg(long)]
    pub points: PathBuf,
    #[arg(long)]
    pub lines: PathBuf,
    /// Also list the line families.
    #[arg(long)]
    pub families: bool,
    #[arg(long, default_value_t = 2)]
    pub min_size: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    /// Set size for the elekes and solymosi suites.
    #[arg(long)]
    pub n: Option<u64>,
    /// Run solymosi on a construction instead of random sets.
    #[arg(long)]
    pub construction: Option<String>,
    #[arg(long)]
    pub alpha: Option<String>,
    /// Add the exhaustive classification grid to the lemma suite.
    #[arg(long)]
    pub exhaustive: bool,
    /// Write the JSON report here.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Print the JSON report instead of one line per assertion.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    pub config: PathBuf,
    /// Directory for the CSV and JSON outputs when the config names none.
    #[arg(long, default_value = ".")]
    pub out_dir: PathBuf,
}

enum Outcome {
    Done,
    Failed,
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Gen(a) => cmd_gen(a, out),
        Command::Stats(a) => cmd_stats(a, out),
        Command::Incidence(a) => cmd_incidence(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Sweep(a) => cmd_sweep(a, out),
    };
    match result {
        Ok(Outcome::Done) => EXIT_OK,
        Ok(Outcome::Failed) => EXIT_ASSERTION,
        Err(e) => {
            let _ = if cli.verbose > 0 { writeln!(err, "error: {e:?}") } else { writeln!(err, "error: {e:#}") };
            EXIT_USAGE
        }
    }
}

fn parse_alpha(alpha: Option<&str>) -> anyhow::Result<Option<Rational>> {
    alpha.map(|a| parse_rational(a).with_context(|| format!("bad alpha {a:?}"))).transpose()
}

fn describe_set(set: &NumberSet) -> String {
    let profile = multiplicity(set);
    let alpha = profile.alpha.as_deref().map(|a| a.get(..8).unwrap_or(a)).unwrap_or("undefined");
    format!("n = {}, k = {}, alpha = {alpha}", set.len(), profile.max_multiplicity)
}

fn cmd_gen(args: &GenArgs, out: &mut dyn Write) -> anyhow::Result<Outcome> {
    let kind: ConstructionKind = args.kind.parse()?;
    let alpha = parse_alpha(args.alpha.as_deref())?;
    let header = match &alpha {
        Some(a) => format!("{kind} n = {} alpha = {a}", args.n),
        None => format!("{kind} n = {}", args.n),
    };
    match generate(kind, args.n, alpha.as_ref())? {
        Construction::Single(a) => {
            write_text(&args.out, &render_set(&a, &header))?;
            writeln!(out, "{}: {}", args.out.display(), describe_set(&a))?;
        }
        Construction::Pair(a, b) => {
            write_text(&args.out, &render_set(&a, &format!("{header} (A)")))?;
            write_text(&args.out_b, &render_set(&b, &format!("{header} (B)")))?;
            writeln!(out, "{}: {}", args.out.display(), describe_set(&a))?;
            writeln!(out, "{}: {}", args.out_b.display(), describe_set(&b))?;
        }
    }
    Ok(Outcome::Done)
}

fn load_set(path: &Path) -> anyhow::Result<NumberSet> {
    read_set(path).with_context(|| path.display().to_string())
}

fn cmd_stats(args: &StatsArgs, out: &mut dyn Write) -> anyhow::Result<Outcome> {
    let a = load_set(&args.file)?;
    let b = args.with.as_deref().map(load_set).transpose()?;
    let stats = set_stats(&a, args.energy_cutoff, b.as_ref())?;
    if args.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&stats)?)?;
        return Ok(Outcome::Done);
    }
    writeln!(out, "system: {}", stats.system)?;
    writeln!(out, "|A| = {}", stats.n)?;
    writeln!(out, "|A+A| = {}", stats.sumset)?;
    writeln!(out, "|AA| = {}", stats.productset)?;
    writeln!(out, "k = {}", stats.multiplicity)?;
    writeln!(out, "alpha = {}", stats.alpha.as_deref().unwrap_or("undefined"))?;
    let mut outcome = Outcome::Done;
    match &stats.energy {
        Some(e) => {
            if e.pruned > 0 {
                writeln!(out, "energy over {} invertible elements ({} dropped)", stats.n - e.pruned, e.pruned)?;
            }
            writeln!(out, "E = {}", e.energy)?;
            match e.energy_by_quadruples {
                Some(q) => writeln!(out, "E by quadruples = {q}")?,
                None => writeln!(out, "E by quadruples: skipped above {}", args.energy_cutoff)?,
            }
            let ok = e.r_div_total == e.n_squared;
            writeln!(out, "sum r_div = {} (n^2 = {}) {}", e.r_div_total, e.n_squared, if ok { "ok" } else { "MISMATCH" })?;
            if !ok || e.energy_by_quadruples.is_some_and(|q| q != e.energy) {
                outcome = Outcome::Failed;
            }
        }
        None => writeln!(out, "E: no invertible elements")?,
    }
    if let Some(c) = &stats.cross {
        writeln!(out, "|B| = {}", c.other_size)?;
        writeln!(out, "|A+B| = {}", c.sum)?;
        writeln!(out, "|AB| = {}", c.product)?;
    }
    Ok(outcome)
}

fn cmd_incidence(args: &IncidenceArgs, out: &mut dyn Write) -> anyhow::Result<Outcome> {
    let points = parse_points(&read_text(&args.points)?).with_context(|| args.points.display().to_string())?;
    let lines = parse_lines(&read_text(&args.lines)?).with_context(|| args.lines.display().to_string())?;
    if let (Some(p), Some(l)) = (points.first(), lines.first()) {
        if p.system() != l.system() {
            bail!("points are {} but lines are {}", p.system(), l.system());
        }
    }
    let report = incidence_report(&points, &lines);
    let families = args.families.then(|| detect_families(&lines, args.min_size));
    let view = IncidenceView::new(&report, families.as_deref());
    if args.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&view)?)?;
        return Ok(Outcome::Done);
    }
    writeln!(out, "points = {}", view.points)?;
    writeln!(out, "lines = {}", view.lines)?;
    writeln!(out, "incidences = {}", view.incidences)?;
    if view.degenerate_lines > 0 {
        writeln!(out, "degenerate lines = {} ({} incidences)", view.degenerate_lines, view.degenerate_incidences)?;
    }
    if view.duplicate_points_merged + view.duplicate_lines_merged > 0 {
        writeln!(out, "merged duplicates: {} points, {} lines", view.duplicate_points_merged, view.duplicate_lines_merged)?;
    }
    if let Some(fs) = &view.families {
        writeln!(out, "families = {}", fs.len())?;
        for f in fs {
            let sign = f.sign.map(|s| format!(" {s}")).unwrap_or_default();
            writeln!(out, "  size {}{sign}: lines {:?}, {}", f.size, f.members, f.structure)?;
        }
    }
    Ok(Outcome::Done)
}

fn suite_assertions(args: &VerifyArgs, suite: Suite) -> anyhow::Result<Vec<Assertion>> {
    Ok(match suite {
        Suite::Lemmas => verify::lemmas(args.trials, args.seed, args.exhaustive),
        Suite::Elekes => {
            let n = args.n.unwrap_or(5) as usize;
            verify::elekes(n, args.trials.min(100), args.seed, true)?
        }
        Suite::Solymosi => match &args.construction {
            Some(name) => {
                let kind: ConstructionKind = name.parse()?;
                let alpha = parse_alpha(args.alpha.as_deref())?;
                let n = args.n.context("--construction needs --n")?;
                let sets = match generate(kind, n, alpha.as_ref())? {
                    Construction::Single(a) => vec![a],
                    Construction::Pair(a, b) => vec![a, b],
                };
                verify::solymosi_on(&sets, &format!("{kind} n = {n}"))?
            }
            None => verify::solymosi_random(args.n.unwrap_or(12) as usize, args.trials.min(50), args.seed)?,
        },
        Suite::All => {
            let mut all = Vec::new();
            for s in [Suite::Lemmas, Suite::Elekes, Suite::Solymosi] {
                all.extend(suite_assertions(args, s)?);
            }
            all
        }
    })
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> anyhow::Result<Outcome> {
    if args.construction.is_some() && args.suite != Suite::Solymosi {
        bail!("--construction applies to the solymosi suite only");
    }
    let report = SuiteReport::new(args.suite, args.seed, suite_assertions(args, args.suite)?);
    let json = serde_json::to_string_pretty(&report)? + "\n";
    if let Some(path) = &args.report {
        write_text(path, &json)?;
    }
    if args.json {
        out.write_all(json.as_bytes())?;
    } else {
        for a in &report.assertions {
            writeln!(out, "{a}")?;
        }
        let passed = report.assertions.iter().filter(|a| a.ok()).count();
        writeln!(out, "{passed}/{} assertions passed", report.assertions.len())?;
    }
    Ok(if report.passed { Outcome::Done } else { Outcome::Failed })
}

fn cmd_sweep(args: &SweepArgs, out: &mut dyn Write) -> anyhow::Result<Outcome> {
    let config = load_config(&args.config)?;
    let result = run_sweep(&config)?;
    let stem = args.config.file_stem().and_then(|s| s.to_str()).unwrap_or("sweep");
    let resolve = |p: &Option<PathBuf>, ext: &str| match p {
        Some(p) if p.is_absolute() => p.clone(),
        Some(p) => args.out_dir.join(p),
        None => args.out_dir.join(format!("{stem}.{ext}")),
    };
    let (csv_path, json_path) = (resolve(&config.csv, "csv"), resolve(&config.json, "json"));
    write_text(&csv_path, &result.csv)?;
    write_text(&json_path, &result.json)?;
    out.write_all(result.csv.as_bytes())?;
    writeln!(out, "slope = {:.4}", result.summary.slope)?;
    for a in &result.summary.assertions {
        writeln!(out, "{a}")?;
    }
    writeln!(out, "wrote {} and {}", csv_path.display(), json_path.display())?;
    Ok(if result.summary.passed { Outcome::Done } else { Outcome::Failed })
}
