//! Argument parsing and command dispatch for the `alphaspec` binary.

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use alphaspec_core::bounds::{all_bounds, BoundContext};
use alphaspec_core::enumerate::{enumerate, EnumerationQuery, GraphClass};
use alphaspec_core::generators::Family;
use alphaspec_core::numfmt::fmt as num;
use alphaspec_core::spectral::{alpha_spectral_radius, indices, spectrum};
use alphaspec_core::verify::{run_resumable, Checkpoint, Status};
use alphaspec_core::{graph6, Alpha, BoundEvaluation, Graph, IndexValues, TheoremId, TheoremReport, VerifyConfig};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

/// Exit code for a verify run that found violations.
pub const EXIT_VIOLATIONS: u8 = 1;
/// Exit code for bad flags or unusable input.
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "alphaspec", version, about = "A_α spectra, bounds and exhaustive checks for small graphs")]
pub struct Cli {
    /// Worker threads [default: all cores].
    #[arg(long, global = true, env = "ALPHASPEC_WORKERS")]
    pub workers: Option<usize>,

    /// Write the primary output here instead of stdout.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalues, ρ_α, least eigenvalue and Perron vector.
    Spectrum {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 0.0)]
        alpha: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Every closed-form bound, evaluated against the computed spectrum.
    Bounds {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 0.0)]
        alpha: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Shorthand for `--format csv`.
        #[arg(long)]
        csv: bool,
    },
    /// α-energy, α-Estrada index and Zagreb index with their bounds.
    Indices {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 0.0)]
        alpha: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Non-isomorphic graphs of one class and order.
    Enumerate {
        /// trees, unicyclic, connected, connected-nonbipartite or all.
        #[arg(long)]
        class: GraphClass,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
    },
    /// Exhaustive check of a theorem over a range of orders.
    Verify {
        /// Theorem id such as 3.4, 4.1, rewiring or indices.
        #[arg(long)]
        theorem: TheoremId,
        /// Order or inclusive range: `8`, `5..10` or `5..=10`.
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        /// `default` or a comma-separated list.
        #[arg(long, default_value = "default", value_parser = parse_alphas)]
        alphas: AlphaList,
        /// Write the JSON report here (`-` for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
        /// Resume from and save progress to this file.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Seed for random corpora.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Largest p + q for the pendant-path theorems.
        #[arg(long, default_value_t = 6)]
        max_path_total: usize,
    },
    /// ρ_α over a grid of α, as CSV.
    ScanAlpha {
        #[command(flatten)]
        source: Source,
        /// Grid points are k/steps for k = 0..=steps.
        #[arg(long, default_value_t = 100, conflicts_with = "alphas")]
        steps: usize,
        /// Explicit comma-separated α values instead of a uniform grid.
        #[arg(long, value_parser = parse_alphas)]
        alphas: Option<AlphaList>,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// A graph6 string.
    #[arg(long)]
    graph: Option<String>,
    /// A file of graph6 lines; one result per graph.
    #[arg(long)]
    file: Option<PathBuf>,
    /// A family member such as `Tnd:10,4`, `Snpe:6` or `Cn:10`.
    #[arg(long, value_parser = parse_family)]
    family: Option<Family>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Graph6,
    Json,
}

#[derive(Clone, Debug)]
pub struct AlphaList(pub Vec<Alpha>);

fn parse_alphas(s: &str) -> Result<AlphaList, String> {
    if s == "default" {
        return Ok(AlphaList(Alpha::default_grid()));
    }
    s.split(',')
        .map(|p| {
            let v: f64 = p.trim().parse().map_err(|_| format!("bad alpha {p:?}"))?;
            Alpha::new(v).map_err(|e| e.to_string())
        })
        .collect::<Result<Vec<_>, _>>()
        .map(AlphaList)
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |p: &str| p.trim().parse::<usize>().map_err(|_| format!("bad order {p:?}"));
    let range = if let Some((a, b)) = s.split_once("..=") {
        num(a)?..=num(b)?
    } else if let Some((a, b)) = s.split_once("..") {
        num(a)?..=num(b)?
    } else {
        let n = num(s)?;
        n..=n
    };
    if range.is_empty() || *range.start() == 0 {
        return Err(format!("empty or zero-based order range {s:?}"));
    }
    Ok(range)
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: alphaspec_core::Error| e.to_string())
}

/// Failure with the exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<alphaspec_core::Error> for CliError {
    fn from(e: alphaspec_core::Error) -> Self {
        CliError::usage(e.to_string())
    }
}

fn io_error(path: &Path, e: io::Error) -> CliError {
    CliError::usage(format!("{}: {e}", path.display()))
}

impl Source {
    fn graphs(&self) -> Result<Vec<Graph>, CliError> {
        if let Some(g) = &self.graph {
            return Ok(vec![graph6::decode(g.trim())?]);
        }
        if let Some(f) = &self.family {
            return Ok(vec![f.build()?]);
        }
        let path = self.file.as_ref().expect("clap requires one source");
        let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
        let graphs = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(graph6::decode)
            .collect::<Result<Vec<_>, _>>()?;
        if graphs.is_empty() {
            return Err(CliError::usage(format!("{}: no graphs", path.display())));
        }
        Ok(graphs)
    }

    fn is_file(&self) -> bool {
        self.file.is_some()
    }
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// One graph prints as a pretty JSON document, several as JSON Lines.
fn json_out<T: Serialize>(items: &[T]) -> String {
    match items {
        [one] => pretty(one),
        many => many.iter().map(json_line).collect(),
    }
}

/// Kebab-case tag of a unit enum, as serde writes it.
fn tag<T: Serialize>(value: &T) -> String {
    match serde_json::to_value(value).expect("serializable") {
        serde_json::Value::String(s) => s,
        other => other.to_string(),
    }
}

fn opt_num(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

fn list(xs: &[f64]) -> String {
    xs.iter().map(|&x| num(x)).collect::<Vec<_>>().join(" ")
}

fn alpha(v: f64) -> Result<Alpha, CliError> {
    Ok(Alpha::new(v)?)
}

#[derive(Serialize)]
struct IndicesOutput {
    alpha: Alpha,
    #[serde(flatten)]
    values: IndexValues,
    bounds: Vec<BoundEvaluation>,
}

fn spectrum_cmd(source: &Source, a: f64, format: Format) -> Result<String, CliError> {
    let alpha = alpha(a)?;
    let graphs = source.graphs()?;
    let summaries = graphs.iter().map(|g| spectrum(g, alpha)).collect::<Result<Vec<_>, _>>()?;
    if format == Format::Json {
        return Ok(json_out(&summaries));
    }
    let mut out = String::new();
    if format == Format::Csv {
        out.push_str("graph6,alpha,rho,least,eigenvalues\n");
    }
    for (g, s) in graphs.iter().zip(&summaries) {
        let code = graph6::encode(g);
        if format == Format::Csv {
            out.push_str(&format!("{code},{alpha},{},{},{}\n", num(s.rho), num(s.least), list(&s.eigenvalues)));
            continue;
        }
        out.push_str(&format!("graph6 {code}\nalpha {alpha}\nrho {}\nleast {}\n", num(s.rho), num(s.least)));
        out.push_str(&format!("eigenvalues {}\n", list(&s.eigenvalues)));
        if let Some(p) = &s.perron {
            out.push_str(&format!("perron {}\n", list(p)));
        }
    }
    Ok(out)
}

fn bound_row(code: &str, e: &BoundEvaluation) -> String {
    format!(
        "{code},{},{},{},{},{},{},{},{},{},{}\n",
        tag(&e.bound_id),
        e.parameter.map(|p| p.to_string()).unwrap_or_default(),
        tag(&e.direction),
        e.strict,
        tag(&e.target),
        num(e.target_value),
        e.applicable,
        opt_num(e.value),
        opt_num(e.slack),
        e.attains_equality,
    )
}

const BOUND_HEADER: &str = "graph6,bound,parameter,direction,strict,target,target_value,applicable,value,slack,equality\n";

fn bounds_cmd(source: &Source, a: f64, format: Format) -> Result<String, CliError> {
    let alpha = alpha(a)?;
    let graphs = source.graphs()?;
    let evaluations = graphs.iter().map(|g| all_bounds(g, alpha)).collect::<Result<Vec<_>, _>>()?;
    if format == Format::Json {
        return Ok(json_out(&evaluations));
    }
    let mut out = String::from(BOUND_HEADER);
    for (g, evals) in graphs.iter().zip(&evaluations) {
        let code = graph6::encode(g);
        for e in evals {
            out.push_str(&bound_row(&code, e));
        }
    }
    Ok(out)
}

fn indices_cmd(source: &Source, a: f64, format: Format) -> Result<String, CliError> {
    let alpha = alpha(a)?;
    let graphs = source.graphs()?;
    let mut outputs = Vec::with_capacity(graphs.len());
    for g in &graphs {
        let ctx = BoundContext::new(g, alpha)?;
        let mut bounds = ctx.energy().to_vec();
        bounds.push(ctx.estrada());
        outputs.push(IndicesOutput {
            alpha,
            values: indices(g, alpha)?,
            bounds,
        });
    }
    match format {
        Format::Json => Ok(json_out(&outputs)),
        Format::Csv => {
            let mut out = String::from("graph6,alpha,energy,estrada,zagreb\n");
            for (g, o) in graphs.iter().zip(&outputs) {
                let v = &o.values;
                out.push_str(&format!(
                    "{},{alpha},{},{},{}\n",
                    graph6::encode(g),
                    num(v.energy),
                    num(v.estrada),
                    v.zagreb
                ));
            }
            Ok(out)
        }
        Format::Text => {
            let mut out = String::new();
            for (g, o) in graphs.iter().zip(&outputs) {
                let v = &o.values;
                out.push_str(&format!(
                    "graph6 {}\nalpha {alpha}\nenergy {}\nestrada {}\nzagreb {}\n",
                    graph6::encode(g),
                    num(v.energy),
                    num(v.estrada),
                    v.zagreb
                ));
                for e in &o.bounds {
                    let shown = e.value.map(num).unwrap_or_else(|| "n/a".into());
                    out.push_str(&format!("{} {shown}\n", tag(&e.bound_id)));
                }
            }
            Ok(out)
        }
    }
}

fn enumerate_cmd(class: GraphClass, n: usize, format: GraphFormat) -> Result<String, CliError> {
    let mut out = String::new();
    for g in enumerate(&EnumerationQuery::new(class, n))? {
        match format {
            GraphFormat::Graph6 => {
                out.push_str(&graph6::encode(&g));
                out.push('\n');
            }
            GraphFormat::Json => out.push_str(&json_line(&g)),
        }
    }
    Ok(out)
}

fn scan_cmd(source: &Source, steps: usize, alphas: Option<&AlphaList>) -> Result<String, CliError> {
    let grid = match alphas {
        Some(list) => list.0.clone(),
        None => {
            if steps == 0 {
                return Err(CliError::usage("--steps must be at least 1"));
            }
            (0..=steps).map(|k| Alpha::new(k as f64 / steps as f64)).collect::<Result<_, _>>()?
        }
    };
    let graphs = source.graphs()?;
    let with_code = source.is_file();
    let mut out = String::from(if with_code { "graph6,alpha,rho\n" } else { "alpha,rho\n" });
    for g in &graphs {
        let code = graph6::encode(g);
        for &a in &grid {
            let rho = alpha_spectral_radius(g, a)?;
            if with_code {
                out.push_str(&format!("{code},{a},{}\n", num(rho)));
            } else {
                out.push_str(&format!("{a},{}\n", num(rho)));
            }
        }
    }
    Ok(out)
}

fn write_atomic(path: &Path, contents: &str) -> io::Result<()> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path)
}

fn load_checkpoint(path: &Path, theorem: TheoremId, config: &VerifyConfig) -> Result<Option<Checkpoint>, CliError> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(io_error(path, e)),
    };
    let checkpoint: Checkpoint = serde_json::from_str(&text)
        .map_err(|e| CliError::usage(format!("{}: not a checkpoint: {e}", path.display())))?;
    if !checkpoint.matches(theorem, config) {
        return Err(CliError::usage(format!(
            "{}: checkpoint was written for a different theorem or configuration",
            path.display()
        )));
    }
    Ok(Some(checkpoint))
}

/// Human-readable digest of a report.
pub fn summary(report: &TheoremReport) -> String {
    let status = match report.status {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Vacuous => "VACUOUS",
    };
    let mut out = format!("theorem {}: {status}\n", report.theorem_id);
    if let Some([lo, hi]) = report.n_range {
        out.push_str(&format!("orders {lo}..={hi}\n"));
    }
    out.push_str(&format!("alphas {}\n", list(&report.alphas)));
    out.push_str(&format!(
        "checked {}, skipped {}, violations {}, extremal witnesses {}, equality witnesses {}\n",
        report.instances_checked,
        report.skipped,
        report.violations.len(),
        report.extremal_witnesses.len(),
        report.equality_witnesses.len()
    ));
    for v in report.violations.iter().take(10) {
        let at = v.alpha.map(|a| format!(" alpha {}", num(a))).unwrap_or_default();
        out.push_str(&format!("  violation {} n={}{at} {}: {}\n", v.claim, v.n, v.graph6, v.details));
    }
    if report.violations.len() > 10 {
        out.push_str(&format!("  ... {} more\n", report.violations.len() - 10));
    }
    for note in &report.notes {
        out.push_str(&format!("note: {note}\n"));
    }
    out
}

/// Standard output, the `-o` target and the exit code of one invocation.
pub struct Outcome {
    pub primary: String,
    /// Written to stderr.
    pub secondary: String,
    pub code: u8,
}

impl Outcome {
    fn ok(primary: String) -> Self {
        Outcome {
            primary,
            secondary: String::new(),
            code: 0,
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn verify_cmd(
    theorem: TheoremId,
    range: RangeInclusive<usize>,
    alphas: &AlphaList,
    json: Option<&Path>,
    checkpoint: Option<&Path>,
    seed: u64,
    max_path_total: usize,
) -> Result<Outcome, CliError> {
    let config = VerifyConfig {
        seed,
        max_path_total,
        ..VerifyConfig::with_alphas(alphas.0.clone())
    };
    let resume = match checkpoint {
        Some(p) => load_checkpoint(p, theorem, &config)?,
        None => None,
    };
    let mut save_error = None;
    let report = run_resumable(theorem, range, &config, resume, |c| {
        if let Some(p) = checkpoint {
            if let Err(e) = write_atomic(p, &pretty(c)) {
                save_error.get_or_insert(io_error(p, e));
            }
        }
        Ok(())
    })?;
    if let Some(e) = save_error {
        return Err(e);
    }
    let code = if report.passed() { 0 } else { EXIT_VIOLATIONS };
    let json_text = format!("{}\n", report.to_json());
    let mut outcome = Outcome {
        primary: summary(&report),
        secondary: String::new(),
        code,
    };
    match json {
        Some(p) if p == Path::new("-") => {
            outcome.secondary = std::mem::replace(&mut outcome.primary, json_text);
        }
        Some(p) => write_atomic(p, &json_text).map_err(|e| io_error(p, e))?,
        None => {}
    }
    Ok(outcome)
}

/// Runs a parsed command line and returns what to print.
pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    if let Some(workers) = cli.workers {
        if workers == 0 {
            return Err(CliError::usage("--workers must be at least 1"));
        }
        let _ = rayon::ThreadPoolBuilder::new().num_threads(workers).build_global();
    }
    match &cli.command {
        Command::Spectrum { source, alpha, format } => spectrum_cmd(source, *alpha, *format).map(Outcome::ok),
        Command::Bounds { source, alpha, format, csv } => {
            let format = if *csv { Format::Csv } else { *format };
            bounds_cmd(source, *alpha, format).map(Outcome::ok)
        }
        Command::Indices { source, alpha, format } => indices_cmd(source, *alpha, *format).map(Outcome::ok),
        Command::Enumerate { class, n, format } => enumerate_cmd(*class, *n, *format).map(Outcome::ok),
        Command::Verify {
            theorem,
            n,
            alphas,
            json,
            checkpoint,
            seed,
            max_path_total,
        } => verify_cmd(
            *theorem,
            n.clone(),
            alphas,
            json.as_deref(),
            checkpoint.as_deref(),
            *seed,
            *max_path_total,
        ),
        Command::ScanAlpha { source, steps, alphas } => scan_cmd(source, *steps, alphas.as_ref()).map(Outcome::ok),
    }
}

/// Parses `args`, runs the command and writes its output; returns the exit
/// code.
pub fn main_with_args<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return e.code;
        }
    };
    let written = match &cli.output {
        Some(path) => fs::write(path, &outcome.primary).map_err(|e| io_error(path, e)),
        None => io::stdout()
            .lock()
            .write_all(outcome.primary.as_bytes())
            .map_err(|e| CliError::usage(e.to_string())),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return e.code;
    }
    if !outcome.secondary.is_empty() {
        eprint!("{}", outcome.secondary);
    }
    outcome.code
}
