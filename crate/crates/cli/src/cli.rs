use std::ffi::OsString;
use std::io::Write;
use std::net::{IpAddr, SocketAddr};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use roi_forge_core::diagnostics::has_errors;
use roi_forge_core::report::{export_tables, report_json, sweep_csv, sweep_json, sweep_markdown, Format};
use roi_forge_core::sweep::range;
use roi_forge_core::{sweep, Decimal, Diagnostic, Execution};

use crate::{evaluate_loaded, load_baseline, load_file, LoadError, Loaded};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "roi-forge", version, about = "Simple ROI appraisal of an information-system investment")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a scenario and print its diagnostics.
    Validate(Source),
    /// Evaluate a scenario and write the report.
    Appraise(AppraiseArgs),
    /// Write the seven result tables.
    Tables(TablesArgs),
    /// Re-evaluate over a range of values for one parameter.
    Sweep(SweepArgs),
    /// Serve the HTTP API.
    Serve(ServeArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Scenario JSON file.
    #[arg(long, value_name = "PATH")]
    pub scenario: Option<PathBuf>,
    /// Use the bundled baseline (or the file in ROI_FORGE_BASELINE).
    #[arg(long)]
    pub baseline: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Md,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Format {
        match f {
            OutputFormat::Json => Format::Json,
            OutputFormat::Csv => Format::Csv,
            OutputFormat::Md => Format::Markdown,
        }
    }
}

#[derive(Debug, Args)]
pub struct AppraiseArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long, value_enum, default_value = "json")]
    pub format: OutputFormat,
    /// Directory to write into instead of standard output.
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,
    /// Full-precision cells in CSV and Markdown tables.
    #[arg(long)]
    pub exact: bool,
}

#[derive(Debug, Args)]
pub struct TablesArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: OutputFormat,
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub exact: bool,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub source: Source,
    /// Dotted path of a numeric scenario field, e.g. `enrollment.growth`.
    #[arg(long, value_name = "PATH")]
    pub param: String,
    /// Comma-separated values.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["from", "to", "step"], required_unless_present = "from")]
    pub values: Vec<String>,
    #[arg(long, requires_all = ["to", "step"])]
    pub from: Option<String>,
    #[arg(long)]
    pub to: Option<String>,
    #[arg(long)]
    pub step: Option<String>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: OutputFormat,
    /// Evaluate points one after another.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Args)]
pub struct ServeArgs {
    #[arg(long, default_value_t = 8080)]
    pub port: u16,
    #[arg(long, default_value = "127.0.0.1")]
    pub bind: IpAddr,
    /// Directory of static UI assets to serve at `/`.
    #[arg(long, value_name = "DIR")]
    pub ui: Option<PathBuf>,
}

fn print_diagnostics(diags: &[Diagnostic]) {
    let mut err = std::io::stderr().lock();
    for d in diags {
        let _ = writeln!(err, "{d}");
    }
}

fn load(source: &Source) -> Result<Loaded, i32> {
    let result = match &source.scenario {
        Some(path) => load_file(path),
        None => load_baseline(),
    };
    result.map_err(|e| {
        match &e {
            LoadError::Io(msg) => eprintln!("error: {msg}"),
            LoadError::Invalid(diags) => print_diagnostics(diags),
        }
        e.exit_code()
    })
}

fn write_out(dir: &Path, files: &[(String, String)]) -> i32 {
    if let Err(e) = std::fs::create_dir_all(dir) {
        eprintln!("error: cannot create {}: {e}", dir.display());
        return EXIT_IO;
    }
    for (name, body) in files {
        let path = dir.join(name);
        if let Err(e) = std::fs::write(&path, body) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return EXIT_IO;
        }
    }
    EXIT_OK
}

fn emit(files: &[(String, String)], out: Option<&Path>) -> i32 {
    if let Some(dir) = out {
        return write_out(dir, files);
    }
    let mut stdout = std::io::stdout().lock();
    let single = files.len() == 1;
    for (name, body) in files {
        let result = if single { stdout.write_all(body.as_bytes()) } else { write!(stdout, "==> {name} <==\n{body}\n") };
        if result.is_err() {
            return EXIT_IO;
        }
    }
    EXIT_OK
}

fn validate(source: &Source) -> i32 {
    let loaded = match load(source) {
        Ok(l) => l,
        Err(code) => return code,
    };
    let mut diags = loaded.warnings.clone();
    diags.extend(roi_forge_core::validate(&loaded.scenario));
    print_diagnostics(&diags);
    if has_errors(&diags) {
        EXIT_INVALID
    } else {
        println!("ok: {}", loaded.scenario.meta.name);
        EXIT_OK
    }
}

fn tables(source: &Source, format: OutputFormat, out: Option<&Path>, exact: bool, with_report: bool) -> i32 {
    let loaded = match load(source) {
        Ok(l) => l,
        Err(code) => return code,
    };
    let e = match evaluate_loaded(&loaded) {
        Ok(e) => e,
        Err(diags) => {
            print_diagnostics(&diags);
            return EXIT_INVALID;
        }
    };
    print_diagnostics(&e.diagnostics);
    let files = if with_report && format == OutputFormat::Json {
        report_json(&e).map(|r| vec![("report.json".to_string(), r)])
    } else {
        export_tables(&e, format.into(), exact)
    };
    match files {
        Ok(files) => emit(&files, out),
        Err(err) => {
            print_diagnostics(&err.diagnostics());
            EXIT_INVALID
        }
    }
}

fn parse_decimal(flag: &str, text: &str) -> Result<Decimal, i32> {
    text.trim().parse().map_err(|e| {
        eprintln!("error: --{flag}: `{text}`: {e}");
        EXIT_INVALID
    })
}

fn run_sweep(args: &SweepArgs) -> i32 {
    let loaded = match load(&args.source) {
        Ok(l) => l,
        Err(code) => return code,
    };
    let values: Result<Vec<Decimal>, i32> = match (&args.from, &args.to, &args.step) {
        (Some(from), Some(to), Some(step)) => (|| {
            let (from, to, step) =
                (parse_decimal("from", from)?, parse_decimal("to", to)?, parse_decimal("step", step)?);
            range(from, to, step).map_err(|e| {
                print_diagnostics(&e.diagnostics());
                EXIT_INVALID
            })
        })(),
        _ => args.values.iter().map(|v| parse_decimal("values", v)).collect(),
    };
    let values = match values {
        Ok(v) => v,
        Err(code) => return code,
    };
    let execution = if args.sequential { Execution::Sequential } else { Execution::Parallel };
    let points = match sweep(&loaded.scenario, &args.param, &values, execution) {
        Ok(p) => p,
        Err(e) => {
            print_diagnostics(&e.diagnostics());
            return EXIT_INVALID;
        }
    };
    let body = match args.format {
        OutputFormat::Json => sweep_json(&args.param, &points),
        OutputFormat::Csv => sweep_csv(&args.param, &points),
        OutputFormat::Md => sweep_markdown(&args.param, &points),
    };
    if std::io::stdout().lock().write_all(body.as_bytes()).is_err() {
        return EXIT_IO;
    }
    EXIT_OK
}

fn serve(args: &ServeArgs) -> i32 {
    let runtime = match tokio::runtime::Runtime::new() {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: cannot start runtime: {e}");
            return EXIT_IO;
        }
    };
    let addr = SocketAddr::new(args.bind, args.port);
    match runtime.block_on(crate::server::serve(addr, args.ui.clone())) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_IO
        }
    }
}

/// Runs one invocation and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
        }
    };
    match &cli.command {
        Command::Validate(source) => validate(source),
        Command::Appraise(a) => tables(&a.source, a.format, a.out.as_deref(), a.exact, true),
        Command::Tables(a) => tables(&a.source, a.format, a.out.as_deref(), a.exact, false),
        Command::Sweep(a) => run_sweep(a),
        Command::Serve(a) => serve(a),
    }
}
