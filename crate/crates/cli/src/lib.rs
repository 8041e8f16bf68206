//! Command-line front end: `list`, `compute`, `compare` and
//! `export-features`.

mod input;

use std::ffi::OsString;
use std::fmt::Display;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use nilcmetrix::metrics::{compute_all, list_metrics, MetricVector};
use nilcmetrix::stats::{compare_corpora, FeatureMatrix, DEFAULT_ALPHA};
use nilcmetrix::{load_bundle, Document, ResourceBundle};
use rayon::prelude::*;
use thiserror::Error;

pub use input::{collect_files, load_corpus, InputFormat};

pub const RESOURCES_ENV: &str = "NILCMETRIX_RESOURCES";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}: {message}", path.display())]
    Data { path: PathBuf, message: String },
}

impl CliError {
    pub fn data(path: &Path, message: impl Display) -> CliError {
        CliError::Data { path: path.to_path_buf(), message: message.to_string() }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data { .. } => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "nilcmetrix", version, about = "Text-complexity metrics for Brazilian Portuguese")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the metric catalog.
    List {
        #[arg(long, value_enum, default_value = "tsv")]
        format: ListFormat,
    },
    /// Compute every metric for each input document.
    Compute {
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Output file (stdout when absent).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare two corpora metric by metric with Welch's t-test.
    Compare {
        /// Corpus A: a directory or file of documents, or a feature TSV.
        #[arg(long)]
        a: PathBuf,
        /// Corpus B: a directory or file of documents, or a feature TSV.
        #[arg(long)]
        b: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ALPHA)]
        alpha: f64,
        #[arg(long = "input-format", value_enum, default_value = "conllu")]
        input_format: InputFormat,
        #[arg(long)]
        resources: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Report layout.
        #[arg(long, value_enum, default_value = "tsv")]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the document-by-metric feature matrix.
    ExportFeatures {
        #[command(flatten)]
        corpus: CorpusArgs,
        /// `doc_id<TAB>label` lines, or one label per document in input order.
        #[arg(long)]
        labels: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct CorpusArgs {
    /// Input files or directories (repeatable).
    #[arg(long, required = true, num_args = 1..)]
    input: Vec<PathBuf>,
    #[arg(long, value_enum, default_value = "conllu")]
    format: InputFormat,
    /// Resource manifest; falls back to $NILCMETRIX_RESOURCES.
    #[arg(long)]
    resources: Option<PathBuf>,
    /// Worker threads for per-document computation.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ListFormat {
    Tsv,
    Text,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Tsv,
    Text,
}

fn resolve_bundle(flag: Option<&Path>) -> Result<ResourceBundle, CliError> {
    let path = match flag {
        Some(p) => Some(p.to_path_buf()),
        None => std::env::var_os(RESOURCES_ENV).filter(|v| !v.is_empty()).map(PathBuf::from),
    };
    match path {
        Some(p) => load_bundle(&p).map_err(|e| CliError::data(&p, e)),
        None => Ok(ResourceBundle::default()),
    }
}

/// Computes metric vectors on `jobs` threads; output order follows input.
pub fn compute_vectors(docs: &[Document], bundle: &ResourceBundle, jobs: usize) -> Result<Vec<MetricVector>, CliError> {
    if jobs <= 1 {
        return Ok(docs.iter().map(|d| compute_all(d, bundle)).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {jobs} workers: {e}")))?;
    Ok(pool.install(|| docs.par_iter().map(|d| compute_all(d, bundle)).collect()))
}

fn check_jobs(jobs: usize) -> Result<(), CliError> {
    if jobs == 0 {
        Err(CliError::Usage("--jobs must be at least 1".into()))
    } else {
        Ok(())
    }
}

fn corpus_matrix(
    paths: &[PathBuf],
    format: InputFormat,
    bundle: &ResourceBundle,
    jobs: usize,
    labels: Option<&Path>,
) -> Result<FeatureMatrix, CliError> {
    let files = collect_files(paths, format)?;
    let docs = load_corpus(&files, format)?;
    let labels = labels.map(|p| input::read_labels(p, &docs)).transpose()?;
    let vectors = compute_vectors(&docs, bundle, jobs)?;
    FeatureMatrix::from_vectors(&vectors, labels.as_deref()).map_err(|e| CliError::data(&paths[0], e))
}

fn side_matrix(path: &Path, format: InputFormat, bundle: &ResourceBundle, jobs: usize) -> Result<FeatureMatrix, CliError> {
    let is_tsv = path.is_file() && path.extension().is_some_and(|e| e.eq_ignore_ascii_case("tsv"));
    if is_tsv {
        let text = fs::read_to_string(path).map_err(|e| CliError::data(path, e))?;
        return FeatureMatrix::from_tsv(&text).map_err(|e| CliError::data(path, e));
    }
    corpus_matrix(&[path.to_path_buf()], format, bundle, jobs, None)
}

fn catalog(format: ListFormat) -> String {
    let mut out = String::new();
    match format {
        ListFormat::Tsv => {
            out.push_str("id\tcategory\trequirements\tdescription\n");
            for d in list_metrics() {
                out.push_str(&format!("{}\t{}\t{}\t{}\n", d.id, d.category, d.requirements_label(), d.description));
            }
        }
        ListFormat::Text => {
            let mut current = None;
            for d in list_metrics() {
                if current != Some(d.category) {
                    current = Some(d.category);
                    out.push_str(&format!("{}\n", d.category));
                }
                out.push_str(&format!("  {:<40} {}\n", d.id, d.description));
            }
        }
    }
    out
}

fn emit(out: Option<&Path>, content: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, content).map_err(|e| CliError::data(path, e)),
        None => stdout.write_all(content.as_bytes()).map_err(|e| CliError::data(Path::new("<stdout>"), e)),
    }
}

fn execute(command: Command, stdout: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::List { format } => emit(None, &catalog(format), stdout),
        Command::Compute { corpus, out } => {
            check_jobs(corpus.jobs)?;
            let bundle = resolve_bundle(corpus.resources.as_deref())?;
            let matrix = corpus_matrix(&corpus.input, corpus.format, &bundle, corpus.jobs, None)?;
            emit(out.as_deref(), &matrix.to_tsv(), stdout)
        }
        Command::ExportFeatures { corpus, labels, out } => {
            check_jobs(corpus.jobs)?;
            let bundle = resolve_bundle(corpus.resources.as_deref())?;
            let matrix = corpus_matrix(&corpus.input, corpus.format, &bundle, corpus.jobs, labels.as_deref())?;
            emit(out.as_deref(), &matrix.to_tsv(), stdout)
        }
        Command::Compare { a, b, alpha, input_format, resources, jobs, format, out } => {
            check_jobs(jobs)?;
            if !(alpha > 0.0 && alpha < 1.0) {
                return Err(CliError::Usage(format!("--alpha must lie in (0, 1), got {alpha}")));
            }
            let bundle = resolve_bundle(resources.as_deref())?;
            let ma = side_matrix(&a, input_format, &bundle, jobs)?;
            let mb = side_matrix(&b, input_format, &bundle, jobs)?;
            let report = compare_corpora(&ma, &mb, alpha).map_err(|e| CliError::data(&b, e))?;
            let text = match format {
                ReportFormat::Tsv => report.to_tsv(),
                ReportFormat::Text => report.to_text(),
            };
            emit(out.as_deref(), &text, stdout)
        }
    }
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(cli.command, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "nilcmetrix: {e}");
            e.exit_code()
        }
    }
}
