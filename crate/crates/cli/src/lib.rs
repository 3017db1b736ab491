//! Command-line driver: parses corpora, aggregates them and serializes the
//! results. `main.rs` only maps [`run`]'s outcome onto an exit status.

pub mod args;
pub mod plot;
pub mod render;

use std::fs::{self, File};
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};

use codemix::{
    aggregate, compare, generate, scatter_data, write_corpus, CorpusReport, Format, GenError, GenSpec, IndexName,
    MetricConfig, MetricError, ParseError, StatsError, TagError, TagPolicy, UnknownTagAction, WriteError,
};
use thiserror::Error;

pub use args::{Cli, Command, InputArgs, OutputFormat};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Read {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{}: {source}", path.display())]
    Parse {
        path: PathBuf,
        #[source]
        source: ParseError,
    },
    #[error("{}: {source}", path.display())]
    Stats {
        path: PathBuf,
        #[source]
        source: StatsError,
    },
    #[error("{}: {source}", path.display())]
    WriteFile {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error(transparent)]
    Index(StatsError),
    #[error(transparent)]
    Weights(#[from] MetricError),
    #[error("--languages: {0}")]
    Languages(#[from] TagError),
    #[error(transparent)]
    Generate(#[from] GenError),
    #[error(transparent)]
    Corpus(#[from] WriteError),
    #[error(transparent)]
    Output(#[from] io::Error),
}

/// Non-fatal diagnostics collected while running a command.
pub type Warnings = Vec<String>;

fn policy_for(input: &InputArgs) -> Result<TagPolicy, CliError> {
    let mut policy = TagPolicy::default();
    policy.extend_languages(&input.languages)?;
    if input.lenient_tags {
        policy = policy.with_unknown_tag_action(UnknownTagAction::TreatUndefined);
    }
    Ok(policy)
}

fn config_for(input: &InputArgs) -> Result<MetricConfig, CliError> {
    Ok(MetricConfig::with_weights(input.weights.0, input.weights.1)?)
}

fn corpus_name(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

/// Reads, parses and aggregates one input file.
pub fn load_report(path: &Path, input: &InputArgs, warnings: &mut Warnings) -> Result<CorpusReport, CliError> {
    let policy = policy_for(input)?;
    let config = config_for(input)?;
    let file = File::open(path).map_err(|source| CliError::Read { path: path.to_path_buf(), source })?;
    let parsed = codemix::parse(BufReader::new(file), input.format, &corpus_name(path), &policy)
        .map_err(|source| CliError::Parse { path: path.to_path_buf(), source })?;
    if parsed.skipped_empty > 0 {
        warnings.push(format!("{}: skipped {} empty sentence(s)", path.display(), parsed.skipped_empty));
    }
    aggregate(&parsed.corpus, &config).map_err(|source| CliError::Stats { path: path.to_path_buf(), source })
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::WriteFile { path: path.to_path_buf(), source })
}

/// Executes one command, writing primary output to `out`.
pub fn run<W: Write>(cli: &Cli, out: &mut W) -> Result<Warnings, CliError> {
    let mut warnings = Warnings::new();
    match &cli.command {
        Command::Analyze { file, input, out: format, per_sentence } => {
            // weights are checked before touching the file
            config_for(input)?;
            let report = load_report(file, input, &mut warnings)?;
            let text = match (format, per_sentence) {
                (OutputFormat::Json, _) => render::report_json(&report),
                (OutputFormat::Csv, false) => render::summary_csv(&report),
                (OutputFormat::Csv, true) => render::per_sentence_csv(&report),
            };
            out.write_all(text.as_bytes())?;
        }
        Command::Stats { file, input } => {
            let report = load_report(file, input, &mut warnings)?;
            out.write_all(render::stats_table(&report).as_bytes())?;
        }
        Command::Compare { file_a, file_b, input, out: format } => {
            config_for(input)?;
            let a = load_report(file_a, input, &mut warnings)?;
            let b = load_report(file_b, input, &mut warnings)?;
            let cmp = compare(&a, &b);
            let text = match format {
                OutputFormat::Json => render::comparison_json(&a, &b, &cmp),
                OutputFormat::Csv => render::comparison_csv(&cmp),
            };
            out.write_all(text.as_bytes())?;
        }
        Command::Plot { file, input, index, svg, csv } => {
            let index: IndexName = index.parse().map_err(CliError::Index)?;
            let report = load_report(file, input, &mut warnings)?;
            let pairs = scatter_data(&report, index).map_err(CliError::Index)?;
            if let Some(path) = svg {
                let title = format!("{}: words per sentence vs {}", report.corpus_name, index.label());
                write_file(path, &plot::scatter_svg(&title, index, &pairs))?;
            }
            if let Some(path) = csv {
                write_file(path, &plot::scatter_csv(index, &pairs))?;
            }
        }
        Command::Generate { sentences, words, languages, arrangement, undefined_ratio, seed } => {
            let spec = GenSpec {
                sentence_count: *sentences,
                min_words: words.0,
                max_words: words.1,
                languages: *languages,
                arrangement: *arrangement,
                undefined_ratio: *undefined_ratio,
                seed: *seed,
            };
            let corpus = generate(&spec)?;
            write_corpus(&corpus, Format::Column, &mut *out)?;
        }
    }
    Ok(warnings)
}
