use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use codemix::{Arrangement, Format};

#[derive(Debug, Parser)]
#[command(name = "codemix", version, about = "Code-mixing complexity indices for language-tagged corpora")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute per-sentence indices and corpus summaries.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        out: OutputFormat,
        /// Emit one CSV row per sentence instead of the summary table.
        #[arg(long)]
        per_sentence: bool,
    },
    /// Print the language distribution and index summary as plain tables.
    Stats {
        file: PathBuf,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Compare the index means of two corpora.
    Compare {
        file_a: PathBuf,
        file_b: PathBuf,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        out: OutputFormat,
    },
    /// Scatter plot of words per sentence against one index.
    Plot {
        file: PathBuf,
        #[command(flatten)]
        input: InputArgs,
        /// One of cmi, cf1, cf2, cf3.
        #[arg(long)]
        index: String,
        #[arg(long, conflicts_with = "csv", required_unless_present = "csv")]
        svg: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Write a synthetic corpus in column format to stdout.
    Generate {
        #[arg(long)]
        sentences: usize,
        /// Words per sentence, either `W` or a range `MIN-MAX`.
        #[arg(long, value_parser = parse_word_range)]
        words: (usize, usize),
        #[arg(long)]
        languages: usize,
        #[arg(long, value_parser = parse_arrangement)]
        arrangement: Arrangement,
        #[arg(long, default_value_t = 0.0)]
        undefined_ratio: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    #[arg(long, value_parser = parse_format, default_value = "column")]
    pub format: Format,
    /// Mix and switch weights `A,B`.
    #[arg(long, value_parser = parse_weights, default_value = "50,50")]
    pub weights: (f64, f64),
    /// Extra language codes to accept, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub languages: Vec<String>,
    /// Treat unknown tags as language independent instead of failing.
    #[arg(long)]
    pub lenient_tags: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

fn parse_arrangement(s: &str) -> Result<Arrangement, String> {
    s.parse()
}

fn parse_weights(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected `A,B`, got `{s}`"))?;
    let a: f64 = a.trim().parse().map_err(|e| format!("weight `{a}`: {e}"))?;
    let b: f64 = b.trim().parse().map_err(|e| format!("weight `{b}`: {e}"))?;
    Ok((a, b))
}

fn parse_word_range(s: &str) -> Result<(usize, usize), String> {
    let parse = |v: &str| v.trim().parse::<usize>().map_err(|e| format!("word count `{v}`: {e}"));
    match s.split_once('-') {
        Some((lo, hi)) => Ok((parse(lo)?, parse(hi)?)),
        None => {
            let w = parse(s)?;
            Ok((w, w))
        }
    }
}
