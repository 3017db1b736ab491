//! Report serialization.
//!
//! JSON carries values rounded to two decimals plus a `raw` sub-object with
//! full double precision. CSV and text tables use two decimals throughout.
//! Key and column order is fixed by the structs below.

use std::fmt::Write as _;

use codemix::{Comparison, CorpusReport, IndexSummaryRow, LanguageDistributionRow, SentenceRecord};
use serde::Serialize;

pub const SENTENCE_COLUMNS: [&str; 12] = ["index", "W", "u", "N", "S", "LF", "SF", "MF", "CMI", "CF1", "CF2", "CF3"];

pub fn round2(x: f64) -> f64 {
    let r = (x * 100.0).round() / 100.0;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn fixed2(x: f64) -> String {
    format!("{:.2}", round2(x))
}

#[derive(Serialize)]
struct Weights {
    a: f64,
    b: f64,
}

#[derive(Serialize)]
struct PercentageRaw {
    percentage: f64,
}

#[derive(Serialize)]
struct DistributionJson<'a> {
    language: &'a str,
    sentences: usize,
    words: usize,
    percentage: f64,
    raw: PercentageRaw,
}

impl<'a> From<&'a LanguageDistributionRow> for DistributionJson<'a> {
    fn from(row: &'a LanguageDistributionRow) -> Self {
        DistributionJson {
            language: row.label(),
            sentences: row.sentence_count,
            words: row.word_count,
            percentage: round2(row.percentage),
            raw: PercentageRaw { percentage: row.percentage },
        }
    }
}

#[derive(Serialize)]
struct RangeRaw {
    min: f64,
    max: f64,
    mean: f64,
}

#[derive(Serialize)]
struct SummaryJson {
    index: &'static str,
    min: f64,
    max: f64,
    mean: f64,
    raw: RangeRaw,
}

impl From<&IndexSummaryRow> for SummaryJson {
    fn from(row: &IndexSummaryRow) -> Self {
        SummaryJson {
            index: row.index.label(),
            min: round2(row.min),
            max: round2(row.max),
            mean: round2(row.mean),
            raw: RangeRaw { min: row.min, max: row.max, mean: row.mean },
        }
    }
}

#[derive(Serialize)]
struct CmiRaw {
    all: f64,
    mixed: f64,
}

#[derive(Serialize)]
struct CmiJson {
    all: f64,
    mixed: f64,
    raw: CmiRaw,
}

#[derive(Serialize)]
#[allow(non_snake_case)]
struct IndicesRaw {
    LF: f64,
    SF: f64,
    MF: f64,
    CMI: f64,
    CF1: f64,
    CF2: f64,
    CF3: f64,
}

#[derive(Serialize)]
#[allow(non_snake_case)]
struct SentenceJson {
    index: usize,
    W: usize,
    u: usize,
    N: usize,
    S: usize,
    LF: f64,
    SF: f64,
    MF: f64,
    CMI: f64,
    CF1: f64,
    CF2: f64,
    CF3: f64,
    raw: IndicesRaw,
}

impl From<&SentenceRecord> for SentenceJson {
    fn from(r: &SentenceRecord) -> Self {
        let m = &r.metrics;
        SentenceJson {
            index: r.index,
            W: r.counts.words(),
            u: r.counts.undefined(),
            N: r.counts.languages(),
            S: r.counts.switches(),
            LF: round2(m.lf),
            SF: round2(m.sf),
            MF: round2(m.mf),
            CMI: round2(m.cmi),
            CF1: round2(m.cf1),
            CF2: round2(m.cf2),
            CF3: round2(m.cf3),
            raw: IndicesRaw { LF: m.lf, SF: m.sf, MF: m.mf, CMI: m.cmi, CF1: m.cf1, CF2: m.cf2, CF3: m.cf3 },
        }
    }
}

#[derive(Serialize)]
struct ReportJson<'a> {
    corpus: &'a str,
    sentences: usize,
    tokens: usize,
    weights: Weights,
    distribution: Vec<DistributionJson<'a>>,
    summary: Vec<SummaryJson>,
    cmi: CmiJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    per_sentence: Option<Vec<SentenceJson>>,
}

impl<'a> ReportJson<'a> {
    fn new(report: &'a CorpusReport, per_sentence: bool) -> Self {
        ReportJson {
            corpus: &report.corpus_name,
            sentences: report.sentence_count,
            tokens: report.token_count,
            weights: Weights { a: report.config.a, b: report.config.b },
            distribution: report.distribution.iter().map(Into::into).collect(),
            summary: report.summary.iter().map(Into::into).collect(),
            cmi: CmiJson {
                all: round2(report.cmi_all),
                mixed: round2(report.cmi_mixed),
                raw: CmiRaw { all: report.cmi_all, mixed: report.cmi_mixed },
            },
            per_sentence: per_sentence.then(|| report.per_sentence.iter().map(Into::into).collect()),
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

/// Full corpus report, per-sentence records included.
pub fn report_json(report: &CorpusReport) -> String {
    to_json(&ReportJson::new(report, true))
}

fn csv_string<F>(fill: F) -> String
where
    F: FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>,
{
    let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    fill(&mut writer).expect("in-memory CSV write");
    String::from_utf8(writer.into_inner().expect("flush in-memory CSV")).expect("CSV is UTF-8")
}

/// `index,min,max,mean`, one row per summarized index.
pub fn summary_csv(report: &CorpusReport) -> String {
    csv_string(|w| {
        w.write_record(["index", "min", "max", "mean"])?;
        for row in &report.summary {
            w.write_record([row.index.label().to_string(), fixed2(row.min), fixed2(row.max), fixed2(row.mean)])?;
        }
        Ok(())
    })
}

/// One row per sentence with the columns of [`SENTENCE_COLUMNS`].
pub fn per_sentence_csv(report: &CorpusReport) -> String {
    csv_string(|w| {
        w.write_record(SENTENCE_COLUMNS)?;
        for r in &report.per_sentence {
            let m = &r.metrics;
            let mut record = vec![
                r.index.to_string(),
                r.counts.words().to_string(),
                r.counts.undefined().to_string(),
                r.counts.languages().to_string(),
                r.counts.switches().to_string(),
            ];
            record.extend([m.lf, m.sf, m.mf, m.cmi, m.cf1, m.cf2, m.cf3].map(fixed2));
            w.write_record(&record)?;
        }
        Ok(())
    })
}

#[derive(Serialize)]
struct SideJson<'a> {
    corpus: &'a str,
    sentences: usize,
    tokens: usize,
    summary: Vec<SummaryJson>,
    cmi: CmiJson,
}

#[derive(Serialize)]
struct DeltaRaw {
    mean_a: f64,
    mean_b: f64,
    delta: f64,
}

#[derive(Serialize)]
struct DeltaJson {
    index: &'static str,
    mean_a: f64,
    mean_b: f64,
    delta: f64,
    verdict: String,
    raw: DeltaRaw,
}

#[derive(Serialize)]
struct ComparisonJson<'a> {
    a: SideJson<'a>,
    b: SideJson<'a>,
    comparison: Vec<DeltaJson>,
}

fn side(report: &CorpusReport) -> SideJson<'_> {
    let full = ReportJson::new(report, false);
    SideJson { corpus: full.corpus, sentences: full.sentences, tokens: full.tokens, summary: full.summary, cmi: full.cmi }
}

pub fn comparison_json(a: &CorpusReport, b: &CorpusReport, cmp: &Comparison) -> String {
    let comparison = cmp
        .indices
        .iter()
        .map(|c| DeltaJson {
            index: c.index.label(),
            mean_a: round2(c.mean_a),
            mean_b: round2(c.mean_b),
            delta: round2(c.delta),
            verdict: c.verdict.to_string(),
            raw: DeltaRaw { mean_a: c.mean_a, mean_b: c.mean_b, delta: c.delta },
        })
        .collect();
    to_json(&ComparisonJson { a: side(a), b: side(b), comparison })
}

/// `index,mean_a,mean_b,delta,verdict`.
pub fn comparison_csv(cmp: &Comparison) -> String {
    csv_string(|w| {
        w.write_record(["index", "mean_a", "mean_b", "delta", "verdict"])?;
        for c in &cmp.indices {
            w.write_record([
                c.index.label().to_string(),
                fixed2(c.mean_a),
                fixed2(c.mean_b),
                fixed2(c.delta),
                c.verdict.to_string(),
            ])?;
        }
        Ok(())
    })
}

/// Plain-text distribution and summary tables.
pub fn stats_table(report: &CorpusReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "corpus: {} ({} sentences, {} tokens)", report.corpus_name, report.sentence_count, report.token_count);
    let _ = writeln!(out);
    let _ = writeln!(out, "{:<22} {:>10} {:>10} {:>12}", "Language", "Sentences", "Words", "Percentage");
    for row in &report.distribution {
        let _ = writeln!(
            out,
            "{:<22} {:>10} {:>10} {:>12}",
            row.label(),
            row.sentence_count,
            row.word_count,
            fixed2(row.percentage)
        );
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "{:<22} {:>10} {:>10} {:>12}", "Index", "Min", "Max", "Mean");
    for row in &report.summary {
        let _ = writeln!(
            out,
            "{:<22} {:>10} {:>10} {:>12}",
            row.index.label(),
            fixed2(row.min),
            fixed2(row.max),
            fixed2(row.mean)
        );
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "CMI-all: {}  CMI-mixed: {}", fixed2(report.cmi_all), fixed2(report.cmi_mixed));
    out
}
