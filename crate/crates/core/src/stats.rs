//! Corpus-level aggregation: language distribution, per-index summaries,
//! CMI-all / CMI-mixed, scatter data and corpus comparison.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::corpus::Corpus;
use crate::error::StatsError;
use crate::metrics::{analyze_sentence, MetricConfig, SentenceCounts, SentenceMetrics};
use crate::tag::LangCode;

pub const LANGUAGE_INDEPENDENT: &str = "Language Independent";

#[derive(Debug, Clone, PartialEq)]
pub struct LanguageDistributionRow {
    /// A language code, or `None` for the language-independent class.
    pub language: Option<LangCode>,
    pub sentence_count: usize,
    pub word_count: usize,
    pub percentage: f64,
}

impl LanguageDistributionRow {
    pub fn label(&self) -> &str {
        self.language.as_ref().map_or(LANGUAGE_INDEPENDENT, LangCode::as_str)
    }
}

/// Token and sentence counts per language class, in registry order with the
/// language-independent row last.
pub fn language_distribution(corpus: &Corpus) -> Result<Vec<LanguageDistributionRow>, StatsError> {
    if corpus.is_empty() {
        return Err(StatsError::EmptyCorpus);
    }
    let mut words: BTreeMap<Option<&LangCode>, usize> = BTreeMap::new();
    let mut sentences: BTreeMap<Option<&LangCode>, usize> = BTreeMap::new();
    for sentence in &corpus.sentences {
        let mut seen: Vec<Option<&LangCode>> = Vec::new();
        for tag in sentence.tags() {
            let class = tag.code();
            *words.entry(class).or_insert(0) += 1;
            if !seen.contains(&class) {
                seen.push(class);
            }
        }
        for class in seen {
            *sentences.entry(class).or_insert(0) += 1;
        }
    }
    let total = corpus.token_count() as f64;
    let row = |class: Option<&LangCode>| {
        let word_count = words.get(&class).copied().unwrap_or(0);
        LanguageDistributionRow {
            language: class.cloned(),
            sentence_count: sentences.get(&class).copied().unwrap_or(0),
            word_count,
            percentage: 100.0 * word_count as f64 / total,
        }
    };
    let mut codes: Vec<&LangCode> = words.keys().flatten().copied().collect();
    codes.sort_by_key(|c| corpus.policy.registry_rank(c));
    let mut rows: Vec<_> = codes.into_iter().map(|c| row(Some(c))).collect();
    rows.push(row(None));
    Ok(rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IndexName {
    Cmi,
    Cf1,
    Cf2,
    Cf3,
    WordsPerSentence,
}

impl IndexName {
    pub const ALL: [IndexName; 5] =
        [IndexName::Cmi, IndexName::Cf1, IndexName::Cf2, IndexName::Cf3, IndexName::WordsPerSentence];

    /// Indices that can be plotted against sentence length.
    pub const PLOTTABLE: [IndexName; 4] = [IndexName::Cmi, IndexName::Cf1, IndexName::Cf2, IndexName::Cf3];

    pub fn label(self) -> &'static str {
        match self {
            IndexName::Cmi => "CMI",
            IndexName::Cf1 => "CF1",
            IndexName::Cf2 => "CF2",
            IndexName::Cf3 => "CF3",
            IndexName::WordsPerSentence => "WORDS_PER_SENTENCE",
        }
    }

    pub fn key(self) -> &'static str {
        match self {
            IndexName::Cmi => "cmi",
            IndexName::Cf1 => "cf1",
            IndexName::Cf2 => "cf2",
            IndexName::Cf3 => "cf3",
            IndexName::WordsPerSentence => "words",
        }
    }

    fn value(self, record: &SentenceRecord) -> f64 {
        match self {
            IndexName::Cmi => record.metrics.cmi,
            IndexName::Cf1 => record.metrics.cf1,
            IndexName::Cf2 => record.metrics.cf2,
            IndexName::Cf3 => record.metrics.cf3,
            IndexName::WordsPerSentence => record.counts.words() as f64,
        }
    }
}

impl fmt::Display for IndexName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Parses one of the plottable index names (`cmi`, `cf1`, `cf2`, `cf3`).
impl FromStr for IndexName {
    type Err = StatsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "cmi" => Ok(IndexName::Cmi),
            "cf1" => Ok(IndexName::Cf1),
            "cf2" => Ok(IndexName::Cf2),
            "cf3" => Ok(IndexName::Cf3),
            _ => Err(StatsError::UnknownIndex(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IndexSummaryRow {
    pub index: IndexName,
    pub min: f64,
    pub max: f64,
    pub mean: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SentenceRecord {
    pub index: usize,
    pub counts: SentenceCounts,
    pub metrics: SentenceMetrics,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusReport {
    pub corpus_name: String,
    pub config: MetricConfig,
    pub sentence_count: usize,
    pub token_count: usize,
    pub distribution: Vec<LanguageDistributionRow>,
    pub summary: Vec<IndexSummaryRow>,
    /// Mean CMI over every sentence.
    pub cmi_all: f64,
    /// Mean CMI over sentences with CMI > 0 (0 when there are none).
    pub cmi_mixed: f64,
    pub per_sentence: Vec<SentenceRecord>,
}

impl CorpusReport {
    pub fn summary_row(&self, index: IndexName) -> &IndexSummaryRow {
        self.summary.iter().find(|r| r.index == index).expect("every index is summarized")
    }

    pub fn mean(&self, index: IndexName) -> f64 {
        self.summary_row(index).mean
    }
}

/// Sum in ascending order so the result does not depend on sentence order.
fn ordered_sum(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    values.iter().sum()
}

fn summarize(index: IndexName, records: &[SentenceRecord]) -> IndexSummaryRow {
    let mut values: Vec<f64> = records.iter().map(|r| index.value(r)).collect();
    let sum = ordered_sum(&mut values);
    let min = values[0];
    let max = values[values.len() - 1];
    // the mean of sorted values can drift by an ulp past the extremes
    let mean = (sum / values.len() as f64).clamp(min, max);
    IndexSummaryRow { index, min, max, mean }
}

/// Computes every sentence's indices and the corpus-level summaries.
pub fn aggregate(corpus: &Corpus, config: &MetricConfig) -> Result<CorpusReport, StatsError> {
    if corpus.is_empty() {
        return Err(StatsError::EmptyCorpus);
    }
    config.validate()?;
    let per_sentence = corpus
        .sentences
        .iter()
        .map(|s| {
            let (counts, metrics) = analyze_sentence(s.tags(), config)?;
            Ok(SentenceRecord { index: s.index, counts, metrics })
        })
        .collect::<Result<Vec<_>, StatsError>>()?;

    let summary: Vec<IndexSummaryRow> = IndexName::ALL.iter().map(|&i| summarize(i, &per_sentence)).collect();

    let mut mixed: Vec<f64> = per_sentence.iter().map(|r| r.metrics.cmi).filter(|&c| c > 0.0).collect();
    let mixed_count = mixed.len();
    let mixed_sum = ordered_sum(&mut mixed);
    let cmi_all = mixed_sum / per_sentence.len() as f64;
    let cmi_mixed = if mixed_count == 0 { 0.0 } else { mixed_sum / mixed_count as f64 };

    Ok(CorpusReport {
        corpus_name: corpus.name.clone(),
        config: *config,
        sentence_count: corpus.sentences.len(),
        token_count: corpus.token_count(),
        distribution: language_distribution(corpus)?,
        summary,
        cmi_all,
        cmi_mixed,
        per_sentence,
    })
}

/// `(words, value)` per sentence, in sentence order.
pub fn scatter_data(report: &CorpusReport, index: IndexName) -> Result<Vec<(usize, f64)>, StatsError> {
    if index == IndexName::WordsPerSentence {
        return Err(StatsError::UnknownIndex(index.key().to_string()));
    }
    Ok(report.per_sentence.iter().map(|r| (r.counts.words(), index.value(r))).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    A,
    B,
    Tie,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::A => "A",
            Verdict::B => "B",
            Verdict::Tie => "TIE",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IndexComparison {
    pub index: IndexName,
    pub mean_a: f64,
    pub mean_b: f64,
    /// `mean_a - mean_b`.
    pub delta: f64,
    /// Which corpus has the higher mean.
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub indices: Vec<IndexComparison>,
}

impl Comparison {
    pub fn get(&self, index: IndexName) -> &IndexComparison {
        self.indices.iter().find(|c| c.index == index).expect("every index is compared")
    }
}

/// Deltas smaller than this are reported as ties.
pub const TIE_EPSILON: f64 = 1e-9;

/// Per-index mean deltas (A - B) and which corpus scores higher.
pub fn compare(a: &CorpusReport, b: &CorpusReport) -> Comparison {
    let indices = IndexName::ALL
        .iter()
        .map(|&index| {
            let mean_a = a.mean(index);
            let mean_b = b.mean(index);
            let delta = mean_a - mean_b;
            let verdict = if delta.abs() <= TIE_EPSILON {
                Verdict::Tie
            } else if delta > 0.0 {
                Verdict::A
            } else {
                Verdict::B
            };
            IndexComparison { index, mean_a, mean_b, delta, verdict }
        })
        .collect();
    Comparison { indices }
}
