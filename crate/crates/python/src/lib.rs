//! Python bindings. Built with maturin into a module named `codemix`.

use codemix::{
    aggregate, compare as compare_reports, generate as generate_corpus, parse_str, write_to_string, Arrangement,
    CorpusReport, Format, GenSpec, IndexName, MetricConfig, SentenceCounts, SentenceMetrics, TagPolicy,
    UnknownTagAction,
};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn policy(languages: Option<Vec<String>>, lenient: bool) -> PyResult<TagPolicy> {
    let mut policy = TagPolicy::default();
    if let Some(extra) = languages {
        policy.extend_languages(&extra).map_err(value_err)?;
    }
    if lenient {
        policy = policy.with_unknown_tag_action(UnknownTagAction::TreatUndefined);
    }
    Ok(policy)
}

fn sentence_dict<'py>(py: Python<'py>, c: &SentenceCounts, m: &SentenceMetrics) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("W", c.words())?;
    d.set_item("u", c.undefined())?;
    d.set_item("N", c.languages())?;
    d.set_item("S", c.switches())?;
    for (k, v) in [("LF", m.lf), ("SF", m.sf), ("MF", m.mf), ("CMI", m.cmi), ("CF1", m.cf1), ("CF2", m.cf2), ("CF3", m.cf3)] {
        d.set_item(k, v)?;
    }
    Ok(d)
}

/// Indices of one sentence given its tags, e.g. `["EN", "HI", "X"]`.
#[pyfunction]
#[pyo3(signature = (tags, a = 50.0, b = 50.0, lenient = false))]
fn analyze_sentence<'py>(py: Python<'py>, tags: Vec<String>, a: f64, b: f64, lenient: bool) -> PyResult<Bound<'py, PyDict>> {
    let policy = policy(None, lenient)?;
    let tags = tags.iter().map(|t| policy.normalize(t)).collect::<Result<Vec<_>, _>>().map_err(value_err)?;
    let config = MetricConfig::with_weights(a, b).map_err(value_err)?;
    let (c, m) = codemix::analyze_sentence(&tags, &config).map_err(value_err)?;
    sentence_dict(py, &c, &m)
}

/// Aggregated view of one corpus.
#[pyclass(frozen, name = "Report")]
struct Report(CorpusReport);

fn index_of(name: &str) -> PyResult<IndexName> {
    if name.eq_ignore_ascii_case("words") {
        return Ok(IndexName::WordsPerSentence);
    }
    name.parse().map_err(value_err)
}

#[pymethods]
impl Report {
    #[getter]
    fn name(&self) -> &str {
        &self.0.corpus_name
    }

    #[getter]
    fn sentences(&self) -> usize {
        self.0.sentence_count
    }

    #[getter]
    fn tokens(&self) -> usize {
        self.0.token_count
    }

    #[getter]
    fn cmi_all(&self) -> f64 {
        self.0.cmi_all
    }

    #[getter]
    fn cmi_mixed(&self) -> f64 {
        self.0.cmi_mixed
    }

    /// Mean of `cmi`, `cf1`, `cf2`, `cf3` or `words`.
    fn mean(&self, index: &str) -> PyResult<f64> {
        Ok(self.0.mean(index_of(index)?))
    }

    /// `(index, min, max, mean)` rows.
    fn summary(&self) -> Vec<(&'static str, f64, f64, f64)> {
        self.0.summary.iter().map(|r| (r.index.label(), r.min, r.max, r.mean)).collect()
    }

    /// `(language, sentences, words, percentage)` rows.
    fn distribution(&self) -> Vec<(String, usize, usize, f64)> {
        self.0
            .distribution
            .iter()
            .map(|r| (r.label().to_string(), r.sentence_count, r.word_count, r.percentage))
            .collect()
    }

    fn per_sentence<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyDict>>> {
        self.0.per_sentence.iter().map(|r| sentence_dict(py, &r.counts, &r.metrics)).collect()
    }

    fn __repr__(&self) -> String {
        format!("Report(name={:?}, sentences={}, tokens={})", self.0.corpus_name, self.0.sentence_count, self.0.token_count)
    }
}

/// Parses corpus text (`column` or `inline`) and aggregates it.
#[pyfunction]
#[pyo3(signature = (text, format = "column", name = "corpus", a = 50.0, b = 50.0, languages = None, lenient = false))]
fn analyze_text(
    text: &str,
    format: &str,
    name: &str,
    a: f64,
    b: f64,
    languages: Option<Vec<String>>,
    lenient: bool,
) -> PyResult<Report> {
    let format: Format = format.parse().map_err(value_err)?;
    let config = MetricConfig::with_weights(a, b).map_err(value_err)?;
    let parsed = parse_str(text, format, name, &policy(languages, lenient)?).map_err(value_err)?;
    Ok(Report(aggregate(&parsed.corpus, &config).map_err(value_err)?))
}

/// Synthetic corpus as text. Same seed, same output.
#[pyfunction]
#[pyo3(signature = (sentences, words, languages, arrangement, undefined_ratio = 0.0, seed = 0, max_words = None, format = "column"))]
#[allow(clippy::too_many_arguments)]
fn generate(
    sentences: usize,
    words: usize,
    languages: usize,
    arrangement: &str,
    undefined_ratio: f64,
    seed: u64,
    max_words: Option<usize>,
    format: &str,
) -> PyResult<String> {
    let arrangement: Arrangement = arrangement.parse().map_err(value_err)?;
    let format: Format = format.parse().map_err(value_err)?;
    let spec = GenSpec {
        max_words: max_words.unwrap_or(words),
        ..GenSpec::fixed(sentences, words, languages, arrangement, seed)
    }
    .with_undefined_ratio(undefined_ratio);
    let corpus = generate_corpus(&spec).map_err(value_err)?;
    write_to_string(&corpus, format).map_err(value_err)
}

/// `(index, mean_a, mean_b, delta, verdict)` for every index.
#[pyfunction]
fn compare(a: &Report, b: &Report) -> Vec<(&'static str, f64, f64, f64, String)> {
    compare_reports(&a.0, &b.0)
        .indices
        .iter()
        .map(|c| (c.index.label(), c.mean_a, c.mean_b, c.delta, c.verdict.to_string()))
        .collect()
}

#[pymodule]
#[pyo3(name = "codemix")]
fn codemix_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Report>()?;
    m.add_function(wrap_pyfunction!(analyze_sentence, m)?)?;
    m.add_function(wrap_pyfunction!(analyze_text, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(compare, m)?)?;
    Ok(())
}
