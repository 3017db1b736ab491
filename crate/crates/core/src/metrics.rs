//! Per-sentence code-mixing indices.
//!
//! Every index is a function of a [`SentenceCounts`] summary:
//!
//! | index | definition |
//! |-------|------------|
//! | LF  | `W / N` (0 when no token carries a language) |
//! | SF  | `S / (W - 1)` (0 for a single word) |
//! | MF  | `(W' - max w) / W'` (0 when `W' = 0`) |
//! | CMI | `100 * MF` |
//! | CF  | `(a * MF + b * SF) / f(LF)` |
//!
//! `W` counts every token, undefined ones included. `W'` counts only
//! language-bearing tokens. Switches `S` are counted between consecutive
//! language-bearing tokens, so undefined tokens never break or create a switch.
//!
//! The complexity factor comes in three flavours that differ only in the
//! dampening divisor `f`: the raw language factor (CF1), a linear
//! interpolation over `[1, 1.25]` (CF2) and an arctangent curve (CF3).

use std::collections::BTreeMap;
use std::f64::consts::PI;

use crate::error::MetricError;
use crate::tag::{LangCode, LanguageTag};

pub const DEFAULT_WEIGHT: f64 = 50.0;

/// Counting summary of one sentence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SentenceCounts {
    words: usize,
    undefined: usize,
    per_language: BTreeMap<LangCode, usize>,
    max_language_words: usize,
    switches: usize,
}

impl SentenceCounts {
    /// Builds counts from already-tallied parts, checking that they are
    /// mutually consistent.
    pub fn from_parts<I>(words: usize, undefined: usize, per_language: I, switches: usize) -> Result<Self, MetricError>
    where
        I: IntoIterator<Item = (LangCode, usize)>,
    {
        if words == 0 {
            return Err(MetricError::EmptySentence);
        }
        let mut tally = BTreeMap::new();
        for (code, n) in per_language {
            if n > 0 {
                *tally.entry(code).or_insert(0) += n;
            }
        }
        let language_words: usize = tally.values().sum();
        if undefined + language_words != words {
            return Err(MetricError::InconsistentCounts("undefined + language words must equal total words"));
        }
        if switches > language_words.saturating_sub(1) || (tally.len() <= 1 && switches > 0) {
            return Err(MetricError::InconsistentCounts("switch count exceeds what the language tokens allow"));
        }
        let max_language_words = tally.values().copied().max().unwrap_or(0);
        Ok(SentenceCounts { words, undefined, per_language: tally, max_language_words, switches })
    }

    /// Total tokens, `W`.
    pub fn words(&self) -> usize {
        self.words
    }

    /// Language-independent tokens, `u`.
    pub fn undefined(&self) -> usize {
        self.undefined
    }

    /// Language-bearing tokens, `W' = W - u`.
    pub fn language_words(&self) -> usize {
        self.words - self.undefined
    }

    pub fn per_language(&self) -> &BTreeMap<LangCode, usize> {
        &self.per_language
    }

    /// Distinct languages, `N`.
    pub fn languages(&self) -> usize {
        self.per_language.len()
    }

    /// Token count of the dominant language (0 when there is none).
    pub fn max_language_words(&self) -> usize {
        self.max_language_words
    }

    /// Code switches, `S`.
    pub fn switches(&self) -> usize {
        self.switches
    }
}

/// Tallies a sentence's tags.
pub fn count_sentence<'a, I>(tags: I) -> Result<SentenceCounts, MetricError>
where
    I: IntoIterator<Item = &'a LanguageTag>,
{
    let mut words = 0;
    let mut undefined = 0;
    let mut switches = 0;
    let mut per_language: BTreeMap<LangCode, usize> = BTreeMap::new();
    let mut previous: Option<&LangCode> = None;
    for tag in tags {
        words += 1;
        match tag {
            LanguageTag::Undefined(_) => undefined += 1,
            LanguageTag::Language(code) => {
                if previous.is_some_and(|p| p != code) {
                    switches += 1;
                }
                previous = Some(code);
                *per_language.entry(code.clone()).or_insert(0) += 1;
            }
        }
    }
    if words == 0 {
        return Err(MetricError::EmptySentence);
    }
    let max_language_words = per_language.values().copied().max().unwrap_or(0);
    Ok(SentenceCounts { words, undefined, per_language, max_language_words, switches })
}

/// `W / N`, or 0 for a sentence without language-bearing tokens.
pub fn language_factor(counts: &SentenceCounts) -> f64 {
    match counts.languages() {
        0 => 0.0,
        n => counts.words() as f64 / n as f64,
    }
}

/// `S / (W - 1)`, or 0 for a single word.
pub fn switching_factor(counts: &SentenceCounts) -> f64 {
    if counts.words() > 1 {
        counts.switches() as f64 / (counts.words() - 1) as f64
    } else {
        0.0
    }
}

/// Share of language-bearing tokens outside the dominant language.
pub fn mix_factor(counts: &SentenceCounts) -> f64 {
    let lw = counts.language_words();
    if lw == 0 {
        return 0.0;
    }
    (lw - counts.max_language_words()) as f64 / lw as f64
}

/// Code Mixing Index on a 0-100 scale.
pub fn cmi(counts: &SentenceCounts) -> f64 {
    let lw = counts.language_words();
    if lw == 0 {
        return 0.0;
    }
    100.0 * (1.0 - counts.max_language_words() as f64 / lw as f64)
}

/// Divisor applied to the weighted MF/SF sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Dampening {
    /// `f(LF) = LF` (CF1).
    RawLf,
    /// `f(LF) = 0.25 (LF - 1) / (W - 1) + 1` (CF2).
    #[default]
    Linear,
    /// `f(LF) = atan(LF) / pi + 0.75` (CF3).
    Arctan,
}

impl Dampening {
    pub const ALL: [Dampening; 3] = [Dampening::RawLf, Dampening::Linear, Dampening::Arctan];
}

/// Evaluates the dampening divisor for a language factor `lf` over `words` tokens.
///
/// Requires `lf >= 1`. The linear form divides by `W - 1` and is rejected for
/// single-word sentences.
pub fn dampening(lf: f64, words: usize, kind: Dampening) -> Result<f64, MetricError> {
    if !lf.is_finite() || lf < 1.0 {
        return Err(MetricError::LanguageFactorOutOfRange(lf));
    }
    match kind {
        Dampening::RawLf => Ok(lf),
        Dampening::Linear => {
            if words < 2 {
                return Err(MetricError::LinearSingleWord);
            }
            Ok(0.25 / (words - 1) as f64 * (lf - 1.0) + 1.0)
        }
        Dampening::Arctan => Ok(lf.atan() / PI + 0.75),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricConfig {
    /// Weight of the mix factor.
    pub a: f64,
    /// Weight of the switching factor.
    pub b: f64,
    pub dampening: Dampening,
}

impl Default for MetricConfig {
    fn default() -> Self {
        MetricConfig { a: DEFAULT_WEIGHT, b: DEFAULT_WEIGHT, dampening: Dampening::Linear }
    }
}

impl MetricConfig {
    pub fn new(a: f64, b: f64, dampening: Dampening) -> Result<Self, MetricError> {
        let config = MetricConfig { a, b, dampening };
        config.validate()?;
        Ok(config)
    }

    pub fn with_weights(a: f64, b: f64) -> Result<Self, MetricError> {
        Self::new(a, b, Dampening::default())
    }

    pub fn validate(&self) -> Result<(), MetricError> {
        let ok = self.a.is_finite() && self.b.is_finite() && self.a >= 0.0 && self.b >= 0.0 && self.a + self.b > 0.0;
        if ok {
            Ok(())
        } else {
            Err(MetricError::InvalidWeights { a: self.a, b: self.b })
        }
    }

    pub fn dampened(self, dampening: Dampening) -> Self {
        MetricConfig { dampening, ..self }
    }
}

/// `(a MF + b SF) / f(LF)` with the configured dampening.
///
/// Sentences with fewer than two languages have a zero numerator and score 0
/// without evaluating the divisor, so single-word sentences never reach the
/// linear dampening's `W = 1` error.
pub fn complexity_factor(counts: &SentenceCounts, config: &MetricConfig) -> Result<f64, MetricError> {
    config.validate()?;
    let numerator = config.a * mix_factor(counts) + config.b * switching_factor(counts);
    if counts.languages() == 0 || numerator == 0.0 {
        return Ok(0.0);
    }
    let divisor = dampening(language_factor(counts), counts.words(), config.dampening)?;
    Ok(numerator / divisor)
}

/// All indices of one sentence.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SentenceMetrics {
    pub lf: f64,
    pub sf: f64,
    pub mf: f64,
    pub cmi: f64,
    pub cf1: f64,
    pub cf2: f64,
    pub cf3: f64,
}

impl SentenceMetrics {
    /// Computes every index from `counts`. The config's dampening selector is
    /// ignored; all three complexity factors are produced.
    pub fn from_counts(counts: &SentenceCounts, config: &MetricConfig) -> Result<Self, MetricError> {
        Ok(SentenceMetrics {
            lf: language_factor(counts),
            sf: switching_factor(counts),
            mf: mix_factor(counts),
            cmi: cmi(counts),
            cf1: complexity_factor(counts, &config.dampened(Dampening::RawLf))?,
            cf2: complexity_factor(counts, &config.dampened(Dampening::Linear))?,
            cf3: complexity_factor(counts, &config.dampened(Dampening::Arctan))?,
        })
    }

    pub fn complexity(&self, dampening: Dampening) -> f64 {
        match dampening {
            Dampening::RawLf => self.cf1,
            Dampening::Linear => self.cf2,
            Dampening::Arctan => self.cf3,
        }
    }
}

/// Counts a sentence and computes all of its indices in one pass.
pub fn analyze_sentence<'a, I>(tags: I, config: &MetricConfig) -> Result<(SentenceCounts, SentenceMetrics), MetricError>
where
    I: IntoIterator<Item = &'a LanguageTag>,
{
    let counts = count_sentence(tags)?;
    let metrics = SentenceMetrics::from_counts(&counts, config)?;
    Ok((counts, metrics))
}
