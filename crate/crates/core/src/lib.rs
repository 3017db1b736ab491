//! Code-mixing complexity indices for language-tagged multilingual text.
//!
//! The crate computes, per sentence, the Code Mixing Index (CMI) and the
//! Complexity Factor family (CF1, CF2, CF3) built from a language factor,
//! a switching factor and a mix factor. Around those it provides corpus
//! readers and writers, corpus-level aggregation and comparison, and a
//! deterministic synthetic corpus generator.
//!
//! ```
//! use codemix::{analyze_sentence, LanguageTag, MetricConfig};
//!
//! let tags: Vec<LanguageTag> = ["GU", "EN", "GU", "EN", "GU"].iter().map(|c| LanguageTag::language(c)).collect();
//! let (_, m) = analyze_sentence(&tags, &MetricConfig::default()).unwrap();
//! assert_eq!(m.sf, 1.0);
//! assert!((m.cmi - 40.0).abs() < 1e-9);
//! ```

pub mod corpus;
pub mod error;
pub mod io;
pub mod metrics;
pub mod stats;
pub mod synth;
pub mod tag;

pub use corpus::{Corpus, Sentence, Token};
pub use error::{GenError, MetricError, ParseError, StatsError, TagError, WriteError};
pub use io::{parse, parse_column, parse_inline, parse_str, write_corpus, write_to_string, Format, Parsed};
pub use metrics::{
    analyze_sentence, cmi, complexity_factor, count_sentence, dampening, language_factor, mix_factor,
    switching_factor, Dampening, MetricConfig, SentenceCounts, SentenceMetrics,
};
pub use stats::{
    aggregate, compare, language_distribution, scatter_data, Comparison, CorpusReport, IndexComparison, IndexName,
    IndexSummaryRow, LanguageDistributionRow, SentenceRecord, Verdict,
};
pub use synth::{alternate, alternate_corpus, enumerate_small, generate, Arrangement, GenSpec};
pub use tag::{LangCode, LanguageTag, TagPolicy, UndefinedReason, UnknownTagAction};
