use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TagError {
    #[error("empty tag")]
    EmptyTag,
    #[error("unknown tag `{0}`")]
    Unknown(String),
    #[error("`{0}` is registered both as a language and as an undefined alias")]
    Overlap(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MetricError {
    #[error("empty sentence")]
    EmptySentence,
    #[error("linear dampening is undefined for single-word sentences")]
    LinearSingleWord,
    #[error("language factor {0} outside the admissible range")]
    LanguageFactorOutOfRange(f64),
    #[error("invalid weights a={a}, b={b}: both must be non-negative and sum to more than 0")]
    InvalidWeights { a: f64, b: f64 },
    #[error("inconsistent counts: {0}")]
    InconsistentCounts(&'static str),
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: expected 2 tab-separated fields, found {found}")]
    FieldCount { line: usize, found: usize },
    #[error("line {line}, token {position}: `{token}` has no `/` tag separator")]
    MissingSeparator { line: usize, position: usize, token: String },
    #[error("line {line}: empty surface")]
    EmptySurface { line: usize },
    #[error("line {line}: {source}")]
    Tag {
        line: usize,
        #[source]
        source: TagError,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl ParseError {
    pub fn line(&self) -> Option<usize> {
        match self {
            ParseError::FieldCount { line, .. }
            | ParseError::MissingSeparator { line, .. }
            | ParseError::EmptySurface { line }
            | ParseError::Tag { line, .. } => Some(*line),
            ParseError::Io(_) => None,
        }
    }
}

#[derive(Debug, Error)]
pub enum WriteError {
    #[error("sentence {sentence}: surface `{surface}` cannot be written in this format")]
    Unrepresentable { sentence: usize, surface: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StatsError {
    #[error("empty corpus")]
    EmptyCorpus,
    #[error("unknown index `{0}` (valid: cmi, cf1, cf2, cf3)")]
    UnknownIndex(String),
    #[error(transparent)]
    Metric(#[from] MetricError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("{languages} languages cannot fit in {words} words")]
    TooManyLanguages { languages: usize, words: usize },
    #[error("invalid generator setting: {0}")]
    Invalid(&'static str),
    #[error("enumeration length {0} exceeds the limit of {max}", max = crate::synth::MAX_ENUMERATION_LENGTH)]
    EnumerationTooLong(usize),
}
