use crate::tag::{LanguageTag, TagPolicy};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    pub tag: LanguageTag,
}

impl Token {
    pub fn new(surface: impl Into<String>, tag: LanguageTag) -> Self {
        Token { surface: surface.into(), tag }
    }
}

/// One utterance: the unit every per-sentence index is computed over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sentence {
    pub index: usize,
    pub tokens: Vec<Token>,
}

impl Sentence {
    pub fn new(index: usize, tokens: Vec<Token>) -> Self {
        Sentence { index, tokens }
    }

    pub fn tags(&self) -> impl Iterator<Item = &LanguageTag> + '_ {
        self.tokens.iter().map(|t| &t.tag)
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    pub name: String,
    pub sentences: Vec<Sentence>,
    pub policy: TagPolicy,
}

impl Corpus {
    /// Builds a corpus, renumbering sentences contiguously from 0.
    pub fn new(name: impl Into<String>, sentences: Vec<Sentence>, policy: TagPolicy) -> Self {
        let sentences = sentences
            .into_iter()
            .enumerate()
            .map(|(index, s)| Sentence { index, tokens: s.tokens })
            .collect();
        Corpus { name: name.into(), sentences, policy }
    }

    pub fn is_empty(&self) -> bool {
        self.sentences.is_empty()
    }

    pub fn token_count(&self) -> usize {
        self.sentences.iter().map(Sentence::len).sum()
    }
}
