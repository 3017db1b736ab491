//! Deterministic synthetic corpora for tests and oracles.
//!
//! Randomness comes from xoshiro256++ seeded through SplitMix64, so a given
//! [`GenSpec`] always produces the same corpus.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::corpus::{Corpus, Sentence, Token};
use crate::error::GenError;
use crate::tag::{LanguageTag, TagPolicy};

/// Longest sentence [`enumerate_small`] will produce.
pub const MAX_ENUMERATION_LENGTH: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Arrangement {
    /// Languages cycle `L1, L2, ..., LN, L1, ...`.
    Alternating,
    /// Contiguous runs of `ceil(W'/N)` tokens per language.
    Blocked,
    /// Each token's language drawn uniformly.
    Random,
}

impl FromStr for Arrangement {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "alternating" => Ok(Arrangement::Alternating),
            "blocked" => Ok(Arrangement::Blocked),
            "random" => Ok(Arrangement::Random),
            other => Err(format!("unknown arrangement `{other}` (expected alternating, blocked or random)")),
        }
    }
}

impl fmt::Display for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Arrangement::Alternating => "alternating",
            Arrangement::Blocked => "blocked",
            Arrangement::Random => "random",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub sentence_count: usize,
    /// Sentence length is drawn uniformly from `min_words..=max_words`.
    pub min_words: usize,
    pub max_words: usize,
    pub languages: usize,
    pub arrangement: Arrangement,
    /// Fraction of tokens tagged undefined, in `[0, 1)`.
    pub undefined_ratio: f64,
    pub seed: u64,
}

impl GenSpec {
    pub fn fixed(sentence_count: usize, words: usize, languages: usize, arrangement: Arrangement, seed: u64) -> Self {
        GenSpec {
            sentence_count,
            min_words: words,
            max_words: words,
            languages,
            arrangement,
            undefined_ratio: 0.0,
            seed,
        }
    }

    pub fn with_undefined_ratio(mut self, ratio: f64) -> Self {
        self.undefined_ratio = ratio;
        self
    }

    pub fn validate(&self) -> Result<(), GenError> {
        if self.languages == 0 {
            return Err(GenError::Invalid("at least one language is required"));
        }
        if self.min_words == 0 || self.min_words > self.max_words {
            return Err(GenError::Invalid("word range must satisfy 1 <= min <= max"));
        }
        if self.languages > self.min_words {
            return Err(GenError::TooManyLanguages { languages: self.languages, words: self.min_words });
        }
        if !(0.0..1.0).contains(&self.undefined_ratio) {
            return Err(GenError::Invalid("undefined ratio must lie in [0, 1)"));
        }
        Ok(())
    }
}

fn language(n: usize) -> LanguageTag {
    LanguageTag::language(&format!("L{n}"))
}

/// Positions of `count` undefined tokens spread evenly over `words` slots.
fn undefined_positions(words: usize, count: usize) -> Vec<usize> {
    (0..count).map(|k| (2 * k + 1) * words / (2 * count)).collect()
}

/// Generates a corpus with `L1..LN` language codes and `w0, w1, ...` surfaces.
pub fn generate(spec: &GenSpec) -> Result<Corpus, GenError> {
    spec.validate()?;
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(spec.seed);
    let mut sentences = Vec::with_capacity(spec.sentence_count);
    for index in 0..spec.sentence_count {
        let words = if spec.min_words == spec.max_words {
            spec.min_words
        } else {
            rng.random_range(spec.min_words..=spec.max_words)
        };
        let undefined = ((spec.undefined_ratio * words as f64).round() as usize).min(words - spec.languages);
        let language_words = words - undefined;
        let block = language_words.div_ceil(spec.languages);

        let mut language_tags = (0..language_words).map(|j| match spec.arrangement {
            Arrangement::Alternating => language(j % spec.languages + 1),
            Arrangement::Blocked => language(j / block + 1),
            Arrangement::Random => language(rng.random_range(0..spec.languages) + 1),
        });
        let holes = undefined_positions(words, undefined);
        let mut tokens = Vec::with_capacity(words);
        for i in 0..words {
            let tag = if holes.binary_search(&i).is_ok() {
                LanguageTag::undefined()
            } else {
                language_tags.next().expect("one language tag per remaining slot")
            };
            tokens.push(Token::new(format!("w{i}"), tag));
        }
        sentences.push(Sentence::new(index, tokens));
    }
    let name = format!("synthetic-{}-{}", spec.arrangement, spec.seed);
    Ok(Corpus::new(name, sentences, TagPolicy::default()))
}

/// Reorders a sentence's language-bearing tokens to maximize switches,
/// leaving undefined tokens where they are.
///
/// Each slot takes the most frequent remaining language that differs from
/// the previous one, which reaches the largest switch count the language
/// multiset allows.
pub fn alternate(sentence: &Sentence) -> Sentence {
    let mut pools: Vec<(LanguageTag, Vec<Token>)> = Vec::new();
    for token in sentence.tokens.iter().filter(|t| !t.tag.is_undefined()) {
        match pools.iter_mut().find(|(tag, _)| *tag == token.tag) {
            Some((_, pool)) => pool.push(token.clone()),
            None => pools.push((token.tag.clone(), vec![token.clone()])),
        }
    }
    for (_, pool) in &mut pools {
        pool.reverse();
    }

    let mut previous: Option<usize> = None;
    let tokens = sentence
        .tokens
        .iter()
        .map(|token| {
            if token.tag.is_undefined() {
                return token.clone();
            }
            let pick = (0..pools.len())
                .filter(|&i| !pools[i].1.is_empty() && Some(i) != previous)
                .max_by(|&a, &b| pools[a].1.len().cmp(&pools[b].1.len()).then(b.cmp(&a)))
                .or(previous)
                .expect("a language token is left for every language slot");
            previous = Some(pick);
            pools[pick].1.pop().expect("picked pool is non-empty")
        })
        .collect();
    Sentence::new(sentence.index, tokens)
}

/// Applies [`alternate`] to every sentence.
pub fn alternate_corpus(corpus: &Corpus) -> Corpus {
    Corpus {
        name: format!("{}-alternating", corpus.name),
        sentences: corpus.sentences.iter().map(alternate).collect(),
        policy: corpus.policy.clone(),
    }
}

/// Every tag sequence of length `1..=max_len` over `alphabet`, shorter
/// sequences first and each length in lexicographic alphabet order.
pub fn enumerate_small(max_len: usize, alphabet: &[LanguageTag]) -> Result<SmallSentences, GenError> {
    if max_len > MAX_ENUMERATION_LENGTH {
        return Err(GenError::EnumerationTooLong(max_len));
    }
    if alphabet.is_empty() {
        return Err(GenError::Invalid("alphabet must not be empty"));
    }
    Ok(SmallSentences { alphabet: alphabet.to_vec(), max_len, digits: vec![0], next_index: 0, done: max_len == 0 })
}

/// Iterator returned by [`enumerate_small`].
#[derive(Debug, Clone)]
pub struct SmallSentences {
    alphabet: Vec<LanguageTag>,
    max_len: usize,
    digits: Vec<usize>,
    next_index: usize,
    done: bool,
}

impl Iterator for SmallSentences {
    type Item = Sentence;

    fn next(&mut self) -> Option<Sentence> {
        if self.done {
            return None;
        }
        let tokens = self
            .digits
            .iter()
            .enumerate()
            .map(|(i, &d)| Token::new(format!("w{i}"), self.alphabet[d].clone()))
            .collect();
        let sentence = Sentence::new(self.next_index, tokens);
        self.next_index += 1;

        // odometer increment, growing the length when it wraps
        let base = self.alphabet.len();
        let mut carry = true;
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < base {
                carry = false;
                break;
            }
            *d = 0;
        }
        if carry {
            if self.digits.len() == self.max_len {
                self.done = true;
            } else {
                self.digits = vec![0; self.digits.len() + 1];
            }
        }
        Some(sentence)
    }
}
