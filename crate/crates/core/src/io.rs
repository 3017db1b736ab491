//! Reading and writing language-tagged corpora.
//!
//! Two plain-text layouts are supported:
//!
//! * **column**: one `surface<TAB>tag` pair per line, a blank line ends a sentence.
//! * **inline**: one sentence per line, space-separated `surface/TAG` tokens.
//!   The last `/` in a token separates the tag, so `a/b/EN` has surface `a/b`.
//!
//! Both accept LF or CRLF line endings and always write LF.

use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

use log::warn;

use crate::corpus::{Corpus, Sentence, Token};
use crate::error::{ParseError, WriteError};
use crate::tag::TagPolicy;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Format {
    #[default]
    Column,
    Inline,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "column" => Ok(Format::Column),
            "inline" => Ok(Format::Inline),
            other => Err(format!("unknown format `{other}` (expected column or inline)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Column => "column",
            Format::Inline => "inline",
        })
    }
}

/// A parsed corpus plus the number of empty sentences that were dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed {
    pub corpus: Corpus,
    pub skipped_empty: usize,
}

pub fn parse<R: BufRead>(reader: R, format: Format, name: &str, policy: &TagPolicy) -> Result<Parsed, ParseError> {
    match format {
        Format::Column => parse_column(reader, name, policy),
        Format::Inline => parse_inline(reader, name, policy),
    }
}

pub fn parse_str(text: &str, format: Format, name: &str, policy: &TagPolicy) -> Result<Parsed, ParseError> {
    parse(text.as_bytes(), format, name, policy)
}

fn strip_cr(line: &str) -> &str {
    line.strip_suffix('\r').unwrap_or(line)
}

fn finish(name: &str, sentences: Vec<Sentence>, policy: &TagPolicy, skipped_empty: usize) -> Parsed {
    if skipped_empty > 0 {
        warn!("{name}: skipped {skipped_empty} empty sentence(s)");
    }
    Parsed { corpus: Corpus::new(name, sentences, policy.clone()), skipped_empty }
}

pub fn parse_column<R: BufRead>(reader: R, name: &str, policy: &TagPolicy) -> Result<Parsed, ParseError> {
    let mut sentences = Vec::new();
    let mut current = Vec::new();
    // blank lines seen since the last token line
    let mut blanks = 0usize;
    let mut skipped_empty = 0usize;

    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        let line = strip_cr(&line);
        if line.trim().is_empty() {
            if current.is_empty() {
                blanks += 1;
            } else {
                sentences.push(Sentence::new(sentences.len(), std::mem::take(&mut current)));
                blanks = 0;
            }
            continue;
        }
        skipped_empty += blanks;
        blanks = 0;

        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 2 {
            return Err(ParseError::FieldCount { line: line_no, found: fields.len() });
        }
        let surface = fields[0];
        if surface.trim().is_empty() {
            return Err(ParseError::EmptySurface { line: line_no });
        }
        let tag = policy.normalize(fields[1]).map_err(|source| ParseError::Tag { line: line_no, source })?;
        current.push(Token::new(surface, tag));
    }
    if !current.is_empty() {
        sentences.push(Sentence::new(sentences.len(), current));
    }
    Ok(finish(name, sentences, policy, skipped_empty))
}

pub fn parse_inline<R: BufRead>(reader: R, name: &str, policy: &TagPolicy) -> Result<Parsed, ParseError> {
    let mut sentences = Vec::new();
    let mut blanks = 0usize;
    let mut skipped_empty = 0usize;

    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        let line = strip_cr(&line);
        if line.trim().is_empty() {
            blanks += 1;
            continue;
        }
        skipped_empty += blanks;
        blanks = 0;

        let mut tokens = Vec::new();
        for (position, raw) in line.split(' ').filter(|t| !t.is_empty()).enumerate() {
            let (surface, tag) = raw.rsplit_once('/').ok_or_else(|| ParseError::MissingSeparator {
                line: line_no,
                position: position + 1,
                token: raw.to_string(),
            })?;
            if surface.trim().is_empty() {
                return Err(ParseError::EmptySurface { line: line_no });
            }
            let tag = policy.normalize(tag).map_err(|source| ParseError::Tag { line: line_no, source })?;
            tokens.push(Token::new(surface, tag));
        }
        sentences.push(Sentence::new(sentences.len(), tokens));
    }
    Ok(finish(name, sentences, policy, skipped_empty))
}

/// Writes `corpus` in the given format. The name is not written; neither
/// format carries metadata.
pub fn write_corpus<W: Write>(corpus: &Corpus, format: Format, mut out: W) -> Result<(), WriteError> {
    for sentence in &corpus.sentences {
        for token in &sentence.tokens {
            let bad = match format {
                Format::Column => token.surface.contains(['\t', '\n', '\r']),
                Format::Inline => token.surface.chars().any(char::is_whitespace),
            };
            if bad || token.surface.is_empty() || token.surface.trim().is_empty() {
                return Err(WriteError::Unrepresentable { sentence: sentence.index, surface: token.surface.clone() });
            }
        }
        match format {
            Format::Column => {
                for token in &sentence.tokens {
                    writeln!(out, "{}\t{}", token.surface, token.tag)?;
                }
                writeln!(out)?;
            }
            Format::Inline => {
                let line: Vec<String> = sentence.tokens.iter().map(|t| format!("{}/{}", t.surface, t.tag)).collect();
                writeln!(out, "{}", line.join(" "))?;
            }
        }
    }
    Ok(())
}

pub fn write_to_string(corpus: &Corpus, format: Format) -> Result<String, WriteError> {
    let mut buf = Vec::new();
    write_corpus(corpus, format, &mut buf)?;
    Ok(String::from_utf8(buf).expect("corpus text is UTF-8"))
}
