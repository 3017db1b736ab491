//! Language tags and the policy that maps raw corpus tags onto them.

use std::fmt;

use crate::error::TagError;

/// The nine languages of the FIRE 2015 mixed-script corpus, in reporting order.
pub const FIRE_LANGUAGES: [&str; 9] = ["EN", "BN", "GU", "HI", "KA", "ML", "MR", "TA", "TE"];

/// Raw tags that mark a language-independent token by default.
pub const DEFAULT_UNDEFINED_ALIASES: [&str; 5] = ["UN", "NE", "X", "MIX", "UNIV"];

/// Why a token carries no language.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UndefinedReason {
    /// Named entity.
    Ne,
    /// Punctuation, symbols, numbers and other language-independent material.
    X,
    /// Word with an intra-word language switch.
    Mix,
    /// Universal tag.
    Un,
    /// A custom alias or an unknown tag mapped to undefined.
    Other,
}

impl UndefinedReason {
    /// The raw tag written back out for this reason.
    pub fn as_tag(self) -> &'static str {
        match self {
            UndefinedReason::Ne => "NE",
            UndefinedReason::X => "X",
            UndefinedReason::Mix => "MIX",
            UndefinedReason::Un | UndefinedReason::Other => "UN",
        }
    }

    fn from_alias(alias: &str) -> Self {
        match alias {
            "NE" => UndefinedReason::Ne,
            "X" => UndefinedReason::X,
            "MIX" => UndefinedReason::Mix,
            "UN" | "UNIV" => UndefinedReason::Un,
            _ => UndefinedReason::Other,
        }
    }
}

/// Normalized uppercase language code.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LangCode(String);

impl LangCode {
    /// Uppercases `raw`. Returns `None` for empty or whitespace-bearing input.
    pub fn new(raw: &str) -> Option<Self> {
        let code = raw.trim();
        if code.is_empty() || code.chars().any(char::is_whitespace) {
            return None;
        }
        Some(LangCode(code.to_uppercase()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for LangCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A token's language assignment.
///
/// Equality ignores the undefined reason: an `NE` token and a punctuation
/// token are the same kind of thing as far as every metric is concerned.
#[derive(Debug, Clone, Eq)]
pub enum LanguageTag {
    Language(LangCode),
    Undefined(UndefinedReason),
}

impl LanguageTag {
    /// Builds a language tag without registry validation.
    pub fn language(code: &str) -> Self {
        LanguageTag::Language(LangCode::new(code).expect("language code must be non-empty"))
    }

    pub fn undefined() -> Self {
        LanguageTag::Undefined(UndefinedReason::Un)
    }

    pub fn is_undefined(&self) -> bool {
        matches!(self, LanguageTag::Undefined(_))
    }

    pub fn code(&self) -> Option<&LangCode> {
        match self {
            LanguageTag::Language(code) => Some(code),
            LanguageTag::Undefined(_) => None,
        }
    }

    /// The raw tag string used when writing a corpus.
    pub fn as_tag(&self) -> &str {
        match self {
            LanguageTag::Language(code) => code.as_str(),
            LanguageTag::Undefined(reason) => reason.as_tag(),
        }
    }
}

impl PartialEq for LanguageTag {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (LanguageTag::Language(a), LanguageTag::Language(b)) => a == b,
            (LanguageTag::Undefined(_), LanguageTag::Undefined(_)) => true,
            _ => false,
        }
    }
}

impl std::hash::Hash for LanguageTag {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        match self {
            LanguageTag::Language(code) => {
                0u8.hash(state);
                code.hash(state);
            }
            LanguageTag::Undefined(_) => 1u8.hash(state),
        }
    }
}

impl fmt::Display for LanguageTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum UnknownTagAction {
    #[default]
    Error,
    TreatUndefined,
}

/// Which raw tags are languages, which are language-independent, and what
/// happens to everything else.
///
/// With `synthetic_codes` enabled, placeholder codes of the form `L<n>`
/// (as produced by the synthetic generator) are also accepted as languages.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TagPolicy {
    language_codes: Vec<LangCode>,
    undefined_aliases: Vec<String>,
    synthetic_codes: bool,
    unknown_tag_action: UnknownTagAction,
}

impl Default for TagPolicy {
    fn default() -> Self {
        TagPolicy {
            language_codes: FIRE_LANGUAGES.iter().filter_map(|c| LangCode::new(c)).collect(),
            undefined_aliases: DEFAULT_UNDEFINED_ALIASES.iter().map(|s| s.to_string()).collect(),
            synthetic_codes: true,
            unknown_tag_action: UnknownTagAction::Error,
        }
    }
}

impl TagPolicy {
    pub fn new<L, U>(
        language_codes: L,
        undefined_aliases: U,
        unknown_tag_action: UnknownTagAction,
    ) -> Result<Self, TagError>
    where
        L: IntoIterator,
        L::Item: AsRef<str>,
        U: IntoIterator,
        U::Item: AsRef<str>,
    {
        let mut policy = TagPolicy {
            language_codes: Vec::new(),
            undefined_aliases: Vec::new(),
            synthetic_codes: false,
            unknown_tag_action,
        };
        for alias in undefined_aliases {
            let alias = alias.as_ref().trim().to_uppercase();
            if alias.is_empty() {
                return Err(TagError::EmptyTag);
            }
            if !policy.undefined_aliases.contains(&alias) {
                policy.undefined_aliases.push(alias);
            }
        }
        policy.extend_languages(language_codes)?;
        Ok(policy)
    }

    /// Appends codes to the registry, keeping registry order stable.
    pub fn extend_languages<I>(&mut self, codes: I) -> Result<(), TagError>
    where
        I: IntoIterator,
        I::Item: AsRef<str>,
    {
        for raw in codes {
            let code = LangCode::new(raw.as_ref()).ok_or(TagError::EmptyTag)?;
            if self.undefined_aliases.iter().any(|a| a == code.as_str()) {
                return Err(TagError::Overlap(code.to_string()));
            }
            if !self.language_codes.contains(&code) {
                self.language_codes.push(code);
            }
        }
        Ok(())
    }

    pub fn with_synthetic_codes(mut self, enabled: bool) -> Self {
        self.synthetic_codes = enabled;
        self
    }

    pub fn with_unknown_tag_action(mut self, action: UnknownTagAction) -> Self {
        self.unknown_tag_action = action;
        self
    }

    pub fn language_codes(&self) -> &[LangCode] {
        &self.language_codes
    }

    pub fn undefined_aliases(&self) -> &[String] {
        &self.undefined_aliases
    }

    pub fn unknown_tag_action(&self) -> UnknownTagAction {
        self.unknown_tag_action
    }

    pub fn accepts_synthetic_codes(&self) -> bool {
        self.synthetic_codes
    }

    /// True if `code` is a registered language.
    pub fn is_registered(&self, code: &LangCode) -> bool {
        self.language_codes.contains(code) || (self.synthetic_codes && synthetic_index(code).is_some())
    }

    /// Sort key giving the fixed reporting order: explicit registry entries
    /// first, then synthetic codes by number, then anything else by name.
    pub fn registry_rank(&self, code: &LangCode) -> (u8, usize, String) {
        if let Some(pos) = self.language_codes.iter().position(|c| c == code) {
            (0, pos, String::new())
        } else if let Some(n) = synthetic_index(code) {
            (1, n, String::new())
        } else {
            (2, 0, code.to_string())
        }
    }

    /// Maps a raw tag onto a [`LanguageTag`]. Matching is case-insensitive.
    pub fn normalize(&self, raw: &str) -> Result<LanguageTag, TagError> {
        let code = LangCode::new(raw).ok_or(TagError::EmptyTag)?;
        if self.is_registered(&code) {
            return Ok(LanguageTag::Language(code));
        }
        if self.undefined_aliases.iter().any(|a| a == code.as_str()) {
            return Ok(LanguageTag::Undefined(UndefinedReason::from_alias(code.as_str())));
        }
        match self.unknown_tag_action {
            UnknownTagAction::Error => Err(TagError::Unknown(raw.trim().to_string())),
            UnknownTagAction::TreatUndefined => Ok(LanguageTag::Undefined(UndefinedReason::Other)),
        }
    }
}

/// `L<n>` with `n >= 1` yields `Some(n)`.
fn synthetic_index(code: &LangCode) -> Option<usize> {
    let digits = code.as_str().strip_prefix('L')?;
    if digits.is_empty() || digits.starts_with('0') || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}
