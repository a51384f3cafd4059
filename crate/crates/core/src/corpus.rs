//! Loading and tokenizing transliterated texts.
//!
//! A corpus file holds one text. Words are delimited by the separator string
//! (`:` by default) and/or whitespace. Lines whose first non-blank character
//! is `#` carry editorial apparatus and are skipped.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use crate::error::{Error, Result};

/// Surface used for every illegible token under [`IllegiblePolicy::Merged`].
pub const MERGED_ILLEGIBLE: &str = "⟨illegible⟩";

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Token {
    pub surface: String,
    pub illegible: bool,
}

impl Token {
    /// A legible token. Used by callers that build token streams directly.
    pub fn word(surface: impl Into<String>) -> Self {
        Token {
            surface: surface.into(),
            illegible: false,
        }
    }

    pub fn illegible(surface: impl Into<String>) -> Self {
        Token {
            surface: surface.into(),
            illegible: true,
        }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.surface)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IllegiblePolicy {
    /// Every illegible token becomes its own singleton type.
    #[default]
    Distinct,
    /// All illegible tokens share one type.
    Merged,
}

impl std::str::FromStr for IllegiblePolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "distinct" => Ok(IllegiblePolicy::Distinct),
            "merged" => Ok(IllegiblePolicy::Merged),
            other => Err(Error::Config(format!(
                "unknown illegible policy `{other}` (expected distinct or merged)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusConfig {
    separator: String,
    pub illegible_marker: String,
    pub illegible_policy: IllegiblePolicy,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            separator: ":".to_string(),
            illegible_marker: "?".to_string(),
            illegible_policy: IllegiblePolicy::Distinct,
        }
    }
}

impl CorpusConfig {
    pub fn new(
        separator: impl Into<String>,
        illegible_marker: impl Into<String>,
        illegible_policy: IllegiblePolicy,
    ) -> Result<Self> {
        let separator = separator.into();
        if separator.is_empty() {
            return Err(Error::Config("separator must be nonempty".into()));
        }
        Ok(CorpusConfig {
            separator,
            illegible_marker: illegible_marker.into(),
            illegible_policy,
        })
    }

    pub fn separator(&self) -> &str {
        &self.separator
    }

    fn is_illegible(&self, fragment: &str) -> bool {
        !self.illegible_marker.is_empty() && fragment.contains(&self.illegible_marker)
    }
}

/// Splits `raw` into tokens on the separator and on whitespace runs.
pub fn tokenize(raw: &str, cfg: &CorpusConfig) -> Vec<Token> {
    let mut tokens = Vec::new();
    for line in raw.lines() {
        if line.trim_start().starts_with('#') {
            continue;
        }
        for chunk in line.split(cfg.separator.as_str()) {
            for fragment in chunk.split_whitespace() {
                tokens.push(Token {
                    surface: fragment.to_string(),
                    illegible: cfg.is_illegible(fragment),
                });
            }
        }
    }
    tokens
}

/// Variant spellings mapped to a canonical form.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NormalizationTable {
    entries: BTreeMap<String, String>,
}

impl NormalizationTable {
    /// Builds a table, rejecting duplicate keys and chains (a canonical form
    /// that is itself a key).
    pub fn new<I, K, V>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (K, V)>,
        K: Into<String>,
        V: Into<String>,
    {
        let mut map = BTreeMap::new();
        for (variant, canonical) in entries {
            let variant = variant.into();
            let canonical = canonical.into();
            if variant.is_empty() || canonical.is_empty() {
                return Err(Error::format("normalization table", "empty surface form"));
            }
            if map.insert(variant.clone(), canonical).is_some() {
                return Err(Error::format(
                    "normalization table",
                    format!("duplicate variant `{variant}`"),
                ));
            }
        }
        if let Some((variant, canonical)) = map.iter().find(|(_, c)| map.contains_key(*c)) {
            return Err(Error::format(
                "normalization table",
                format!("chained entry `{variant}` -> `{canonical}`: canonical form is also a variant"),
            ));
        }
        Ok(NormalizationTable { entries: map })
    }

    /// Parses `variant<TAB>canonical` lines. Blank lines and `#` comments are
    /// skipped.
    pub fn parse(content: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for (lineno, line) in content.lines().enumerate() {
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut fields = trimmed.split('\t');
            match (fields.next(), fields.next(), fields.next()) {
                (Some(v), Some(c), None) => pairs.push((v.trim().to_string(), c.trim().to_string())),
                _ => {
                    return Err(Error::format(
                        format!("normalization table line {}", lineno + 1),
                        "expected `variant<TAB>canonical`",
                    ))
                }
            }
        }
        Self::new(pairs)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let content = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&content)
    }

    pub fn get(&self, variant: &str) -> Option<&str> {
        self.entries.get(variant).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Rewrites variant spellings to their canonical form. Illegible tokens are
/// left untouched.
pub fn normalize(tokens: &[Token], table: &NormalizationTable) -> Vec<Token> {
    tokens
        .iter()
        .map(|t| match table.get(&t.surface) {
            Some(canonical) if !t.illegible => Token {
                surface: canonical.to_string(),
                illegible: false,
            },
            _ => t.clone(),
        })
        .collect()
}

/// Rewrites illegible surfaces according to `cfg.illegible_policy`.
pub fn apply_illegible_policy(tokens: &[Token], cfg: &CorpusConfig) -> Vec<Token> {
    let mut k = 0usize;
    tokens
        .iter()
        .map(|t| {
            if !t.illegible {
                return t.clone();
            }
            let surface = match cfg.illegible_policy {
                IllegiblePolicy::Distinct => {
                    k += 1;
                    format!("⟨illegible-{k}⟩")
                }
                IllegiblePolicy::Merged => MERGED_ILLEGIBLE.to_string(),
            };
            Token::illegible(surface)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Text {
    pub id: String,
    pub raw: String,
    pub tokens: Vec<Token>,
}

impl Text {
    pub fn from_raw(id: impl Into<String>, raw: impl Into<String>, cfg: &CorpusConfig) -> Result<Self> {
        let id = id.into();
        if id.is_empty() {
            return Err(Error::Config("text id must be nonempty".into()));
        }
        let raw = raw.into();
        let tokens = tokenize(&raw, cfg);
        Ok(Text { id, raw, tokens })
    }
}

/// Reads a corpus file; the text id is the file stem.
pub fn load_text(path: impl AsRef<Path>, cfg: &CorpusConfig) -> Result<Text> {
    let path = path.as_ref();
    let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
    let raw = String::from_utf8(bytes)
        .map_err(|e| Error::format(path.display().to_string(), format!("not valid UTF-8: {e}")))?;
    let id = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    Text::from_raw(id, raw, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn surfaces(tokens: &[Token]) -> Vec<&str> {
        tokens.iter().map(|t| t.surface.as_str()).collect()
    }

    #[test]
    fn splits_on_separator_and_whitespace() {
        let cfg = CorpusConfig::default();
        let t = tokenize("wosi : soreyi : terike", &cfg);
        assert_eq!(surfaces(&t), ["wosi", "soreyi", "terike"]);
        assert!(tokenize("", &cfg).is_empty());
        assert_eq!(surfaces(&tokenize("a::b", &cfg)), ["a", "b"]);
        assert_eq!(surfaces(&tokenize("a:b c\n\td", &cfg)), ["a", "b", "c", "d"]);
    }

    #[test]
    fn comment_lines_are_skipped() {
        let cfg = CorpusConfig::default();
        let t = tokenize("# REM 1003, face A\nqor : kdi\n  # lacuna follows\nabr", &cfg);
        assert_eq!(surfaces(&t), ["qor", "kdi", "abr"]);
    }

    #[test]
    fn multi_character_separator() {
        let cfg = CorpusConfig::new("||", "?", IllegiblePolicy::Distinct).unwrap();
        assert_eq!(surfaces(&tokenize("a||b|c", &cfg)), ["a", "b|c"]);
        assert!(CorpusConfig::new("", "?", IllegiblePolicy::Merged).is_err());
    }

    #[test]
    fn illegible_classification() {
        let cfg = CorpusConfig::default();
        let t = tokenize("ab?c : qor", &cfg);
        assert!(t[0].illegible);
        assert!(!t[1].illegible);
    }

    #[test]
    fn normalize_examples() {
        let table = NormalizationTable::new([("qore", "qor")]).unwrap();
        assert_eq!(normalize(&[Token::word("qore")], &table), [Token::word("qor")]);
        assert_eq!(normalize(&[Token::word("qor")], &table), [Token::word("qor")]);
        let damaged = Token::illegible("ab?c");
        let table = NormalizationTable::new([("ab?c", "abc")]).unwrap();
        assert_eq!(normalize(&[damaged.clone()], &table), [damaged]);
    }

    #[test]
    fn normalization_table_rejects_chains_and_duplicates() {
        assert!(NormalizationTable::new([("a", "b"), ("b", "c")]).is_err());
        assert!(NormalizationTable::new([("a", "b"), ("a", "c")]).is_err());
        assert!(NormalizationTable::parse("qore\tqor\nqorr\n").is_err());
        let t = NormalizationTable::parse("# spelling\nqore\tqor\n\nqorr\tqor\n").unwrap();
        assert_eq!(t.len(), 2);
    }

    #[test]
    fn illegible_policies() {
        let toks = [Token::illegible("ab?"), Token::illegible("cd?")];
        let mut cfg = CorpusConfig::default();
        assert_eq!(
            surfaces(&apply_illegible_policy(&toks, &cfg)),
            ["⟨illegible-1⟩", "⟨illegible-2⟩"]
        );
        cfg.illegible_policy = IllegiblePolicy::Merged;
        assert_eq!(
            surfaces(&apply_illegible_policy(&toks, &cfg)),
            [MERGED_ILLEGIBLE, MERGED_ILLEGIBLE]
        );
        assert_eq!(apply_illegible_policy(&[Token::word("abr")], &cfg), [Token::word("abr")]);
    }

    #[test]
    fn load_text_from_file() {
        let dir = std::env::temp_dir().join(format!("zipfkit-corpus-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let cfg = CorpusConfig::default();

        let path = dir.join("REM1003.txt");
        std::fs::write(&path, "qor : kdi").unwrap();
        let text = load_text(&path, &cfg).unwrap();
        assert_eq!(text.id, "REM1003");
        assert_eq!(surfaces(&text.tokens), ["qor", "kdi"]);

        let empty = dir.join("empty.txt");
        std::fs::write(&empty, "").unwrap();
        assert!(load_text(&empty, &cfg).unwrap().tokens.is_empty());

        let bad = dir.join("bad.txt");
        std::fs::write(&bad, [0xff, 0xfe, 0x00]).unwrap();
        assert!(matches!(load_text(&bad, &cfg), Err(Error::Format { .. })));

        assert!(matches!(load_text(dir.join("missing.txt"), &cfg), Err(Error::Io { .. })));
        std::fs::remove_dir_all(&dir).ok();
    }

    fn token_stream() -> impl Strategy<Value = Vec<String>> {
        prop::collection::vec("[a-z?]{1,6}", 0..40)
    }

    proptest! {
        #[test]
        fn retokenizing_joined_surfaces_is_identity(words in token_stream()) {
            let cfg = CorpusConfig::default();
            let first = tokenize(&words.join(" : "), &cfg);
            let joined: Vec<_> = first.iter().map(|t| t.surface.clone()).collect();
            prop_assert_eq!(tokenize(&joined.join(":"), &cfg), first);
        }

        #[test]
        fn normalize_is_idempotent_and_length_preserving(words in token_stream()) {
            let cfg = CorpusConfig::default();
            let table = NormalizationTable::new([("ab", "a"), ("qore", "qor"), ("b", "bb")]).unwrap();
            let tokens = tokenize(&words.join(":"), &cfg);
            let once = normalize(&tokens, &table);
            prop_assert_eq!(once.len(), tokens.len());
            prop_assert_eq!(normalize(&once, &table), once.clone());
            prop_assert_eq!(apply_illegible_policy(&once, &cfg).len(), tokens.len());
        }
    }
}
