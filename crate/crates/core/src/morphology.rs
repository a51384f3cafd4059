//! Suffix-driven splitting of bound morphemes.
//!
//! A [`RuleSet`] maps a word-final pattern to the morphemes it expands into.
//! Segmentation strips the longest matching suffix once and emits the
//! remaining stem (if any) followed by the expansion.

use std::collections::HashSet;
use std::path::Path;

use crate::corpus::Token;
use crate::error::{Error, Result};

const DEFAULT_RULES: &str = include_str!("../data/bound_morphemes.tsv");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphemeRule {
    pattern: String,
    expansion: Vec<String>,
}

impl MorphemeRule {
    pub fn new<S: Into<String>>(pattern: impl Into<String>, expansion: impl IntoIterator<Item = S>) -> Result<Self> {
        let pattern = pattern.into();
        let expansion: Vec<String> = expansion.into_iter().map(Into::into).collect();
        if pattern.is_empty() {
            return Err(Error::Rule {
                pattern,
                message: "empty pattern".into(),
            });
        }
        if expansion.is_empty() || expansion.iter().any(String::is_empty) {
            return Err(Error::Rule {
                pattern,
                message: "expansion must be a nonempty list of nonempty morphemes".into(),
            });
        }
        let joined = expansion.concat();
        if joined != pattern {
            return Err(Error::Rule {
                message: format!("segments `{}` concatenate to `{joined}`", expansion.join(" ")),
                pattern,
            });
        }
        Ok(MorphemeRule { pattern, expansion })
    }

    pub fn pattern(&self) -> &str {
        &self.pattern
    }

    pub fn expansion(&self) -> &[String] {
        &self.expansion
    }
}

/// Validated rules, longest pattern first.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RuleSet {
    rules: Vec<MorphemeRule>,
    recursive: bool,
}

impl RuleSet {
    /// Validates and orders `(pattern, expansion)` entries.
    pub fn compile<P, E, S>(entries: impl IntoIterator<Item = (P, E)>) -> Result<Self>
    where
        P: Into<String>,
        E: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut rules = Vec::new();
        let mut seen = HashSet::new();
        for (pattern, expansion) in entries {
            let rule = MorphemeRule::new(pattern, expansion)?;
            if !seen.insert(rule.pattern.clone()) {
                return Err(Error::Rule {
                    pattern: rule.pattern,
                    message: "duplicate pattern".into(),
                });
            }
            rules.push(rule);
        }
        rules.sort_by(|a, b| {
            b.pattern
                .len()
                .cmp(&a.pattern.len())
                .then_with(|| a.pattern.cmp(&b.pattern))
        });
        Ok(RuleSet {
            rules,
            recursive: false,
        })
    }

    /// Parses `pattern<TAB>seg1 seg2 ...` lines; `#` comments and blank lines
    /// are skipped.
    pub fn parse(content: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (lineno, line) in content.lines().enumerate() {
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let Some((pattern, segments)) = trimmed.split_once('\t') else {
                return Err(Error::format(
                    format!("rule file line {}", lineno + 1),
                    "expected `pattern<TAB>segments`",
                ));
            };
            let segments: Vec<String> = segments.split_whitespace().map(str::to_string).collect();
            entries.push((pattern.trim().to_string(), segments));
        }
        Self::compile(entries)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let content = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&content)
    }

    /// The shipped bound-morpheme table (`data/bound_morphemes.tsv`).
    pub fn default_bound_morphemes() -> Self {
        Self::parse(DEFAULT_RULES).expect("shipped rule table is valid")
    }

    /// Keep splitting the stem while some rule still matches. Off by default.
    pub fn with_recursion(mut self, recursive: bool) -> Self {
        self.recursive = recursive;
        self
    }

    pub fn rules(&self) -> &[MorphemeRule] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    fn longest_match(&self, surface: &str) -> Option<&MorphemeRule> {
        // rules are sorted longest first
        self.rules.iter().find(|r| surface.ends_with(r.pattern.as_str()))
    }

    pub fn segment_token(&self, token: &Token) -> Vec<String> {
        if token.illegible {
            return vec![token.surface.clone()];
        }
        let mut tail: Vec<&str> = Vec::new();
        let mut stem = token.surface.as_str();
        while let Some(rule) = self.longest_match(stem) {
            stem = &stem[..stem.len() - rule.pattern.len()];
            for seg in rule.expansion.iter().rev() {
                tail.push(seg);
            }
            if !self.recursive || stem.is_empty() {
                break;
            }
        }
        let mut out = Vec::with_capacity(tail.len() + 1);
        if !stem.is_empty() {
            out.push(stem.to_string());
        }
        out.extend(tail.into_iter().rev().map(str::to_string));
        out
    }

    pub fn segment_text(&self, tokens: &[Token]) -> Vec<Token> {
        tokens
            .iter()
            .flat_map(|t| {
                let illegible = t.illegible;
                self.segment_token(t)
                    .into_iter()
                    .map(move |surface| Token { surface, illegible })
            })
            .collect()
    }
}
