//! Type counts, rank-frequency tables and frequency spectra.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use crate::corpus::Token;
use crate::error::{Error, Result};

/// Occurrence count per surface form.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TypeCounts {
    counts: BTreeMap<String, u64>,
}

impl TypeCounts {
    pub fn get(&self, surface: &str) -> Option<u64> {
        self.counts.get(surface).copied()
    }

    /// Adds `count` occurrences of `surface`; zero counts are ignored.
    pub fn add(&mut self, surface: impl Into<String>, count: u64) {
        if count > 0 {
            *self.counts.entry(surface.into()).or_insert(0) += count;
        }
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, u64)> {
        self.counts.iter().map(|(s, &c)| (s.as_str(), c))
    }
}

impl<S: Into<String>> FromIterator<(S, u64)> for TypeCounts {
    fn from_iter<I: IntoIterator<Item = (S, u64)>>(iter: I) -> Self {
        let mut counts = TypeCounts::default();
        for (s, c) in iter {
            counts.add(s, c);
        }
        counts
    }
}

pub fn count_types(tokens: &[Token]) -> TypeCounts {
    let mut counts = TypeCounts::default();
    for t in tokens {
        *counts.counts.entry(t.surface.clone()).or_insert(0) += 1;
    }
    counts
}

/// Placeholder surface for rank `z` when only frequencies are known.
pub fn synthetic_surface(rank: usize) -> String {
    format!("⟨r{rank:05}⟩")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankEntry {
    pub rank: usize,
    pub surface: String,
    pub frequency: u64,
}

/// Types in descending frequency order, ranked 1..=V.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RankFrequencyTable {
    entries: Vec<RankEntry>,
    tokens: u64,
}

impl RankFrequencyTable {
    /// Sorts by descending count, ties by ascending surface form.
    pub fn from_counts(counts: &TypeCounts) -> Self {
        let mut pairs: Vec<(&str, u64)> = counts.iter().collect();
        pairs.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
        let entries: Vec<RankEntry> = pairs
            .into_iter()
            .enumerate()
            .map(|(i, (surface, frequency))| RankEntry {
                rank: i + 1,
                surface: surface.to_string(),
                frequency,
            })
            .collect();
        let tokens = entries.iter().map(|e| e.frequency).sum();
        RankFrequencyTable { entries, tokens }
    }

    /// Builds a table from frequencies already in rank order, using synthetic
    /// surface forms.
    pub fn from_frequencies(frequencies: &[u64]) -> Result<Self> {
        if let Some(i) = frequencies.iter().position(|&f| f == 0) {
            return Err(Error::format("rank table", format!("rank {} has zero frequency", i + 1)));
        }
        if let Some(i) = frequencies.windows(2).position(|w| w[1] > w[0]) {
            return Err(Error::format(
                "rank table",
                format!("frequency increases from rank {} to rank {}", i + 1, i + 2),
            ));
        }
        let entries: Vec<RankEntry> = frequencies
            .iter()
            .enumerate()
            .map(|(i, &frequency)| RankEntry {
                rank: i + 1,
                surface: synthetic_surface(i + 1),
                frequency,
            })
            .collect();
        Ok(RankFrequencyTable {
            tokens: frequencies.iter().sum(),
            entries,
        })
    }

    /// Parses run-length rows `rank_from<TAB>rank_to<TAB>frequency`.
    ///
    /// Rows must tile 1..=V without gaps or overlaps and frequencies must not
    /// increase with rank. Blank lines and `#` comments are skipped.
    pub fn parse(content: &str) -> Result<Self> {
        let mut frequencies: Vec<u64> = Vec::new();
        for (lineno, line) in content.lines().enumerate() {
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let ctx = || format!("rank table line {}", lineno + 1);
            let fields: Vec<&str> = trimmed.split('\t').map(str::trim).collect();
            let [from, to, freq] = fields[..] else {
                return Err(Error::format(ctx(), "expected `rank_from<TAB>rank_to<TAB>frequency`"));
            };
            let parse = |s: &str| {
                s.parse::<u64>()
                    .map_err(|e| Error::format(ctx(), format!("`{s}`: {e}")))
            };
            let (from, to, freq) = (parse(from)?, parse(to)?, parse(freq)?);
            let expected = frequencies.len() as u64 + 1;
            if from != expected {
                return Err(Error::format(
                    ctx(),
                    if from > expected {
                        format!("gap: rank {expected} missing")
                    } else {
                        format!("overlap: rank {from} already covered")
                    },
                ));
            }
            if to < from {
                return Err(Error::format(ctx(), format!("empty range {from}-{to}")));
            }
            if freq == 0 {
                return Err(Error::format(ctx(), "zero frequency"));
            }
            if frequencies.last().is_some_and(|&prev| freq > prev) {
                return Err(Error::format(ctx(), "frequency increases with rank"));
            }
            frequencies.extend(std::iter::repeat_n(freq, (to - from + 1) as usize));
        }
        Self::from_frequencies(&frequencies)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let content = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&content).map_err(|e| match e {
            Error::Format { context, message } => Error::Format {
                context: format!("{}: {context}", path.display()),
                message,
            },
            other => other,
        })
    }

    /// Run-length encoding in the same format [`parse`](Self::parse) reads.
    pub fn to_run_length(&self) -> String {
        let mut out = String::new();
        let mut i = 0;
        while i < self.entries.len() {
            let f = self.entries[i].frequency;
            let mut j = i;
            while j + 1 < self.entries.len() && self.entries[j + 1].frequency == f {
                j += 1;
            }
            let _ = writeln!(out, "{}\t{}\t{}", i + 1, j + 1, f);
            i = j + 1;
        }
        out
    }

    pub fn entries(&self) -> &[RankEntry] {
        &self.entries
    }

    pub fn frequencies(&self) -> Vec<u64> {
        self.entries.iter().map(|e| e.frequency).collect()
    }

    /// Total tokens N.
    pub fn tokens(&self) -> u64 {
        self.tokens
    }

    /// Number of types V.
    pub fn types(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(rank, frequency)` pairs for log-log plotting.
    pub fn loglog_points(&self) -> Vec<(f64, f64)> {
        self.entries
            .iter()
            .map(|e| (e.rank as f64, e.frequency as f64))
            .collect()
    }
}

/// Number of types V(f) having each frequency f, and P(f) = V(f)/V.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencySpectrum {
    spectrum: BTreeMap<u64, u64>,
    types: u64,
    tokens: u64,
}

impl FrequencySpectrum {
    pub fn from_table(table: &RankFrequencyTable) -> Result<Self> {
        if table.is_empty() {
            return Err(Error::Degenerate(
                "frequency spectrum of an empty table is undefined".into(),
            ));
        }
        let mut spectrum = BTreeMap::new();
        for e in table.entries() {
            *spectrum.entry(e.frequency).or_insert(0) += 1;
        }
        Ok(FrequencySpectrum {
            spectrum,
            types: table.types() as u64,
            tokens: table.tokens(),
        })
    }

    /// V(f); zero when no type has frequency `f`.
    pub fn types_with(&self, f: u64) -> u64 {
        self.spectrum.get(&f).copied().unwrap_or(0)
    }

    pub fn probability(&self, f: u64) -> f64 {
        self.types_with(f) as f64 / self.types as f64
    }

    /// `(f, V(f))` in ascending frequency.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.spectrum.iter().map(|(&f, &v)| (f, v))
    }

    pub fn types(&self) -> u64 {
        self.types
    }

    pub fn tokens(&self) -> u64 {
        self.tokens
    }

    /// `(f, P(f))` pairs for the inverse Zipf plot.
    pub fn loglog_points(&self) -> Vec<(f64, f64)> {
        self.iter()
            .map(|(f, v)| (f as f64, v as f64 / self.types as f64))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const REM1003: &str = "1\t1\t10\n2\t2\t8\n3\t4\t7\n5\t5\t5\n6\t7\t4\n8\t19\t3\n20\t54\t2\n55\t230\t1\n";
    const REM1020: &str = "1\t1\t4\n2\t3\t2\n4\t31\t1\n";

    fn words(ws: &[&str]) -> Vec<Token> {
        ws.iter().map(|w| Token::word(*w)).collect()
    }

    #[test]
    fn count_types_examples() {
        let c = count_types(&words(&["qes", "li", "qes"]));
        assert_eq!(c.get("qes"), Some(2));
        assert_eq!(c.get("li"), Some(1));
        assert_eq!(c.len(), 2);
        assert!(count_types(&[]).is_empty());

        let mut stream = Vec::new();
        for (w, n) in [("li", 25), ("seb", 10), ("qoleb", 8), ("lw", 8)] {
            stream.extend(std::iter::repeat_n(Token::word(w), n));
        }
        let c = count_types(&stream);
        assert_eq!((c.get("li"), c.get("seb"), c.get("qoleb")), (Some(25), Some(10), Some(8)));
    }

    #[test]
    fn build_rank_frequency_examples() {
        let mut counts: TypeCounts = [("x", 4), ("y", 2), ("z", 2)].into_iter().collect();
        for i in 0..28 {
            counts.add(format!("s{i:02}"), 1);
        }
        let t = RankFrequencyTable::from_counts(&counts);
        let mut want = vec![4, 2, 2];
        want.extend([1; 28]);
        assert_eq!(t.frequencies(), want);
        assert_eq!((t.tokens(), t.types()), (36, 31));

        let empty = RankFrequencyTable::from_counts(&TypeCounts::default());
        assert_eq!((empty.tokens(), empty.types()), (0, 0));

        let one = RankFrequencyTable::from_counts(&[("a", 5)].into_iter().collect());
        assert_eq!(
            one.entries(),
            [RankEntry {
                rank: 1,
                surface: "a".into(),
                frequency: 5
            }]
        );
    }

    #[test]
    fn ties_break_lexicographically() {
        let counts: TypeCounts = [("b", 2), ("a", 2), ("c", 3)].into_iter().collect();
        let t = RankFrequencyTable::from_counts(&counts);
        let order: Vec<&str> = t.entries().iter().map(|e| e.surface.as_str()).collect();
        assert_eq!(order, ["c", "a", "b"]);
    }

    #[test]
    fn spectrum_examples() {
        let t = RankFrequencyTable::parse(REM1003).unwrap();
        let s = FrequencySpectrum::from_table(&t).unwrap();
        assert_eq!(
            (s.types_with(1), s.types_with(2), s.types_with(3), s.types_with(10)),
            (176, 35, 12, 1)
        );
        assert_eq!(s.probability(1), 176.0 / 230.0);

        let one = RankFrequencyTable::from_counts(&[("a", 5)].into_iter().collect());
        let s = FrequencySpectrum::from_table(&one).unwrap();
        assert_eq!(s.iter().collect::<Vec<_>>(), [(5, 1)]);
        assert_eq!(s.probability(5), 1.0);

        let t = RankFrequencyTable::parse(REM1020).unwrap();
        let s = FrequencySpectrum::from_table(&t).unwrap();
        assert_eq!(s.iter().collect::<Vec<_>>(), [(1, 28), (2, 2), (4, 1)]);

        assert!(FrequencySpectrum::from_table(&RankFrequencyTable::default()).is_err());
    }

    #[test]
    fn parse_rank_table_examples() {
        let t = RankFrequencyTable::parse(REM1003).unwrap();
        assert_eq!((t.tokens(), t.types()), (327, 230));
        assert_eq!(t.entries()[0].surface, "⟨r00001⟩");
        let t = RankFrequencyTable::parse(REM1020).unwrap();
        assert_eq!((t.tokens(), t.types()), (36, 31));

        let gap = RankFrequencyTable::parse("1\t1\t3\n3\t3\t1\n").unwrap_err();
        assert!(gap.to_string().contains("rank 2 missing"), "{gap}");
        assert!(RankFrequencyTable::parse("1\t2\t3\n2\t3\t1\n").is_err());
        assert!(RankFrequencyTable::parse("1\t1\t3\n2\t2\t4\n").is_err());
        assert!(RankFrequencyTable::parse("1\t1\n").is_err());
        assert!(RankFrequencyTable::parse("1\t1\t0\n").is_err());
    }

    #[test]
    fn run_length_round_trip() {
        let t = RankFrequencyTable::parse(REM1003).unwrap();
        assert_eq!(t.to_run_length(), REM1003);
    }

    proptest! {
        #[test]
        fn table_and_spectrum_invariants(words in prop::collection::vec("[a-e]{1,2}", 1..200)) {
            let tokens: Vec<Token> = words.iter().map(Token::word).collect();
            let t = RankFrequencyTable::from_counts(&count_types(&tokens));
            prop_assert_eq!(t.tokens(), tokens.len() as u64);
            for (i, e) in t.entries().iter().enumerate() {
                prop_assert_eq!(e.rank, i + 1);
            }
            prop_assert!(t.frequencies().windows(2).all(|w| w[0] >= w[1]));

            let s = FrequencySpectrum::from_table(&t).unwrap();
            prop_assert_eq!(s.iter().map(|(_, v)| v).sum::<u64>(), t.types() as u64);
            prop_assert_eq!(s.iter().map(|(f, v)| f * v).sum::<u64>(), t.tokens());
            let total_p: f64 = s.loglog_points().iter().map(|p| p.1).sum();
            prop_assert!((total_p - 1.0).abs() < 1e-12);
        }

        #[test]
        fn token_order_does_not_matter(mut words in prop::collection::vec("[a-d]{1,2}", 0..100), seed in any::<u64>()) {
            let a = RankFrequencyTable::from_counts(&count_types(&words.iter().map(Token::word).collect::<Vec<_>>()));
            // deterministic shuffle
            let mut state = seed | 1;
            for i in (1..words.len()).rev() {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                words.swap(i, (state % (i as u64 + 1)) as usize);
            }
            let b = RankFrequencyTable::from_counts(&count_types(&words.iter().map(Token::word).collect::<Vec<_>>()));
            prop_assert_eq!(a, b);
        }
    }
}
