//! Stemming-quality evaluation against gold (word, stem) pairs, plus
//! corpus-level statistics.
//!
//! The gold file format is UTF-8 TSV, one `word<TAB>stem` pair per line;
//! blank lines and `#` comment lines are ignored; both fields are
//! NFC-normalized on load and the stem must be a non-empty prefix of the
//! word. Accuracy is kept as an exact ratio of counts; rendering to a
//! percentage rounds half-up to one decimal, in integer arithmetic.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::script::{normalize, NormalizedWord, WordError};
use crate::stemmer::StemPolicy;

/// A word with its human-judged stem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldPair {
    word: NormalizedWord,
    gold_stem: String,
}

/// Why a (word, stem) pair is not a valid gold pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GoldPairError {
    EmptyStem,
    StemNotAPrefix,
}

impl fmt::Display for GoldPairError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GoldPairError::EmptyStem => write!(f, "gold stem is empty"),
            GoldPairError::StemNotAPrefix => write!(f, "gold stem is not a prefix of the word"),
        }
    }
}

impl std::error::Error for GoldPairError {}

impl GoldPair {
    /// Validate that `gold_stem`, after NFC, is a non-empty prefix of `word`.
    pub fn new(word: NormalizedWord, gold_stem: &str) -> Result<Self, GoldPairError> {
        let gold_stem = normalize(gold_stem);
        if gold_stem.is_empty() {
            return Err(GoldPairError::EmptyStem);
        }
        if !word.as_str().starts_with(&gold_stem) {
            return Err(GoldPairError::StemNotAPrefix);
        }
        Ok(GoldPair { word, gold_stem })
    }

    pub fn word(&self) -> &NormalizedWord {
        &self.word
    }

    pub fn gold_stem(&self) -> &str {
        &self.gold_stem
    }
}

/// Parse failure in a gold TSV stream, with its 1-based line number.
#[derive(Debug)]
pub enum GoldParseError {
    MissingTab { line: usize },
    Word { line: usize, error: WordError },
    Pair { line: usize, error: GoldPairError },
}

impl fmt::Display for GoldParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GoldParseError::MissingTab { line } => {
                write!(f, "line {line}: expected word<TAB>stem")
            }
            GoldParseError::Word { line, error } => write!(f, "line {line}: bad word: {error}"),
            GoldParseError::Pair { line, error } => write!(f, "line {line}: {error}"),
        }
    }
}

impl std::error::Error for GoldParseError {}

/// Parse gold pairs from TSV text. An input with no pairs yields an empty
/// list; [`evaluate`] rejects that separately.
pub fn parse_gold(source: &str) -> Result<Vec<GoldPair>, GoldParseError> {
    let mut pairs = Vec::new();
    for (i, raw) in source.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim_matches(|c: char| c.is_ascii_whitespace());
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 2 {
            return Err(GoldParseError::MissingTab { line: line_no });
        }
        let word = NormalizedWord::parse(fields[0].trim_matches(|c: char| c.is_ascii_whitespace()))
            .map_err(|error| GoldParseError::Word {
                line: line_no,
                error,
            })?;
        let stem = fields[1].trim_matches(|c: char| c.is_ascii_whitespace());
        let pair = GoldPair::new(word, stem).map_err(|error| GoldParseError::Pair {
            line: line_no,
            error,
        })?;
        pairs.push(pair);
    }
    Ok(pairs)
}

/// How a predicted stem relates to the gold stem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Correct,
    /// Predicted is a strict prefix of gold: stripped too much.
    OverStemmed,
    /// Gold is a strict prefix of predicted: stripped too little.
    UnderStemmed,
    /// Neither is a prefix of the other.
    Other,
}

/// Compare a predicted stem against the gold stem. Both must be non-empty.
pub fn judge(predicted: &str, gold: &str) -> Verdict {
    if predicted == gold {
        Verdict::Correct
    } else if gold.starts_with(predicted) {
        Verdict::OverStemmed
    } else if predicted.starts_with(gold) {
        Verdict::UnderStemmed
    } else {
        Verdict::Other
    }
}

/// Verdict tallies over a gold corpus. Counts always sum to `total`;
/// accuracy is the exact ratio `correct / total`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalReport {
    total: u64,
    correct: u64,
    over_stemmed: u64,
    under_stemmed: u64,
    other: u64,
}

impl EvalReport {
    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn correct(&self) -> u64 {
        self.correct
    }

    pub fn over_stemmed(&self) -> u64 {
        self.over_stemmed
    }

    pub fn under_stemmed(&self) -> u64 {
        self.under_stemmed
    }

    pub fn other(&self) -> u64 {
        self.other
    }

    /// Accuracy as the exact pair (correct, total).
    pub fn accuracy_ratio(&self) -> (u64, u64) {
        (self.correct, self.total)
    }

    /// Accuracy as a percentage with one decimal, e.g. `"91.5"`.
    /// Computed in integer arithmetic, rounding half-up.
    pub fn accuracy_percent(&self) -> String {
        let tenths = (self.correct * 2000 + self.total) / (2 * self.total);
        format!("{}.{}", tenths / 10, tenths % 10)
    }
}

/// Evaluation failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalError {
    EmptyGold,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::EmptyGold => write!(f, "gold corpus contains no pairs"),
        }
    }
}

impl std::error::Error for EvalError {}

/// Stem every gold word and tally the verdicts.
pub fn evaluate(policy: &StemPolicy, gold: &[GoldPair]) -> Result<EvalReport, EvalError> {
    if gold.is_empty() {
        return Err(EvalError::EmptyGold);
    }
    let mut report = EvalReport {
        total: gold.len() as u64,
        correct: 0,
        over_stemmed: 0,
        under_stemmed: 0,
        other: 0,
    };
    for pair in gold {
        let predicted = policy.stem(pair.word());
        match judge(predicted.stem(), pair.gold_stem()) {
            Verdict::Correct => report.correct += 1,
            Verdict::OverStemmed => report.over_stemmed += 1,
            Verdict::UnderStemmed => report.under_stemmed += 1,
            Verdict::Other => report.other += 1,
        }
    }
    Ok(report)
}

/// Corpus summary: word counts, stem-group sizes and word-length range.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CorpusStats {
    pub total_words: u64,
    pub unique_words: u64,
    /// Stem groups containing more than one distinct word.
    pub multi_member_groups: u64,
    /// Stem groups containing exactly one distinct word.
    pub single_member_groups: u64,
    /// Minimum scalar count over distinct words (0 for an empty corpus).
    pub min_len: u64,
    /// Maximum scalar count over distinct words (0 for an empty corpus).
    pub max_len: u64,
}

/// Stem the distinct words of a corpus and group them by predicted stem.
pub fn corpus_stats(policy: &StemPolicy, words: &[NormalizedWord]) -> CorpusStats {
    let distinct: BTreeSet<&NormalizedWord> = words.iter().collect();
    let mut groups: HashMap<String, u64> = HashMap::new();
    let mut min_len = u64::MAX;
    let mut max_len = 0;
    for word in &distinct {
        let len = word.scalar_len() as u64;
        min_len = min_len.min(len);
        max_len = max_len.max(len);
        *groups.entry(policy.stem(word).stem().to_owned()).or_insert(0) += 1;
    }
    if distinct.is_empty() {
        min_len = 0;
    }
    CorpusStats {
        total_words: words.len() as u64,
        unique_words: distinct.len() as u64,
        multi_member_groups: groups.values().filter(|&&n| n > 1).count() as u64,
        single_member_groups: groups.values().filter(|&&n| n == 1).count() as u64,
        min_len,
        max_len,
    }
}
