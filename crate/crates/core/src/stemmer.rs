//! The stripping policy: longest-match suffix removal with an orthographic
//! guard, in single-pass (default) or iterative mode.

use crate::lexicon::{SuffixEntry, SuffixLexicon};
use crate::script::{has_orthographic_base, NormalizedWord};

/// How many rounds of stripping to run.
///
/// `SinglePass` removes at most one (compound) suffix. `Iterative` keeps
/// stripping the remaining stem until nothing matches; it terminates because
/// every removal strictly shortens the stem.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum StemMode {
    #[default]
    SinglePass,
    Iterative,
}

/// Predicate a candidate stem must satisfy before its suffix is removed.
///
/// On failure, strictly shorter matching suffixes are tried; if all fail the
/// word passes through unchanged.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Guard {
    /// Stem must contain a consonant or independent vowel.
    #[default]
    OrthographicBase,
    /// Stem only has to be non-empty (always true for strict suffixes).
    NonEmptyOnly,
}

impl Guard {
    pub fn allows(self, stem: &str) -> bool {
        match self {
            Guard::OrthographicBase => has_orthographic_base(stem),
            Guard::NonEmptyOnly => !stem.is_empty(),
        }
    }
}

/// Immutable stemming configuration: mode, guard and the suffix lexicon.
#[derive(Clone, Debug)]
pub struct StemPolicy {
    mode: StemMode,
    guard: Guard,
    lexicon: SuffixLexicon,
}

impl StemPolicy {
    pub fn new(lexicon: SuffixLexicon, mode: StemMode, guard: Guard) -> Self {
        StemPolicy {
            mode,
            guard,
            lexicon,
        }
    }

    /// Single-pass mode with the orthographic-base guard.
    pub fn with_defaults(lexicon: SuffixLexicon) -> Self {
        StemPolicy::new(lexicon, StemMode::default(), Guard::default())
    }

    pub fn mode(&self) -> StemMode {
        self.mode
    }

    pub fn guard(&self) -> Guard {
        self.guard
    }

    pub fn lexicon(&self) -> &SuffixLexicon {
        &self.lexicon
    }

    /// Stem one word. Words with no matching suffix pass through unchanged.
    pub fn stem(&self, word: &NormalizedWord) -> StemResult {
        let guard = self.guard;
        let mut stem: &str = word.as_str();
        let mut removed: Vec<SuffixEntry> = Vec::new();
        while let Some((entry, rest)) = self.lexicon.longest_match(stem, |s| guard.allows(s)) {
            removed.push(entry.clone());
            stem = rest;
            if self.mode == StemMode::SinglePass {
                break;
            }
        }
        StemResult {
            word: word.clone(),
            stem: stem.to_owned(),
            removed,
        }
    }

    /// Stem a batch of words, preserving order.
    pub fn stem_batch(&self, words: &[NormalizedWord]) -> Vec<StemResult> {
        words.iter().map(|w| self.stem(w)).collect()
    }
}

/// Outcome of stemming one word: the stem plus the suffixes removed, in
/// removal order. The stem concatenated with the removed suffixes in reverse
/// removal order reconstructs the word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StemResult {
    word: NormalizedWord,
    stem: String,
    removed: Vec<SuffixEntry>,
}

impl StemResult {
    pub fn word(&self) -> &NormalizedWord {
        &self.word
    }

    pub fn stem(&self) -> &str {
        &self.stem
    }

    pub fn removed(&self) -> &[SuffixEntry] {
        &self.removed
    }

    /// True when a suffix was stripped.
    pub fn changed(&self) -> bool {
        !self.removed.is_empty()
    }
}
