//! Suffix lexicon: loading, validation and longest-match lookup.
//!
//! The lexicon file format is plain UTF-8 text, one suffix per line.
//! Leading/trailing ASCII whitespace is trimmed; blank lines and `#` lines
//! are ignored. A comment of the form `# source: <tag>` sets the provenance
//! recorded for the entries that follow (`figure1`, `table8`, `section4`,
//! `user`); files without such markers load as `user`. Suffixes are
//! NFC-normalized on load.
//!
//! Lookup walks a trie keyed on suffix scalars read last-to-first, which is
//! equivalent to scanning the suffix list longest-to-shortest.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::io;
use std::path::Path;

use crate::script::{is_gujarati_scalar, normalize};

/// Embedded copy of the shipped seed suffix list.
const SEED_SOURCE: &str = include_str!("../../../data/gujarati_suffixes.txt");

/// Where a suffix entry came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SuffixSource {
    Figure1,
    Table8,
    Section4,
    User,
}

impl SuffixSource {
    /// All sources, in reporting order.
    pub const ALL: [SuffixSource; 4] = [
        SuffixSource::Figure1,
        SuffixSource::Table8,
        SuffixSource::Section4,
        SuffixSource::User,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            SuffixSource::Figure1 => "figure1",
            SuffixSource::Table8 => "table8",
            SuffixSource::Section4 => "section4",
            SuffixSource::User => "user",
        }
    }

    fn from_tag(tag: &str) -> Option<Self> {
        match tag {
            "figure1" => Some(SuffixSource::Figure1),
            "table8" => Some(SuffixSource::Table8),
            "section4" => Some(SuffixSource::Section4),
            "user" => Some(SuffixSource::User),
            _ => None,
        }
    }
}

impl fmt::Display for SuffixSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// One validated suffix: non-empty, NFC, all scalars in the Gujarati block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuffixEntry {
    text: String,
    source: SuffixSource,
}

impl SuffixEntry {
    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn source(&self) -> SuffixSource {
        self.source
    }

    /// Count of Unicode scalar values.
    pub fn scalar_len(&self) -> usize {
        self.text.chars().count()
    }
}

impl fmt::Display for SuffixEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

/// Validation failure while parsing a lexicon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LexiconError {
    /// The same suffix (after NFC) appears twice; `line` is the second hit.
    DuplicateSuffix { line: usize, suffix: String },
    /// A suffix contains a scalar outside the Gujarati block.
    InvalidScalar { line: usize, scalar: char },
    /// No suffixes remain after comments and blank lines are dropped.
    EmptyLexicon,
}

impl fmt::Display for LexiconError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LexiconError::DuplicateSuffix { line, suffix } => {
                write!(f, "line {line}: duplicate suffix \"{suffix}\"")
            }
            LexiconError::InvalidScalar { line, scalar } => write!(
                f,
                "line {line}: scalar U+{:04X} is outside the Gujarati block",
                *scalar as u32
            ),
            LexiconError::EmptyLexicon => write!(f, "lexicon contains no suffixes"),
        }
    }
}

impl std::error::Error for LexiconError {}

/// Failure while loading a lexicon from a file.
#[derive(Debug)]
pub enum LexiconLoadError {
    Io(io::Error),
    Parse(LexiconError),
}

impl fmt::Display for LexiconLoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LexiconLoadError::Io(e) => write!(f, "cannot read lexicon: {e}"),
            LexiconLoadError::Parse(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for LexiconLoadError {}

#[derive(Clone, Debug, Default)]
struct TrieNode {
    children: HashMap<char, TrieNode>,
    /// Index into `entries` when a suffix ends at this node.
    entry: Option<usize>,
}

/// Validated, de-duplicated suffix set with a reversed-trie index.
#[derive(Clone, Debug)]
pub struct SuffixLexicon {
    entries: Vec<SuffixEntry>,
    root: TrieNode,
    max_suffix_len: usize,
}

impl SuffixLexicon {
    /// Parse a lexicon from text in the lexicon file format.
    pub fn parse(source: &str) -> Result<Self, LexiconError> {
        let mut entries: Vec<SuffixEntry> = Vec::new();
        let mut seen: HashSet<String> = HashSet::new();
        let mut current = SuffixSource::User;
        for (i, raw) in source.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim_matches(|c: char| c.is_ascii_whitespace());
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                if let Some(tag) = comment.trim().strip_prefix("source:") {
                    if let Some(src) = SuffixSource::from_tag(tag.trim()) {
                        current = src;
                    }
                }
                continue;
            }
            let suffix = normalize(line);
            if let Some(scalar) = suffix.chars().find(|&c| !is_gujarati_scalar(c)) {
                return Err(LexiconError::InvalidScalar {
                    line: line_no,
                    scalar,
                });
            }
            if !seen.insert(suffix.clone()) {
                return Err(LexiconError::DuplicateSuffix {
                    line: line_no,
                    suffix,
                });
            }
            entries.push(SuffixEntry {
                text: suffix,
                source: current,
            });
        }
        if entries.is_empty() {
            return Err(LexiconError::EmptyLexicon);
        }

        let mut root = TrieNode::default();
        let mut max_suffix_len = 0;
        for (idx, entry) in entries.iter().enumerate() {
            max_suffix_len = max_suffix_len.max(entry.scalar_len());
            let mut node = &mut root;
            for c in entry.text.chars().rev() {
                node = node.children.entry(c).or_default();
            }
            node.entry = Some(idx);
        }
        Ok(SuffixLexicon {
            entries,
            root,
            max_suffix_len,
        })
    }

    /// Load a lexicon from a file.
    pub fn load(path: impl AsRef<Path>) -> Result<Self, LexiconLoadError> {
        let source = std::fs::read_to_string(path).map_err(LexiconLoadError::Io)?;
        SuffixLexicon::parse(&source).map_err(LexiconLoadError::Parse)
    }

    /// The shipped seed lexicon (`data/gujarati_suffixes.txt`), compiled in.
    pub fn seed() -> Self {
        SuffixLexicon::parse(SEED_SOURCE).expect("shipped seed lexicon is valid")
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// A parsed lexicon always holds at least one suffix.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Scalar count of the longest suffix.
    pub fn max_suffix_len(&self) -> usize {
        self.max_suffix_len
    }

    /// Entries in load order.
    pub fn entries(&self) -> &[SuffixEntry] {
        &self.entries
    }

    /// Entries sorted by scalar length descending, then by scalar sequence
    /// ascending: the order a longest-first linear scan would try them in.
    pub fn entries_longest_first(&self) -> Vec<&SuffixEntry> {
        let mut sorted: Vec<&SuffixEntry> = self.entries.iter().collect();
        sorted.sort_by(|a, b| {
            b.scalar_len()
                .cmp(&a.scalar_len())
                .then_with(|| a.text.cmp(&b.text))
        });
        sorted
    }

    /// Find the longest lexicon suffix that is a strict suffix of `word` and
    /// whose removal leaves a stem accepted by `guard`. Returns the entry and
    /// the stem slice. Shorter matches are tried when a longer stem fails the
    /// guard. `word` must be NFC.
    pub fn longest_match<'w>(
        &self,
        word: &'w str,
        guard: impl Fn(&str) -> bool,
    ) -> Option<(&SuffixEntry, &'w str)> {
        // Walk the trie from the end of the word, recording every suffix end
        // passed; candidates come out shortest-first, so try them in reverse.
        let mut candidates: Vec<(usize, usize)> = Vec::new(); // (entry idx, stem byte len)
        let mut node = &self.root;
        for (offset, c) in word.char_indices().rev() {
            match node.children.get(&c) {
                Some(next) => {
                    node = next;
                    if let Some(idx) = next.entry {
                        candidates.push((idx, offset));
                    }
                }
                None => break,
            }
        }
        for &(idx, stem_len) in candidates.iter().rev() {
            if stem_len == 0 {
                continue; // suffix equals the whole word: not a strict suffix
            }
            let stem = &word[..stem_len];
            if guard(stem) {
                return Some((&self.entries[idx], stem));
            }
        }
        None
    }
}
