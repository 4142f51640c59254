//! Gujarati script foundation: NFC normalization, codepoint classification,
//! word tokenization and the orthographic-validity check used by the
//! stemmer's stripping guard.
//!
//! All matching elsewhere in the crate is codepoint-exact, so every piece of
//! text is brought into Unicode Normalization Form C before anything else
//! looks at it. "Length" always means the count of Unicode scalar values.

use std::fmt;

use unicode_normalization::UnicodeNormalization;

/// Zero-width non-joiner, permitted inside tokens but never in suffixes.
pub const ZWNJ: char = '\u{200C}';
/// Zero-width joiner, permitted inside tokens but never in suffixes.
pub const ZWJ: char = '\u{200D}';

/// True for scalars in the Gujarati block U+0A80–U+0AFF.
pub fn is_gujarati_scalar(c: char) -> bool {
    matches!(c, '\u{0A80}'..='\u{0AFF}')
}

/// Classification of a scalar within the Gujarati block.
///
/// Everything outside the listed ranges, including scalars outside the
/// block entirely, is [`CodepointClass::Other`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CodepointClass {
    IndependentVowel,
    Consonant,
    VowelSign,
    Anusvara,
    Visarga,
    Candrabindu,
    Virama,
    Nukta,
    Digit,
    Other,
}

/// Classify one scalar per the Unicode 15 Gujarati block layout.
pub fn classify(c: char) -> CodepointClass {
    use CodepointClass::*;
    match c {
        '\u{0A81}' => Candrabindu,
        '\u{0A82}' => Anusvara,
        '\u{0A83}' => Visarga,
        // Independent vowels, plus vocalic RR/LL letters.
        '\u{0A85}'..='\u{0A94}' | '\u{0AE0}' | '\u{0AE1}' => IndependentVowel,
        // Consonants, plus ZHA.
        '\u{0A95}'..='\u{0AB9}' | '\u{0AF9}' => Consonant,
        '\u{0ABC}' => Nukta,
        // Dependent vowel signs, plus vocalic L/LL signs.
        '\u{0ABE}'..='\u{0ACC}' | '\u{0AE2}' | '\u{0AE3}' => VowelSign,
        '\u{0ACD}' => Virama,
        '\u{0AE6}'..='\u{0AEF}' => Digit,
        _ => Other,
    }
}

/// Bring text into NFC. Total on valid Unicode and idempotent.
pub fn normalize(text: &str) -> String {
    text.nfc().collect()
}

/// True iff the sequence contains at least one consonant or independent
/// vowel, i.e. something a stem can orthographically stand on.
pub fn has_orthographic_base(word: &str) -> bool {
    word.chars().any(|c| {
        matches!(
            classify(c),
            CodepointClass::Consonant | CodepointClass::IndependentVowel
        )
    })
}

/// One Gujarati token: non-empty, NFC, and every scalar either in the
/// Gujarati block or ZWJ/ZWNJ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalizedWord(String);

/// Why a string cannot be a [`NormalizedWord`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordError {
    Empty,
    DisallowedScalar(char),
}

impl fmt::Display for WordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordError::Empty => write!(f, "word is empty"),
            WordError::DisallowedScalar(c) => {
                write!(f, "scalar U+{:04X} is not Gujarati or ZWJ/ZWNJ", *c as u32)
            }
        }
    }
}

impl std::error::Error for WordError {}

impl NormalizedWord {
    /// Normalize `text` to NFC and validate the word invariants.
    pub fn parse(text: &str) -> Result<Self, WordError> {
        let normalized = normalize(text);
        if normalized.is_empty() {
            return Err(WordError::Empty);
        }
        for c in normalized.chars() {
            if !is_gujarati_scalar(c) && c != ZWJ && c != ZWNJ {
                return Err(WordError::DisallowedScalar(c));
            }
        }
        Ok(NormalizedWord(normalized))
    }

    /// Wrap a string the caller has already normalized and validated.
    pub(crate) fn from_validated(s: String) -> Self {
        debug_assert!(NormalizedWord::parse(&s).map(|w| w.0 == s).unwrap_or(false));
        NormalizedWord(s)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Count of Unicode scalar values.
    pub fn scalar_len(&self) -> usize {
        self.0.chars().count()
    }
}

impl fmt::Display for NormalizedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for NormalizedWord {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// True for scalars that may occur inside a token run. Gujarati digits
/// delimit words instead of joining them.
fn is_word_scalar(c: char) -> bool {
    (is_gujarati_scalar(c) && classify(c) != CodepointClass::Digit) || c == ZWJ || c == ZWNJ
}

/// Split text into Gujarati words.
///
/// A word is a maximal run of Gujarati scalars (digits excluded); ZWJ/ZWNJ
/// may appear inside a run but are stripped from its edges. Everything else
/// delimits and is discarded. Each token is NFC-normalized.
pub fn tokenize(text: &str) -> Vec<NormalizedWord> {
    let mut words = Vec::new();
    let mut run = String::new();
    for c in text.chars() {
        if is_word_scalar(c) {
            run.push(c);
        } else {
            flush_run(&mut run, &mut words);
        }
    }
    flush_run(&mut run, &mut words);
    words
}

fn flush_run(run: &mut String, words: &mut Vec<NormalizedWord>) {
    if !run.is_empty() {
        let trimmed = run.trim_matches(|c| c == ZWJ || c == ZWNJ);
        if !trimmed.is_empty() {
            words.push(NormalizedWord::from_validated(normalize(trimmed)));
        }
        run.clear();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_is_fixed_point_on_nfc_text() {
        assert_eq!(normalize("ગુજરાત"), "ગુજરાત");
        assert_eq!(normalize(""), "");
    }

    #[test]
    fn normalize_ja_nukta_sequence() {
        // JA + nukta has no precomposed form; NFC leaves it alone.
        let decomposed = "\u{0A9C}\u{0ABC}";
        assert_eq!(normalize(decomposed), "\u{0A9C}\u{0ABC}");
    }

    #[test]
    fn normalize_reorders_virama_before_nukta() {
        // virama (ccc 9) written before nukta (ccc 7) is not canonical order.
        let unordered = "\u{0A95}\u{0ACD}\u{0ABC}";
        assert_eq!(normalize(unordered), "\u{0A95}\u{0ABC}\u{0ACD}");
    }

    #[test]
    fn classify_spot_checks() {
        assert_eq!(classify('\u{0AB8}'), CodepointClass::Consonant); // સ
        assert_eq!(classify('\u{0AC0}'), CodepointClass::VowelSign); // ી
        assert_eq!(classify('\u{0A82}'), CodepointClass::Anusvara); // ં
        assert_eq!(classify('\u{0A81}'), CodepointClass::Candrabindu);
        assert_eq!(classify('\u{0A83}'), CodepointClass::Visarga);
        assert_eq!(classify('\u{0ACD}'), CodepointClass::Virama);
        assert_eq!(classify('\u{0ABC}'), CodepointClass::Nukta);
        assert_eq!(classify('\u{0AE6}'), CodepointClass::Digit); // ૦
        assert_eq!(classify('\u{0A85}'), CodepointClass::IndependentVowel); // અ
        assert_eq!(classify('\u{0AE0}'), CodepointClass::IndependentVowel);
        assert_eq!(classify('\u{0AE2}'), CodepointClass::VowelSign);
        assert_eq!(classify('\u{0AF9}'), CodepointClass::Consonant);
        assert_eq!(classify('\u{0AD0}'), CodepointClass::Other); // ૐ
        assert_eq!(classify('a'), CodepointClass::Other);
        assert_eq!(classify(ZWJ), CodepointClass::Other);
    }

    #[test]
    fn orthographic_base_cases() {
        assert!(has_orthographic_base("સે"));
        assert!(has_orthographic_base("અ")); // lone independent vowel
        assert!(!has_orthographic_base("ો")); // lone vowel sign
        assert!(!has_orthographic_base(""));
        assert!(!has_orthographic_base("\u{0ABE}\u{0A82}")); // signs only
    }

    #[test]
    fn tokenize_splits_on_non_gujarati() {
        let words: Vec<String> = tokenize("ગુજરાત, ભારત")
            .into_iter()
            .map(|w| w.as_str().to_owned())
            .collect();
        assert_eq!(words, ["ગુજરાત", "ભારત"]);
    }

    #[test]
    fn tokenize_ignores_non_gujarati_text() {
        assert!(tokenize("abc 123").is_empty());
        assert!(tokenize("").is_empty());
    }

    #[test]
    fn tokenize_table_words() {
        let words = tokenize("શહેરી વિસ્તારોમાં");
        assert_eq!(words.len(), 2);
        assert_eq!(words[0].as_str(), "શહેરી");
        assert_eq!(words[1].as_str(), "વિસ્તારોમાં");
        assert_eq!(words[0].scalar_len(), 5);
        assert_eq!(words[1].scalar_len(), 11);
    }

    #[test]
    fn tokenize_strips_edge_joiners_keeps_internal() {
        let words = tokenize("\u{200D}દેશ\u{200C}ને\u{200D} ");
        assert_eq!(words.len(), 1);
        assert_eq!(words[0].as_str(), "દેશ\u{200C}ને");
    }

    #[test]
    fn tokenize_treats_gujarati_digits_as_delimiters() {
        let words: Vec<String> = tokenize("દેશ૧૨ભારત")
            .into_iter()
            .map(|w| w.as_str().to_owned())
            .collect();
        assert_eq!(words, ["દેશ", "ભારત"]);
    }

    #[test]
    fn tokenize_joiner_only_run_yields_nothing() {
        assert!(tokenize("\u{200D}\u{200C}").is_empty());
    }

    #[test]
    fn word_parse_validates() {
        assert_eq!(NormalizedWord::parse(""), Err(WordError::Empty));
        assert_eq!(
            NormalizedWord::parse("દેશx"),
            Err(WordError::DisallowedScalar('x'))
        );
        let w = NormalizedWord::parse("દેશ").unwrap();
        assert_eq!(w.scalar_len(), 3);
    }

    #[test]
    fn word_parse_normalizes_first() {
        let w = NormalizedWord::parse("\u{0A95}\u{0ACD}\u{0ABC}").unwrap();
        assert_eq!(w.as_str(), "\u{0A95}\u{0ABC}\u{0ACD}");
    }
}
