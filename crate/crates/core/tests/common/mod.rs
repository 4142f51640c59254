//! Shared test fixtures and reference implementations. Everything here is
//! deliberately independent of the trie-backed lookup it is used to check.

#![allow(dead_code)]

use gujstem::lexicon::{SuffixEntry, SuffixLexicon};
use gujstem::script::NormalizedWord;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

/// Published golden rows: (word, stem, removed suffix).
pub const GOLDEN_ROWS: [(&str, &str, &str); 9] = [
    ("શહેરી", "શહેર", "ી"),
    ("વિસ્તારોમાં", "વિસ્તાર", "ોમાં"),
    ("ભાજપનો", "ભાજપ", "નો"),
    ("સફાથો", "સફ", "ાથો"),
    ("દેશને", "દેશ", "ને"),
    ("બુટાસિંહને", "બુટાસિંહ", "ને"),
    ("અદાલતને", "અદાલત", "ને"),
    ("અસીલોએ", "અસીલ", "ોએ"),
    ("વકીલોની", "વકીલ", "ોની"),
];

/// The documented over-stemming case: word, over-stemmed output, suffix.
pub const OVER_STEMMING_CASE: (&str, &str, &str) = ("સેવાનો", "સે", "વાનો");

/// Every word used anywhere in the test fixtures.
pub fn fixture_words() -> Vec<NormalizedWord> {
    let mut words: Vec<String> = GOLDEN_ROWS.iter().map(|r| r.0.to_owned()).collect();
    words.push(OVER_STEMMING_CASE.0.to_owned());
    for w in ["દેશ", "થી", "ભારત", "ગુજરાત", "ગુજરાતમાંથી", "સફાથોના", "ોના", "છોકરીઓને"] {
        words.push(w.to_owned());
    }
    // Suffixes themselves are words too.
    for entry in SuffixLexicon::seed().entries() {
        words.push(entry.text().to_owned());
    }
    words
        .iter()
        .map(|w| NormalizedWord::parse(w).unwrap())
        .collect()
}

/// Reference longest-match: scan the length-descending suffix list and take
/// the first strict suffix whose removal the guard accepts.
pub fn linear_scan_longest_match<'a, 'w>(
    lexicon: &'a SuffixLexicon,
    word: &'w str,
    guard: impl Fn(&str) -> bool,
) -> Option<(&'a SuffixEntry, &'w str)> {
    let word_len = word.chars().count();
    for entry in lexicon.entries_longest_first() {
        if entry.scalar_len() < word_len && word.ends_with(entry.text()) {
            let stem = &word[..word.len() - entry.text().len()];
            if guard(stem) {
                return Some((entry, stem));
            }
        }
    }
    None
}

/// Deterministic generator of plausible Gujarati words, biased so that many
/// of them end in (or nearly end in) real lexicon suffixes.
pub struct WordGen {
    suffixes: Vec<String>,
    rng: ChaCha8Rng,
}

const CONSONANTS: &[char] = &[
    'ક', 'ખ', 'ગ', 'ઘ', 'ચ', 'છ', 'જ', 'ઝ', 'ટ', 'ઠ', 'ડ', 'ઢ', 'ણ', 'ત', 'થ', 'દ', 'ધ',
    'ન', 'પ', 'ફ', 'બ', 'ભ', 'મ', 'ય', 'ર', 'લ', 'ળ', 'વ', 'શ', 'ષ', 'સ', 'હ',
];
const INDEPENDENT_VOWELS: &[char] = &['અ', 'આ', 'ઇ', 'ઈ', 'ઉ', 'ઊ', 'એ', 'ઐ', 'ઓ', 'ઔ'];
const VOWEL_SIGNS: &[char] = &['ા', 'િ', 'ી', 'ુ', 'ૂ', 'ૃ', 'ે', 'ૈ', 'ો', 'ૌ'];

impl WordGen {
    pub fn new(seed: u64, lexicon: &SuffixLexicon) -> Self {
        WordGen {
            suffixes: lexicon.entries().iter().map(|e| e.text().to_owned()).collect(),
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn word(&mut self) -> NormalizedWord {
        let rng = &mut self.rng;
        let mut s = String::new();
        for _ in 0..rng.gen_range(1..=4) {
            if rng.gen_bool(0.15) {
                s.push(*INDEPENDENT_VOWELS.choose(rng).unwrap());
            } else {
                s.push(*CONSONANTS.choose(rng).unwrap());
                if rng.gen_bool(0.05) {
                    s.push('\u{0ABC}'); // nukta
                }
                if rng.gen_bool(0.15) {
                    s.push('\u{0ACD}'); // virama: conjunct follows
                    s.push(*CONSONANTS.choose(rng).unwrap());
                }
                if rng.gen_bool(0.6) {
                    s.push(*VOWEL_SIGNS.choose(rng).unwrap());
                }
                if rng.gen_bool(0.1) {
                    s.push('\u{0A82}'); // anusvara
                }
            }
        }
        // Half the words get a real suffix appended; a few of those gain one
        // trailing scalar so they just miss the suffix.
        if rng.gen_bool(0.5) {
            s.push_str(self.suffixes.choose(rng).unwrap());
            if rng.gen_bool(0.1) {
                s.push(*CONSONANTS.choose(rng).unwrap());
            }
        }
        // Occasional word-internal joiner.
        if rng.gen_bool(0.05) {
            let positions: Vec<usize> = s.char_indices().map(|(i, _)| i).skip(1).collect();
            if let Some(&pos) = positions.choose(rng) {
                let joiner = if rng.gen_bool(0.5) { '\u{200D}' } else { '\u{200C}' };
                s.insert(pos, joiner);
            }
        }
        NormalizedWord::parse(&s).expect("generator emits valid words")
    }

    pub fn words(&mut self, n: usize) -> Vec<NormalizedWord> {
        (0..n).map(|_| self.word()).collect()
    }
}
