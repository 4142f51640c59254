//! Rule-based suffix-stripping stemmer for Gujarati.
//!
//! The stemmer removes the longest matching suffix from a curated lexicon,
//! guarded so that a stem never degenerates to a bare vowel sign. On top of
//! that sit a tokenizer for Gujarati text streams, a stemming-quality
//! evaluator (over-/under-stemming taxonomy) and corpus statistics.
//!
//! ```
//! use gujstem::lexicon::SuffixLexicon;
//! use gujstem::script::NormalizedWord;
//! use gujstem::stemmer::StemPolicy;
//!
//! let policy = StemPolicy::with_defaults(SuffixLexicon::seed());
//! let word = NormalizedWord::parse("શહેરી").unwrap();
//! let result = policy.stem(&word);
//! assert_eq!(result.stem(), "શહેર");
//! ```

pub mod eval;
pub mod lexicon;
pub mod script;
pub mod stemmer;

pub use eval::{CorpusStats, EvalReport, GoldPair, Verdict};
pub use lexicon::{SuffixEntry, SuffixLexicon, SuffixSource};
pub use script::NormalizedWord;
pub use stemmer::{Guard, StemMode, StemPolicy, StemResult};
