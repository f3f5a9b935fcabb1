//! Genre-balanced frequency dictionaries and lexical base extraction.
//!
//! The crate follows one corpus-statistics workflow:
//!
//! 1. [`corpus`]: read genre-labeled documents, tokenize, lemmatize and cap
//!    every genre at the same number of word occurrences (300 000 by default).
//! 2. [`freqdict`]: count lemmas per genre, rank them, compute coverage curves.
//! 3. [`compare`]: merge the per-genre dictionaries into one comparison table
//!    (word, one column per genre, row sum).
//! 4. [`base`]: select the lexical base by frequency and by the number of
//!    genres a word occurs in, and measure how much running text it covers.
//! 5. [`scheme`]: tag the base with user-supplied semantic classification,
//!    summarize it over the top-level conceptual fields and list pair gaps.
//!
//! Every stage has a plain TSV file format so the stages can be chained from
//! the `lexbase` command line tool as well as in process (see [`pipeline`]).
//!
//! ```
//! use lexbase::{compare, freqdict, GenreStream, SelectionPolicy};
//!
//! let a = freqdict::build_dictionary(&GenreStream::from_lemmas("news", "a b a c"));
//! let b = freqdict::build_dictionary(&GenreStream::from_lemmas("science", "a c c d"));
//! let table = compare::merge(&[a, b]).unwrap();
//! let base = lexbase::select(&table, &SelectionPolicy::top_k(2, 10).unwrap()).unwrap();
//! assert_eq!(base.words, ["a", "c"]);
//! ```

pub mod base;
pub mod cli;
pub mod compare;
pub mod corpus;
mod error;
pub mod freqdict;
pub mod pipeline;
pub mod report;
pub mod scheme;
pub mod synth;

pub use base::{select, text_coverage, Cutoff, LexicalBase, SelectionPolicy};
pub use compare::{merge, ComparisonTable, TableMode};
pub use corpus::{
    ingest, normalize, tokenize, Cap, Document, GenreStream, LemmaTable, Manifest,
    TokenizationConfig,
};
pub use error::{Error, Result};
pub use freqdict::{build_dictionary, coverage_curve, FrequencyDictionary, RankList};
pub use scheme::{field_synopsis, gap_report, tag, PairList, SemanticScheme};
