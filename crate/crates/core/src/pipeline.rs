//! The whole chain in one call: ingest, one dictionary per genre, merge,
//! select, and coverage of the base on every genre stream.

use rayon::prelude::*;

use crate::base::{select, text_coverage, LexicalBase, SelectionPolicy};
use crate::compare::{merge, ComparisonTable};
use crate::corpus::{ingest, Cap, Ingested, LemmaTable, Manifest, TokenizationConfig};
use crate::error::Result;
use crate::freqdict::{build_dictionary, FrequencyDictionary};

#[derive(Clone, Debug)]
pub struct PipelineOptions {
    pub tokenization: TokenizationConfig,
    pub lemmas: LemmaTable,
    pub cap: Cap,
    /// `None` selects words present in every genre, top 1389.
    pub policy: Option<SelectionPolicy>,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            tokenization: TokenizationConfig::default(),
            lemmas: LemmaTable::new(),
            cap: Cap::default(),
            policy: None,
        }
    }
}

/// Default base size of the top-k cutoff.
pub const DEFAULT_TOP_K: usize = 1389;

#[derive(Clone, Debug)]
pub struct PipelineOutput {
    pub ingested: Ingested,
    /// One dictionary per genre, in manifest order of first appearance.
    pub dictionaries: Vec<FrequencyDictionary>,
    pub table: ComparisonTable,
    pub base: LexicalBase,
    /// Text coverage of the base on each genre's stream.
    pub coverage: Vec<(String, f64)>,
}

pub fn run_pipeline(manifest: &Manifest, options: &PipelineOptions) -> Result<PipelineOutput> {
    let ingested = ingest(
        manifest,
        &options.tokenization,
        &options.lemmas,
        options.cap,
    )?;
    let genres = manifest.genres();
    let dictionaries: Vec<FrequencyDictionary> = genres
        .par_iter()
        .map(|g| build_dictionary(&ingested.streams[*g]))
        .collect();
    let table = merge(&dictionaries)?;
    let policy = match options.policy {
        Some(p) => p,
        None => SelectionPolicy::top_k(genres.len(), DEFAULT_TOP_K)?,
    };
    let base = select(&table, &policy)?;
    let coverage = genres
        .par_iter()
        .map(|g| (g.to_string(), text_coverage(&base, &ingested.streams[*g])))
        .collect();
    Ok(PipelineOutput {
        ingested,
        dictionaries,
        table,
        base,
        coverage,
    })
}
