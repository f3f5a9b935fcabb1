//! Ingest a small two-genre corpus from a manifest, build one frequency
//! dictionary per genre and print its rank list and coverage curve.

use std::fs;

use lexbase::freqdict::write_dictionary;
use lexbase::{
    build_dictionary, coverage_curve, ingest, Cap, LemmaTable, Manifest, TokenizationConfig,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let tmp = tempfile::tempdir()?;
    let dir = tmp.path();
    fs::write(
        dir.join("tale.txt"),
        "Жив собі дід. Дід мав кота, і кіт мав діда.",
    )?;
    fs::write(
        dir.join("news.txt"),
        "Уряд ухвалив рішення. Рішення набуває чинності.",
    )?;
    fs::write(
        dir.join("manifest.tsv"),
        "belles-lettres\ttale.txt\njournalistic\tnews.txt\n",
    )?;

    let manifest = Manifest::load(&dir.join("manifest.tsv"))?;
    let ingested = ingest(
        &manifest,
        &TokenizationConfig::default(),
        &LemmaTable::new(),
        Cap::limit(12).unwrap(),
    )?;
    for warning in &ingested.warnings {
        eprintln!("warning: {warning}");
    }

    for stream in ingested.streams.values() {
        let dict = build_dictionary(stream);
        print!("{}", write_dictionary(&dict));
        let ks = [1, 2, 3, 5, 8];
        let curve = coverage_curve(&dict, &ks)?;
        for (k, c) in ks.iter().zip(curve) {
            println!("  top {k:>2}: {:.1}%", c * 100.0);
        }
        println!();
    }
    Ok(())
}
