//! End-to-end run at corpus scale: write five synthetic genre corpora,
//! then ingest, count, merge, select and measure coverage.

use std::fs;
use std::time::Instant;

use lexbase::corpus::DEFAULT_GENRES;
use lexbase::pipeline::{run_pipeline, PipelineOptions};
use lexbase::report::GenreReport;
use lexbase::synth::ZipfText;
use lexbase::Manifest;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let tokens: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(300_000);
    let tmp = tempfile::tempdir()?;
    let dir = tmp.path();

    let generator = ZipfText::new(20_000, 1.07)?;
    let mut manifest = String::new();
    for (g, genre) in DEFAULT_GENRES.iter().enumerate() {
        fs::write(
            dir.join(format!("{genre}.txt")),
            generator.text(g as u64, tokens, 1),
        )?;
        manifest.push_str(&format!("{genre}\t{genre}.txt\n"));
    }
    fs::write(dir.join("manifest.tsv"), manifest)?;

    let started = Instant::now();
    let manifest = Manifest::load(&dir.join("manifest.tsv"))?;
    let out = run_pipeline(&manifest, &PipelineOptions::default())?;
    println!("pipeline: {:.2}s", started.elapsed().as_secs_f64());

    print!(
        "{}",
        GenreReport::from_dictionaries(&out.dictionaries).to_tsv()
    );
    println!(
        "table rows: {}, base ({}): {} words",
        out.table.rows().len(),
        out.base.policy,
        out.base.len()
    );
    for (genre, coverage) in &out.coverage {
        println!("  {genre:<15} {:.1}%", coverage * 100.0);
    }
    Ok(())
}
