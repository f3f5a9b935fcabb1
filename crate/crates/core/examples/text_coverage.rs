//! How much of each genre's running text a growing lexical base covers.

use lexbase::synth::ZipfText;
use lexbase::{build_dictionary, merge, select, text_coverage, GenreStream, SelectionPolicy};
use lexbase::{tokenize, Cap, TokenizationConfig};

fn main() -> lexbase::Result<()> {
    let generator = ZipfText::new(5_000, 1.05)?;
    let config = TokenizationConfig::default();
    let streams: Vec<GenreStream> = ["fiction", "science", "news"]
        .iter()
        .enumerate()
        .map(|(g, genre)| {
            let text = generator.text(g as u64, 50_000, 7);
            let lemmas = tokenize(&text, &config).map(str::to_lowercase).collect();
            GenreStream::new(*genre, lemmas, Cap::Unlimited)
        })
        .collect();
    let dictionaries: Vec<_> = streams.iter().map(build_dictionary).collect();
    let table = merge(&dictionaries)?;

    println!(
        "{:>6}  {}",
        "size",
        streams
            .iter()
            .map(|s| format!("{:>8}", s.genre))
            .collect::<String>()
    );
    for k in [10, 100, 500, 1000, 2000] {
        let base = select(&table, &SelectionPolicy::top_k(3, k)?)?;
        let row: String = streams
            .iter()
            .map(|s| format!("{:>7.1}%", text_coverage(&base, s) * 100.0))
            .collect();
        println!("{:>6}  {row}", base.len());
    }
    Ok(())
}
