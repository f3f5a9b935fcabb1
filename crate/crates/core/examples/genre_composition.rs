//! Genre composition report: occurrences per genre and their share of the
//! whole, with optional declared percentages from an annotated manifest.

use std::collections::BTreeMap;

use lexbase::report::GenreReport;

fn main() {
    let genres: Vec<(String, u64)> = [
        ("belles-lettres", 300_000),
        ("colloquial", 300_000),
        ("journalistic", 300_000),
        ("scientific", 300_000),
        ("official", 300_000),
        ("drama", 100_000),
    ]
    .into_iter()
    .map(|(g, n)| (g.to_string(), n))
    .collect();

    print!("{}", GenreReport::new(&genres, &BTreeMap::new()).to_tsv());
    println!();

    let declared = BTreeMap::from([
        ("belles-lettres".to_string(), 25.0),
        ("colloquial".to_string(), 20.0),
    ]);
    print!("{}", GenreReport::new(&genres[..2], &declared).to_tsv());
}
