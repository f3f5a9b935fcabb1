//! Naive reference implementations and random instance generators shared by
//! the integration tests. Nothing here calls into the code paths it checks.

#![allow(dead_code)]

use lexbase::compare::{ComparisonTable, Row, TableMode};
use lexbase::{Cutoff, FrequencyDictionary, GenreStream, SelectionPolicy};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random token stream over an alphabet of `w0 .. w{alphabet-1}`.
pub fn random_tokens(rng: &mut impl Rng, max_len: usize, alphabet: usize) -> Vec<String> {
    let len = rng.random_range(0..=max_len);
    (0..len)
        .map(|_| format!("w{}", rng.random_range(0..alphabet)))
        .collect()
}

/// A random multi-genre corpus: 2–6 genres, ≤ 1000 tokens each, alphabet
/// ≤ 20. Half the corpora are trimmed to a common length so merges exercise
/// both table modes.
pub fn random_corpus(rng: &mut impl Rng) -> Vec<GenreStream> {
    let genres = rng.random_range(2..=6);
    let alphabet = rng.random_range(1..=20);
    let mut streams: Vec<Vec<String>> = (0..genres)
        .map(|_| random_tokens(rng, 1000, alphabet))
        .collect();
    if rng.random_bool(0.5) {
        let n = streams.iter().map(Vec::len).min().unwrap();
        for s in &mut streams {
            s.truncate(n);
        }
    }
    streams
        .into_iter()
        .enumerate()
        .map(|(i, lemmas)| GenreStream::new(format!("g{i}"), lemmas, lexbase::Cap::Unlimited))
        .collect()
}

/// Counting by linear scan over a list of pairs.
pub fn naive_count(tokens: &[String]) -> Vec<(String, u64)> {
    let mut counts: Vec<(String, u64)> = Vec::new();
    for t in tokens {
        match counts.iter_mut().find(|(w, _)| w == t) {
            Some((_, c)) => *c += 1,
            None => counts.push((t.clone(), 1)),
        }
    }
    counts
}

/// Selection sort: repeatedly take the largest count, smallest word on ties.
pub fn naive_rank(mut counts: Vec<(String, u64)>) -> Vec<(String, u64)> {
    let mut out = Vec::new();
    while !counts.is_empty() {
        let mut best = 0;
        for i in 1..counts.len() {
            let (w, c) = &counts[i];
            let (bw, bc) = &counts[best];
            if c > bc || (c == bc && w < bw) {
                best = i;
            }
        }
        out.push(counts.remove(best));
    }
    out
}

pub fn naive_coverage(tokens: &[String], k: usize) -> f64 {
    if tokens.is_empty() {
        return 0.0;
    }
    let ranked = naive_rank(naive_count(tokens));
    let covered: u64 = ranked.iter().take(k).map(|(_, c)| c).sum();
    covered as f64 / tokens.len() as f64
}

/// Nearest hundredth of `count / total * 10^6`, halves rounded up, found by
/// checking the floor against the remainder.
pub fn naive_per_million_hundredths(count: u64, total: u64) -> u64 {
    let scaled = count as u128 * 100_000_000;
    let floor = scaled / total as u128;
    let rem = scaled - floor * total as u128;
    (if rem * 2 >= total as u128 {
        floor + 1
    } else {
        floor
    }) as u64
}

/// Rows of the merged table: (word, cells, sum) ordered by sum then word.
pub fn naive_merge(streams: &[GenreStream]) -> (TableMode, Vec<(String, Vec<u64>, u64)>) {
    let totals: Vec<u64> = streams.iter().map(|s| s.len() as u64).collect();
    let per_million = totals.iter().any(|t| *t != totals[0]);
    let counts: Vec<Vec<(String, u64)>> = streams.iter().map(|s| naive_count(&s.lemmas)).collect();
    let mut words: Vec<String> = Vec::new();
    for c in &counts {
        for (w, _) in c {
            if !words.contains(w) {
                words.push(w.clone());
            }
        }
    }
    let rows: Vec<(String, Vec<u64>, u64)> = words
        .into_iter()
        .map(|w| {
            let cells: Vec<u64> = counts
                .iter()
                .zip(&totals)
                .map(|(c, &total)| {
                    let n = c
                        .iter()
                        .find(|(x, _)| *x == w)
                        .map(|(_, n)| *n)
                        .unwrap_or(0);
                    if per_million && n > 0 {
                        naive_per_million_hundredths(n, total)
                    } else {
                        n
                    }
                })
                .collect();
            let sum = cells.iter().sum();
            (w, cells, sum)
        })
        .collect();
    // reuse the ranking oracle on (word, sum) and then look the cells up
    let ranked = naive_rank(rows.iter().map(|(w, _, s)| (w.clone(), *s)).collect());
    let ordered = ranked
        .into_iter()
        .map(|(w, _)| rows.iter().find(|r| r.0 == w).unwrap().clone())
        .collect();
    let mode = if per_million {
        TableMode::PerMillion
    } else {
        TableMode::Raw
    };
    (mode, ordered)
}

/// Filter by genre range, then cut, over oracle-ordered rows.
pub fn naive_select(
    rows: &[(String, Vec<u64>, u64)],
    scale: u64,
    min_genres: usize,
    cutoff: Cutoff,
) -> Vec<String> {
    let mut out = Vec::new();
    for (w, cells, sum) in rows {
        let range = cells.iter().filter(|c| **c != 0).count();
        if range < min_genres {
            continue;
        }
        match cutoff {
            Cutoff::TopK(k) if out.len() >= k.get() => break,
            Cutoff::MinSum(t) if (*sum as f64 / scale as f64) < t => break,
            _ => out.push(w.clone()),
        }
    }
    out
}

pub fn random_dictionary(rng: &mut impl Rng, genre: &str) -> FrequencyDictionary {
    let n = rng.random_range(0..30);
    let counts: Vec<(String, u64)> = (0..n)
        .map(|i| (random_word(rng, i), rng.random_range(1..1_000_000)))
        .collect();
    FrequencyDictionary::from_counts(genre, counts).unwrap()
}

/// Random Cyrillic/Latin word, made unique by the numeric suffix.
pub fn random_word(rng: &mut impl Rng, i: usize) -> String {
    const LETTERS: [char; 10] = ['а', 'б', 'ї', 'є', 'ґ', 'x', 'y', 'z', 'ž', '\''];
    let len = rng.random_range(1..6);
    let mut w: String = (0..len)
        .map(|_| LETTERS[rng.random_range(0..LETTERS.len())])
        .collect();
    w.push_str(&i.to_string());
    w
}

pub fn random_table(rng: &mut impl Rng) -> ComparisonTable {
    let genres = rng.random_range(1..=6);
    let mode = if rng.random_bool(0.5) {
        TableMode::Raw
    } else {
        TableMode::PerMillion
    };
    let rows = (0..rng.random_range(0..40))
        .map(|i| {
            let counts: Vec<u64> = (0..genres)
                .map(|_| {
                    if rng.random_bool(0.3) {
                        0
                    } else {
                        rng.random_range(1..100_000)
                    }
                })
                .collect();
            Row {
                word: random_word(rng, i),
                sum: counts.iter().sum(),
                counts,
            }
        })
        .collect();
    ComparisonTable::from_rows(
        mode,
        (0..genres).map(|g| format!("genre {g}")).collect(),
        rows,
    )
    .unwrap()
}

pub fn random_policy(rng: &mut impl Rng, genres: usize) -> SelectionPolicy {
    let m = rng.random_range(1..=genres);
    if rng.random_bool(0.5) {
        SelectionPolicy::top_k(m, rng.random_range(1..50)).unwrap()
    } else {
        SelectionPolicy::min_sum(m, rng.random_range(1..5000) as f64 / 4.0).unwrap()
    }
}
