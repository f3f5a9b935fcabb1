//! Synthetic Zipfian corpora for benchmarks, tests and demos.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Zipf};

use crate::error::{Error, Result};

const ALPHABET: [char; 33] = [
    'а', 'б', 'в', 'г', 'ґ', 'д', 'е', 'є', 'ж', 'з', 'и', 'і', 'ї', 'й', 'к', 'л', 'м', 'н', 'о',
    'п', 'р', 'с', 'т', 'у', 'ф', 'х', 'ц', 'ч', 'ш', 'щ', 'ь', 'ю', 'я',
];

/// Deterministic pseudo-word for a vocabulary index (bijective base-33,
/// at least two letters).
pub fn word(index: usize) -> String {
    let mut n = index + ALPHABET.len() + 1;
    let mut letters = Vec::new();
    while n > 0 {
        n -= 1;
        letters.push(ALPHABET[n % ALPHABET.len()]);
        n /= ALPHABET.len();
    }
    letters.iter().rev().collect()
}

/// Generates running text whose word ranks follow a Zipf distribution.
///
/// Every genre shares the same vocabulary, but each genre shuffles ranks
/// inside blocks of `block` words so genre rank lists differ locally.
#[derive(Clone, Debug)]
pub struct ZipfText {
    vocabulary: usize,
    exponent: f64,
    block: usize,
}

impl ZipfText {
    pub fn new(vocabulary: usize, exponent: f64) -> Result<Self> {
        if vocabulary == 0 || !(exponent.is_finite() && exponent > 0.0) {
            return Err(Error::Invalid(format!(
                "bad Zipf parameters: vocabulary {vocabulary}, exponent {exponent}"
            )));
        }
        Ok(ZipfText {
            vocabulary,
            exponent,
            block: 8,
        })
    }

    /// Text of exactly `tokens` words with sentence punctuation and
    /// capitalized sentence starts.
    pub fn text(&self, genre_index: u64, tokens: usize, seed: u64) -> String {
        let mut rng =
            ChaCha8Rng::seed_from_u64(seed ^ genre_index.wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let mut rank_to_word: Vec<usize> = (0..self.vocabulary).collect();
        for chunk in rank_to_word.chunks_mut(self.block) {
            chunk.shuffle(&mut rng);
        }
        let zipf = Zipf::new(self.vocabulary as f64, self.exponent).expect("validated parameters");
        let words: Vec<String> = (0..self.vocabulary).map(word).collect();

        let mut out = String::with_capacity(tokens * 8);
        let mut sentence = 0usize;
        for i in 0..tokens {
            let rank = zipf.sample(&mut rng) as usize - 1;
            let w = &words[rank_to_word[rank]];
            if sentence == 0 {
                let mut chars = w.chars();
                if let Some(first) = chars.next() {
                    out.extend(first.to_uppercase());
                    out.push_str(chars.as_str());
                }
            } else {
                out.push_str(w);
            }
            sentence += 1;
            if i + 1 == tokens {
                out.push('.');
            } else if sentence >= 4 && rng.random_range(0..10) == 0 {
                out.push_str(". ");
                sentence = 0;
            } else if rng.random_range(0..15) == 0 {
                out.push_str(", ");
            } else {
                out.push(' ');
            }
        }
        out
    }
}
