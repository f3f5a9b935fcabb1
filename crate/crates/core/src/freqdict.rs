//! Per-genre frequency dictionaries, rank lists and coverage curves.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::corpus::GenreStream;
use crate::error::{Error, Result};

/// Absolute lemma counts of one genre corpus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrequencyDictionary {
    genre: String,
    counts: BTreeMap<String, u64>,
    total: u64,
}

impl FrequencyDictionary {
    /// Validates counts (all ≥ 1) and derives the total.
    pub fn from_counts<S: Into<String>>(
        genre: impl Into<String>,
        counts: impl IntoIterator<Item = (S, u64)>,
    ) -> Result<Self> {
        let genre = genre.into();
        check_label(&genre, "genre label")?;
        let mut map = BTreeMap::new();
        for (lemma, count) in counts {
            let lemma = lemma.into();
            check_label(&lemma, "lemma")?;
            if count == 0 {
                return Err(Error::Invalid(format!("lemma `{lemma}` has count 0")));
            }
            if map.insert(lemma.clone(), count).is_some() {
                return Err(Error::Invalid(format!("duplicate lemma `{lemma}`")));
            }
        }
        let total = map.values().sum();
        Ok(FrequencyDictionary {
            genre,
            counts: map,
            total,
        })
    }

    pub fn genre(&self) -> &str {
        &self.genre
    }

    pub fn counts(&self) -> &BTreeMap<String, u64> {
        &self.counts
    }

    pub fn count(&self, lemma: &str) -> u64 {
        self.counts.get(lemma).copied().unwrap_or(0)
    }

    /// Number of word occurrences.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Number of distinct lemmas.
    pub fn vocabulary_size(&self) -> usize {
        self.counts.len()
    }

    pub fn rank_list(&self) -> RankList {
        let mut entries: Vec<(String, u64)> =
            self.counts.iter().map(|(w, c)| (w.clone(), *c)).collect();
        entries.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
        RankList { entries }
    }
}

fn check_label(s: &str, what: &str) -> Result<()> {
    if s.is_empty() || s.contains(['\t', '\n', '\r']) {
        Err(Error::Invalid(format!(
            "{what} `{}` is empty or contains a tab or line break",
            s.escape_debug()
        )))
    } else {
        Ok(())
    }
}

/// Dictionary entries ordered by count descending, then lemma ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankList {
    pub entries: Vec<(String, u64)>,
}

impl RankList {
    /// Running sums of the counts: `prefix[k]` covers the top `k` entries.
    pub fn cumulative(&self) -> Vec<u64> {
        let mut acc = 0;
        std::iter::once(0)
            .chain(self.entries.iter().map(|(_, c)| {
                acc += c;
                acc
            }))
            .collect()
    }
}

/// Counts the lemmas of a (capped) genre stream.
pub fn build_dictionary(stream: &GenreStream) -> FrequencyDictionary {
    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
    // hashing first keeps the ordered map small on long Zipfian streams
    let mut hashed: std::collections::HashMap<&str, u64> = std::collections::HashMap::new();
    for lemma in &stream.lemmas {
        *hashed.entry(lemma.as_str()).or_insert(0) += 1;
    }
    for (lemma, count) in hashed {
        counts.insert(lemma.to_owned(), count);
    }
    FrequencyDictionary {
        genre: stream.genre.clone(),
        total: stream.lemmas.len() as u64,
        counts,
    }
}

/// Fraction of running words covered by the `k` most frequent lemmas, for
/// each `k` in `ks`. An empty dictionary covers nothing.
pub fn coverage_curve(dict: &FrequencyDictionary, ks: &[usize]) -> Result<Vec<f64>> {
    if ks.first() == Some(&0) || ks.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::CoverageRanks(ks.to_vec()));
    }
    if dict.total == 0 {
        return Ok(vec![0.0; ks.len()]);
    }
    let prefix = dict.rank_list().cumulative();
    let total = dict.total as f64;
    Ok(ks
        .iter()
        .map(|&k| prefix[k.min(prefix.len() - 1)] as f64 / total)
        .collect())
}

/// Serializes a dictionary in its canonical TSV form.
pub fn write_dictionary(dict: &FrequencyDictionary) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# genre:\t{}", dict.genre);
    let _ = writeln!(out, "# total:\t{}", dict.total);
    for (lemma, count) in dict.rank_list().entries {
        let _ = writeln!(out, "{lemma}\t{count}");
    }
    out
}

/// Parses the TSV written by [`write_dictionary`].
pub fn parse_dictionary(text: &str, what: &str) -> Result<FrequencyDictionary> {
    let line_count = text.split('\n').count();
    let mut lines = text.split('\n').enumerate();
    let mut header = |key: &str| -> Result<String> {
        let (i, line) = lines
            .next()
            .ok_or_else(|| Error::parse(what, 1, "missing header"))?;
        line.strip_prefix(&format!("# {key}:\t"))
            .map(str::to_owned)
            .ok_or_else(|| Error::parse(what, i + 1, format!("expected `# {key}:<TAB>...`")))
    };
    let genre = header("genre")?;
    if genre.is_empty() {
        return Err(Error::parse(what, 1, "empty genre label"));
    }
    let declared_total: u64 = header("total")?
        .parse()
        .map_err(|_| Error::parse(what, 2, "total is not a non-negative integer"))?;

    let mut counts = BTreeMap::new();
    let mut sum: u64 = 0;
    for (i, line) in lines {
        let line_no = i + 1;
        if line.is_empty() {
            // only the final newline may produce an empty line
            if i + 1 == line_count {
                break;
            }
            return Err(Error::parse(what, line_no, "empty line"));
        }
        let (lemma, count) = line
            .split_once('\t')
            .ok_or_else(|| Error::parse(what, line_no, "expected `lemma<TAB>count`"))?;
        if lemma.is_empty() {
            return Err(Error::parse(what, line_no, "empty lemma"));
        }
        let count: u64 = count
            .parse()
            .map_err(|_| Error::parse(what, line_no, format!("bad count `{count}`")))?;
        if count == 0 {
            return Err(Error::parse(what, line_no, "count must be positive"));
        }
        if counts.insert(lemma.to_owned(), count).is_some() {
            return Err(Error::parse(
                what,
                line_no,
                format!("duplicate lemma `{lemma}`"),
            ));
        }
        sum += count;
    }
    if sum != declared_total {
        return Err(Error::parse(
            what,
            2,
            format!("declared total {declared_total} differs from the sum of counts {sum}"),
        ));
    }
    Ok(FrequencyDictionary {
        genre,
        counts,
        total: sum,
    })
}
