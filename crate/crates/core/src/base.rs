//! Lexical base selection by frequency and genre range, and text coverage of
//! a selected base.

use std::collections::{BTreeSet, HashSet};
use std::fmt::{self, Write as _};
use std::num::NonZeroUsize;
use std::str::FromStr;

use sha2::{Digest, Sha256};

use crate::compare::{write_table, CellStyle, ComparisonTable};
use crate::corpus::GenreStream;
use crate::error::{Error, Result};

/// Where the ranked, range-filtered word list is cut.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Cutoff {
    /// Keep the first `k` eligible rows.
    TopK(NonZeroUsize),
    /// Keep eligible rows whose sum (in table display units) reaches the threshold.
    MinSum(f64),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SelectionPolicy {
    /// Number of genres in which a word must occur.
    pub min_genres: usize,
    pub cutoff: Cutoff,
}

impl SelectionPolicy {
    pub fn top_k(min_genres: usize, k: usize) -> Result<Self> {
        let k =
            NonZeroUsize::new(k).ok_or_else(|| Error::Policy("top_k must be positive".into()))?;
        Self::new(min_genres, Cutoff::TopK(k))
    }

    pub fn min_sum(min_genres: usize, threshold: f64) -> Result<Self> {
        Self::new(min_genres, Cutoff::MinSum(threshold))
    }

    pub fn new(min_genres: usize, cutoff: Cutoff) -> Result<Self> {
        if min_genres == 0 {
            return Err(Error::Policy("min_genres must be at least 1".into()));
        }
        if let Cutoff::MinSum(t) = cutoff {
            if !(t.is_finite() && t > 0.0) {
                return Err(Error::Policy(format!("min_sum must be positive, got {t}")));
            }
        }
        Ok(SelectionPolicy { min_genres, cutoff })
    }
}

impl fmt::Display for SelectionPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rank_key=sum;min_genres={}", self.min_genres)?;
        match self.cutoff {
            Cutoff::TopK(k) => write!(f, ";top_k={k}"),
            Cutoff::MinSum(t) => write!(f, ";min_sum={t}"),
        }
    }
}

impl FromStr for SelectionPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut min_genres = None;
        let mut cutoff = None;
        for part in s.split(';') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Policy(format!("expected key=value, got `{part}`")))?;
            let bad = || Error::Policy(format!("bad value for {key}: `{value}`"));
            let set_cutoff = |cutoff: &mut Option<Cutoff>, c: Cutoff| {
                if cutoff.replace(c).is_some() {
                    Err(Error::Policy("more than one cutoff".into()))
                } else {
                    Ok(())
                }
            };
            match key {
                "rank_key" if value == "sum" => {}
                "min_genres" => min_genres = Some(value.parse().map_err(|_| bad())?),
                "top_k" => {
                    set_cutoff(&mut cutoff, Cutoff::TopK(value.parse().map_err(|_| bad())?))?
                }
                "min_sum" => set_cutoff(
                    &mut cutoff,
                    Cutoff::MinSum(value.parse().map_err(|_| bad())?),
                )?,
                _ => return Err(Error::Policy(format!("unknown setting `{part}`"))),
            }
        }
        let min_genres = min_genres.ok_or_else(|| Error::Policy("missing min_genres".into()))?;
        let cutoff = cutoff.ok_or_else(|| Error::Policy("missing top_k or min_sum".into()))?;
        SelectionPolicy::new(min_genres, cutoff)
    }
}

/// Selected words in table order, with the policy that chose them.
#[derive(Clone, Debug, PartialEq)]
pub struct LexicalBase {
    pub words: Vec<String>,
    pub policy: SelectionPolicy,
    /// Fingerprint of the comparison table the words were selected from.
    pub source: String,
}

impl LexicalBase {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn word_set(&self) -> HashSet<&str> {
        self.words.iter().map(String::as_str).collect()
    }
}

/// Short content hash of a table's canonical serialization.
pub fn table_fingerprint(table: &ComparisonTable) -> String {
    let digest = Sha256::digest(write_table(table, CellStyle::Canonical).as_bytes());
    digest[..8].iter().fold(String::new(), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

/// Keeps rows that occur in at least `min_genres` genres, then applies the
/// cutoff in table order.
pub fn select(table: &ComparisonTable, policy: &SelectionPolicy) -> Result<LexicalBase> {
    let n = table.genres().len();
    if policy.min_genres > n {
        return Err(Error::Policy(format!(
            "min_genres {} exceeds the table's {n} genres",
            policy.min_genres
        )));
    }
    let eligible = table
        .rows()
        .iter()
        .filter(|r| r.genre_range() >= policy.min_genres);
    let words = match policy.cutoff {
        Cutoff::TopK(k) => eligible.take(k.get()).map(|r| r.word.clone()).collect(),
        Cutoff::MinSum(t) => eligible
            .take_while(|r| table.display_value(r.sum) >= t)
            .map(|r| r.word.clone())
            .collect(),
    };
    Ok(LexicalBase {
        words,
        policy: *policy,
        source: table_fingerprint(table),
    })
}

/// Fraction of the stream's running words whose lemma is in the base.
pub fn text_coverage(base: &LexicalBase, stream: &GenreStream) -> f64 {
    if stream.is_empty() {
        return 0.0;
    }
    let words = base.word_set();
    let covered = stream
        .lemmas
        .iter()
        .filter(|l| words.contains(l.as_str()))
        .count();
    covered as f64 / stream.len() as f64
}

pub fn write_base(base: &LexicalBase) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# policy:\t{}", base.policy);
    let _ = writeln!(out, "# source:\t{}", base.source);
    for w in &base.words {
        out.push_str(w);
        out.push('\n');
    }
    out
}

pub fn parse_base(text: &str, what: &str) -> Result<LexicalBase> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    let mut lines = body.split('\n').enumerate();
    let policy = match lines.next() {
        Some((_, l)) => l
            .strip_prefix("# policy:\t")
            .ok_or_else(|| Error::parse(what, 1, "expected `# policy:<TAB>...`"))?
            .parse::<SelectionPolicy>()
            .map_err(|e| Error::parse(what, 1, e.to_string()))?,
        None => return Err(Error::parse(what, 1, "missing policy header")),
    };
    let source = match lines.next() {
        Some((_, l)) => l
            .strip_prefix("# source:\t")
            .ok_or_else(|| Error::parse(what, 2, "expected `# source:<TAB>...`"))?
            .to_owned(),
        None => return Err(Error::parse(what, 2, "missing source header")),
    };
    let mut words = Vec::new();
    let mut seen = BTreeSet::new();
    for (i, line) in lines {
        if line.is_empty() || line.contains('\t') {
            return Err(Error::parse(what, i + 1, "expected one word per line"));
        }
        if !seen.insert(line) {
            return Err(Error::parse(
                what,
                i + 1,
                format!("duplicate word `{line}`"),
            ));
        }
        words.push(line.to_owned());
    }
    Ok(LexicalBase {
        words,
        policy,
        source,
    })
}
