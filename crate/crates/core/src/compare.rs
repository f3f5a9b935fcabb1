//! The cross-genre comparison table: every word of every dictionary in one
//! column, one frequency column per genre, and a final row sum.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::freqdict::FrequencyDictionary;

/// How cells were derived from the source counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableMode {
    /// Absolute counts; used when all source corpora have the same size.
    Raw,
    /// Occurrences per million words, stored in hundredths.
    PerMillion,
}

impl TableMode {
    /// Cell units per displayed unit.
    pub fn scale(self) -> u64 {
        match self {
            TableMode::Raw => 1,
            TableMode::PerMillion => 100,
        }
    }

    fn format_cell(self, units: u64) -> String {
        match self {
            TableMode::Raw => units.to_string(),
            TableMode::PerMillion => format!("{}.{:02}", units / 100, units % 100),
        }
    }

    fn parse_cell(self, s: &str) -> Option<u64> {
        let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
        match self {
            TableMode::Raw => digits(s).then(|| s.parse().ok()).flatten(),
            TableMode::PerMillion => {
                let (int, frac) = s.split_once('.').unwrap_or((s, ""));
                if !digits(int) || frac.len() > 2 || !(frac.is_empty() || digits(frac)) {
                    return None;
                }
                let int: u64 = int.parse().ok()?;
                let frac: u64 = format!("{frac:0<2}").parse().ok()?;
                int.checked_mul(100)?.checked_add(frac)
            }
        }
    }
}

impl fmt::Display for TableMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableMode::Raw => "raw",
            TableMode::PerMillion => "per-million",
        })
    }
}

impl FromStr for TableMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "raw" => Ok(TableMode::Raw),
            "per-million" => Ok(TableMode::PerMillion),
            _ => Err(format!("unknown table mode `{s}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub word: String,
    /// Cells aligned with the table's genre order, in mode units.
    pub counts: Vec<u64>,
    pub sum: u64,
}

impl Row {
    /// Number of genres in which the word occurs.
    pub fn genre_range(&self) -> usize {
        self.counts.iter().filter(|&&c| c > 0).count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonTable {
    mode: TableMode,
    genre_order: Vec<String>,
    rows: Vec<Row>,
}

impl ComparisonTable {
    /// Builds a table from unordered rows, checking every row invariant.
    pub fn from_rows(
        mode: TableMode,
        genre_order: Vec<String>,
        mut rows: Vec<Row>,
    ) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for g in &genre_order {
            if g.is_empty() || g.contains(['\t', '\n', '\r']) {
                return Err(Error::Invalid(format!(
                    "bad genre label `{}`",
                    g.escape_debug()
                )));
            }
            if !seen.insert(g.as_str()) {
                return Err(Error::DuplicateGenre(g.clone()));
            }
        }
        let mut words = BTreeSet::new();
        for row in &rows {
            if row.word.is_empty() || row.word.contains(['\t', '\n', '\r']) {
                return Err(Error::Invalid(format!(
                    "bad word `{}`",
                    row.word.escape_debug()
                )));
            }
            if row.counts.len() != genre_order.len() {
                return Err(Error::Invalid(format!(
                    "row `{}` has {} cells for {} genres",
                    row.word,
                    row.counts.len(),
                    genre_order.len()
                )));
            }
            if row.counts.iter().sum::<u64>() != row.sum {
                return Err(Error::Invalid(format!(
                    "row `{}` has a wrong sum",
                    row.word
                )));
            }
            if !words.insert(row.word.as_str()) {
                return Err(Error::Invalid(format!("duplicate word `{}`", row.word)));
            }
        }
        sort_rows(&mut rows);
        Ok(ComparisonTable {
            mode,
            genre_order,
            rows,
        })
    }

    pub fn mode(&self) -> TableMode {
        self.mode
    }

    pub fn genres(&self) -> &[String] {
        &self.genre_order
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn row(&self, word: &str) -> Option<&Row> {
        self.rows.iter().find(|r| r.word == word)
    }

    pub fn column_totals(&self) -> Vec<u64> {
        let mut totals = vec![0; self.genre_order.len()];
        for row in &self.rows {
            for (t, c) in totals.iter_mut().zip(&row.counts) {
                *t += c;
            }
        }
        totals
    }

    /// A row sum in display units (occurrences, or per-million).
    pub fn display_value(&self, units: u64) -> f64 {
        units as f64 / self.mode.scale() as f64
    }
}

fn sort_rows(rows: &mut [Row]) {
    rows.sort_by(|a, b| b.sum.cmp(&a.sum).then_with(|| a.word.cmp(&b.word)));
}

/// Cell normalization requested from [`merge_with`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Normalization {
    /// Raw counts when all totals agree, per-million otherwise.
    #[default]
    Auto,
    Force(TableMode),
}

/// Merges dictionaries into one comparison table. Columns follow the input
/// order. Raw counts are summed when all totals agree; otherwise every cell
/// is first converted to occurrences per million.
pub fn merge(dicts: &[FrequencyDictionary]) -> Result<ComparisonTable> {
    merge_with(dicts, Normalization::Auto)
}

pub fn merge_with(
    dicts: &[FrequencyDictionary],
    normalization: Normalization,
) -> Result<ComparisonTable> {
    if dicts.is_empty() {
        return Err(Error::NothingToMerge);
    }
    let mut seen = BTreeSet::new();
    for d in dicts {
        if !seen.insert(d.genre()) {
            return Err(Error::DuplicateGenre(d.genre().to_owned()));
        }
    }
    let mode = match normalization {
        Normalization::Force(mode) => mode,
        Normalization::Auto if dicts.windows(2).all(|w| w[0].total() == w[1].total()) => {
            TableMode::Raw
        }
        Normalization::Auto => TableMode::PerMillion,
    };

    let n = dicts.len();
    let mut cells: BTreeMap<&str, Vec<u64>> = BTreeMap::new();
    for (g, d) in dicts.iter().enumerate() {
        for (word, &count) in d.counts() {
            let value = match mode {
                TableMode::Raw => count,
                TableMode::PerMillion => per_million_units(count, d.total()),
            };
            cells.entry(word.as_str()).or_insert_with(|| vec![0; n])[g] = value;
        }
    }
    let mut rows: Vec<Row> = cells
        .into_iter()
        .map(|(word, counts)| Row {
            word: word.to_owned(),
            sum: counts.iter().sum(),
            counts,
        })
        .collect();
    sort_rows(&mut rows);
    Ok(ComparisonTable {
        mode,
        genre_order: dicts.iter().map(|d| d.genre().to_owned()).collect(),
        rows,
    })
}

/// `count / total * 10^6`, in hundredths, rounded half up.
fn per_million_units(count: u64, total: u64) -> u64 {
    let num = count as u128 * 100_000_000 * 2 + total as u128;
    (num / (2 * total as u128)) as u64
}

/// Cell rendering for [`write_table`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CellStyle {
    /// Zero cells written as `0`.
    #[default]
    Canonical,
    /// Zero cells left blank, as in printed tables.
    Blank,
}

pub fn write_table(table: &ComparisonTable, style: CellStyle) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# mode:\t{}", table.mode);
    out.push_str("word");
    for g in &table.genre_order {
        out.push('\t');
        out.push_str(g);
    }
    out.push_str("\tsum\n");
    for row in &table.rows {
        out.push_str(&row.word);
        for &c in &row.counts {
            out.push('\t');
            if !(c == 0 && style == CellStyle::Blank) {
                out.push_str(&table.mode.format_cell(c));
            }
        }
        out.push('\t');
        out.push_str(&table.mode.format_cell(row.sum));
        out.push('\n');
    }
    out
}

/// Parses a table written by [`write_table`] in either cell style. Blank
/// cells read as zero. Rows are re-sorted into canonical order.
pub fn parse_table(text: &str, what: &str) -> Result<ComparisonTable> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    let mut lines = body.split('\n').enumerate();

    let mode = match lines.next() {
        Some((_, line)) => line
            .strip_prefix("# mode:\t")
            .ok_or_else(|| Error::parse(what, 1, "expected `# mode:<TAB>raw|per-million`"))?
            .parse::<TableMode>()
            .map_err(|e| Error::parse(what, 1, e))?,
        None => return Err(Error::parse(what, 1, "missing mode header")),
    };
    let header: Vec<&str> = match lines.next() {
        Some((_, line)) => line.split('\t').collect(),
        None => return Err(Error::parse(what, 2, "missing column header")),
    };
    if header.len() < 2 || header[0] != "word" || header[header.len() - 1] != "sum" {
        return Err(Error::parse(
            what,
            2,
            "unknown header, expected `word<TAB>genre...<TAB>sum`",
        ));
    }
    let genres: Vec<String> = header[1..header.len() - 1]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let mut seen = BTreeSet::new();
    for g in &genres {
        if g.is_empty() || !seen.insert(g.as_str()) {
            return Err(Error::parse(
                what,
                2,
                format!("empty or duplicate genre `{g}`"),
            ));
        }
    }

    let mut rows = Vec::new();
    let mut words = BTreeSet::new();
    for (i, line) in lines {
        let line_no = i + 1;
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != header.len() {
            return Err(Error::parse(
                what,
                line_no,
                format!(
                    "ragged row: {} fields, expected {}",
                    fields.len(),
                    header.len()
                ),
            ));
        }
        let word = fields[0];
        if word.is_empty() {
            return Err(Error::parse(what, line_no, "empty word"));
        }
        let cell = |s: &str| -> Result<u64> {
            if s.is_empty() {
                return Ok(0);
            }
            mode.parse_cell(s)
                .ok_or_else(|| Error::parse(what, line_no, format!("bad {mode} cell `{s}`")))
        };
        let counts = fields[1..fields.len() - 1]
            .iter()
            .map(|s| cell(s))
            .collect::<Result<Vec<u64>>>()?;
        let sum = cell(fields[fields.len() - 1])?;
        if counts.iter().sum::<u64>() != sum {
            return Err(Error::parse(
                what,
                line_no,
                format!("sum of `{word}` does not match its cells"),
            ));
        }
        if !words.insert(word) {
            return Err(Error::parse(
                what,
                line_no,
                format!("duplicate word `{word}`"),
            ));
        }
        rows.push(Row {
            word: word.to_owned(),
            counts,
            sum,
        });
    }
    sort_rows(&mut rows);
    Ok(ComparisonTable {
        mode,
        genre_order: genres,
        rows,
    })
}
