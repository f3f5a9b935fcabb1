//! Percentage rendering and the genre-composition report.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::corpus::Manifest;
use crate::freqdict::FrequencyDictionary;

/// Splits `units` among `counts` proportionally using largest remainders, so
/// the parts always add up to `units` exactly (or are all zero when the
/// counts are). Equal remainders favour earlier positions.
pub fn apportion(counts: &[u64], units: u64) -> Vec<u64> {
    let total: u128 = counts.iter().map(|&c| c as u128).sum();
    if total == 0 {
        return vec![0; counts.len()];
    }
    let mut parts = Vec::with_capacity(counts.len());
    let mut remainders = Vec::with_capacity(counts.len());
    for (i, &c) in counts.iter().enumerate() {
        let scaled = c as u128 * units as u128;
        parts.push((scaled / total) as u64);
        remainders.push((scaled % total, i));
    }
    let assigned: u64 = parts.iter().sum();
    remainders.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    for &(_, i) in remainders.iter().take((units - assigned) as usize) {
        parts[i] += 1;
    }
    parts
}

/// Renders tenths as a one-decimal number, `250` → `25.0`.
pub fn format_tenths(tenths: u64) -> String {
    format!("{}.{}", tenths / 10, tenths % 10)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenreShare {
    pub genre: String,
    pub occurrences: u64,
    /// Share of the grand total in tenths of a percent.
    pub tenths: u64,
}

/// Corpus composition by genre, one row per genre.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenreReport {
    pub rows: Vec<GenreShare>,
    pub total: u64,
    pub note: Option<String>,
}

impl GenreReport {
    /// Builds the report from `(genre, occurrences)` pairs in display order.
    /// `declared` holds percentages announced for the corpus (e.g. in a
    /// manifest); a note is attached when they do not add up to 100.
    pub fn new(genres: &[(String, u64)], declared: &BTreeMap<String, f64>) -> Self {
        let counts: Vec<u64> = genres.iter().map(|(_, n)| *n).collect();
        let tenths = apportion(&counts, 1000);
        let rows = genres
            .iter()
            .zip(tenths)
            .map(|((genre, occurrences), tenths)| GenreShare {
                genre: genre.clone(),
                occurrences: *occurrences,
                tenths,
            })
            .collect();
        let declared_sum: f64 = declared.values().sum();
        let note = (!declared.is_empty() && (declared_sum - 100.0).abs() > 1e-6).then(|| {
            format!(
                "declared genre percentages sum to {}, not 100",
                (declared_sum * 1000.0).round() / 1000.0
            )
        });
        GenreReport {
            rows,
            total: counts.iter().sum(),
            note,
        }
    }

    pub fn from_dictionaries(dicts: &[FrequencyDictionary]) -> Self {
        let genres: Vec<(String, u64)> = dicts
            .iter()
            .map(|d| (d.genre().to_owned(), d.total()))
            .collect();
        Self::new(&genres, &BTreeMap::new())
    }

    /// Declared percentages of an annotated manifest, first value per genre.
    pub fn declared_percentages(manifest: &Manifest) -> BTreeMap<String, f64> {
        let mut declared = BTreeMap::new();
        for e in &manifest.entries {
            if let Some(p) = e.declared_percent {
                declared.entry(e.genre.clone()).or_insert(p);
            }
        }
        declared
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("genre\toccurrences\tpercent\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{}\t{}\t{}",
                r.genre,
                r.occurrences,
                format_tenths(r.tenths)
            );
        }
        let total_tenths = if self.total == 0 { 0 } else { 1000 };
        let _ = writeln!(
            out,
            "total\t{}\t{}",
            self.total,
            format_tenths(total_tenths)
        );
        if let Some(note) = &self.note {
            let _ = writeln!(out, "# note:\t{note}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(counts: &[u64]) -> GenreReport {
        let genres: Vec<(String, u64)> = counts
            .iter()
            .enumerate()
            .map(|(i, &n)| (format!("g{i}"), n))
            .collect();
        GenreReport::new(&genres, &BTreeMap::new())
    }

    #[test]
    fn four_equal_genres() {
        let r = report(&[250_000; 4]);
        assert!(r.rows.iter().all(|row| format_tenths(row.tenths) == "25.0"));
        assert_eq!(r.total, 1_000_000);
        assert!(r.to_tsv().ends_with("total\t1000000\t100.0\n"));
    }

    #[test]
    fn single_and_uneven() {
        assert_eq!(report(&[42]).rows[0].tenths, 1000);
        let r = report(&[300, 100]);
        assert_eq!(r.rows[0].tenths, 750);
        assert_eq!(r.rows[1].tenths, 250);
    }

    #[test]
    fn shares_always_sum_to_hundred() {
        // six equal genres: plain rounding would print 16.7 six times
        let r = report(&[1; 6]);
        let tenths: Vec<u64> = r.rows.iter().map(|r| r.tenths).collect();
        assert_eq!(tenths, [167, 167, 167, 167, 166, 166]);
        assert_eq!(apportion(&[0, 0], 1000), [0, 0]);
        assert_eq!(apportion(&[], 1000), Vec::<u64>::new());
    }

    #[test]
    fn declared_note() {
        let genres = vec![("a".to_owned(), 1), ("b".to_owned(), 1)];
        let declared: BTreeMap<String, f64> =
            [("a".to_owned(), 11.5), ("b".to_owned(), 9.2)].into();
        let r = GenreReport::new(&genres, &declared);
        assert_eq!(
            r.note.as_deref(),
            Some("declared genre percentages sum to 20.7, not 100")
        );
        let declared: BTreeMap<String, f64> =
            [("a".to_owned(), 50.0), ("b".to_owned(), 50.0)].into();
        assert_eq!(GenreReport::new(&genres, &declared).note, None);
    }
}
