//! Corpus ingestion: tokenization, lemma normalization and per-genre capping.
//!
//! A run reads a manifest of genre-labeled plain-text documents, splits each
//! document into word tokens, maps every token to its lemma and concatenates
//! the lemmas of one genre in manifest order. Each genre stream is then cut at
//! exactly `cap` tokens so that all genres contribute corpora of equal size.

use std::borrow::Cow;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::fs;
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Default number of word occurrences kept per genre.
pub const DEFAULT_CAP: usize = 300_000;

/// The five functional genres used when no other labels are given.
pub const DEFAULT_GENRES: [&str; 5] = [
    "belles-lettres",
    "colloquial",
    "journalistic",
    "scientific",
    "official",
];

/// How raw text is split into word tokens.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TokenizationConfig {
    intra_word_marks: BTreeSet<char>,
    case_fold: bool,
    keep_numerals: bool,
}

impl TokenizationConfig {
    pub fn new(
        intra_word_marks: impl IntoIterator<Item = char>,
        case_fold: bool,
        keep_numerals: bool,
    ) -> Result<Self> {
        let intra_word_marks: BTreeSet<char> = intra_word_marks.into_iter().collect();
        if let Some(c) = intra_word_marks
            .iter()
            .find(|c| c.is_whitespace() || c.is_alphabetic())
        {
            return Err(Error::Config(format!(
                "intra-word mark U+{:04X} is whitespace or a letter",
                *c as u32
            )));
        }
        Ok(TokenizationConfig {
            intra_word_marks,
            case_fold,
            keep_numerals,
        })
    }

    pub fn intra_word_marks(&self) -> &BTreeSet<char> {
        &self.intra_word_marks
    }

    pub fn case_fold(&self) -> bool {
        self.case_fold
    }

    pub fn keep_numerals(&self) -> bool {
        self.keep_numerals
    }

    fn is_mark(&self, c: char) -> bool {
        self.intra_word_marks.contains(&c)
    }
}

impl Default for TokenizationConfig {
    fn default() -> Self {
        TokenizationConfig {
            intra_word_marks: ['\'', '\u{2019}', '-'].into_iter().collect(),
            case_fold: true,
            keep_numerals: false,
        }
    }
}

/// Iterator over the word tokens of a text, see [`tokenize`].
pub struct Tokens<'a> {
    text: &'a str,
    pos: usize,
    config: &'a TokenizationConfig,
}

impl<'a> Iterator for Tokens<'a> {
    type Item = &'a str;

    fn next(&mut self) -> Option<&'a str> {
        let rest = &self.text[self.pos..];
        let mut chars = rest.char_indices();
        // find the first letter (or digit, if numerals are kept)
        let (start, first) = loop {
            let (i, c) = chars.next()?;
            if c.is_alphabetic() || (self.config.keep_numerals && c.is_numeric()) {
                break (i, c);
            }
        };

        let mut end = start + first.len_utf8();
        let mut stop = rest.len();
        if first.is_alphabetic() {
            for (i, c) in chars {
                if c.is_alphabetic() {
                    end = i + c.len_utf8();
                } else if !self.config.is_mark(c) {
                    stop = i;
                    break;
                }
            }
        } else {
            for (i, c) in chars {
                if c.is_numeric() {
                    end = i + c.len_utf8();
                } else {
                    stop = i;
                    break;
                }
            }
        }
        // marks trailing the last letter are separators; resume after them
        let token = &rest[start..end];
        self.pos += stop.max(end);
        Some(token)
    }
}

/// Splits `text` into maximal runs of letters and intra-word marks that start
/// and end with a letter. Numeral runs are tokens only when the config keeps
/// them; everything else separates tokens.
pub fn tokenize<'a>(text: &'a str, config: &'a TokenizationConfig) -> Tokens<'a> {
    Tokens {
        text,
        pos: 0,
        config,
    }
}

/// Surface form to lemma mapping. Unlisted forms are their own lemma.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LemmaTable {
    entries: HashMap<String, String>,
}

impl LemmaTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a table from `(surface, lemma)` pairs. Both sides are case
    /// folded. Pair positions are reported 1-based in errors.
    pub fn from_pairs<S, L>(pairs: impl IntoIterator<Item = (S, L)>) -> Result<Self>
    where
        S: AsRef<str>,
        L: AsRef<str>,
    {
        let mut builder = LemmaTableBuilder::new("lemma table");
        for (i, (surface, lemma)) in pairs.into_iter().enumerate() {
            builder.insert(i + 1, surface.as_ref(), lemma.as_ref())?;
        }
        builder.finish()
    }

    /// Parses `surface<TAB>lemma` lines. Blank lines and `#` comments are skipped.
    pub fn parse(text: &str, what: &str) -> Result<Self> {
        let mut builder = LemmaTableBuilder::new(what);
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split('\t');
            let (Some(surface), Some(lemma), None) = (fields.next(), fields.next(), fields.next())
            else {
                return Err(Error::parse(what, line_no, "expected `surface<TAB>lemma`"));
            };
            builder.insert(line_no, surface, lemma)?;
        }
        builder.finish()
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = read_utf8(path, &path.display().to_string())?;
        Self::parse(&text, &path.display().to_string())
    }

    /// Returns the lemma of an already case-folded form.
    pub fn lookup<'a>(&'a self, form: &'a str) -> &'a str {
        self.entries.get(form).map(String::as_str).unwrap_or(form)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

struct LemmaTableBuilder<'w> {
    what: &'w str,
    entries: HashMap<String, String>,
    lines: HashMap<String, usize>,
}

impl<'w> LemmaTableBuilder<'w> {
    fn new(what: &'w str) -> Self {
        LemmaTableBuilder {
            what,
            entries: HashMap::new(),
            lines: HashMap::new(),
        }
    }

    fn insert(&mut self, line: usize, surface: &str, lemma: &str) -> Result<()> {
        let surface = surface.trim().to_lowercase();
        let lemma = lemma.trim().to_lowercase();
        if surface.is_empty() {
            return Err(Error::parse(self.what, line, "empty surface form"));
        }
        if lemma.is_empty() {
            return Err(Error::parse(self.what, line, "empty lemma"));
        }
        match self.entries.get(&surface) {
            Some(existing) if *existing != lemma => Err(Error::parse(
                self.what,
                line,
                format!("`{surface}` already maps to `{existing}`"),
            )),
            Some(_) => Ok(()),
            None => {
                self.lines.insert(surface.clone(), line);
                self.entries.insert(surface, lemma);
                Ok(())
            }
        }
    }

    fn finish(self) -> Result<LemmaTable> {
        // a lemma that is itself remapped would make normalization non-idempotent
        let mut offending: Vec<(usize, &str, &str)> = self
            .entries
            .iter()
            .filter_map(|(surface, lemma)| match self.entries.get(lemma) {
                Some(next) if next != lemma => {
                    Some((self.lines[surface], surface.as_str(), lemma.as_str()))
                }
                _ => None,
            })
            .collect();
        offending.sort();
        if let Some((line, surface, lemma)) = offending.first() {
            return Err(Error::parse(
                self.what,
                *line,
                format!(
                    "`{surface}` maps to `{lemma}`, which has its own entry `{}`",
                    self.entries[*lemma]
                ),
            ));
        }
        Ok(LemmaTable {
            entries: self.entries,
        })
    }
}

/// Maps a surface token to its lemma: case fold (if configured), then table
/// lookup with identity fallback.
pub fn normalize(token: &str, config: &TokenizationConfig, lemmas: &LemmaTable) -> String {
    let folded: Cow<'_, str> = if config.case_fold {
        Cow::Owned(token.to_lowercase())
    } else {
        Cow::Borrowed(token)
    };
    lemmas.lookup(&folded).to_owned()
}

/// One text with its genre label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub genre: String,
    pub source_id: String,
    pub text: String,
}

impl Document {
    pub fn new(
        genre: impl Into<String>,
        source_id: impl Into<String>,
        text: impl Into<String>,
    ) -> Self {
        Document {
            genre: genre.into(),
            source_id: source_id.into(),
            text: text.into(),
        }
    }
}

/// One manifest line.
#[derive(Clone, Debug, PartialEq)]
pub struct ManifestEntry {
    pub genre: String,
    /// The path as written in the manifest.
    pub source_id: String,
    /// `source_id` resolved against the manifest's directory.
    pub path: PathBuf,
    /// Optional declared share of the genre in percent (third column).
    pub declared_percent: Option<f64>,
}

/// Ordered list of genre-labeled document references.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Manifest {
    pub entries: Vec<ManifestEntry>,
}

impl Manifest {
    /// Parses `genre<TAB>path[<TAB>percent]` lines; `#` lines are comments.
    /// Relative paths are resolved against `base_dir`.
    pub fn parse(text: &str, base_dir: &Path, what: &str) -> Result<Self> {
        let mut entries = Vec::new();
        let mut seen = BTreeSet::new();
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = line.strip_suffix('\r').unwrap_or(line);
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if !(2..=3).contains(&fields.len()) {
                return Err(Error::parse(
                    what,
                    line_no,
                    "expected `genre<TAB>path` with an optional percent column",
                ));
            }
            let genre = fields[0].trim();
            let source_id = fields[1].trim();
            if genre.is_empty() {
                return Err(Error::parse(what, line_no, "empty genre label"));
            }
            if source_id.is_empty() {
                return Err(Error::parse(what, line_no, "empty path"));
            }
            let declared_percent = match fields.get(2).map(|s| s.trim()) {
                None | Some("") => None,
                Some(p) => Some(
                    p.trim_end_matches('%')
                        .parse::<f64>()
                        .ok()
                        .filter(|p| p.is_finite() && *p >= 0.0)
                        .ok_or_else(|| Error::parse(what, line_no, format!("bad percent `{p}`")))?,
                ),
            };
            if !seen.insert(source_id.to_owned()) {
                return Err(Error::DuplicateSource(source_id.to_owned()));
            }
            entries.push(ManifestEntry {
                genre: genre.to_owned(),
                source_id: source_id.to_owned(),
                path: base_dir.join(source_id),
                declared_percent,
            });
        }
        Ok(Manifest { entries })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let what = path.display().to_string();
        let text = read_utf8(path, &what)?;
        let base = path.parent().unwrap_or_else(|| Path::new(""));
        Self::parse(&text, base, &what)
    }

    /// Genre labels in order of first appearance.
    pub fn genres(&self) -> Vec<&str> {
        let mut seen = BTreeSet::new();
        self.entries
            .iter()
            .map(|e| e.genre.as_str())
            .filter(|g| seen.insert(*g))
            .collect()
    }
}

/// Maximum number of lemma tokens kept per genre.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cap {
    Limited(NonZeroUsize),
    Unlimited,
}

impl Cap {
    /// `None` for a zero limit.
    pub fn limit(n: usize) -> Option<Cap> {
        NonZeroUsize::new(n).map(Cap::Limited)
    }

    pub fn get(self) -> Option<usize> {
        match self {
            Cap::Limited(n) => Some(n.get()),
            Cap::Unlimited => None,
        }
    }
}

impl Default for Cap {
    fn default() -> Self {
        Cap::limit(DEFAULT_CAP).unwrap()
    }
}

impl fmt::Display for Cap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cap::Limited(n) => write!(f, "{n}"),
            Cap::Unlimited => f.write_str("unlimited"),
        }
    }
}

impl FromStr for Cap {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.eq_ignore_ascii_case("unlimited") || s.eq_ignore_ascii_case("none") {
            return Ok(Cap::Unlimited);
        }
        s.parse::<usize>()
            .ok()
            .and_then(Cap::limit)
            .ok_or_else(|| format!("cap must be a positive integer or `unlimited`, got `{s}`"))
    }
}

/// The capped lemma sequence of one genre.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenreStream {
    pub genre: String,
    pub lemmas: Vec<String>,
    pub cap: Cap,
}

impl GenreStream {
    pub fn new(genre: impl Into<String>, lemmas: Vec<String>, cap: Cap) -> Self {
        let mut lemmas = lemmas;
        if let Some(n) = cap.get() {
            lemmas.truncate(n);
        }
        GenreStream {
            genre: genre.into(),
            lemmas,
            cap,
        }
    }

    /// Uncapped stream from whitespace-separated lemmas.
    pub fn from_lemmas(genre: impl Into<String>, lemmas: &str) -> Self {
        Self::new(
            genre,
            lemmas.split_whitespace().map(str::to_owned).collect(),
            Cap::Unlimited,
        )
    }

    pub fn len(&self) -> usize {
        self.lemmas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lemmas.is_empty()
    }
}

/// A genre whose documents held fewer tokens than the cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnderCap {
    pub genre: String,
    pub occurrences: usize,
    pub cap: usize,
}

impl fmt::Display for UnderCap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "genre `{}` has {} word occurrences, fewer than the cap of {}",
            self.genre, self.occurrences, self.cap
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Ingested {
    pub streams: BTreeMap<String, GenreStream>,
    pub warnings: Vec<UnderCap>,
}

/// Reads every manifest document and produces one capped stream per genre.
///
/// Genres are processed in parallel; within a genre documents are read in
/// manifest order. When several files fail, the error of the earliest
/// manifest entry is returned.
pub fn ingest(
    manifest: &Manifest,
    config: &TokenizationConfig,
    lemmas: &LemmaTable,
    cap: Cap,
) -> Result<Ingested> {
    let sources: Vec<Source<'_>> = manifest
        .entries
        .iter()
        .map(|e| Source {
            genre: &e.genre,
            source_id: &e.source_id,
            text: Text::File(&e.path),
        })
        .collect();
    ingest_sources(&sources, config, lemmas, cap)
}

/// Same as [`ingest`] for documents already held in memory.
pub fn ingest_documents(
    documents: &[Document],
    config: &TokenizationConfig,
    lemmas: &LemmaTable,
    cap: Cap,
) -> Result<Ingested> {
    let mut seen = BTreeSet::new();
    for d in documents {
        if d.genre.is_empty() {
            return Err(Error::Invalid(format!(
                "document `{}` has an empty genre label",
                d.source_id
            )));
        }
        if !seen.insert(d.source_id.as_str()) {
            return Err(Error::DuplicateSource(d.source_id.clone()));
        }
    }
    let sources: Vec<Source<'_>> = documents
        .iter()
        .map(|d| Source {
            genre: &d.genre,
            source_id: &d.source_id,
            text: Text::Inline(&d.text),
        })
        .collect();
    ingest_sources(&sources, config, lemmas, cap)
}

enum Text<'a> {
    File(&'a Path),
    Inline(&'a str),
}

struct Source<'a> {
    genre: &'a str,
    source_id: &'a str,
    text: Text<'a>,
}

fn ingest_sources(
    sources: &[Source<'_>],
    config: &TokenizationConfig,
    lemmas: &LemmaTable,
    cap: Cap,
) -> Result<Ingested> {
    if sources.is_empty() {
        return Err(Error::EmptyManifest);
    }
    let mut by_genre: BTreeMap<&str, Vec<(usize, &Source<'_>)>> = BTreeMap::new();
    for (i, s) in sources.iter().enumerate() {
        by_genre.entry(s.genre).or_default().push((i, s));
    }

    let results: Vec<std::result::Result<(GenreStream, usize), (usize, Error)>> = by_genre
        .into_par_iter()
        .map(|(genre, docs)| build_stream(genre, &docs, config, lemmas, cap))
        .collect();

    let mut out = Ingested::default();
    let mut first_err: Option<(usize, Error)> = None;
    for r in results {
        match r {
            Ok((stream, seen)) => {
                if let Some(n) = cap.get() {
                    if seen < n {
                        out.warnings.push(UnderCap {
                            genre: stream.genre.clone(),
                            occurrences: seen,
                            cap: n,
                        });
                    }
                }
                out.streams.insert(stream.genre.clone(), stream);
            }
            Err((idx, e)) => {
                if first_err.as_ref().is_none_or(|(j, _)| idx < *j) {
                    first_err = Some((idx, e));
                }
            }
        }
    }
    match first_err {
        Some((_, e)) => Err(e),
        None => Ok(out),
    }
}

fn build_stream(
    genre: &str,
    docs: &[(usize, &Source<'_>)],
    config: &TokenizationConfig,
    lemmas: &LemmaTable,
    cap: Cap,
) -> std::result::Result<(GenreStream, usize), (usize, Error)> {
    let limit = cap.get().unwrap_or(usize::MAX);
    let mut out = Vec::new();
    let mut seen = 0usize;
    let mut folded = String::new();
    for (idx, src) in docs {
        let owned;
        let text = match src.text {
            Text::Inline(t) => t,
            Text::File(path) => {
                owned = read_utf8(path, src.source_id).map_err(|e| (*idx, e))?;
                owned.as_str()
            }
        };
        if seen >= limit {
            // keep reading so unreadable files still surface
            continue;
        }
        for token in tokenize(text, config) {
            seen += 1;
            if seen > limit {
                break;
            }
            let key = if config.case_fold {
                folded.clear();
                folded.extend(token.chars().flat_map(char::to_lowercase));
                folded.as_str()
            } else {
                token
            };
            out.push(lemmas.lookup(key).to_owned());
        }
    }
    Ok((
        GenreStream {
            genre: genre.to_owned(),
            lemmas: out,
            cap,
        },
        seen.min(limit),
    ))
}

pub(crate) fn read_utf8(path: &Path, source_id: &str) -> Result<String> {
    let bytes = fs::read(path).map_err(|source| Error::Read {
        source_id: source_id.to_owned(),
        source,
    })?;
    String::from_utf8(bytes).map_err(|e| Error::Read {
        source_id: source_id.to_owned(),
        source: std::io::Error::new(std::io::ErrorKind::InvalidData, e),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(text: &str) -> Vec<String> {
        let config = TokenizationConfig::default();
        tokenize(text, &config).map(str::to_owned).collect()
    }

    #[test]
    fn tokenize_empty() {
        assert!(toks("").is_empty());
        assert!(toks("  ,.!? -- ''").is_empty());
    }

    #[test]
    fn tokenize_punctuation() {
        assert_eq!(toks("Слово, слово!"), ["Слово", "слово"]);
    }

    #[test]
    fn tokenize_intra_word_marks() {
        assert_eq!(toks("м'ясо-молочний"), ["м'ясо-молочний"]);
        assert_eq!(toks("п’ять"), ["п’ять"]);
        assert_eq!(toks("-'так'- ні-"), ["так", "ні"]);
        assert_eq!(toks("a--b"), ["a--b"]);
    }

    #[test]
    fn tokenize_numerals() {
        assert_eq!(toks("у 2003 році"), ["у", "році"]);
        let config = TokenizationConfig::new(['-'], true, true).unwrap();
        let got: Vec<&str> = tokenize("у 2003-му abc12", &config).collect();
        assert_eq!(got, ["у", "2003", "му", "abc", "12"]);
    }

    #[test]
    fn config_rejects_letters_and_whitespace() {
        assert!(TokenizationConfig::new(['a'], true, false).is_err());
        assert!(TokenizationConfig::new([' '], true, false).is_err());
        assert!(TokenizationConfig::new(['\u{a0}'], true, false).is_err());
        assert!(TokenizationConfig::new(['_', '.'], true, false).is_ok());
    }

    #[test]
    fn normalize_examples() {
        let config = TokenizationConfig::default();
        let empty = LemmaTable::new();
        assert_eq!(normalize("Слово", &config, &empty), "слово");
        assert_eq!(normalize("НОВИЙ", &config, &empty), "новий");
        let table = LemmaTable::from_pairs([("слова", "слово")]).unwrap();
        assert_eq!(normalize("слова", &config, &table), "слово");
        assert_eq!(normalize("СЛОВА", &config, &table), "слово");
    }

    #[test]
    fn normalize_without_case_fold() {
        let config = TokenizationConfig::new([], false, false).unwrap();
        assert_eq!(normalize("Слово", &config, &LemmaTable::new()), "Слово");
    }

    #[test]
    fn lemma_table_validation() {
        let err = LemmaTable::parse("слова\tслово\nслово\tслов\n", "t").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
        let err = LemmaTable::parse("a\t\n", "t").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = LemmaTable::parse("a\tb\nA\tc\n", "t").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = LemmaTable::parse("a b\n", "t").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        // identical duplicates and self-mapping lemmas are fine
        let t = LemmaTable::parse("# c\nA\tb\na\tB\nb\tb\n", "t").unwrap();
        assert_eq!(t.lookup("a"), "b");
        assert_eq!(t.lookup("zz"), "zz");
    }

    #[test]
    fn manifest_parsing() {
        let m = Manifest::parse(
            "# comment\nofficial\tdocs/a.txt\n\nscientific\tb.txt\t25\n",
            Path::new("/base"),
            "m",
        )
        .unwrap();
        assert_eq!(m.entries.len(), 2);
        assert_eq!(m.entries[0].path, Path::new("/base/docs/a.txt"));
        assert_eq!(m.entries[0].source_id, "docs/a.txt");
        assert_eq!(m.entries[1].declared_percent, Some(25.0));
        assert_eq!(m.genres(), ["official", "scientific"]);

        assert!(matches!(
            Manifest::parse("g\ta\ng\ta\n", Path::new(""), "m"),
            Err(Error::DuplicateSource(_))
        ));
        assert!(matches!(
            Manifest::parse("\ta\n", Path::new(""), "m"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            Manifest::parse("ok\ta\nbad\n", Path::new(""), "m"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    fn docs(specs: &[(&str, &str)]) -> Vec<Document> {
        specs
            .iter()
            .enumerate()
            .map(|(i, (g, t))| Document::new(*g, format!("d{i}"), *t))
            .collect()
    }

    #[test]
    fn ingest_truncates_at_token_boundary() {
        let d = docs(&[("g", "a b c d"), ("g", "e f g h")]);
        let out = ingest_documents(
            &d,
            &TokenizationConfig::default(),
            &LemmaTable::new(),
            Cap::limit(6).unwrap(),
        )
        .unwrap();
        assert_eq!(out.streams["g"].lemmas, ["a", "b", "c", "d", "e", "f"]);
        assert!(out.warnings.is_empty());
    }

    #[test]
    fn ingest_unlimited_and_under_cap() {
        let d = docs(&[("g", "a b c d"), ("h", "x y z"), ("g", "e f g h")]);
        let config = TokenizationConfig::default();
        let out = ingest_documents(&d, &config, &LemmaTable::new(), Cap::Unlimited).unwrap();
        assert_eq!(out.streams["g"].len(), 8);
        assert!(out.warnings.is_empty());

        let out = ingest_documents(&d, &config, &LemmaTable::new(), Cap::default()).unwrap();
        assert_eq!(out.streams["h"].lemmas, ["x", "y", "z"]);
        assert_eq!(
            out.warnings,
            [
                UnderCap {
                    genre: "g".into(),
                    occurrences: 8,
                    cap: DEFAULT_CAP
                },
                UnderCap {
                    genre: "h".into(),
                    occurrences: 3,
                    cap: DEFAULT_CAP
                }
            ]
        );
    }

    #[test]
    fn ingest_errors() {
        let config = TokenizationConfig::default();
        assert!(matches!(
            ingest_documents(&[], &config, &LemmaTable::new(), Cap::Unlimited),
            Err(Error::EmptyManifest)
        ));
        let m = Manifest::parse(
            "g\tmissing-1.txt\nh\tmissing-0.txt\n",
            Path::new("/nonexistent"),
            "m",
        )
        .unwrap();
        match ingest(&m, &config, &LemmaTable::new(), Cap::Unlimited) {
            Err(Error::Read { source_id, .. }) => assert_eq!(source_id, "missing-1.txt"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn cap_parsing() {
        assert_eq!("unlimited".parse::<Cap>().unwrap(), Cap::Unlimited);
        assert_eq!("300000".parse::<Cap>().unwrap(), Cap::default());
        assert!("0".parse::<Cap>().is_err());
        assert!("-3".parse::<Cap>().is_err());
    }
}
