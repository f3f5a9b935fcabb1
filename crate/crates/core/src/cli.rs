//! The `lexbase` command line driver.
//!
//! Exit codes: 0 on success, 1 on usage errors, 2 on data errors. Data goes
//! to `-o` files or standard output, diagnostics to standard error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::base::{parse_base, select, text_coverage, write_base, Cutoff, SelectionPolicy};
use crate::compare::{merge_with, parse_table, write_table, CellStyle, Normalization, TableMode};
use crate::corpus::{ingest, read_utf8, Cap, LemmaTable, Manifest, TokenizationConfig};
use crate::error::{Error, Result};
use crate::freqdict::{build_dictionary, coverage_curve, parse_dictionary, write_dictionary};
use crate::report::GenreReport;
use crate::scheme::{
    field_synopsis, gap_report, gaps_to_text, gaps_to_tsv, load_pairs, load_scheme, tag,
};

#[derive(Debug, Parser)]
#[command(
    name = "lexbase",
    version,
    about = "Genre frequency dictionaries, comparison tables and lexical base extraction"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the frequency dictionary of one genre from a manifest.
    BuildFreq(BuildFreq),
    /// Merge frequency dictionaries into a comparison table.
    Merge(MergeArgs),
    /// Select a lexical base from a comparison table.
    Select(SelectArgs),
    /// Coverage curve of a dictionary, or text coverage of a base.
    Coverage(CoverageArgs),
    /// Genre composition of a corpus (occurrences and percent).
    GenreReport(GenreReportArgs),
    /// Annotate a base with its semantic scheme entries.
    Tag(TagArgs),
    /// Field and part-of-speech synopsis of a tagged base.
    Synopsis(SynopsisArgs),
    /// Pairs with exactly one member in the base.
    Gaps(GapsArgs),
}

#[derive(Debug, Args)]
struct Tokenization {
    /// Surface-to-lemma TSV.
    #[arg(long)]
    lemmas: Option<PathBuf>,
    /// Characters allowed inside words.
    #[arg(long, default_value = "'’-")]
    marks: String,
    /// Keep the original case of tokens.
    #[arg(long)]
    no_case_fold: bool,
    /// Count digit runs as tokens.
    #[arg(long)]
    keep_numerals: bool,
}

impl Tokenization {
    fn load(&self) -> Result<(TokenizationConfig, LemmaTable)> {
        let config =
            TokenizationConfig::new(self.marks.chars(), !self.no_case_fold, self.keep_numerals)?;
        let lemmas = match &self.lemmas {
            Some(path) => LemmaTable::load(path)?,
            None => LemmaTable::new(),
        };
        Ok((config, lemmas))
    }
}

#[derive(Debug, Args)]
struct BuildFreq {
    #[arg(long)]
    manifest: PathBuf,
    #[arg(long)]
    genre: String,
    /// Word occurrences kept per genre, or `unlimited`.
    #[arg(long, default_value = "300000")]
    cap: Cap,
    #[command(flatten)]
    tokenization: Tokenization,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Auto,
    Raw,
    PerMillion,
}

#[derive(Debug, Args)]
struct MergeArgs {
    #[arg(required = true)]
    dictionaries: Vec<PathBuf>,
    #[arg(long, value_enum, default_value = "auto")]
    mode: ModeArg,
    /// Leave zero cells blank.
    #[arg(long)]
    blank_zeros: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("cutoff").required(true).args(["top_k", "min_sum"]))]
struct SelectArgs {
    #[arg(long)]
    table: PathBuf,
    /// Genres a word must occur in (default: all).
    #[arg(long)]
    min_genres: Option<usize>,
    #[arg(long)]
    top_k: Option<usize>,
    #[arg(long)]
    min_sum: Option<f64>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("target").required(true).args(["dict", "base"]))]
struct CoverageArgs {
    /// Dictionary whose coverage curve is computed (with --ks).
    #[arg(long, requires = "ks")]
    dict: Option<PathBuf>,
    /// Comma-separated strictly increasing ranks.
    #[arg(long, value_delimiter = ',')]
    ks: Vec<usize>,
    /// Base whose text coverage is measured (with --manifest).
    #[arg(long, requires = "manifest")]
    base: Option<PathBuf>,
    #[arg(long)]
    manifest: Option<PathBuf>,
    /// Restrict text coverage to one genre.
    #[arg(long)]
    genre: Option<String>,
    #[arg(long, default_value = "300000")]
    cap: Cap,
    #[command(flatten)]
    tokenization: Tokenization,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("input").required(true).args(["manifest", "dictionaries"]))]
struct GenreReportArgs {
    #[arg(long)]
    manifest: Option<PathBuf>,
    /// Dictionary files, used instead of a manifest.
    dictionaries: Vec<PathBuf>,
    #[arg(long, default_value = "unlimited")]
    cap: Cap,
    #[command(flatten)]
    tokenization: Tokenization,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct TagArgs {
    #[arg(long)]
    base: PathBuf,
    #[arg(long)]
    scheme: PathBuf,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Tsv,
    Text,
}

#[derive(Debug, Args)]
struct SynopsisArgs {
    #[arg(long)]
    base: PathBuf,
    #[arg(long)]
    scheme: PathBuf,
    #[arg(long, value_enum, default_value = "tsv")]
    format: Format,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct GapsArgs {
    #[arg(long)]
    base: PathBuf,
    #[arg(long)]
    pairs: PathBuf,
    #[arg(long, value_enum, default_value = "tsv")]
    format: Format,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

/// Runs the tool with process-level standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the tool writing data to `out` and diagnostics to `err`.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    1
                }
            };
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn emit(output: Option<&Path>, data: &str, out: &mut dyn Write) -> Result<()> {
    match output {
        Some(path) => fs::write(path, data).map_err(|source| Error::Write {
            path: path.to_owned(),
            source,
        }),
        None => out
            .write_all(data.as_bytes())
            .map_err(|source| Error::Write {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    }
}

fn load_text(path: &Path) -> Result<(String, String)> {
    let what = path.display().to_string();
    Ok((read_utf8(path, &what)?, what))
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    match command {
        Command::BuildFreq(a) => {
            let manifest = Manifest::load(&a.manifest)?;
            let selected = Manifest {
                entries: manifest
                    .entries
                    .into_iter()
                    .filter(|e| e.genre == a.genre)
                    .collect(),
            };
            if selected.entries.is_empty() {
                return Err(Error::Invalid(format!(
                    "genre `{}` does not occur in {}",
                    a.genre,
                    a.manifest.display()
                )));
            }
            let (config, lemmas) = a.tokenization.load()?;
            let ingested = ingest(&selected, &config, &lemmas, a.cap)?;
            for w in &ingested.warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            let dict = build_dictionary(&ingested.streams[&a.genre]);
            emit(a.output.as_deref(), &write_dictionary(&dict), out)
        }
        Command::Merge(a) => {
            let dicts = a
                .dictionaries
                .iter()
                .map(|p| load_text(p).and_then(|(t, w)| parse_dictionary(&t, &w)))
                .collect::<Result<Vec<_>>>()?;
            let normalization = match a.mode {
                ModeArg::Auto => Normalization::Auto,
                ModeArg::Raw => Normalization::Force(TableMode::Raw),
                ModeArg::PerMillion => Normalization::Force(TableMode::PerMillion),
            };
            let table = merge_with(&dicts, normalization)?;
            if table.mode() == TableMode::PerMillion && matches!(a.mode, ModeArg::Auto) {
                let _ = writeln!(
                    err,
                    "note: dictionary totals differ, cells normalized to occurrences per million"
                );
            }
            let style = if a.blank_zeros {
                CellStyle::Blank
            } else {
                CellStyle::Canonical
            };
            emit(a.output.as_deref(), &write_table(&table, style), out)
        }
        Command::Select(a) => {
            let (text, what) = load_text(&a.table)?;
            let table = parse_table(&text, &what)?;
            let min_genres = a.min_genres.unwrap_or(table.genres().len());
            let cutoff = match (a.top_k, a.min_sum) {
                (Some(k), _) => Cutoff::TopK(
                    std::num::NonZeroUsize::new(k)
                        .ok_or_else(|| Error::Policy("top_k must be positive".into()))?,
                ),
                (None, Some(t)) => Cutoff::MinSum(t),
                (None, None) => unreachable!("clap requires a cutoff"),
            };
            let policy = SelectionPolicy::new(min_genres, cutoff)?;
            let base = select(&table, &policy)?;
            emit(a.output.as_deref(), &write_base(&base), out)
        }
        Command::Coverage(a) => {
            let mut report = String::new();
            if let Some(path) = &a.dict {
                let (text, what) = load_text(path)?;
                let dict = parse_dictionary(&text, &what)?;
                let curve = coverage_curve(&dict, &a.ks)?;
                report.push_str("k\tcoverage\n");
                for (k, c) in a.ks.iter().zip(curve) {
                    report.push_str(&format!("{k}\t{c:.6}\n"));
                }
            } else if let (Some(base_path), Some(manifest_path)) = (&a.base, &a.manifest) {
                let (text, what) = load_text(base_path)?;
                let base = parse_base(&text, &what)?;
                let manifest = Manifest::load(manifest_path)?;
                let (config, lemmas) = a.tokenization.load()?;
                let ingested = ingest(&manifest, &config, &lemmas, a.cap)?;
                let genres: Vec<&str> = match &a.genre {
                    Some(g) if ingested.streams.contains_key(g) => vec![g.as_str()],
                    Some(g) => {
                        return Err(Error::Invalid(format!(
                            "genre `{g}` is not in the manifest"
                        )))
                    }
                    None => manifest.genres(),
                };
                report.push_str("genre\tcoverage\n");
                for g in genres {
                    let c = text_coverage(&base, &ingested.streams[g]);
                    report.push_str(&format!("{g}\t{c:.6}\n"));
                }
            }
            emit(a.output.as_deref(), &report, out)
        }
        Command::GenreReport(a) => {
            let report = if let Some(path) = &a.manifest {
                let manifest = Manifest::load(path)?;
                let (config, lemmas) = a.tokenization.load()?;
                let ingested = ingest(&manifest, &config, &lemmas, a.cap)?;
                let genres: Vec<(String, u64)> = manifest
                    .genres()
                    .into_iter()
                    .map(|g| (g.to_owned(), ingested.streams[g].len() as u64))
                    .collect();
                GenreReport::new(&genres, &GenreReport::declared_percentages(&manifest))
            } else {
                let dicts = a
                    .dictionaries
                    .iter()
                    .map(|p| load_text(p).and_then(|(t, w)| parse_dictionary(&t, &w)))
                    .collect::<Result<Vec<_>>>()?;
                GenreReport::from_dictionaries(&dicts)
            };
            if let Some(note) = &report.note {
                let _ = writeln!(err, "note: {note}");
            }
            emit(a.output.as_deref(), &report.to_tsv(), out)
        }
        Command::Tag(a) => {
            let (base_text, base_what) = load_text(&a.base)?;
            let (scheme_text, scheme_what) = load_text(&a.scheme)?;
            let base = parse_base(&base_text, &base_what)?;
            let scheme = load_scheme(&scheme_text, &scheme_what)?;
            let tagged = tag(&base, &scheme);
            let unknown = tagged.unknown().len();
            if unknown > 0 {
                let _ = writeln!(err, "note: {unknown} base words are not in the scheme");
            }
            emit(a.output.as_deref(), &tagged.to_tsv(), out)
        }
        Command::Synopsis(a) => {
            let (base_text, base_what) = load_text(&a.base)?;
            let (scheme_text, scheme_what) = load_text(&a.scheme)?;
            let base = parse_base(&base_text, &base_what)?;
            let scheme = load_scheme(&scheme_text, &scheme_what)?;
            let report = field_synopsis(&tag(&base, &scheme), &scheme);
            let data = match a.format {
                Format::Tsv => report.to_tsv(),
                Format::Text => report.to_text(),
            };
            emit(a.output.as_deref(), &data, out)
        }
        Command::Gaps(a) => {
            let (base_text, base_what) = load_text(&a.base)?;
            let (pairs_text, pairs_what) = load_text(&a.pairs)?;
            let base = parse_base(&base_text, &base_what)?;
            let pairs = load_pairs(&pairs_text, &pairs_what)?;
            let gaps = gap_report(&base, &pairs);
            let data = match a.format {
                Format::Tsv => gaps_to_tsv(&gaps),
                Format::Text => gaps_to_text(&gaps),
            };
            emit(a.output.as_deref(), &data, out)
        }
    }
}
