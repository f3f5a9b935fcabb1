//! Semantic classification of a lexical base.
//!
//! Classification itself is supplied as data: every word gets one part of
//! speech, one or more small semantic groups, and one top-level field. This
//! module validates that data, looks the base up in it, and reports how the
//! base is spread over the fields and which paired words it lacks.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::base::LexicalBase;
use crate::error::{Error, Result};
use crate::report::{apportion, format_tenths};

/// Top-level fields shared by ideographic dictionaries across languages.
pub const DEFAULT_FIELDS: [&str; 4] = ["nature", "human", "society", "abstract"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pos {
    Noun,
    Verb,
    Adjective,
    Pronoun,
    Adverb,
    Numeral,
    Preposition,
    Conjunction,
    Particle,
}

impl Pos {
    pub const ALL: [Pos; 9] = [
        Pos::Noun,
        Pos::Verb,
        Pos::Adjective,
        Pos::Pronoun,
        Pos::Adverb,
        Pos::Numeral,
        Pos::Preposition,
        Pos::Conjunction,
        Pos::Particle,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Pos::Noun => "noun",
            Pos::Verb => "verb",
            Pos::Adjective => "adjective",
            Pos::Pronoun => "pronoun",
            Pos::Adverb => "adverb",
            Pos::Numeral => "numeral",
            Pos::Preposition => "preposition",
            Pos::Conjunction => "conjunction",
            Pos::Particle => "particle",
        }
    }
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Pos {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        // "proverb" is a known misprint of "adverb" in older classifications
        if s == "proverb" {
            return Ok(Pos::Adverb);
        }
        Pos::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| format!("unknown part of speech `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupKind {
    Synonymic,
    Antonymic,
    HyperoHyponymic,
    PartialHolonymic,
    Conversive,
    LexicalSemantic,
    Thematic,
}

impl GroupKind {
    pub const ALL: [GroupKind; 7] = [
        GroupKind::Synonymic,
        GroupKind::Antonymic,
        GroupKind::HyperoHyponymic,
        GroupKind::PartialHolonymic,
        GroupKind::Conversive,
        GroupKind::LexicalSemantic,
        GroupKind::Thematic,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GroupKind::Synonymic => "synonymic",
            GroupKind::Antonymic => "antonymic",
            GroupKind::HyperoHyponymic => "hypero-hyponymic",
            GroupKind::PartialHolonymic => "partial-holonymic",
            GroupKind::Conversive => "conversive",
            GroupKind::LexicalSemantic => "lexical-semantic",
            GroupKind::Thematic => "thematic",
        }
    }
}

impl FromStr for GroupKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        GroupKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown group kind `{s}`"))
    }
}

/// A small semantic group, written `kind:label`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Group {
    pub kind: GroupKind,
    pub label: String,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.kind.as_str(), self.label)
    }
}

impl FromStr for Group {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (kind, label) = s
            .split_once(':')
            .ok_or_else(|| format!("group `{s}` is not `kind:label`"))?;
        let label = label.trim();
        if label.is_empty() || label.contains(',') {
            return Err(format!("bad group label in `{s}`"));
        }
        Ok(Group {
            kind: kind.trim().parse()?,
            label: label.to_owned(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeEntry {
    pub pos: Pos,
    pub groups: BTreeSet<Group>,
    pub field: String,
}

impl SchemeEntry {
    fn groups_text(&self) -> String {
        self.groups
            .iter()
            .map(Group::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemanticScheme {
    fields: Vec<String>,
    entries: BTreeMap<String, SchemeEntry>,
}

impl Default for SemanticScheme {
    fn default() -> Self {
        SemanticScheme {
            fields: DEFAULT_FIELDS.iter().map(|s| s.to_string()).collect(),
            entries: BTreeMap::new(),
        }
    }
}

impl SemanticScheme {
    pub fn fields(&self) -> &[String] {
        &self.fields
    }

    pub fn entries(&self) -> &BTreeMap<String, SchemeEntry> {
        &self.entries
    }

    pub fn get(&self, word: &str) -> Option<&SchemeEntry> {
        self.entries.get(word)
    }

    /// Adds an entry; an identical repeat is accepted, a differing one is not.
    pub fn insert(&mut self, word: impl Into<String>, entry: SchemeEntry) -> Result<()> {
        let word = word.into();
        if !self.fields.contains(&entry.field) {
            return Err(Error::Invalid(format!(
                "field `{}` of `{word}` is not in the inventory",
                entry.field
            )));
        }
        if entry.groups.is_empty() {
            return Err(Error::Invalid(format!("`{word}` has no groups")));
        }
        match self.entries.get(&word) {
            Some(existing) if *existing != entry => {
                Err(Error::Invalid(format!("conflicting entries for `{word}`")))
            }
            Some(_) => Ok(()),
            None => {
                self.entries.insert(word, entry);
                Ok(())
            }
        }
    }
}

/// Parses a scheme file.
///
/// Data lines are `word<TAB>pos<TAB>kind:group[,kind:group...]<TAB>field`.
/// An optional `# fields:<TAB>a,b,c` line before the first entry replaces the
/// default field inventory; other `#` lines are comments.
pub fn load_scheme(text: &str, what: &str) -> Result<SemanticScheme> {
    let mut scheme = SemanticScheme::default();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        if let Some(list) = line.strip_prefix("# fields:") {
            if !scheme.entries.is_empty() {
                return Err(Error::parse(what, line_no, "field inventory after entries"));
            }
            let fields: Vec<String> = list
                .split(',')
                .map(|f| f.trim().to_owned())
                .filter(|f| !f.is_empty())
                .collect();
            let unique: BTreeSet<&String> = fields.iter().collect();
            if fields.is_empty() || unique.len() != fields.len() {
                return Err(Error::parse(
                    what,
                    line_no,
                    "empty or repeated field inventory",
                ));
            }
            scheme.fields = fields;
            continue;
        }
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        let [word, pos, groups, field] = cols[..] else {
            return Err(Error::parse(
                what,
                line_no,
                "expected `word<TAB>pos<TAB>kind:group<TAB>field`",
            ));
        };
        let word = word.trim();
        if word.is_empty() {
            return Err(Error::parse(what, line_no, "empty word"));
        }
        let pos: Pos = pos
            .trim()
            .parse()
            .map_err(|e| Error::parse(what, line_no, e))?;
        let groups = groups
            .split(',')
            .map(|g| g.trim().parse::<Group>())
            .collect::<Result<BTreeSet<Group>, String>>()
            .map_err(|e| Error::parse(what, line_no, e))?;
        let entry = SchemeEntry {
            pos,
            groups,
            field: field.trim().to_owned(),
        };
        scheme
            .insert(word, entry)
            .map_err(|e| Error::parse(what, line_no, e.to_string()))?;
    }
    Ok(scheme)
}

/// Serializes a scheme; the inventory line is always written.
pub fn write_scheme(scheme: &SemanticScheme) -> String {
    let mut out = format!("# fields:\t{}\n", scheme.fields.join(","));
    for (word, e) in &scheme.entries {
        let _ = writeln!(out, "{word}\t{}\t{}\t{}", e.pos, e.groups_text(), e.field);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Relation {
    Antonym,
    Conversive,
    Complement,
}

impl Relation {
    pub fn as_str(self) -> &'static str {
        match self {
            Relation::Antonym => "antonym",
            Relation::Conversive => "conversive",
            Relation::Complement => "complement",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Relation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "antonym" => Ok(Relation::Antonym),
            "conversive" => Ok(Relation::Conversive),
            "complement" => Ok(Relation::Complement),
            _ => Err(format!("unknown relation `{s}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pair {
    pub a: String,
    pub b: String,
    pub relation: Relation,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairList {
    pub pairs: Vec<Pair>,
}

impl PairList {
    pub fn push(&mut self, a: &str, b: &str, relation: Relation) -> Result<()> {
        if a == b {
            return Err(Error::Invalid(format!("pair of `{a}` with itself")));
        }
        self.pairs.push(Pair {
            a: a.to_owned(),
            b: b.to_owned(),
            relation,
        });
        Ok(())
    }
}

/// Parses `word_a<TAB>word_b<TAB>relation` lines; `#` lines are comments.
pub fn load_pairs(text: &str, what: &str) -> Result<PairList> {
    let mut list = PairList::default();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').map(str::trim).collect();
        let [a, b, relation] = cols[..] else {
            return Err(Error::parse(
                what,
                line_no,
                "expected `word_a<TAB>word_b<TAB>relation`",
            ));
        };
        if a.is_empty() || b.is_empty() {
            return Err(Error::parse(what, line_no, "empty word"));
        }
        let relation: Relation = relation
            .parse()
            .map_err(|e| Error::parse(what, line_no, e))?;
        list.push(a, b, relation)
            .map_err(|e| Error::parse(what, line_no, e.to_string()))?;
    }
    Ok(list)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaggedWord {
    pub word: String,
    pub entry: Option<SchemeEntry>,
}

/// A base annotated with scheme entries, in base order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TaggedBase {
    pub words: Vec<TaggedWord>,
}

impl TaggedBase {
    pub fn tagged(&self) -> impl Iterator<Item = (&str, &SchemeEntry)> {
        self.words
            .iter()
            .filter_map(|w| w.entry.as_ref().map(|e| (w.word.as_str(), e)))
    }

    pub fn unknown(&self) -> Vec<&str> {
        self.words
            .iter()
            .filter(|w| w.entry.is_none())
            .map(|w| w.word.as_str())
            .collect()
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("word\tpos\tgroups\tfield\n");
        for w in &self.words {
            match &w.entry {
                Some(e) => {
                    let _ = writeln!(
                        out,
                        "{}\t{}\t{}\t{}",
                        w.word,
                        e.pos,
                        e.groups_text(),
                        e.field
                    );
                }
                None => {
                    let _ = writeln!(out, "{}\t\t\t", w.word);
                }
            }
        }
        out
    }
}

pub fn tag(base: &LexicalBase, scheme: &SemanticScheme) -> TaggedBase {
    TaggedBase {
        words: base
            .words
            .iter()
            .map(|w| TaggedWord {
                word: w.clone(),
                entry: scheme.get(w).cloned(),
            })
            .collect(),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Share<L> {
    pub label: L,
    pub count: usize,
    /// `count` over the number of classified words.
    pub fraction: f64,
    /// Rendered share in tenths of a percent; the parts of one section
    /// always add up to exactly 1000 (or are all 0).
    pub tenths: u64,
}

/// How a tagged base spreads over fields and parts of speech.
#[derive(Clone, Debug, PartialEq)]
pub struct SynopsisReport {
    pub base_size: usize,
    pub classified: usize,
    pub fields: Vec<Share<String>>,
    pub pos: Vec<Share<Pos>>,
    pub unknown: Vec<String>,
    pub empty_fields: Vec<String>,
}

fn shares<L: Clone>(labels: &[L], counts: &[usize], classified: usize) -> Vec<Share<L>> {
    let raw: Vec<u64> = counts.iter().map(|&c| c as u64).collect();
    let tenths = apportion(&raw, 1000);
    labels
        .iter()
        .zip(counts)
        .zip(tenths)
        .map(|((label, &count), tenths)| Share {
            label: label.clone(),
            count,
            fraction: if classified == 0 {
                0.0
            } else {
                count as f64 / classified as f64
            },
            tenths,
        })
        .collect()
}

pub fn field_synopsis(tagged: &TaggedBase, scheme: &SemanticScheme) -> SynopsisReport {
    let mut field_counts = vec![0usize; scheme.fields.len()];
    let mut pos_counts = vec![0usize; Pos::ALL.len()];
    let mut classified = 0;
    for (_, entry) in tagged.tagged() {
        classified += 1;
        if let Some(i) = scheme.fields.iter().position(|f| *f == entry.field) {
            field_counts[i] += 1;
        }
        pos_counts[Pos::ALL.iter().position(|p| *p == entry.pos).unwrap()] += 1;
    }
    let fields = shares(&scheme.fields, &field_counts, classified);
    let empty_fields = fields
        .iter()
        .filter(|s| s.count == 0)
        .map(|s| s.label.clone())
        .collect();
    SynopsisReport {
        base_size: tagged.words.len(),
        classified,
        fields,
        pos: shares(&Pos::ALL, &pos_counts, classified),
        unknown: tagged.unknown().into_iter().map(str::to_owned).collect(),
        empty_fields,
    }
}

impl SynopsisReport {
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# base:\t{}", self.base_size);
        let _ = writeln!(out, "# classified:\t{}", self.classified);
        out.push_str("section\tlabel\tcount\tpercent\n");
        for s in &self.fields {
            let _ = writeln!(
                out,
                "field\t{}\t{}\t{}",
                s.label,
                s.count,
                format_tenths(s.tenths)
            );
        }
        for s in &self.pos {
            let _ = writeln!(
                out,
                "pos\t{}\t{}\t{}",
                s.label,
                s.count,
                format_tenths(s.tenths)
            );
        }
        for w in &self.unknown {
            let _ = writeln!(out, "unknown\t{w}\t\t");
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "Lexical base: {} words, {} classified, {} not in the scheme",
            self.base_size,
            self.classified,
            self.unknown.len()
        );
        let width = self
            .fields
            .iter()
            .map(|s| s.label.chars().count())
            .chain(std::iter::once(11))
            .max()
            .unwrap_or(0);
        out.push_str("\nFields:\n");
        for s in &self.fields {
            let _ = writeln!(
                out,
                "  {:<width$} {:>6} {:>6}%{}",
                s.label,
                s.count,
                format_tenths(s.tenths),
                if s.count == 0 { "  (empty)" } else { "" }
            );
        }
        out.push_str("\nParts of speech:\n");
        for s in self.pos.iter().filter(|s| s.count > 0) {
            let _ = writeln!(
                out,
                "  {:<width$} {:>6} {:>6}%",
                s.label.as_str(),
                s.count,
                format_tenths(s.tenths)
            );
        }
        if !self.empty_fields.is_empty() {
            let _ = writeln!(out, "\nEmpty fields: {}", self.empty_fields.join(", "));
        }
        if !self.unknown.is_empty() {
            let _ = writeln!(out, "\nNot in the scheme: {}", self.unknown.join(", "));
        }
        out
    }
}

/// A pair member present in the base whose partner is missing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Gap {
    pub present: String,
    pub absent: String,
    pub relation: Relation,
}

/// Pairs with exactly one member in the base, ordered by the present word.
pub fn gap_report(base: &LexicalBase, pairs: &PairList) -> Vec<Gap> {
    let words = base.word_set();
    let gaps: BTreeSet<Gap> = pairs
        .pairs
        .iter()
        .filter_map(|p| {
            let (present, absent) =
                match (words.contains(p.a.as_str()), words.contains(p.b.as_str())) {
                    (true, false) => (&p.a, &p.b),
                    (false, true) => (&p.b, &p.a),
                    _ => return None,
                };
            Some(Gap {
                present: present.clone(),
                absent: absent.clone(),
                relation: p.relation,
            })
        })
        .collect();
    gaps.into_iter().collect()
}

pub fn gaps_to_tsv(gaps: &[Gap]) -> String {
    let mut out = String::from("present\tabsent\trelation\n");
    for g in gaps {
        let _ = writeln!(out, "{}\t{}\t{}", g.present, g.absent, g.relation);
    }
    out
}

pub fn gaps_to_text(gaps: &[Gap]) -> String {
    if gaps.is_empty() {
        return "No pair gaps.\n".to_owned();
    }
    let mut out = format!("{} pair gaps:\n", gaps.len());
    for g in gaps {
        let _ = writeln!(out, "  {} but no {} ({})", g.present, g.absent, g.relation);
    }
    out
}
