mod common;

use std::collections::BTreeSet;

use lexbase::base::{parse_base, write_base};
use lexbase::compare::{parse_table, write_table, CellStyle};
use lexbase::corpus::{ingest_documents, Document};
use lexbase::freqdict::{parse_dictionary, write_dictionary};
use lexbase::scheme::{gap_report, load_pairs, PairList, Relation};
use lexbase::*;
use proptest::prelude::*;

fn lemma_stream() -> impl Strategy<Value = Vec<String>> {
    prop::collection::vec((0u8..20).prop_map(|i| format!("w{i}")), 0..300)
}

proptest! {
    #[test]
    fn tokens_are_ordered_disjoint_substrings(text in "[а-яa-z' \\-.,0-9’]{0,80}") {
        let config = TokenizationConfig::default();
        let mut pos = 0;
        for token in tokenize(&text, &config) {
            let start = token.as_ptr() as usize - text.as_ptr() as usize;
            prop_assert!(start >= pos);
            pos = start + token.len();
            let first = token.chars().next().unwrap();
            let last = token.chars().last().unwrap();
            prop_assert!(first.is_alphabetic() && last.is_alphabetic());
            prop_assert!(token.chars().all(|c| c.is_alphabetic() || config.intra_word_marks().contains(&c)));
        }
    }

    #[test]
    fn tokenizer_keeps_every_letter(text in "[а-яa-z' \\-.,0-9]{0,80}") {
        let config = TokenizationConfig::default();
        let letters_in: usize = text.chars().filter(|c| c.is_alphabetic()).count();
        let letters_out: usize = tokenize(&text, &config)
            .map(|t| t.chars().filter(|c| c.is_alphabetic()).count())
            .sum();
        prop_assert_eq!(letters_in, letters_out);
    }

    #[test]
    fn normalize_is_idempotent(
        token in "[A-Za-zА-Яа-я]{1,6}",
        pairs in prop::collection::vec(("[a-c]{1,2}", "[x-z]{1,2}"), 0..6),
    ) {
        // lemmas drawn from a disjoint alphabet are fixed points of the table
        let mut seen = std::collections::HashMap::new();
        let pairs: Vec<_> = pairs.into_iter().filter(|(s, l)| seen.insert(s.clone(), l.clone()).is_none()).collect();
        let table = LemmaTable::from_pairs(pairs).unwrap();
        let config = TokenizationConfig::default();
        let once = normalize(&token, &config, &table);
        prop_assert_eq!(normalize(&once, &config, &table), once);
    }

    #[test]
    fn ingest_length_is_min_of_cap_and_tokens(
        docs in prop::collection::vec((0usize..3, 0usize..30), 1..8),
        cap in 1usize..60,
    ) {
        let documents: Vec<Document> = docs
            .iter()
            .enumerate()
            .map(|(i, (g, n))| Document::new(format!("g{g}"), format!("d{i}"), "слово ".repeat(*n)))
            .collect();
        let out = ingest_documents(&documents, &TokenizationConfig::default(), &LemmaTable::new(), Cap::limit(cap).unwrap()).unwrap();
        for (genre, stream) in &out.streams {
            let total: usize = docs.iter().filter(|(g, _)| format!("g{g}") == *genre).map(|(_, n)| n).sum();
            prop_assert_eq!(stream.len(), total.min(cap));
            let warned = out.warnings.iter().any(|w| w.genre == *genre);
            prop_assert_eq!(warned, total < cap);
        }
    }

    #[test]
    fn build_matches_naive_count(lemmas in lemma_stream()) {
        let dict = build_dictionary(&GenreStream::new("g", lemmas.clone(), Cap::Unlimited));
        let mut expected = common::naive_count(&lemmas);
        expected.sort();
        let got: Vec<(String, u64)> = dict.counts().iter().map(|(w, c)| (w.clone(), *c)).collect();
        prop_assert_eq!(got, expected);
        prop_assert_eq!(dict.total(), lemmas.len() as u64);
    }

    #[test]
    fn coverage_is_monotone_and_complete(lemmas in lemma_stream()) {
        let dict = build_dictionary(&GenreStream::new("g", lemmas.clone(), Cap::Unlimited));
        let v = dict.vocabulary_size();
        let ks: Vec<usize> = (1..=v.max(1)).collect();
        let curve = coverage_curve(&dict, &ks).unwrap();
        prop_assert!(curve.windows(2).all(|w| w[0] <= w[1]));
        if v > 0 {
            prop_assert_eq!(*curve.last().unwrap(), 1.0);
        }
    }

    #[test]
    fn rank_prefix_equals_total_minus_suffix(lemmas in lemma_stream(), k in 0usize..25) {
        let dict = build_dictionary(&GenreStream::new("g", lemmas, Cap::Unlimited));
        let ranked = dict.rank_list();
        let k = k.min(ranked.entries.len());
        let prefix: u64 = ranked.entries[..k].iter().map(|(_, c)| c).sum();
        let suffix: u64 = ranked.entries[k..].iter().map(|(_, c)| c).sum();
        prop_assert_eq!(prefix, dict.total() - suffix);
        prop_assert_eq!(ranked.cumulative()[k], prefix);
    }

    #[test]
    fn dictionary_round_trip(seed in any::<u64>()) {
        let dict = common::random_dictionary(&mut common::rng(seed), "жанр");
        let text = write_dictionary(&dict);
        let parsed = parse_dictionary(&text, "d").unwrap();
        prop_assert_eq!(write_dictionary(&parsed), text);
        prop_assert_eq!(parsed, dict);
    }

    #[test]
    fn table_round_trip_in_both_cell_styles(seed in any::<u64>()) {
        let table = common::random_table(&mut common::rng(seed));
        let text = write_table(&table, CellStyle::Canonical);
        prop_assert_eq!(&parse_table(&text, "t").unwrap(), &table);
        let blank = write_table(&table, CellStyle::Blank);
        prop_assert_eq!(write_table(&parse_table(&blank, "t").unwrap(), CellStyle::Canonical), text);
    }

    #[test]
    fn merge_is_permutation_invariant(seed in any::<u64>(), rotate in 0usize..6) {
        let streams = common::random_corpus(&mut common::rng(seed));
        let dicts: Vec<FrequencyDictionary> = streams.iter().map(build_dictionary).collect();
        let table = merge(&dicts).unwrap();
        let n = dicts.len();
        let mut rotated = dicts.clone();
        rotated.rotate_left(rotate % n);
        let other = merge(&rotated).unwrap();
        prop_assert_eq!(other.mode(), table.mode());
        prop_assert_eq!(other.rows().len(), table.rows().len());
        for (a, b) in table.rows().iter().zip(other.rows()) {
            prop_assert_eq!(&a.word, &b.word);
            prop_assert_eq!(a.sum, b.sum);
            let mut back = b.counts.clone();
            back.rotate_right(rotate % n);
            prop_assert_eq!(&back, &a.counts);
        }
    }

    #[test]
    fn merge_preserves_totals(seed in any::<u64>()) {
        let streams = common::random_corpus(&mut common::rng(seed));
        let dicts: Vec<FrequencyDictionary> = streams.iter().map(build_dictionary).collect();
        let table = merge(&dicts).unwrap();
        if table.mode() == TableMode::Raw {
            let totals: Vec<u64> = dicts.iter().map(|d| d.total()).collect();
            prop_assert_eq!(table.column_totals(), totals.clone());
            let sums: u64 = table.rows().iter().map(|r| r.sum).sum();
            prop_assert_eq!(sums, totals.iter().sum::<u64>());
        }
        for row in table.rows() {
            prop_assert!(row.counts.iter().all(|c| *c <= row.sum));
            if row.genre_range() == 1 {
                prop_assert_eq!(row.counts.iter().copied().max().unwrap(), row.sum);
            }
        }
    }

    #[test]
    fn base_round_trip(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let table = common::random_table(&mut rng);
        let policy = common::random_policy(&mut rng, table.genres().len());
        let base = select(&table, &policy).unwrap();
        let text = write_base(&base);
        let parsed = parse_base(&text, "b").unwrap();
        prop_assert_eq!(write_base(&parsed), text);
        prop_assert_eq!(parsed, base);
    }

    #[test]
    fn gap_report_ignores_pair_orientation(
        base_words in prop::collection::btree_set(0u8..8, 0..8),
        pairs in prop::collection::vec((0u8..8, 0u8..8, 0u8..3), 0..12),
    ) {
        let base = LexicalBase {
            words: base_words.iter().map(|w| format!("w{w}")).collect(),
            policy: SelectionPolicy::top_k(1, 1).unwrap(),
            source: String::new(),
        };
        let rel = |r: u8| [Relation::Antonym, Relation::Conversive, Relation::Complement][r as usize];
        let mut forward = PairList::default();
        let mut backward = PairList::default();
        for (a, b, r) in pairs.iter().filter(|(a, b, _)| a != b) {
            forward.push(&format!("w{a}"), &format!("w{b}"), rel(*r)).unwrap();
            backward.push(&format!("w{b}"), &format!("w{a}"), rel(*r)).unwrap();
        }
        let gaps = gap_report(&base, &forward);
        prop_assert_eq!(&gaps, &gap_report(&base, &backward));
        for g in &gaps {
            prop_assert!(base_words.contains(&g.present[1..].parse::<u8>().unwrap()));
            prop_assert!(!base_words.contains(&g.absent[1..].parse::<u8>().unwrap()));
        }
        prop_assert!(gaps.windows(2).all(|w| w[0].present <= w[1].present));

        // closing the base under all pairs removes every gap
        let mut closed: BTreeSet<String> = base.words.iter().cloned().collect();
        for p in &forward.pairs {
            closed.insert(p.a.clone());
            closed.insert(p.b.clone());
        }
        let closed = LexicalBase { words: closed.into_iter().collect(), ..base.clone() };
        prop_assert!(gap_report(&closed, &forward).is_empty());
    }
}

#[test]
fn sample_pairs_load() {
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/data/sample_pairs.tsv"
    ))
    .unwrap();
    let pairs = load_pairs(&text, "sample").unwrap();
    assert_eq!(pairs.pairs.len(), 15);
}
