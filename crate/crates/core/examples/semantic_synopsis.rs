//! Tag a lexical base with the sample semantic scheme, summarize it by
//! field, part of speech and group kind, and list antonym gaps.

use lexbase::scheme::{gaps_to_text, load_pairs, load_scheme};
use lexbase::{field_synopsis, gap_report, tag, LexicalBase, SelectionPolicy};

fn main() -> lexbase::Result<()> {
    let scheme = load_scheme(
        include_str!("../data/sample_scheme.tsv"),
        "sample_scheme.tsv",
    )?;
    let pairs = load_pairs(include_str!("../data/sample_pairs.tsv"), "sample_pairs.tsv")?;

    let words = [
        "sjohodni",
        "zavtra",
        "dorohyj",
        "harjačyj",
        "xolodnyj",
        "žinočyj",
        "teplyj",
        "slovo",
    ];
    let base = LexicalBase {
        words: words.map(String::from).to_vec(),
        policy: SelectionPolicy::top_k(5, 1389)?,
        source: "example".into(),
    };

    let tagged = tag(&base, &scheme);
    println!("unknown to the scheme: {:?}\n", tagged.unknown());
    print!("{}", field_synopsis(&tagged, &scheme).to_text());
    println!("\ngaps:");
    print!("{}", gaps_to_text(&gap_report(&base, &pairs)));
    Ok(())
}
