//! Extract lexical bases from a comparison table under different policies.

use lexbase::compare::parse_table;
use lexbase::{select, SelectionPolicy};

fn main() -> lexbase::Result<()> {
    let text = include_str!("../data/published_head.tsv");
    let table = parse_table(text, "published_head.tsv")?;

    let policies = [
        SelectionPolicy::top_k(5, 10)?,
        SelectionPolicy::top_k(4, 10)?,
        SelectionPolicy::min_sum(5, 1436.0)?,
        "rank_key=sum;min_genres=3;top_k=3".parse()?,
    ];
    for policy in &policies {
        let base = select(&table, policy)?;
        println!(
            "{policy}\n  {} words: {}",
            base.len(),
            base.words.join(", ")
        );
    }
    Ok(())
}
