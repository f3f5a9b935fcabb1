//! Tokenize a short Ukrainian passage and map forms to lemmas.

use lexbase::{normalize, tokenize, LemmaTable, TokenizationConfig};

fn main() -> lexbase::Result<()> {
    let text = "Сьогодні в м'якому світлі нові будинки здавалися ще новішими. \
                Жовто-блакитний прапор, 2024 рік!";
    let lemmas = LemmaTable::from_pairs([
        ("нові", "новий"),
        ("новішими", "новий"),
        ("будинки", "будинок"),
    ])?;

    let config = TokenizationConfig::default();
    println!("default marks, numerals dropped:");
    for token in tokenize(text, &config) {
        println!("  {token:<18} -> {}", normalize(token, &config, &lemmas));
    }

    let with_numerals = TokenizationConfig::new(['\'', '’', '-'], true, true)?;
    let count = tokenize(text, &with_numerals).count();
    println!("with numerals kept: {count} tokens");
    Ok(())
}
