//! Merge five genre dictionaries into a comparison table and print it in the
//! published layout, where zero cells are left blank.

use lexbase::compare::{merge_with, write_table, CellStyle, Normalization};
use lexbase::{FrequencyDictionary, TableMode};

const ROWS: [(&str, [u64; 5]); 10] = [
    ("НОВИЙ", [262, 155, 495, 434, 179]),
    ("ТОМУ", [206, 444, 296, 379, 171]),
    ("ОРГАНІЗАЦІЯ", [14, 12, 460, 205, 745]),
    ("МОЖНА", [262, 419, 353, 370, 32]),
    ("СЛОВО", [445, 337, 415, 208, 23]),
    ("ПРОЦЕС", [0, 20, 152, 1111, 136]),
    ("ПИТАННЯ", [43, 74, 521, 283, 477]),
    ("УВЕСЬ", [254, 455, 403, 173, 110]),
    ("МІСЦЕ", [223, 202, 330, 240, 380]),
    ("УКРАЇНСЬКИЙ", [56, 14, 703, 314, 262]),
];

fn main() -> lexbase::Result<()> {
    let dictionaries = (0..5)
        .map(|g| {
            let counts = ROWS
                .iter()
                .filter(|(_, c)| c[g] > 0)
                .map(|(w, c)| (*w, c[g]));
            FrequencyDictionary::from_counts((g + 1).to_string(), counts)
        })
        .collect::<lexbase::Result<Vec<_>>>()?;

    // only the head of each dictionary is known here, so the cells are raw counts
    let table = merge_with(&dictionaries, Normalization::Force(TableMode::Raw))?;
    print!("{}", write_table(&table, CellStyle::Blank));
    Ok(())
}
