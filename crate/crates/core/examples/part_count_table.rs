//! Summarizes recorded subset sizes and clique bounds into the part-count table.

use srg_borsuk::borsuk::{read_table_csv, render_table_text, table_summarize};

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/fi23_rounds.csv").into());
    let rows = table_summarize(&read_table_csv(std::fs::File::open(path).unwrap()).unwrap());
    render_table_text(&rows, std::io::stdout().lock()).unwrap();
    let best = rows.iter().map(|r| r.summary).max().unwrap();
    println!("largest lower bound: more than {best} parts");
}
