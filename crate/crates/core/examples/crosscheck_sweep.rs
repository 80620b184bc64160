//! Compares arithmetic membership with the embedding obstruction for every
//! p/q up to a bound and lists the disagreements.
//!
//! cargo run --release --example crosscheck_sweep -- 120

use lensball::cli::crosscheck_records;
use lensball::search::SearchConfig;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max_p: i64 = std::env::args()
        .nth(1)
        .map(|a| a.parse())
        .transpose()?
        .unwrap_or(120);
    let records = crosscheck_records(max_p, false, &SearchConfig::default())?;
    let bad: Vec<_> = records.iter().filter(|r| !r.agree).collect();
    println!(
        "{} fractions with p <= {max_p}, {} disagreements",
        records.len(),
        bad.len()
    );
    for r in bad {
        println!(
            "  {}/{}: in_R {} embeds {} / {}",
            r.p, r.q, r.in_r, r.embeds_pq, r.embeds_dual
        );
    }
    Ok(())
}
