//! Good subsets of D^3 up to symmetry, and standard subsets at small rank.
//!
//! cargo run --release --example enumerate_subsets -- 5

use std::collections::BTreeMap;

use lensball::lattice::stats;
use lensball::search::{enumerate_good_rank3, enumerate_standard};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max_rank: usize = std::env::args()
        .nth(1)
        .map(|a| a.parse())
        .transpose()?
        .unwrap_or(5);

    println!("good subsets of D^3 with I <= -1:");
    for s in enumerate_good_rank3(-1)? {
        let st = stats(&s)?;
        println!(
            "  {:?}  p1={} p2={} c={} I={}",
            s.rows(),
            st.p(1),
            st.p(2),
            st.components,
            st.invariant
        );
    }

    for n in 3..=max_rank {
        let mut by_i: BTreeMap<i64, usize> = BTreeMap::new();
        for s in enumerate_standard(n, -1)? {
            *by_i.entry(s.invariant()).or_default() += 1;
        }
        println!("standard subsets of D^{n} with I < 0, count by I: {by_i:?}");
    }
    Ok(())
}
