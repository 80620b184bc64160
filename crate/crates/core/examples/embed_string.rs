//! Standard embedding search for a fraction and its dual.
//!
//! cargo run --release --example embed_string -- 25/11

use lensball::cfrac::{neg_expand, Fraction};
use lensball::search::{donaldson_obstruction, embed_string};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "25/11".into());
    let fr: Fraction = arg.parse()?;

    for x in [fr, fr.complement()] {
        let r = embed_string(&neg_expand(x));
        println!(
            "{x} = {}-: {:?} after {} nodes",
            r.string, r.status, r.nodes_explored
        );
        if let Some(csv) = r.matrix_csv() {
            print!("{csv}");
        }
    }
    println!("both embed: {}", donaldson_obstruction(fr)?);
    Ok(())
}
