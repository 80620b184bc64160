//! Continued-fraction toolkit: expansion, dual, reversal, plus strings.
//!
//! cargo run --example expand_fraction -- 25/11

use lensball::cfrac::{
    neg_eval, neg_expand, negsum, plus_eval, plus_to_minus, reverse_string, riemenschneider_dual,
    Fraction, PlusString,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "25/11".into());
    let fr: Fraction = arg.parse()?;

    let s = neg_expand(fr);
    println!("{fr} = {s}-   negsum {}", negsum(&s));

    let dual = riemenschneider_dual(&s)?;
    println!("{} = {dual}-   negsum {}", fr.complement(), negsum(&dual));

    let rev = reverse_string(&s);
    println!("reversed {rev}- = {}", neg_eval(&rev)?);

    let plus: PlusString = "[1,3]".parse()?;
    println!(
        "{plus}+ = {} = {}-",
        plus_eval(&plus)?,
        plus_to_minus(&plus)?
    );
    Ok(())
}
