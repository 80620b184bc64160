//! Casson-Gordon cotangent sums for K(m^2, q).
//!
//! cargo run --release --example casson_gordon -- 49/2

use lensball::cfrac::Fraction;
use lensball::rset::perfect_square_root;
use lensball::search::casson_gordon_check;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "49/2".into());
    let fr: Fraction = arg.parse()?;
    let m = perfect_square_root(fr.p()).ok_or("numerator must be a square")?;
    let r = casson_gordon_check(m, fr.q())?;
    for (i, v) in r.values.iter().enumerate() {
        println!("r = {}: {v:+.9}", i + 1);
    }
    println!(
        "all within {:e} of ±1: {} (max deviation {:.3e})",
        r.tolerance,
        r.all_pm_one,
        r.max_deviation()
    );
    Ok(())
}
