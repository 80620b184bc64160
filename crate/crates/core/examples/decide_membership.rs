//! Arithmetic membership in R with the witnessing orbit element.
//!
//! cargo run --example decide_membership -- 25/11 49/2 100/39

use lensball::cfrac::Fraction;
use lensball::rset::{is_in_r, orbit};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        args = vec!["25/11".into(), "49/2".into(), "16/7".into()];
    }
    for arg in args {
        let fr: Fraction = arg.parse()?;
        let orb: Vec<String> = orbit(fr).iter().map(ToString::to_string).collect();
        let r = is_in_r(fr);
        println!("{fr}: orbit {{{}}}", orb.join(", "));
        println!("  {}", serde_json::to_string(&r)?);
    }
    Ok(())
}
