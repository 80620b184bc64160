//! Closed-form families: strings, fractions, square-form steps and the
//! plus/minus identity suite.

use lensball::cfrac::Fraction;
use lensball::families::{
    enumerate_family, family_csv, fraction_step, gen_fraction, gen_string, ribbon_identity_suite,
    Direction, FamilyKind, FamilySpec,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for spec in [
        FamilySpec::iminus3(&[2, 1, 3])?,
        FamilySpec::st(FamilyKind::Iminus2T1, 1, 2)?,
        FamilySpec::st(FamilyKind::Iminus1T3, 0, 1)?,
    ] {
        println!("{spec}: {} = {}", gen_string(&spec), gen_fraction(&spec)?);
    }

    let mut x = Fraction::new(4, 3)?;
    for dir in [Direction::Append, Direction::Append, Direction::Prepend] {
        x = fraction_step(x, dir)?;
        println!("{dir:?} -> {x}");
    }

    for r in ribbon_identity_suite() {
        println!(
            "{} {} ({} cases)",
            if r.passed() { "ok  " } else { "FAIL" },
            r.name,
            r.cases
        );
    }

    print!("{}", family_csv(&enumerate_family(-1, 0)?)?);
    Ok(())
}
