//! Canonical forms, expansion and contraction, and bad components.

use lensball::cfrac::NegString;
use lensball::lattice::{
    bad_component_count, canonical_form, contract, expand, gram, stats, LatticeSubset, Side,
};
use lensball::search::embed_string;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let base = embed_string(&NegString::new(vec![2, 2, 2])?)
        .matrix
        .expect("[2,2,2] embeds");
    println!("[2,2,2]: {:?}", base.rows());

    let big = expand(&base, Side::Right, 2)?;
    println!("expanded twice: {} {:?}", big.string()?, big.rows());
    println!("gram: {:?}", gram(&big));
    let st = stats(&big)?;
    println!(
        "I = {}, p1 = {}, p2 = {}, p3 = {}",
        st.invariant,
        st.p(1),
        st.p(2),
        st.p(3)
    );

    let h = big.rank() - 1;
    let back = contract(&big, h, big.len() - 1, 0)?;
    println!("contracted: {} {:?}", back.string()?, back.rows());

    let shuffled = LatticeSubset::from_rows(vec![vec![0, 1, -1], vec![1, 0, 1], vec![0, -1, -1]])?;
    println!(
        "canonical form of {:?}: {:?}",
        shuffled.rows(),
        canonical_form(&shuffled).rows()
    );

    let triple = LatticeSubset::from_rows(vec![vec![1, -1, 0], vec![-1, 0, 2], vec![1, 1, 0]])?;
    println!(
        "bad components of {:?}: {}",
        triple.rows(),
        bad_component_count(&triple)?
    );
    Ok(())
}
