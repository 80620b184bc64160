//! Canonical representatives under `Aut(D^n)`, the signed permutations of
//! the basis.
//!
//! Each coordinate column is sign-normalised so that its first nonzero entry
//! is positive, then columns are sorted in decreasing lexicographic order
//! (top row first). Columns first used by an earlier vector therefore come
//! first; ties in first use are broken by the rest of the column. The search
//! in `crate::search` generates exactly these matrices.

use super::{components, LatticeSubset, LatticeVector};

pub fn canonical_form(s: &LatticeSubset) -> LatticeSubset {
    let k = s.len();
    let mut cols: Vec<Vec<i64>> = (0..s.rank())
        .map(|j| {
            let mut col: Vec<i64> = (0..k).map(|i| s.entry(i, j)).collect();
            if col.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0) {
                col.iter_mut().for_each(|c| *c = -*c);
            }
            col
        })
        .collect();
    cols.sort_by(|a, b| b.cmp(a));
    let vectors = (0..k)
        .map(|i| LatticeVector(cols.iter().map(|col| col[i]).collect()))
        .collect();
    LatticeSubset::new(s.rank(), vectors).expect("column permutation keeps the rank")
}

/// The smaller of the canonical forms of `s` and of `s` read backwards.
pub fn canonical_form_up_to_reversal(s: &LatticeSubset) -> LatticeSubset {
    let a = canonical_form(s);
    let b = canonical_form(&s.reversed());
    a.min(b)
}

/// The smallest canonical form over reversal and over negating whole
/// components of the intersection graph. Negating a component keeps every
/// product condition, so this is the natural class of a good subset.
pub fn canonical_class(s: &LatticeSubset) -> LatticeSubset {
    let comps = components(s);
    let mut best: Option<LatticeSubset> = None;
    for mask in 0u64..(1 << comps.len().min(20)) {
        let mut vectors = s.vectors().to_vec();
        for (b, comp) in comps.iter().enumerate() {
            if mask >> b & 1 == 1 {
                for &i in comp {
                    vectors[i].0.iter_mut().for_each(|c| *c = -*c);
                }
            }
        }
        let flipped = LatticeSubset::new(s.rank(), vectors).expect("same rank");
        let c = canonical_form_up_to_reversal(&flipped);
        if best.as_ref().is_none_or(|b| c < *b) {
            best = Some(c);
        }
    }
    best.expect("at least the identity pattern")
}
