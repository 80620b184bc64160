//! Exhaustive enumeration of standard and good subsets at small rank.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::embed::Mode;
use super::{search_all, SearchConfig};
use crate::cfrac::NegString;
use crate::error::{Error, Result};
use crate::lattice::{canonical_class, is_good, LatticeSubset};

pub const MIN_ENUMERATION_RANK: usize = 3;
pub const MAX_ENUMERATION_RANK: usize = 7;

/// All strings of length `n` (terms `>= 2`) with `sum(a_i - 3) <= i_max`,
/// in lexicographic order.
pub fn strings_with_invariant_at_most(n: usize, i_max: i64) -> Vec<NegString> {
    let budget = n as i64 + i_max;
    let mut out = Vec::new();
    if budget < 0 {
        return out;
    }
    let mut cur = Vec::with_capacity(n);
    fill(n, budget, &mut cur, &mut out);
    out
}

fn fill(n: usize, budget: i64, cur: &mut Vec<i64>, out: &mut Vec<NegString>) {
    if cur.len() == n {
        out.push(NegString::new(cur.clone()).expect("terms are at least 2"));
        return;
    }
    for extra in 0..=budget {
        cur.push(2 + extra);
        fill(n, budget - extra, cur, out);
        cur.pop();
    }
}

/// Standard subsets of `D^n` with `I(S) <= i_max`, one per `Aut(D^n)` orbit,
/// sorted.
pub fn enumerate_standard(n: usize, i_max: i64) -> Result<Vec<LatticeSubset>> {
    if !(MIN_ENUMERATION_RANK..=MAX_ENUMERATION_RANK).contains(&n) {
        return Err(Error::RankBound(
            n,
            MIN_ENUMERATION_RANK,
            MAX_ENUMERATION_RANK,
        ));
    }
    let config = SearchConfig::default();
    let per_string: Vec<Vec<LatticeSubset>> = strings_with_invariant_at_most(n, i_max)
        .par_iter()
        .map(|s| search_all(s.terms(), Mode::Standard, &config))
        .collect::<Result<_>>()?;
    let mut all: Vec<LatticeSubset> = per_string.into_iter().flatten().collect();
    all.sort();
    Ok(all)
}

/// Good subsets of `D^3` with `I(S) <= i_max < 0`, one per class under
/// `Aut(D^3)`, chain reversal and negation of components (see
/// [`canonical_class`]), sorted.
pub fn enumerate_good_rank3(i_max: i64) -> Result<Vec<LatticeSubset>> {
    if i_max >= 0 {
        return Err(Error::Precondition(format!(
            "I_max must be negative, got {i_max}"
        )));
    }
    let config = SearchConfig::default();
    let mut classes = BTreeSet::new();
    for s in strings_with_invariant_at_most(3, i_max) {
        for subset in search_all(s.terms(), Mode::Good, &config)? {
            if is_good(&subset) {
                classes.insert(canonical_class(&subset));
            }
        }
    }
    Ok(classes.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{canonical_form, stats};

    #[test]
    fn string_counts() {
        assert!(strings_with_invariant_at_most(3, -4).is_empty());
        let s: Vec<String> = strings_with_invariant_at_most(3, -2)
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(s, ["[2,2,2]", "[2,2,3]", "[2,3,2]", "[3,2,2]"]);
    }

    #[test]
    fn rank_three_standard() {
        let all = enumerate_standard(3, -1).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].weights(), vec![2, 2, 2]);
        assert!(enumerate_standard(3, -4).unwrap().is_empty());
        assert_eq!(enumerate_standard(2, -1), Err(Error::RankBound(2, 3, 7)));
        assert_eq!(enumerate_standard(8, -1), Err(Error::RankBound(8, 3, 7)));
    }

    #[test]
    fn rank_three_good_classes() {
        let table = |i_max| -> Vec<(usize, usize, usize, i64)> {
            enumerate_good_rank3(i_max)
                .unwrap()
                .iter()
                .map(|s| {
                    let st = stats(s).unwrap();
                    (st.p(1), st.p(2), st.components, st.invariant)
                })
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect()
        };
        assert_eq!(table(-1), vec![(0, 1, 2, -1), (0, 2, 2, -2), (1, 1, 1, -3)]);
        assert_eq!(enumerate_good_rank3(-1).unwrap().len(), 3);
        assert_eq!(enumerate_good_rank3(-2).unwrap().len(), 2);
        assert_eq!(enumerate_good_rank3(-3).unwrap().len(), 1);
        assert!(enumerate_good_rank3(0).is_err());
    }

    #[test]
    fn enumeration_output_is_canonical() {
        for s in enumerate_standard(4, -1).unwrap() {
            assert_eq!(canonical_form(&s), s);
        }
    }
}
