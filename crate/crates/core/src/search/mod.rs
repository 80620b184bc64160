//! Exhaustive searches: chain embeddings into `D^n`, enumeration of small
//! standard and good subsets, and the Casson-Gordon sums.

mod cg;
mod embed;
mod enumerate;

use serde::{Serialize, Serializer};

use crate::cfrac::{neg_expand, Fraction, NegString};
use crate::error::{Error, Result};
use crate::lattice::LatticeSubset;
use embed::{Mode, Outcome, Searcher};

pub use cg::{casson_gordon_check, CGReport, CG_MAX_M, CG_TOLERANCE};
pub use enumerate::{enumerate_good_rank3, enumerate_standard, strings_with_invariant_at_most};

pub const DEFAULT_MAX_NODES: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Search nodes allowed before giving up with [`SearchStatus::ResourceExceeded`].
    pub max_nodes: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_nodes: DEFAULT_MAX_NODES,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    Found,
    NotFound,
    ResourceExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingResult {
    #[serde(serialize_with = "display")]
    pub string: NegString,
    pub found: bool,
    pub status: SearchStatus,
    pub matrix: Option<LatticeSubset>,
    pub nodes_explored: u64,
}

fn display<S: Serializer, T: std::fmt::Display>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl EmbeddingResult {
    /// The embedding matrix as CSV, one vector per line.
    pub fn matrix_csv(&self) -> Option<String> {
        self.matrix.as_ref().map(LatticeSubset::rows_csv)
    }

    /// `Err(ResourceExceeded)` if the search was cut short, else `found`.
    pub fn decided(&self) -> Result<bool> {
        match self.status {
            SearchStatus::ResourceExceeded => Err(Error::ResourceExceeded(self.nodes_explored)),
            _ => Ok(self.found),
        }
    }
}

/// Searches for a standard subset of `D^n`, `n = s.len()`, with weights `s`.
pub fn embed_string(s: &NegString) -> EmbeddingResult {
    embed_string_with(s, &SearchConfig::default())
}

pub fn embed_string_with(s: &NegString, config: &SearchConfig) -> EmbeddingResult {
    let weights = s.terms();
    let mut first = None;
    let mut searcher = Searcher::new(
        weights,
        Mode::Standard,
        config.max_nodes,
        |m: &[Vec<i64>]| {
            first = Some(m.to_vec());
            true
        },
    );
    let outcome = searcher.run();
    let nodes = searcher.nodes;
    let status = match outcome {
        Outcome::Stopped => SearchStatus::Found,
        Outcome::Complete => SearchStatus::NotFound,
        Outcome::Exceeded => SearchStatus::ResourceExceeded,
    };
    let matrix = first.map(|rows| LatticeSubset::from_rows(rows).expect("rows have length n"));
    EmbeddingResult {
        string: s.clone(),
        found: status == SearchStatus::Found,
        status,
        matrix,
        nodes_explored: nodes,
    }
}

/// Every standard subset realizing `s`, in canonical form and search order.
pub fn embed_all(s: &NegString, config: &SearchConfig) -> Result<Vec<LatticeSubset>> {
    search_all(s.terms(), Mode::Standard, config)
}

pub(crate) fn search_all(
    weights: &[i64],
    mode: Mode,
    config: &SearchConfig,
) -> Result<Vec<LatticeSubset>> {
    let mut found = Vec::new();
    let mut searcher = Searcher::new(weights, mode, config.max_nodes, |m: &[Vec<i64>]| {
        found.push(m.to_vec());
        false
    });
    if searcher.run() == Outcome::Exceeded {
        return Err(Error::ResourceExceeded(searcher.nodes));
    }
    found.into_iter().map(LatticeSubset::from_rows).collect()
}

/// Whether both `p/q` and `p/(p-q)` have strings embedding in `D^n`, the
/// necessary condition for `L(p,q)` to bound a rational homology ball.
pub fn donaldson_obstruction(fr: Fraction) -> Result<bool> {
    donaldson_obstruction_with(fr, &SearchConfig::default())
}

pub fn donaldson_obstruction_with(fr: Fraction, config: &SearchConfig) -> Result<bool> {
    let primary = embed_string_with(&neg_expand(fr), config).decided()?;
    if !primary {
        return Ok(false);
    }
    embed_string_with(&neg_expand(fr.complement()), config).decided()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cfrac::neg_eval;
    use crate::lattice::{canonical_form, gram, is_standard};

    fn string(terms: &[i64]) -> NegString {
        NegString::new(terms.to_vec()).unwrap()
    }

    fn fr(p: i64, q: i64) -> Fraction {
        Fraction::new(p, q).unwrap()
    }

    fn chain_gram(terms: &[i64]) -> Vec<Vec<i64>> {
        let n = terms.len();
        let mut q = vec![vec![0; n]; n];
        for i in 0..n {
            q[i][i] = -terms[i];
            if i + 1 < n {
                q[i][i + 1] = 1;
                q[i + 1][i] = 1;
            }
        }
        q
    }

    #[test]
    fn embed_examples() {
        let r = embed_string(&string(&[2, 2, 2]));
        assert!(r.found);
        let m = r.matrix.unwrap();
        let expected =
            LatticeSubset::from_rows(vec![vec![1, -1, 0], vec![0, 1, -1], vec![-1, -1, 0]])
                .unwrap();
        assert_eq!(m, canonical_form(&expected));

        let r = embed_string(&string(&[2, 2, 3]));
        assert_eq!(r.status, SearchStatus::NotFound);
        assert!(r.matrix.is_none());

        let r = embed_string(&string(&[3, 2, 2, 3, 2]));
        assert!(r.found);
        let m = r.matrix.unwrap();
        assert_eq!(gram(&m), chain_gram(&[3, 2, 2, 3, 2]));
        assert_eq!(m, canonical_form(&m));
    }

    #[test]
    fn found_matrices_realize_the_chain() {
        for p in 2..40 {
            for x in Fraction::all_with_numerator(p) {
                let s = neg_expand(x);
                let r = embed_string(&s);
                if let Some(m) = &r.matrix {
                    assert!(is_standard(m));
                    assert_eq!(gram(m), chain_gram(s.terms()), "{x}");
                    assert_eq!(neg_eval(&m.string().unwrap()).unwrap(), x);
                }
            }
        }
    }

    #[test]
    fn determinism() {
        let s = string(&[2, 5, 3]);
        let a = embed_string(&s);
        let b = embed_string(&s);
        assert_eq!(a, b);
        assert!(a.found);
    }

    #[test]
    fn resource_cap_is_distinct() {
        let r = embed_string_with(&string(&[3, 2, 2, 3, 2]), &SearchConfig { max_nodes: 5 });
        assert_eq!(r.status, SearchStatus::ResourceExceeded);
        assert!(!r.found);
        assert!(matches!(r.decided(), Err(Error::ResourceExceeded(_))));
    }

    #[test]
    fn donaldson_examples() {
        assert_eq!(donaldson_obstruction(fr(25, 11)), Ok(true));
        assert_eq!(donaldson_obstruction(fr(49, 2)), Ok(false));
        assert_eq!(donaldson_obstruction(fr(4, 3)), Ok(true));
        assert_eq!(donaldson_obstruction(fr(4, 1)), Ok(true));
        assert!(!embed_string(&neg_expand(fr(49, 47))).found);
    }

    #[test]
    fn short_strings() {
        // a single vector of square -a exists in D^1 iff a is a square
        for a in 2..50 {
            let found = embed_string(&string(&[a])).found;
            assert_eq!(
                found,
                crate::rset::perfect_square_root(a).is_some(),
                "[{a}]"
            );
        }
        for s in [&[2, 2][..], &[2, 3], &[3, 2]] {
            assert!(!embed_string(&string(s)).found);
        }
    }

    #[test]
    fn json_shape() {
        let r = embed_string(&string(&[2, 2, 2]));
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["string"], "[2,2,2]");
        assert_eq!(v["status"], "found");
        assert_eq!(
            v["matrix"],
            serde_json::json!([[1, 1, 0], [0, -1, 1], [-1, 1, 0]])
        );
        assert_eq!(r.matrix_csv().unwrap(), "1,1,0\n0,-1,1\n-1,1,0\n");
    }
}
