//! Subsets of the diagonal lattice `D^n = (Z^n, -I)`.
//!
//! A subset is an ordered list of vectors `v_1, ..., v_k` written in the
//! basis `e_1, ..., e_n` with `e_i . e_j = -δ_ij`. Chain order matters:
//! the conditions below only constrain consecutive products.

mod bad;
mod canonical;
mod moves;

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cfrac::NegString;
use crate::error::{Error, Result};

pub use bad::{bad_component_count, is_bad_triple};
pub use canonical::{canonical_class, canonical_form, canonical_form_up_to_reversal};
pub use moves::{contract, expand, expand_once, Side};

/// A vector of `D^n` by its coefficients on `e_1, ..., e_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector(pub Vec<i64>);

impl LatticeVector {
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        LatticeVector(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    /// Lattice product `v . w = -sum v_i w_i`.
    pub fn dot(&self, other: &LatticeVector) -> i64 {
        -coeff_dot(&self.0, &other.0)
    }

    pub fn square(&self) -> i64 {
        self.dot(self)
    }

    /// `v . e_i`.
    pub fn dot_basis(&self, i: usize) -> i64 {
        -self.0[i]
    }

    /// `π_{e_i}(v) = v + (v . e_i) e_i`, which clears coordinate `i`.
    pub fn project_off(&self, i: usize) -> LatticeVector {
        let mut v = self.0.clone();
        v[i] += -self.0[i];
        LatticeVector(v)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
    }
}

pub(crate) fn coeff_dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Ordered vectors `v_1, ..., v_k` in `D^rank`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeSubset {
    rank: usize,
    vectors: Vec<LatticeVector>,
}

impl LatticeSubset {
    pub fn new(rank: usize, vectors: Vec<LatticeVector>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.0.len() != rank) {
            return Err(Error::Precondition(format!(
                "vector of length {} in D^{rank}",
                v.0.len()
            )));
        }
        Ok(LatticeSubset { rank, vectors })
    }

    /// Builds a subset from coefficient rows; the rank is the row length.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let rank = rows
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::Precondition("empty subset".into()))?;
        LatticeSubset::new(rank, rows.into_iter().map(LatticeVector).collect())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[LatticeVector] {
        &self.vectors
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.vectors.iter().map(|v| v.0.clone()).collect()
    }

    /// Coefficient `m_ij` of `v_i` on `e_j`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.vectors[i].0[j]
    }

    /// `a_i = -v_i . v_i`.
    pub fn weights(&self) -> Vec<i64> {
        self.vectors.iter().map(|v| -v.square()).collect()
    }

    /// The string `(a_1, ..., a_k)`, if every weight is at least 2.
    pub fn string(&self) -> Result<NegString> {
        NegString::new(self.weights())
    }

    pub fn reversed(&self) -> LatticeSubset {
        let mut vectors = self.vectors.clone();
        vectors.reverse();
        LatticeSubset {
            rank: self.rank,
            vectors,
        }
    }

    /// `E_j = { i : v_i . e_j != 0 }` for every coordinate `j`.
    pub fn e_sets(&self) -> Vec<Vec<usize>> {
        (0..self.rank)
            .map(|j| (0..self.len()).filter(|&i| self.entry(i, j) != 0).collect())
            .collect()
    }

    /// `V_i = { j : e_j . v_i != 0 }` for every vector `i`.
    pub fn v_sets(&self) -> Vec<Vec<usize>> {
        self.vectors.iter().map(|v| v.support().collect()).collect()
    }

    /// `I(S) = sum(-v_i . v_i - 3)`.
    pub fn invariant(&self) -> i64 {
        self.weights().iter().map(|a| a - 3).sum()
    }

    pub fn max_abs_entry(&self) -> i64 {
        self.vectors
            .iter()
            .flat_map(|v| v.0.iter())
            .map(|c| c.abs())
            .max()
            .unwrap_or(0)
    }

    /// Gram matrix as CSV text, one row per line.
    pub fn gram_csv(&self) -> String {
        matrix_csv(&gram(self))
    }

    /// Coefficient matrix as CSV text, one vector per line.
    pub fn rows_csv(&self) -> String {
        matrix_csv(&self.rows())
    }
}

pub(crate) fn matrix_csv(rows: &[Vec<i64>]) -> String {
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row.iter().map(i64::to_string).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

impl fmt::Display for LatticeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.vectors.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            let mut wrote = false;
            for (j, &c) in v.0.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let sign = if c < 0 {
                    "-"
                } else if wrote {
                    "+"
                } else {
                    ""
                };
                let mag = if c.abs() == 1 {
                    String::new()
                } else {
                    c.abs().to_string()
                };
                write!(f, "{sign}{mag}e{}", j + 1)?;
                wrote = true;
            }
            if !wrote {
                f.write_str("0")?;
            }
        }
        f.write_str("}")
    }
}

impl Serialize for LatticeSubset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LatticeSubset {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<i64>>::deserialize(deserializer)?;
        LatticeSubset::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

/// `Q = (v_i . v_j) = -M M^t`.
pub fn gram(s: &LatticeSubset) -> Vec<Vec<i64>> {
    let k = s.len();
    let mut q = vec![vec![0; k]; k];
    for i in 0..k {
        for j in i..k {
            let d = s.vectors[i].dot(&s.vectors[j]);
            q[i][j] = d;
            q[j][i] = d;
        }
    }
    q
}

/// Checks squares `<= -2`, consecutive products in `{0, 1}` and all other
/// products zero. Returns the weights `a_i`.
pub fn check_conditions(s: &LatticeSubset) -> Result<Vec<i64>> {
    let q = gram(s);
    let k = s.len();
    for i in 0..k {
        if q[i][i] > -2 {
            return Err(Error::Conditions(format!(
                "v{} has square {}",
                i + 1,
                q[i][i]
            )));
        }
        for j in i + 1..k {
            let ok = if j == i + 1 {
                q[i][j] == 0 || q[i][j] == 1
            } else {
                q[i][j] == 0
            };
            if !ok {
                return Err(Error::Conditions(format!(
                    "v{} . v{} = {}",
                    i + 1,
                    j + 1,
                    q[i][j]
                )));
            }
        }
    }
    Ok(q.iter().enumerate().map(|(i, row)| -row[i]).collect())
}

pub fn satisfies_conditions(s: &LatticeSubset) -> bool {
    check_conditions(s).is_ok()
}

/// Whether the vectors are connected by the "share a basis coordinate"
/// relation.
pub fn is_irreducible(s: &LatticeSubset) -> bool {
    let k = s.len();
    if k == 0 {
        return true;
    }
    let mut uf = UnionFind::new(k);
    for j in 0..s.rank {
        let mut first = None;
        for i in 0..k {
            if s.entry(i, j) != 0 {
                match first {
                    None => first = Some(i),
                    Some(f) => uf.union(f, i),
                }
            }
        }
    }
    let root = uf.find(0);
    (1..k).all(|i| uf.find(i) == root)
}

pub fn is_good(s: &LatticeSubset) -> bool {
    satisfies_conditions(s) && is_irreducible(s)
}

/// Squares `<= -2`, every consecutive product exactly 1, all others 0.
pub fn is_standard(s: &LatticeSubset) -> bool {
    let q = gram(s);
    let k = s.len();
    (0..k).all(|i| {
        q[i][i] <= -2
            && (i + 1..k).all(|j| {
                if j == i + 1 {
                    q[i][j] == 1
                } else {
                    q[i][j] == 0
                }
            })
    })
}

/// Connected components of the intersection graph (edge iff `v_i . v_j = 1`),
/// each sorted, in order of their smallest index.
pub fn components(s: &LatticeSubset) -> Vec<Vec<usize>> {
    let k = s.len();
    let q = gram(s);
    let mut uf = UnionFind::new(k);
    for i in 0..k {
        for j in i + 1..k {
            if q[i][j] == 1 {
                uf.union(i, j);
            }
        }
    }
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut index_of_root = vec![usize::MAX; k];
    for i in 0..k {
        let r = uf.find(i);
        if index_of_root[r] == usize::MAX {
            index_of_root[r] = comps.len();
            comps.push(Vec::new());
        }
        comps[index_of_root[r]].push(i);
    }
    comps
}

/// Counts and index sets of a subset satisfying the chain conditions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubsetStats {
    /// `I(S)`.
    pub invariant: i64,
    /// `p_counts[i - 1] = p_i(S)` for `i = 1..=n`.
    pub p_counts: Vec<usize>,
    /// Number of components of the intersection graph.
    pub components: usize,
    /// Number of bad components.
    pub bad_components: usize,
    pub e_sets: Vec<Vec<usize>>,
    pub v_sets: Vec<Vec<usize>>,
}

impl SubsetStats {
    /// `p_i(S)` with 1-based `i`; zero outside `1..=n`.
    pub fn p(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.p_counts.get(i - 1).copied().unwrap_or(0)
    }
}

pub fn stats(s: &LatticeSubset) -> Result<SubsetStats> {
    check_conditions(s)?;
    let e_sets = s.e_sets();
    let n = s.rank();
    let mut p_counts = vec![0usize; n];
    for e in &e_sets {
        if !e.is_empty() && e.len() <= n {
            p_counts[e.len() - 1] += 1;
        }
    }
    Ok(SubsetStats {
        invariant: s.invariant(),
        p_counts,
        components: components(s).len(),
        bad_components: bad_component_count(s)?,
        e_sets,
        v_sets: s.v_sets(),
    })
}

/// Exact determinant by fraction-free elimination (Bareiss).
pub fn determinant(matrix: &[Vec<i64>]) -> i128 {
    let n = matrix.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn subset(rows: &[&[i64]]) -> LatticeSubset {
        LatticeSubset::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    // The three triples of the rank-3 classification.
    pub(crate) fn case1() -> LatticeSubset {
        subset(&[&[1, -1, 0], &[0, 1, -1], &[-1, -1, 0]])
    }
    pub(crate) fn case2() -> LatticeSubset {
        subset(&[&[1, -1, 0], &[0, 1, -1], &[1, 1, 1]])
    }
    pub(crate) fn case3() -> LatticeSubset {
        subset(&[&[1, 1, 1], &[-1, -1, 1], &[1, -1, 0]])
    }

    #[test]
    fn gram_examples() {
        assert_eq!(
            gram(&case1()),
            vec![vec![-2, 1, 0], vec![1, -2, 1], vec![0, 1, -2]]
        );
        assert_eq!(gram(&subset(&[&[1]])), vec![vec![-1]]);
        assert_eq!(
            gram(&case3()),
            vec![vec![-3, 1, 0], vec![1, -3, 0], vec![0, 0, -2]]
        );
    }

    #[test]
    fn stats_of_rank3_cases() {
        let table = [
            (case1(), (1, 1, 1, -3)),
            (case2(), (0, 2, 2, -2)),
            (case3(), (0, 1, 2, -1)),
        ];
        for (s, (p1, p2, c, inv)) in table {
            let st = stats(&s).unwrap();
            assert_eq!(
                (st.p(1), st.p(2), st.components, st.invariant),
                (p1, p2, c, inv),
                "{s}"
            );
            assert_eq!(st.p_counts.iter().sum::<usize>(), 3);
            assert_eq!(st.bad_components, 0);
        }
        assert!(stats(&subset(&[&[1, 0], &[0, 1]])).is_err());
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible(&case1()));
        assert!(!is_irreducible(&subset(&[&[1, -1, 0, 0], &[0, 0, 1, -1]])));
        assert!(is_irreducible(&case3()));
    }

    #[test]
    fn good_and_standard() {
        assert!(is_good(&case1()) && is_standard(&case1()));
        assert!(is_good(&case2()) && !is_standard(&case2()));
        assert!(!is_good(&subset(&[&[1, -1, 0, 0], &[0, 0, 1, -1]])));
    }

    #[test]
    fn determinant_matches_small_cases() {
        assert_eq!(determinant(&[vec![2, 1], vec![1, 2]]), 3);
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(determinant(&gram(&case1())), -4);
        assert_eq!(determinant(&[vec![1, 2], vec![2, 4]]), 0);
    }

    #[test]
    fn projection_clears_coordinate() {
        let v = LatticeVector(vec![1, -1, 2]);
        assert_eq!(v.project_off(2), LatticeVector(vec![1, -1, 0]));
        assert_eq!(v.dot_basis(2), -2);
        assert_eq!(v.square(), -6);
    }

    #[test]
    fn display_and_json() {
        assert_eq!(case1().to_string(), "{e1-e2, e2-e3, -e1-e2}");
        let json = serde_json::to_string(&case2()).unwrap();
        assert_eq!(json, "[[1,-1,0],[0,1,-1],[1,1,1]]");
        let back: LatticeSubset = serde_json::from_str(&json).unwrap();
        assert_eq!(back, case2());
        assert_eq!(case1().gram_csv(), "-2,1,0\n1,-2,1\n0,1,-2\n");
    }
}
