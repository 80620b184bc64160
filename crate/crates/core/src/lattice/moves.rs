//! Contractions and expansions.
//!
//! For a subset with all `|v_i . e_j| <= 1`, if `E_h = {s, t}` and `a_t > 2`,
//! the contraction drops `v_s` and `v_t`, inserts `π_{e_h}(v_t)` and deletes
//! the coordinate `e_h`, giving a subset of `D^{n-1}`. The projected vector
//! takes position `min(s, t)` when `s` and `t` are adjacent and position `t`
//! otherwise; every other vector keeps its relative order.

use super::{check_conditions, is_standard, LatticeSubset, LatticeVector};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `(s_1, ..., s_k) -> (s_1 + 1, s_2, ..., s_k, 2)`
    Right,
    /// `(s_1, ..., s_k) -> (2, s_1, ..., s_{k-1}, s_k + 1)`
    Left,
}

/// Contracts `s` along coordinate `h`, removing `v_s` and projecting `v_t`.
/// Indices are 0-based.
pub fn contract(s: &LatticeSubset, h: usize, drop: usize, t: usize) -> Result<LatticeSubset> {
    let k = s.len();
    if h >= s.rank() || drop >= k || t >= k || drop == t {
        return Err(Error::Precondition(format!(
            "indices out of range: coordinate {h}, vectors {drop} and {t} of {k}"
        )));
    }
    let weights = check_conditions(s)?;
    if s.max_abs_entry() > 1 {
        return Err(Error::Precondition("some |v_i . e_j| exceeds 1".into()));
    }
    let e_h: Vec<usize> = (0..k).filter(|&i| s.entry(i, h) != 0).collect();
    let mut expected = vec![drop.min(t), drop.max(t)];
    expected.dedup();
    if e_h != expected {
        return Err(Error::Precondition(format!(
            "E_{} = {:?}, expected {{{}, {}}}",
            h + 1,
            e_h.iter().map(|i| i + 1).collect::<Vec<_>>(),
            drop + 1,
            t + 1
        )));
    }
    if weights[t] <= 2 {
        return Err(Error::Precondition(format!(
            "v{} has square -{}, contraction needs a_t > 2",
            t + 1,
            weights[t]
        )));
    }

    Ok(contract_unchecked(s, h, drop, t))
}

/// The contraction move without precondition checks.
pub(crate) fn contract_unchecked(
    s: &LatticeSubset,
    h: usize,
    drop: usize,
    t: usize,
) -> LatticeSubset {
    let k = s.len();
    let projected = s.vectors()[t].project_off(h);
    let slot = if drop.abs_diff(t) == 1 {
        drop.min(t)
    } else {
        t
    };
    let mut vectors = Vec::with_capacity(k - 1);
    for (i, v) in s.vectors().iter().enumerate() {
        if i == slot {
            vectors.push(projected.clone());
        } else if i != drop && i != t {
            vectors.push(v.clone());
        }
    }
    let vectors = vectors
        .into_iter()
        .map(|v| {
            let mut c = v.0;
            c.remove(h);
            LatticeVector(c)
        })
        .collect();
    LatticeSubset::new(s.rank() - 1, vectors).expect("every vector loses the same coordinate")
}

/// Applies `amount` expansions on one side; see [`expand_once`].
pub fn expand(s: &LatticeSubset, side: Side, amount: usize) -> Result<LatticeSubset> {
    let mut cur = s.clone();
    for _ in 0..amount {
        cur = expand_once(&cur, side)?;
    }
    Ok(cur)
}

/// Adds a final `(-2)`-vector in a fresh coordinate on `side` and increments
/// the weight of the opposite end. Requires a standard subset with a
/// coordinate `e_j` used exactly by the two end vectors, each with
/// coefficient ±1; the result keeps that property through the new
/// coordinate, and contracting the new coordinate recovers `s`.
pub fn expand_once(s: &LatticeSubset, side: Side) -> Result<LatticeSubset> {
    if !is_standard(s) {
        return Err(Error::Precondition(
            "expansion needs a standard subset".into(),
        ));
    }
    let k = s.len();
    if k < 2 {
        return Err(Error::Precondition(
            "expansion needs at least two vectors".into(),
        ));
    }
    let (first, last) = (0, k - 1);
    let j = (0..s.rank())
        .find(|&j| {
            (0..k).all(|i| (s.entry(i, j) != 0) == (i == first || i == last))
                && s.entry(first, j).abs() == 1
                && s.entry(last, j).abs() == 1
        })
        .ok_or_else(|| {
            Error::Precondition("no coordinate is shared exactly by the two end vectors".into())
        })?;

    // `near` is the end the new vector attaches to, `far` gets incremented.
    let (near, far) = match side {
        Side::Right => (last, first),
        Side::Left => (first, last),
    };
    let n = s.rank() + 1;
    let widen = |v: &LatticeVector| {
        let mut c = v.0.clone();
        c.push(0);
        c
    };
    // new = x e_j + y e_new with v_near . new = 1 and v_far' . new = 0,
    // where v_far' = v_far + e_new.
    let x = -s.entry(near, j);
    let y = -x * s.entry(far, j);
    let mut fresh = vec![0; n];
    fresh[j] = x;
    fresh[n - 1] = y;

    let mut vectors: Vec<LatticeVector> = s
        .vectors()
        .iter()
        .map(|v| LatticeVector(widen(v)))
        .collect();
    vectors[far].0[n - 1] = 1;
    match side {
        Side::Right => vectors.push(LatticeVector(fresh)),
        Side::Left => vectors.insert(0, LatticeVector(fresh)),
    }
    let out = LatticeSubset::new(n, vectors)?;
    debug_assert!(is_standard(&out));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::tests::{case1, subset};
    use crate::lattice::{is_standard, stats};

    #[test]
    fn expand_right_then_contract() {
        let s = case1();
        let big = expand(&s, Side::Right, 1).unwrap();
        assert_eq!(big.weights(), vec![3, 2, 2, 2]);
        assert_eq!(big.rank(), 4);
        assert!(is_standard(&big));
        assert_eq!(big.invariant(), -3);
        // the new coordinate is the last one, used by v1 and v4
        let back = contract(&big, 3, 3, 0).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn expand_left() {
        let big = expand(&case1(), Side::Left, 1).unwrap();
        assert_eq!(big.weights(), vec![2, 2, 2, 3]);
        assert!(is_standard(&big));
        assert_eq!(contract(&big, 3, 0, 3).unwrap(), case1());
    }

    #[test]
    fn repeated_expansion_keeps_invariant() {
        let mut s = case1();
        for side in [
            Side::Right,
            Side::Right,
            Side::Left,
            Side::Right,
            Side::Left,
        ] {
            s = expand_once(&s, side).unwrap();
            assert!(is_standard(&s));
            assert_eq!(s.invariant(), -3);
            let st = stats(&s).unwrap();
            assert_eq!((st.p(1), st.p(2), st.p(3)), (1, 1, s.len() - 2));
        }
        assert_eq!(s.weights(), vec![2, 3, 4, 2, 2, 2, 3, 3]);
    }

    #[test]
    fn contraction_preconditions() {
        let big = expand(&case1(), Side::Right, 1).unwrap();
        // a_t = 2
        assert!(matches!(
            contract(&big, 3, 0, 3),
            Err(Error::Precondition(_))
        ));
        // E_h has three elements
        let e = big.e_sets();
        let h3 = e.iter().position(|x| x.len() == 3).unwrap();
        assert!(matches!(
            contract(&big, h3, e[h3][0], e[h3][1]),
            Err(Error::Precondition(_))
        ));
        // not a chain (v3 has square -1)
        let wide = subset(&[&[2, 1, 0], &[0, 1, 1], &[0, 0, 1]]);
        assert!(contract(&wide, 0, 0, 1).is_err());
    }

    #[test]
    fn expansion_needs_standard_input() {
        let s = crate::lattice::tests::case2();
        assert!(expand(&s, Side::Right, 1).is_err());
    }
}
