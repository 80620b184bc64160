//! Recognition of bad components.
//!
//! A bad component is what a three-vector component `(-2, < -2, -2)` with a
//! coordinate used by exactly those three vectors grows into under
//! expansions by final `(-2)`-vectors. Histories are not stored, so badness
//! is decided by peeling: undo such an expansion in every admissible way and
//! recurse until the component has three vectors.

use super::moves::contract_unchecked;
use super::{check_conditions, components, is_good, LatticeSubset};
use crate::error::Result;

/// Number of bad components of `s`, which must satisfy the chain conditions.
pub fn bad_component_count(s: &LatticeSubset) -> Result<usize> {
    check_conditions(s)?;
    let comps = components(s);
    Ok(comps.iter().filter(|c| is_bad(s, c, comps.len())).count())
}

/// Whether `v_start, v_{start+1}, v_{start+2}` (0-based) is a component with
/// squares `(-2, < -2, -2)`, some `E_j` equal to exactly these three indices,
/// and `s` good.
pub fn is_bad_triple(s: &LatticeSubset, start: usize) -> bool {
    if start + 3 > s.len() || s.len() < 3 || !is_good(s) {
        return false;
    }
    let idx = [start, start + 1, start + 2];
    if !components(s).iter().any(|c| c.as_slice() == idx) {
        return false;
    }
    let w = s.weights();
    if w[start] != 2 || w[start + 1] <= 2 || w[start + 2] != 2 {
        return false;
    }
    s.e_sets().iter().any(|e| e.as_slice() == idx)
}

fn is_bad(s: &LatticeSubset, comp: &[usize], count: usize) -> bool {
    let (l, r) = (comp[0], comp[comp.len() - 1]);
    if comp.len() < 3 || r - l + 1 != comp.len() {
        return false;
    }
    if comp.len() == 3 {
        return is_bad_triple(s, l);
    }
    let w = s.weights();
    let e_sets = s.e_sets();
    let ends = if l == r { vec![l] } else { vec![l, r] };
    for end in ends {
        if w[end] != 2 {
            continue;
        }
        for (h, e) in e_sets.iter().enumerate() {
            if e.len() != 2 || !e.contains(&end) {
                continue;
            }
            let t = if e[0] == end { e[1] } else { e[0] };
            if !comp.contains(&t) || w[t] <= 2 {
                continue;
            }
            if s.entry(end, h).abs() != 1 || s.entry(t, h).abs() != 1 {
                continue;
            }
            let smaller = contract_unchecked(s, h, end, t);
            if check_conditions(&smaller).is_err() {
                continue;
            }
            let comps = components(&smaller);
            let shrunk: Vec<usize> = (l..r).collect();
            if comps.len() == count && comps.contains(&shrunk) && is_bad(&smaller, &shrunk, count) {
                return true;
            }
        }
    }
    false
}
