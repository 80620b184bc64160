//! Casson-Gordon cotangent sums for `K(m^2, q)`.

use std::f64::consts::PI;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

pub const CG_TOLERANCE: f64 = 1e-6;
pub const CG_MAX_M: i64 = 31;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CGReport {
    pub m: i64,
    pub q: i64,
    /// `values[r - 1]` is the sum for `r = 1..m-1`.
    pub values: Vec<f64>,
    pub all_pm_one: bool,
    pub tolerance: f64,
}

impl CGReport {
    /// Largest distance from `±1` over all `r`.
    pub fn max_deviation(&self) -> f64 {
        self.values
            .iter()
            .map(|v| (v.abs() - 1.0).abs())
            .fold(0.0, f64::max)
    }
}

/// `(2/m^2) sum_{s=1}^{m^2-1} cot(πs/m^2) cot(πqs/m^2) sin^2(πrs/m)` for each
/// `r = 1..m-1`, in double precision.
pub fn casson_gordon_check(m: i64, q: i64) -> Result<CGReport> {
    if !(2..=CG_MAX_M).contains(&m) {
        return Err(Error::Precondition(format!(
            "m must lie in 2..={CG_MAX_M}, got {m}"
        )));
    }
    let p = m * m;
    if q.gcd(&p) != 1 {
        return Err(Error::Precondition(format!(
            "q = {q} is not coprime to {p}"
        )));
    }
    let pf = p as f64;
    // cot(πs/p) cot(πqs/p), reused across r
    let weights: Vec<f64> = (1..p)
        .map(|s| {
            let qs = (q * s).rem_euclid(p);
            cot(PI * s as f64 / pf) * cot(PI * qs as f64 / pf)
        })
        .collect();
    let values: Vec<f64> = (1..m)
        .map(|r| {
            let sum: f64 = (1..p)
                .map(|s| {
                    let rs = (r * s) % m;
                    let sn = (PI * rs as f64 / m as f64).sin();
                    weights[(s - 1) as usize] * sn * sn
                })
                .sum();
            2.0 * sum / pf
        })
        .collect();
    let all_pm_one = values.iter().all(|v| (v.abs() - 1.0).abs() <= CG_TOLERANCE);
    Ok(CGReport {
        m,
        q,
        values,
        all_pm_one,
        tolerance: CG_TOLERANCE,
    })
}

fn cot(x: f64) -> f64 {
    x.cos() / x.sin()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert!(casson_gordon_check(3, 2).unwrap().all_pm_one);
        assert!(casson_gordon_check(5, 11).unwrap().all_pm_one);
        let r = casson_gordon_check(7, 2).unwrap();
        assert!(!r.all_pm_one);
        assert!(r.max_deviation() > 0.1);
        assert_eq!(r.values.len(), 6);
    }

    #[test]
    fn preconditions() {
        assert!(casson_gordon_check(3, 3).is_err());
        assert!(casson_gordon_check(1, 1).is_err());
        assert!(casson_gordon_check(32, 1).is_err());
    }

    // Same sum with s running over a shifted range, reduced mod m^2 by hand.
    #[test]
    fn agrees_with_direct_formula() {
        for (m, q) in [(3, 2), (5, 11), (7, 2), (9, 8)] {
            let p = (m * m) as f64;
            let r = casson_gordon_check(m, q).unwrap();
            for (k, v) in r.values.iter().enumerate() {
                let rr = (k + 1) as f64;
                let direct: f64 = (1..m * m)
                    .map(|s| {
                        let s = s as f64;
                        let c1 = 1.0 / (PI * s / p).tan();
                        let c2 = 1.0 / (PI * q as f64 * s / p).tan();
                        let sn = (PI * rr * s / m as f64).sin();
                        c1 * c2 * sn * sn
                    })
                    .sum::<f64>()
                    * 2.0
                    / p;
                assert!(
                    (v - direct).abs() < 1e-8,
                    "m={m} q={q} r={rr}: {v} vs {direct}"
                );
            }
        }
    }
}
