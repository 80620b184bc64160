//! Closed-form string families of standard subsets with negative invariant,
//! their fractions, and the plus/minus identities behind the ribbon moves.
//!
//! Six families, named by invariant:
//!
//! | kind         | string                                      |
//! |--------------|---------------------------------------------|
//! | `Iminus3`    | `(c_1+1, 2^[c_1+1])`, or for odd `k >= 3` `(c_k+1, 2^[c_{k-1}-1], c_{k-2}+2, ..., c_1+2, 2^[c_1+1], c_2+2, ..., c_{k-1}+2, 2^[c_k-1])` |
//! | `Iminus2_t1` | `(2^[t], 3, s+2, t+2, 3, 2^[s])`            |
//! | `Iminus2_t2` | `(2^[t], s+3, 2, t+2, 3, 2^[s])`            |
//! | `Iminus1_t1` | `(t+2, s+2, 3, 2^[t], 4, 2^[s])`            |
//! | `Iminus1_t2` | `(t+2, 2, s+3, 2^[t], 4, 2^[s])`            |
//! | `Iminus1_t3` | `(t+3, 2, s+3, 3, 2^[t], 3, 2^[s])`         |

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::Serialize;

use crate::cfrac::{neg_eval, neg_expand, plus_eval_terms, reverse_string, Fraction, NegString};
use crate::error::{Error, Result};
use crate::rset::{f_map, g_map, perfect_square_root, Sign};

/// Largest allowed value of any parameter (and of the number of c's).
pub const MAX_PARAM: i64 = 64;

/// Row limit for [`enumerate_family`].
pub const MAX_ENUMERATION_ROWS: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum FamilyKind {
    Iminus3,
    #[serde(rename = "Iminus2_t1")]
    Iminus2T1,
    #[serde(rename = "Iminus2_t2")]
    Iminus2T2,
    #[serde(rename = "Iminus1_t1")]
    Iminus1T1,
    #[serde(rename = "Iminus1_t2")]
    Iminus1T2,
    #[serde(rename = "Iminus1_t3")]
    Iminus1T3,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 6] = [
        FamilyKind::Iminus3,
        FamilyKind::Iminus2T1,
        FamilyKind::Iminus2T2,
        FamilyKind::Iminus1T1,
        FamilyKind::Iminus1T2,
        FamilyKind::Iminus1T3,
    ];

    pub fn invariant(self) -> i64 {
        match self {
            FamilyKind::Iminus3 => -3,
            FamilyKind::Iminus2T1 | FamilyKind::Iminus2T2 => -2,
            FamilyKind::Iminus1T1 | FamilyKind::Iminus1T2 | FamilyKind::Iminus1T3 => -1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Iminus3 => "Iminus3",
            FamilyKind::Iminus2T1 => "Iminus2_t1",
            FamilyKind::Iminus2T2 => "Iminus2_t2",
            FamilyKind::Iminus1T1 => "Iminus1_t1",
            FamilyKind::Iminus1T2 => "Iminus1_t2",
            FamilyKind::Iminus1T3 => "Iminus1_t3",
        }
    }

    /// Kinds with invariant `i`; empty unless `i` is -1, -2 or -3.
    pub fn with_invariant(i: i64) -> Vec<FamilyKind> {
        FamilyKind::ALL
            .into_iter()
            .filter(|k| k.invariant() == i)
            .collect()
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidFamily(format!("unknown family {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyParams {
    C(Vec<i64>),
    ST { s: i64, t: i64 },
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyParams::C(c) => {
                let parts: Vec<String> = c.iter().map(i64::to_string).collect();
                write!(f, "c={}", parts.join(";"))
            }
            FamilyParams::ST { s, t } => write!(f, "s={s};t={t}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilySpec {
    kind: FamilyKind,
    params: FamilyParams,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, params: FamilyParams) -> Result<Self> {
        let in_range = |x: i64, lo: i64| (lo..=MAX_PARAM).contains(&x);
        match (kind, &params) {
            (FamilyKind::Iminus3, FamilyParams::C(c)) => {
                if c.is_empty() || c.len() as i64 > MAX_PARAM {
                    return Err(Error::InvalidFamily(format!(
                        "Iminus3 needs 1..={MAX_PARAM} parameters"
                    )));
                }
                if c.len() % 2 == 0 {
                    return Err(Error::InvalidFamily(format!(
                        "Iminus3 takes an odd number of parameters, got {}",
                        c.len()
                    )));
                }
                if let Some(bad) = c.iter().find(|&&x| !in_range(x, 1)) {
                    return Err(Error::InvalidFamily(format!(
                        "c = {bad} outside 1..={MAX_PARAM}"
                    )));
                }
            }
            (FamilyKind::Iminus3, _) => {
                return Err(Error::InvalidFamily("Iminus3 takes c-parameters".into()));
            }
            (_, FamilyParams::ST { s, t }) => {
                if !in_range(*s, 0) || !in_range(*t, 0) {
                    return Err(Error::InvalidFamily(format!(
                        "s = {s}, t = {t} outside 0..={MAX_PARAM}"
                    )));
                }
            }
            (kind, _) => {
                return Err(Error::InvalidFamily(format!("{kind} takes (s, t)")));
            }
        }
        Ok(FamilySpec { kind, params })
    }

    pub fn iminus3(c: &[i64]) -> Result<Self> {
        FamilySpec::new(FamilyKind::Iminus3, FamilyParams::C(c.to_vec()))
    }

    pub fn st(kind: FamilyKind, s: i64, t: i64) -> Result<Self> {
        FamilySpec::new(kind, FamilyParams::ST { s, t })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn params(&self) -> &FamilyParams {
        &self.params
    }

    pub fn invariant(&self) -> i64 {
        self.kind.invariant()
    }

    /// Length of the generated string.
    pub fn string_len(&self) -> usize {
        match &self.params {
            FamilyParams::C(c) => (c.iter().sum::<i64>() + 2) as usize,
            FamilyParams::ST { s, t } => {
                let extra = if self.kind == FamilyKind::Iminus1T3 {
                    5
                } else {
                    4
                };
                (s + t + extra) as usize
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.kind, self.params)
    }
}

fn twos(n: i64) -> impl Iterator<Item = i64> {
    std::iter::repeat(2).take(n.max(0) as usize)
}

/// The family's literal string.
pub fn gen_string(spec: &FamilySpec) -> NegString {
    let mut out: Vec<i64> = Vec::new();
    match (&spec.params, spec.kind) {
        (FamilyParams::C(c), _) => {
            let k = c.len();
            if k == 1 {
                out.push(c[0] + 1);
                out.extend(twos(c[0] + 1));
            } else {
                // c[i - 1] is c_i
                for i in (1..=k).rev() {
                    let ci = c[i - 1];
                    if i == k {
                        out.push(ci + 1);
                    } else if i % 2 == 1 {
                        out.push(ci + 2);
                    } else {
                        out.extend(twos(ci - 1));
                    }
                }
                out.extend(twos(c[0] + 1));
                for i in 2..=k {
                    let ci = c[i - 1];
                    if i == k || i % 2 == 1 {
                        out.extend(twos(ci - 1));
                    } else {
                        out.push(ci + 2);
                    }
                }
            }
        }
        (&FamilyParams::ST { s, t }, kind) => match kind {
            FamilyKind::Iminus2T1 => {
                out.extend(twos(t));
                out.extend([3, s + 2, t + 2, 3]);
                out.extend(twos(s));
            }
            FamilyKind::Iminus2T2 => {
                out.extend(twos(t));
                out.extend([s + 3, 2, t + 2, 3]);
                out.extend(twos(s));
            }
            FamilyKind::Iminus1T1 => {
                out.extend([t + 2, s + 2, 3]);
                out.extend(twos(t));
                out.push(4);
                out.extend(twos(s));
            }
            FamilyKind::Iminus1T2 => {
                out.extend([t + 2, 2, s + 3]);
                out.extend(twos(t));
                out.push(4);
                out.extend(twos(s));
            }
            FamilyKind::Iminus1T3 => {
                out.extend([t + 3, 2, s + 3, 3]);
                out.extend(twos(t));
                out.push(3);
                out.extend(twos(s));
            }
            FamilyKind::Iminus3 => unreachable!("validated in FamilySpec::new"),
        },
    }
    NegString::new(out).expect("family terms are at least 2")
}

/// The family's fraction from its closed form.
///
/// `Iminus3`: `m^2/(mk+1)` where `(m, k)` starts at `(2, 1)` and runs through
/// `c_1` appends, `c_2` prepends, `c_3` appends, ..., the last run shortened
/// by one (see [`SquareForm::step`]). The others use `m` and `d` from `(s, t)`:
///
/// * `Iminus2_t1`: `m = 2st+3s+3t+4`, `d = 2s+3`, `m^2/(m^2 - d(m-1))`
/// * `Iminus2_t2`: `m = 2st+2s+3t+4`, `d = 2s+3`, `m^2/(m^2 - d(m-1))`
/// * `Iminus1_t1`: `m = 2st+4s+3t+5`, `d = 2s+3`, `m^2/(d(m+1))`
/// * `Iminus1_t2`: `m = 2st+3s+3t+5`, `d = 2s+3`, `m^2/(d(m+1))`
/// * `Iminus1_t3`: `m = 2st+5s+4t+9`, `d = 2t+5`, `m^2/((2m-1)(m+1)/d)`
pub fn gen_fraction(spec: &FamilySpec) -> Result<Fraction> {
    let (p, q) = match (&spec.params, spec.kind) {
        (FamilyParams::C(c), _) => {
            let mut form = SquareForm {
                m: 2,
                k: 1,
                sign: Sign::Plus,
            };
            let k = c.len();
            for (i, &ci) in c.iter().enumerate() {
                let dir = if i % 2 == 0 {
                    Direction::Append
                } else {
                    Direction::Prepend
                };
                let runs = if i + 1 == k { ci - 1 } else { ci };
                for _ in 0..runs {
                    form = form.step(dir)?;
                }
            }
            return form.fraction();
        }
        (&FamilyParams::ST { s, t }, kind) => {
            let m = match kind {
                FamilyKind::Iminus2T1 => 2 * s * t + 3 * s + 3 * t + 4,
                FamilyKind::Iminus2T2 => 2 * s * t + 2 * s + 3 * t + 4,
                FamilyKind::Iminus1T1 => 2 * s * t + 4 * s + 3 * t + 5,
                FamilyKind::Iminus1T2 => 2 * s * t + 3 * s + 3 * t + 5,
                FamilyKind::Iminus1T3 => 2 * s * t + 5 * s + 4 * t + 9,
                FamilyKind::Iminus3 => unreachable!("validated in FamilySpec::new"),
            };
            let p = m * m;
            match kind {
                FamilyKind::Iminus2T1 | FamilyKind::Iminus2T2 => (p, p - (2 * s + 3) * (m - 1)),
                FamilyKind::Iminus1T1 | FamilyKind::Iminus1T2 => (p, (2 * s + 3) * (m + 1)),
                _ => {
                    let d = 2 * t + 5;
                    let num = (2 * m - 1) * (m + 1);
                    if num % d != 0 {
                        return Err(Error::Internal(format!("{d} does not divide {num}")));
                    }
                    (p, num / d)
                }
            }
        }
    };
    Fraction::new(p, q)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Direction {
    /// `[a_1, ..., a_n] -> [2, a_1, ..., a_n + 1]`
    Prepend,
    /// `[a_1, ..., a_n] -> [a_1 + 1, ..., a_n, 2]`
    Append,
}

/// `m^2 / (mk ± 1)` with `0 < k < m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SquareForm {
    pub m: i64,
    pub k: i64,
    pub sign: Sign,
}

impl SquareForm {
    /// Reads `fr` as `m^2/(mk ± 1)`; the form is unique when it exists.
    pub fn detect(fr: Fraction) -> Option<SquareForm> {
        let m = perfect_square_root(fr.p())?;
        [Sign::Plus, Sign::Minus].into_iter().find_map(|sign| {
            let r = fr.q() - sign.value();
            (r % m == 0 && r / m > 0 && r / m < m).then_some(SquareForm { m, k: r / m, sign })
        })
    }

    pub fn fraction(&self) -> Result<Fraction> {
        let p = self
            .m
            .checked_mul(self.m)
            .ok_or(Error::Overflow("squaring m"))?;
        let q = self
            .m
            .checked_mul(self.k)
            .and_then(|x| x.checked_add(self.sign.value()))
            .ok_or(Error::Overflow("computing mk ± 1"))?;
        Fraction::new(p, q)
    }

    /// Prepend: `(m, k) -> (2m - k, m)`; append: `(m, k) -> (m + k, k)`.
    pub fn step(&self, dir: Direction) -> Result<SquareForm> {
        let (m, k) = match dir {
            Direction::Prepend => (self.m.checked_mul(2).map(|x| x - self.k), self.m),
            Direction::Append => (self.m.checked_add(self.k), self.k),
        };
        let m = m.ok_or(Error::Overflow("stepping m"))?;
        Ok(SquareForm {
            m,
            k,
            sign: self.sign,
        })
    }
}

/// The value of the prepended or appended string, from the closed form.
pub fn fraction_step(fr: Fraction, dir: Direction) -> Result<Fraction> {
    let form = SquareForm::detect(fr).ok_or_else(|| {
        Error::Precondition(format!(
            "{fr} is not of the form m^2/(mk ± 1) with 0 < k < m"
        ))
    })?;
    form.step(dir)?.fraction()
}

/// The same move on the string itself.
pub fn string_step(s: &NegString, dir: Direction) -> NegString {
    let mut terms = s.terms().to_vec();
    match dir {
        Direction::Prepend => {
            *terms.last_mut().expect("strings are nonempty") += 1;
            terms.insert(0, 2);
        }
        Direction::Append => {
            terms[0] += 1;
            terms.push(2);
        }
    }
    NegString::new(terms).expect("terms only grow")
}

/// Strings reachable from `[2,2,2]` by prepend/append moves, by length,
/// computed through [`fraction_step`] on `4/3`.
pub fn square_step_closure(max_len: usize) -> Result<BTreeMap<usize, BTreeSet<NegString>>> {
    let mut out = BTreeMap::new();
    let mut level = vec![Fraction::new(4, 3)?];
    for len in 3..=max_len {
        out.insert(len, level.iter().map(|&fr| neg_expand(fr)).collect());
        let mut next = Vec::with_capacity(2 * level.len());
        for &fr in &level {
            next.push(fraction_step(fr, Direction::Prepend)?);
            next.push(fraction_step(fr, Direction::Append)?);
        }
        level = next;
    }
    Ok(out)
}

/// All odd-length compositions of `total` with parts in `1..=max_part`.
fn odd_compositions(total: i64, max_part: i64) -> Vec<Vec<i64>> {
    fn go(rest: i64, max_part: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if rest == 0 {
            if cur.len() % 2 == 1 {
                out.push(cur.clone());
            }
            return;
        }
        for x in 1..=rest.min(max_part) {
            cur.push(x);
            go(rest - x, max_part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, max_part, &mut Vec::new(), &mut out);
    out
}

/// Every family spec whose string has length exactly `len`, in family order.
pub fn specs_with_length(len: usize) -> Vec<FamilySpec> {
    let len = len as i64;
    let mut out = Vec::new();
    if len >= 3 {
        for c in odd_compositions(len - 2, MAX_PARAM) {
            if c.len() as i64 <= MAX_PARAM {
                out.push(FamilySpec::iminus3(&c).expect("parameters in range"));
            }
        }
    }
    for kind in &FamilyKind::ALL[1..] {
        let base = if *kind == FamilyKind::Iminus1T3 { 5 } else { 4 };
        for s in 0..=(len - base).min(MAX_PARAM) {
            let t = len - base - s;
            if t <= MAX_PARAM {
                out.push(FamilySpec::st(*kind, s, t).expect("parameters in range"));
            }
        }
    }
    out
}

/// Every family spec with all parameters at most `max_param`. For `Iminus3`
/// the number of c's is bounded by `max_param` as well.
pub fn specs_up_to(kind: FamilyKind, max_param: i64) -> Result<Vec<FamilySpec>> {
    if !(0..=MAX_PARAM).contains(&max_param) {
        return Err(Error::InvalidFamily(format!(
            "max-param {max_param} outside 0..={MAX_PARAM}"
        )));
    }
    let mut out = Vec::new();
    if kind == FamilyKind::Iminus3 {
        let mut total: usize = 0;
        let mut k = 1;
        while k as i64 <= max_param {
            total = total.saturating_add((max_param as usize).saturating_pow(k as u32));
            if total > MAX_ENUMERATION_ROWS {
                return Err(Error::Precondition(format!(
                    "Iminus3 with max-param {max_param} exceeds {MAX_ENUMERATION_ROWS} rows"
                )));
            }
            let mut c = vec![1; k];
            loop {
                out.push(FamilySpec::iminus3(&c)?);
                // odometer over 1..=max_param
                let Some(pos) = c.iter().rposition(|&x| x < max_param) else {
                    break;
                };
                c[pos] += 1;
                c[pos + 1..].fill(1);
            }
            k += 2;
        }
    } else {
        for s in 0..=max_param {
            for t in 0..=max_param {
                out.push(FamilySpec::st(kind, s, t)?);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyRow {
    pub invariant: FamilyKind,
    pub params: String,
    pub string: String,
    pub p: i64,
    pub q: i64,
}

/// Rows for every family with invariant `invariant` (one of -1, -2, -3) and
/// parameters at most `max_param`. Overlapping patterns are kept.
pub fn enumerate_family(invariant: i64, max_param: i64) -> Result<Vec<FamilyRow>> {
    let kinds = FamilyKind::with_invariant(invariant);
    if kinds.is_empty() {
        return Err(Error::InvalidFamily(format!(
            "invariant must be -1, -2 or -3, got {invariant}"
        )));
    }
    let mut rows = Vec::new();
    for kind in kinds {
        for spec in specs_up_to(kind, max_param)? {
            let fr = gen_fraction(&spec)?;
            rows.push(FamilyRow {
                invariant: kind,
                params: spec.params.to_string(),
                string: gen_string(&spec).to_string(),
                p: fr.p(),
                q: fr.q(),
            });
        }
    }
    Ok(rows)
}

/// CSV with header `invariant,params,string,p,q`.
pub fn family_csv(rows: &[FamilyRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row)
            .map_err(|e| Error::Internal(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn check<I>(name: &'static str, cases: I) -> IdentityReport
where
    I: IntoIterator<Item = (String, Result<Ratio<i64>>, Result<Ratio<i64>>)>,
{
    let mut report = IdentityReport {
        name,
        cases: 0,
        failures: Vec::new(),
    };
    for (label, lhs, rhs) in cases {
        report.cases += 1;
        match (lhs, rhs) {
            (Ok(a), Ok(b)) if a == b => {}
            (a, b) => report.failures.push(format!("{label}: {a:?} vs {b:?}")),
        }
    }
    report
}

fn st_grid() -> impl Iterator<Item = (i64, i64)> {
    (0..=10).flat_map(|s| (0..=10).map(move |t| (s, t)))
}

fn value(spec: Result<FamilySpec>) -> Result<Ratio<i64>> {
    Ok(neg_eval(&gen_string(&spec?))?.to_ratio())
}

/// Checks the plus/minus identities behind the ribbon moves, for
/// `0 <= s, t <= 10` and the c-parameters noted in each name. Positive
/// strings may contain zeros at `s = 0` or `t = 0`; they are evaluated as
/// written.
pub fn ribbon_identity_suite() -> Vec<IdentityReport> {
    use FamilyKind::*;
    let mut reports = Vec::new();

    reports.push(check(
        "[c1+1,2^[c1+1]]- = [c1,c1+2]+ (c1 <= 10)",
        (1..=10).map(|c| {
            (
                format!("c1={c}"),
                value(FamilySpec::iminus3(&[c])),
                plus_eval_terms(&[c, c + 2]),
            )
        }),
    ));

    let mut cs: Vec<Vec<i64>> = Vec::new();
    for a in 1..=10 {
        for b in 1..=10 {
            for c in 1..=10 {
                cs.push(vec![a, b, c]);
            }
        }
    }
    cs.extend(tuples(5, 4));
    reports.push(check(
        "Iminus3 string = [c_k..c_2,c_1,c_1+2,c_2..c_k]+ (k = 3, c_i <= 10; k = 5, c_i <= 4)",
        cs.into_iter().map(|c| {
            let mut plus: Vec<i64> = c.iter().rev().copied().collect();
            plus.push(c[0] + 2);
            plus.extend(&c[1..]);
            (
                format!("c={c:?}"),
                value(FamilySpec::iminus3(&c)),
                plus_eval_terms(&plus),
            )
        }),
    ));

    reports.push(check(
        "[1,t,1,1,s,1,t,1,1,s+1]+ = [2^[t],3,s+2,t+2,3,2^[s]]-",
        st_grid().map(|(s, t)| {
            (
                format!("s={s} t={t}"),
                plus_eval_terms(&[1, t, 1, 1, s, 1, t, 1, 1, s + 1]),
                value(FamilySpec::st(Iminus2T1, s, t)),
            )
        }),
    ));
    reports.push(check(
        "[1,t,s+1,2,t,1,1,s+1]+ = [2^[t],s+3,2,t+2,3,2^[s]]-",
        st_grid().map(|(s, t)| {
            (
                format!("s={s} t={t}"),
                plus_eval_terms(&[1, t, s + 1, 2, t, 1, 1, s + 1]),
                value(FamilySpec::st(Iminus2T2, s, t)),
            )
        }),
    ));
    reports.push(check(
        "[t+1,1,s,1,1,t+1,2,s+1]+ = [t+2,s+2,3,2^[t],4,2^[s]]-",
        st_grid().map(|(s, t)| {
            (
                format!("s={s} t={t}"),
                plus_eval_terms(&[t + 1, 1, s, 1, 1, t + 1, 2, s + 1]),
                value(FamilySpec::st(Iminus1T1, s, t)),
            )
        }),
    ));
    reports.push(check(
        "[t+1,2,s+1,t+1,2,s+1]+ = [t+2,2,s+3,2^[t],4,2^[s]]-",
        st_grid().map(|(s, t)| {
            (
                format!("s={s} t={t}"),
                plus_eval_terms(&[t + 1, 2, s + 1, t + 1, 2, s + 1]),
                value(FamilySpec::st(Iminus1T2, s, t)),
            )
        }),
    ));
    reports.push(check(
        "p/(p-q') = [s+2,t+3,3,2^[s],4,2^[t+1]]- for p/q = [t+3,2,s+3,3,2^[t],3,2^[s]]-",
        st_grid().map(|(s, t)| {
            let lhs = FamilySpec::st(Iminus1T3, s, t)
                .and_then(|spec| neg_eval(&gen_string(&spec)))
                .map(|fr| f_map(g_map(fr)).to_ratio());
            (
                format!("s={s} t={t}"),
                lhs,
                value(FamilySpec::st(Iminus1T1, t + 1, s)),
            )
        }),
    ));
    reports
}

fn tuples(k: usize, max_part: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|c: Vec<i64>| {
                (1..=max_part).map(move |x| {
                    let mut c = c.clone();
                    c.push(x);
                    c
                })
            })
            .collect();
    }
    out
}

/// Generated strings of every family together with their reverses, by length.
pub fn generated_strings_up_to(max_len: usize) -> BTreeMap<usize, BTreeSet<NegString>> {
    let mut out: BTreeMap<usize, BTreeSet<NegString>> = BTreeMap::new();
    for len in 1..=max_len {
        let set = out.entry(len).or_default();
        for spec in specs_with_length(len) {
            let s = gen_string(&spec);
            set.insert(reverse_string(&s));
            set.insert(s);
        }
    }
    out
}
