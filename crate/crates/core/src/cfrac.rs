//! Exact continued-fraction arithmetic.
//!
//! Negative (Hirzebruch-Jung) strings `[a_1, ..., a_n]^-` with every term at
//! least 2, positive strings `[a_1, ..., a_n]^+`, conversions between them,
//! the Riemenschneider dual and string reversal. All arithmetic is `i64` with
//! overflow checks.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A reduced fraction `p/q` with `p > q >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fraction {
    p: i64,
    q: i64,
}

impl Fraction {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if q < 1 || p <= q {
            return Err(Error::OutOfRange { p, q });
        }
        let gcd = p.gcd(&q);
        if gcd != 1 {
            return Err(Error::NotReduced { p, q, gcd });
        }
        Ok(Fraction { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// `p/(p-q)`.
    pub fn complement(&self) -> Fraction {
        Fraction {
            p: self.p,
            q: self.p - self.q,
        }
    }

    pub fn to_ratio(&self) -> Ratio<i64> {
        Ratio::new_raw(self.p, self.q)
    }

    /// Every reduced fraction with numerator `p`, in increasing `q`.
    pub fn all_with_numerator(p: i64) -> impl Iterator<Item = Fraction> {
        (1..p)
            .filter(move |q| p.gcd(q) == 1)
            .map(move |q| Fraction { p, q })
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Fraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (p, q) = s
            .trim()
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("expected p/q, got {s:?}")))?;
        let p = parse_int(p)?;
        let q = parse_int(q)?;
        Fraction::new(p, q)
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Fraction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn parse_int(s: &str) -> Result<i64> {
    s.trim()
        .parse::<i64>()
        .map_err(|e| Error::Parse(format!("{:?}: {e}", s.trim())))
}

/// A nonempty sequence of integers, each at least 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NegString(Vec<i64>);

impl NegString {
    pub fn new(terms: Vec<i64>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidString("empty string".into()));
        }
        if let Some(bad) = terms.iter().find(|&&a| a < 2) {
            return Err(Error::InvalidString(format!("term {bad} is below 2")));
        }
        Ok(NegString(terms))
    }

    pub fn terms(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn into_terms(self) -> Vec<i64> {
        self.0
    }
}

impl fmt::Display for NegString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.0)
    }
}

impl FromStr for NegString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NegString::new(parse_terms(s)?)
    }
}

impl Serialize for NegString {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A sequence of positive integers read as `a_1 + 1/(a_2 + 1/(...))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlusString(Vec<i64>);

impl PlusString {
    pub fn new(terms: Vec<i64>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidString("empty string".into()));
        }
        if let Some(bad) = terms.iter().find(|&&a| a < 1) {
            return Err(Error::InvalidString(format!("term {bad} is below 1")));
        }
        Ok(PlusString(terms))
    }

    pub fn terms(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for PlusString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.0)
    }
}

impl FromStr for PlusString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PlusString::new(parse_terms(s)?)
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[i64]) -> fmt::Result {
    f.write_str("[")?;
    for (i, a) in terms.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{a}")?;
    }
    f.write_str("]")
}

/// Parses `[a1,a2,...]`, where an entry may use the power shorthand `2^[t]`
/// (also accepted as `2^{[t]}`) for `t` consecutive copies of 2.
pub fn parse_terms(s: &str) -> Result<Vec<i64>> {
    let body = s
        .trim()
        .strip_prefix('[')
        .and_then(|rest| rest.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected [a1,a2,...], got {s:?}")))?;
    let mut terms = Vec::new();
    if body.trim().is_empty() {
        return Ok(terms);
    }
    // Entries are separated by commas outside of the power brackets.
    let mut depth = 0usize;
    let mut start = 0;
    let bytes = body.as_bytes();
    for i in 0..=bytes.len() {
        let at_end = i == bytes.len();
        if !at_end {
            match bytes[i] {
                b'[' | b'{' => depth += 1,
                b']' | b'}' => depth = depth.saturating_sub(1),
                _ => {}
            }
        }
        if at_end || (bytes[i] == b',' && depth == 0) {
            parse_entry(&body[start..i], &mut terms)?;
            start = i + 1;
        }
    }
    Ok(terms)
}

fn parse_entry(entry: &str, out: &mut Vec<i64>) -> Result<()> {
    let entry = entry.trim();
    match entry.split_once('^') {
        None => out.push(parse_int(entry)?),
        Some((base, exp)) => {
            let base = parse_int(base)?;
            let exp = exp
                .trim()
                .trim_start_matches('{')
                .trim_end_matches('}')
                .trim()
                .strip_prefix('[')
                .and_then(|e| e.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("bad power {entry:?}, expected 2^[t]")))?;
            let count = parse_int(exp)?;
            if count < 0 {
                return Err(Error::Parse(format!("negative power count in {entry:?}")));
            }
            out.extend(std::iter::repeat(base).take(count as usize));
        }
    }
    Ok(())
}

/// Negative expansion of `p/q` by the ceiling-division recurrence.
pub fn neg_expand(fr: Fraction) -> NegString {
    let (mut p, mut q) = (fr.p, fr.q);
    let mut terms = Vec::new();
    while q != 0 {
        let a = Integer::div_ceil(&p, &q);
        terms.push(a);
        (p, q) = (q, a * q - p);
    }
    NegString(terms)
}

/// Value of `[a_1, ..., a_n]^-` as a reduced fraction.
pub fn neg_eval(s: &NegString) -> Result<Fraction> {
    let (num, den) = fold_neg(s.terms())?;
    Fraction::new(num, den).map_err(|e| Error::Internal(format!("negative fold of {s}: {e}")))
}

// Right-to-left fold on (numerator, denominator) pairs: x <- a - 1/x.
fn fold_neg(terms: &[i64]) -> Result<(i64, i64)> {
    let (last, rest) = terms
        .split_last()
        .ok_or_else(|| Error::InvalidString("empty string".into()))?;
    let (mut num, mut den) = (*last, 1i64);
    for &a in rest.iter().rev() {
        if num <= den {
            return Err(Error::Internal(format!(
                "intermediate value {num}/{den} <= 1"
            )));
        }
        let next = a
            .checked_mul(num)
            .and_then(|x| x.checked_sub(den))
            .ok_or(Error::Overflow("evaluating a negative continued fraction"))?;
        (num, den) = (next, num);
    }
    Ok((num, den))
}

/// Value of `[a_1, ..., a_n]^+`.
pub fn plus_eval(s: &PlusString) -> Result<Ratio<i64>> {
    plus_eval_terms(s.terms())
}

/// Evaluates a positive continued fraction whose terms may include zeros
/// (as happens at the boundary of parametrised identities). Fails only if
/// the final denominator vanishes.
pub fn plus_eval_terms(terms: &[i64]) -> Result<Ratio<i64>> {
    let (last, rest) = terms
        .split_last()
        .ok_or_else(|| Error::InvalidString("empty string".into()))?;
    // Projective fold: (num : den) <- (a*num + den : num).
    let (mut num, mut den) = (*last, 1i64);
    for &a in rest.iter().rev() {
        let next = a
            .checked_mul(num)
            .and_then(|x| x.checked_add(den))
            .ok_or(Error::Overflow("evaluating a positive continued fraction"))?;
        (num, den) = (next, num);
    }
    if den == 0 {
        return Err(Error::DivisionByZero);
    }
    Ok(Ratio::new(num, den))
}

/// Converts an even-length positive string into the negative string with the
/// same value:
/// `[a_1, ..., a_2n]^+ = [a_1+1, 2^[a_2-1], a_3+2, 2^[a_4-1], ..., a_{2n-1}+2, 2^[a_2n-1]]^-`.
pub fn plus_to_minus(s: &PlusString) -> Result<NegString> {
    let terms = s.terms();
    if terms.len() % 2 != 0 {
        return Err(Error::OddLength(terms.len()));
    }
    let mut out = Vec::new();
    for (i, pair) in terms.chunks(2).enumerate() {
        let bump = if i == 0 { 1 } else { 2 };
        out.push(pair[0] + bump);
        out.extend(std::iter::repeat(2).take((pair[1] - 1) as usize));
    }
    NegString::new(out)
}

/// Run-length blocks `[m_1, 2^[m_2], m_3, 2^[m_4], ..., m_{2s-1}, 2^[m_2s]]`
/// with every `m_odd >= 3`; `None` when the string starts with 2.
pub fn point_rule_blocks(s: &NegString) -> Option<Vec<(i64, usize)>> {
    let terms = s.terms();
    if terms[0] < 3 {
        return None;
    }
    let mut blocks: Vec<(i64, usize)> = Vec::new();
    for &a in terms {
        if a >= 3 {
            blocks.push((a, 0));
        } else {
            blocks.last_mut().expect("first term is at least 3").1 += 1;
        }
    }
    Some(blocks)
}

/// Riemenschneider's point rule:
/// `[m_1, 2^[m_2], ..., m_{2s-1}, 2^[m_2s]]` has dual
/// `[2^[m_1-2], m_2+3, 2^[m_3-3], m_4+3, ..., 2^[m_{2s-1}-3], m_2s+2]`.
/// Returns `None` when the string starts with 2.
pub fn point_rule_dual(s: &NegString) -> Option<NegString> {
    let blocks = point_rule_blocks(s)?;
    let mut out = Vec::new();
    let last = blocks.len() - 1;
    for (i, &(big, twos)) in blocks.iter().enumerate() {
        let drop = if i == 0 { 2 } else { 3 };
        out.extend(std::iter::repeat(2).take((big - drop) as usize));
        out.push(twos as i64 + if i == last { 2 } else { 3 });
    }
    Some(NegString(out))
}

/// The string of `p/(p-q)` where `p/q` is the value of `s`.
pub fn riemenschneider_dual(s: &NegString) -> Result<NegString> {
    if let Some(dual) = point_rule_dual(s) {
        return Ok(dual);
    }
    let fr = neg_eval(s)?;
    Ok(neg_expand(fr.complement()))
}

/// Reversed string; its value is `p/q'` with `q q' = 1 (mod p)`.
pub fn reverse_string(s: &NegString) -> NegString {
    let mut terms = s.0.clone();
    terms.reverse();
    NegString(terms)
}

/// `[2^[t], x]^- = ((t+1)x - t) / (tx - (t-1))`.
pub fn two_pow_eval(t: i64, x: Ratio<i64>) -> Result<Ratio<i64>> {
    if t < 0 {
        return Err(Error::Precondition(format!("power count {t} is negative")));
    }
    let t = Ratio::from_integer(t);
    let one = Ratio::from_integer(1);
    let num = (t + one) * x - t;
    let den = t * x - (t - one);
    if *den.numer() == 0 {
        return Err(Error::DivisionByZero);
    }
    Ok(num / den)
}

/// Folds `[a_1, ..., a_k, x]^-` for a rational tail `x`.
pub fn neg_eval_with_tail(prefix: &[i64], x: Ratio<i64>) -> Result<Ratio<i64>> {
    let mut acc = x;
    for &a in prefix.iter().rev() {
        if *acc.numer() == 0 {
            return Err(Error::DivisionByZero);
        }
        acc = Ratio::from_integer(a) - acc.recip();
    }
    Ok(acc)
}

/// `sum (a_i - 3)`.
pub fn negsum(s: &NegString) -> i64 {
    s.terms().iter().map(|a| a - 3).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fr(p: i64, q: i64) -> Fraction {
        Fraction::new(p, q).unwrap()
    }

    fn ns(terms: &[i64]) -> NegString {
        NegString::new(terms.to_vec()).unwrap()
    }

    // Independent oracle: descending evaluation with num-rational.
    fn oracle_neg(terms: &[i64]) -> Ratio<i64> {
        let mut acc = Ratio::from_integer(*terms.last().unwrap());
        for &a in terms[..terms.len() - 1].iter().rev() {
            acc = Ratio::from_integer(a) - acc.recip();
        }
        acc
    }

    #[test]
    fn fraction_validation() {
        assert!(matches!(
            Fraction::new(6, 4),
            Err(Error::NotReduced { gcd: 2, .. })
        ));
        assert!(matches!(Fraction::new(3, 3), Err(Error::OutOfRange { .. })));
        assert!(matches!(Fraction::new(3, 0), Err(Error::OutOfRange { .. })));
        assert!(matches!(Fraction::new(3, 5), Err(Error::OutOfRange { .. })));
        assert_eq!("25/11".parse::<Fraction>().unwrap(), fr(25, 11));
        assert!(" 6 / 4".parse::<Fraction>().is_err());
        assert!("25".parse::<Fraction>().is_err());
    }

    #[test]
    fn neg_expand_examples() {
        assert_eq!(neg_expand(fr(4, 3)), ns(&[2, 2, 2]));
        assert_eq!(neg_expand(fr(2, 1)), ns(&[2]));
        assert_eq!(neg_expand(fr(25, 11)), ns(&[3, 2, 2, 3, 2]));
    }

    #[test]
    fn neg_eval_examples() {
        assert_eq!(neg_eval(&ns(&[2, 2, 2])).unwrap(), fr(4, 3));
        assert_eq!(neg_eval(&ns(&[5])).unwrap(), fr(5, 1));
        assert_eq!(neg_eval(&ns(&[3, 2, 2, 3])).unwrap(), fr(16, 7));
        assert_eq!(oracle_neg(&[3, 2, 2, 3]), Ratio::new(16, 7));
    }

    #[test]
    fn neg_eval_overflow_is_reported() {
        let s = ns(&vec![1 << 40; 3]);
        assert!(matches!(neg_eval(&s), Err(Error::Overflow(_))));
    }

    #[test]
    fn plus_eval_examples() {
        let ev = |t: &[i64]| plus_eval(&PlusString::new(t.to_vec()).unwrap()).unwrap();
        assert_eq!(ev(&[1, 3]), Ratio::new(4, 3));
        assert_eq!(ev(&[1, 1]), Ratio::new(2, 1));
        assert_eq!(ev(&[2, 2]), Ratio::new(5, 2));
        // zeros are allowed in the raw evaluator: 1 + 1/(0 + 1/1) = 2
        assert_eq!(plus_eval_terms(&[1, 0, 1]).unwrap(), Ratio::new(2, 1));
        assert_eq!(plus_eval_terms(&[3, 0]), Err(Error::DivisionByZero));
    }

    #[test]
    fn plus_to_minus_examples() {
        let conv = |t: &[i64]| plus_to_minus(&PlusString::new(t.to_vec()).unwrap()).unwrap();
        // 1 + 1/3 = 4/3 = [2,2,2]^-
        assert_eq!(conv(&[1, 3]), ns(&[2, 2, 2]));
        assert_eq!(conv(&[1, 2]), ns(&[2, 2]));
        assert_eq!(conv(&[2, 4]), ns(&[3, 2, 2, 2]));
        assert_eq!(oracle_neg(&[3, 2, 2, 2]), Ratio::new(9, 4));
        let terms = [1, 2, 1, 1, 2, 1];
        let ps = PlusString::new(terms.to_vec()).unwrap();
        assert_eq!(
            plus_eval(&ps).unwrap(),
            neg_eval(&plus_to_minus(&ps).unwrap()).unwrap().to_ratio()
        );
        assert_eq!(
            plus_to_minus(&PlusString::new(vec![1, 2, 3]).unwrap()),
            Err(Error::OddLength(3))
        );
    }

    #[test]
    fn dual_examples() {
        assert_eq!(
            riemenschneider_dual(&ns(&[3, 2, 2, 3, 2])).unwrap(),
            ns(&[2, 5, 3])
        );
        assert_eq!(neg_eval(&ns(&[2, 5, 3])).unwrap(), fr(25, 14));
        assert_eq!(riemenschneider_dual(&ns(&[4])).unwrap(), ns(&[2, 2, 2]));
        assert_eq!(riemenschneider_dual(&ns(&[2])).unwrap(), ns(&[2]));
        assert_eq!(riemenschneider_dual(&ns(&[2, 2, 2, 2])).unwrap(), ns(&[5]));
        assert_eq!(point_rule_dual(&ns(&[2, 3])), None);
        assert_eq!(
            point_rule_blocks(&ns(&[3, 2, 2, 3, 2])).unwrap(),
            vec![(3, 2), (3, 1)]
        );
    }

    #[test]
    fn reverse_examples() {
        let s = ns(&[3, 2, 2, 3, 2]);
        let r = reverse_string(&s);
        assert_eq!(r, ns(&[2, 3, 2, 2, 3]));
        assert_eq!(neg_eval(&r).unwrap(), fr(25, 16));
        assert_eq!((11 * 16) % 25, 1);
        assert_eq!(reverse_string(&ns(&[2, 2, 2])), ns(&[2, 2, 2]));
        assert_eq!(reverse_string(&ns(&[4])), ns(&[4]));
    }

    #[test]
    fn two_pow_examples() {
        let r = Ratio::from_integer;
        assert_eq!(two_pow_eval(0, r(5)).unwrap(), r(5));
        assert_eq!(two_pow_eval(2, r(3)).unwrap(), Ratio::new(7, 5));
        assert_eq!(oracle_neg(&[2, 2, 3]), Ratio::new(7, 5));
        assert_eq!(two_pow_eval(1, r(4)).unwrap(), Ratio::new(7, 4));
        assert_eq!(oracle_neg(&[2, 4]), Ratio::new(7, 4));
        assert!(two_pow_eval(-1, r(4)).is_err());
    }

    #[test]
    fn negsum_examples() {
        assert_eq!(negsum(&ns(&[2, 2, 2])), -3);
        assert_eq!(negsum(&ns(&[3, 2, 2, 3, 2])), -3);
        assert_eq!(negsum(&ns(&[2, 5, 3])), 1);
    }

    #[test]
    fn parse_power_shorthand() {
        assert_eq!(
            "[3,2^[2],3,2]".parse::<NegString>().unwrap(),
            ns(&[3, 2, 2, 3, 2])
        );
        assert_eq!(
            "[2^{[3]}, 4]".parse::<NegString>().unwrap(),
            ns(&[2, 2, 2, 4])
        );
        assert_eq!("[2^[0],5]".parse::<NegString>().unwrap(), ns(&[5]));
        assert!("[1,2]".parse::<NegString>().is_err());
        assert!("[]".parse::<NegString>().is_err());
        assert!("3,2".parse::<NegString>().is_err());
        assert!("[2^3]".parse::<NegString>().is_err());
        assert_eq!(ns(&[3, 2, 2]).to_string(), "[3,2,2]");
    }
}
