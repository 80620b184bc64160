//! Membership in the set R of fractions whose lens spaces bound rational
//! homology balls.
//!
//! R is the closure of three square-numerator base families under
//! `f(p/q) = p/(p-q)` and `g(p/q) = p/q'` (`q q' = 1 mod p`). Both maps are
//! involutions, so the closure of a single fraction has at most four
//! elements and membership reduces to scanning that orbit.

use std::collections::BTreeSet;

use num_integer::{Integer, Roots};
use serde::{Deserialize, Serialize};

use crate::cfrac::Fraction;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    Type1,
    Type2,
    Type3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "-")]
    Minus,
    #[serde(rename = "+")]
    Plus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Minus => -1,
            Sign::Plus => 1,
        }
    }
}

/// Parameters exhibiting `p/q` in a base family, with `p = m^2`:
///
/// * `Type1`: `q = m k ± 1`, `m > k > 0`, `gcd(m, k) = 1`
/// * `Type2`: `q = d (m ± 1)`, `d > 1` divides `2m ∓ 1`
/// * `Type3`: `q = d (m ± 1)`, `d > 1` odd, divides `m ± 1`
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilyWitness {
    pub family: Family,
    pub m: i64,
    pub k_or_d: i64,
    pub sign: Sign,
}

impl FamilyWitness {
    /// The denominator `q` this witness describes.
    pub fn q(&self) -> i64 {
        let (m, x, s) = (self.m, self.k_or_d, self.sign.value());
        match self.family {
            Family::Type1 => m * x + s,
            Family::Type2 | Family::Type3 => x * (m + s),
        }
    }

    /// Checks the defining side conditions (not the value of `q`).
    pub fn is_valid(&self) -> bool {
        let (m, x, s) = (self.m, self.k_or_d, self.sign.value());
        match self.family {
            Family::Type1 => m > x && x > 0 && m.gcd(&x) == 1,
            Family::Type2 => x > 1 && (2 * m - s) % x == 0,
            Family::Type3 => x > 1 && x % 2 == 1 && (m + s) % x == 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Witness {
    pub orbit_element: Fraction,
    pub family: FamilyWitness,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RMembership {
    pub in_r: bool,
    pub witness: Option<Witness>,
}

/// Flat JSON form:
/// `{"in_R": bool, "orbit_element": "p/q", "family": "Type1", "m": .., "k_or_d": .., "sign": "+"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RMembershipRecord {
    #[serde(rename = "in_R")]
    pub in_r: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub orbit_element: Option<Fraction>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub family: Option<Family>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k_or_d: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sign: Option<Sign>,
}

impl From<&RMembership> for RMembershipRecord {
    fn from(r: &RMembership) -> Self {
        let w = r.witness;
        RMembershipRecord {
            in_r: r.in_r,
            orbit_element: w.map(|w| w.orbit_element),
            family: w.map(|w| w.family.family),
            m: w.map(|w| w.family.m),
            k_or_d: w.map(|w| w.family.k_or_d),
            sign: w.map(|w| w.family.sign),
        }
    }
}

impl Serialize for RMembership {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        RMembershipRecord::from(self).serialize(serializer)
    }
}

pub fn f_map(fr: Fraction) -> Fraction {
    fr.complement()
}

pub fn g_map(fr: Fraction) -> Fraction {
    let inv = mod_inverse(fr.q(), fr.p()).expect("reduced fractions have invertible q");
    Fraction::new(fr.p(), inv).expect("inverse of a unit mod p lies in 1..p")
}

/// Inverse of `a` modulo `m` in `1..m`, by the extended Euclidean algorithm.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let e = a.extended_gcd(&m);
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m))
}

/// Closure of `{fr}` under `f_map` and `g_map`, sorted by denominator.
pub fn orbit(fr: Fraction) -> Vec<Fraction> {
    let mut seen = BTreeSet::from([fr]);
    let mut frontier = vec![fr];
    while let Some(x) = frontier.pop() {
        for y in [f_map(x), g_map(x)] {
            if seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// Exact integer square root, if `p` is a perfect square.
pub fn perfect_square_root(p: i64) -> Option<i64> {
    if p < 0 {
        return None;
    }
    let m = p.sqrt();
    (m * m == p).then_some(m)
}

/// Smallest witness (by family, then `k`/`d`, then sign) placing `fr` in a
/// base family, if any.
pub fn base_family_check(fr: Fraction) -> Option<FamilyWitness> {
    let m = perfect_square_root(fr.p())?;
    let q = fr.q();
    let mut found: Vec<FamilyWitness> = Vec::new();

    for sign in [Sign::Minus, Sign::Plus] {
        let r = q - sign.value();
        if r % m == 0 {
            let w = FamilyWitness {
                family: Family::Type1,
                m,
                k_or_d: r / m,
                sign,
            };
            if w.is_valid() {
                found.push(w);
            }
        }
    }
    for family in [Family::Type2, Family::Type3] {
        for sign in [Sign::Minus, Sign::Plus] {
            let base = m + sign.value();
            if base <= 0 || q % base != 0 {
                continue;
            }
            let w = FamilyWitness {
                family,
                m,
                k_or_d: q / base,
                sign,
            };
            if w.is_valid() {
                found.push(w);
            }
        }
    }
    found.into_iter().min()
}

/// Membership in R. The witness comes from the first orbit element (the
/// query itself first, then the rest by increasing denominator) that lies
/// in a base family.
pub fn is_in_r(fr: Fraction) -> RMembership {
    let rest = orbit(fr).into_iter().filter(|&x| x != fr);
    for element in std::iter::once(fr).chain(rest) {
        if let Some(family) = base_family_check(element) {
            return RMembership {
                in_r: true,
                witness: Some(Witness {
                    orbit_element: element,
                    family,
                }),
            };
        }
    }
    RMembership {
        in_r: false,
        witness: None,
    }
}

/// Whether the two-bridge knot `K(p,q)` is ribbon. Only defined for odd `p`;
/// for even `p`, `K(p,q)` is a link and [`is_in_r`] should be used instead.
pub fn is_ribbon_2bridge(fr: Fraction) -> Result<bool> {
    if fr.p() % 2 == 0 {
        return Err(Error::EvenNumerator {
            p: fr.p(),
            q: fr.q(),
        });
    }
    Ok(is_in_r(fr).in_r)
}
