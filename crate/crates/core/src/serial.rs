//! JSON records for cycles, correspondences and certificates.
//!
//! Integers that can grow are written as decimal strings. A term is
//! `{h, mu, coeff}` on `P x Gr` and `Gr x P`; on `P x P` the second exponent
//! is `h2`, on `Gr x Gr` the second partition is `mu2`, and single-factor
//! classes carry only `h` or `mu`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::chow::{Basis, CycleClass, Factor, Monomial, Space};
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Version tag written at the top of every document.
pub const SCHEMA_VERSION: u32 = 1;

pub fn parse_decimal(s: &str) -> Result<BigInt> {
    s.trim()
        .parse()
        .map_err(|_| Error::contract(format!("{s:?} is not a decimal integer")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h2: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Partition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu2: Option<Partition>,
    pub coeff: String,
}

impl TermRecord {
    fn empty(coeff: &BigInt) -> Self {
        TermRecord {
            h: None,
            h2: None,
            mu: None,
            mu2: None,
            coeff: coeff.to_string(),
        }
    }

    fn put(&mut self, b: &Basis, second: bool) {
        match (b, second) {
            (Basis::H(i), false) => self.h = Some(*i),
            (Basis::H(i), true) => self.h2 = Some(*i),
            (Basis::Omega(mu), false) => self.mu = Some(mu.clone()),
            (Basis::Omega(mu), true) => self.mu2 = Some(mu.clone()),
        }
    }

    fn take(&self, factor: &Factor, second: bool) -> Result<Basis> {
        let missing = || Error::contract(format!("term {self:?} lacks a {factor} component"));
        match factor {
            Factor::Projective { .. } => {
                let h = if second { self.h2 } else { self.h };
                h.map(Basis::H).ok_or_else(missing)
            }
            Factor::Grassmannian { .. } => {
                let mu = if second { &self.mu2 } else { &self.mu };
                mu.clone().map(Basis::Omega).ok_or_else(missing)
            }
        }
    }
}

fn same_kind(a: &Factor, b: &Factor) -> bool {
    matches!(
        (a, b),
        (Factor::Projective { .. }, Factor::Projective { .. })
            | (Factor::Grassmannian { .. }, Factor::Grassmannian { .. })
    )
}

pub fn terms_of(c: &CycleClass) -> Vec<TermRecord> {
    let space = c.space();
    c.terms()
        .map(|(m, k)| {
            let mut t = TermRecord::empty(k);
            match (m, space) {
                (Monomial::Single(b), _) => t.put(b, false),
                (Monomial::Pair(a, b), Space::Product(f, g)) => {
                    t.put(a, false);
                    t.put(b, same_kind(&f, &g));
                }
                (Monomial::Pair(a, b), Space::Single(_)) => {
                    t.put(a, false);
                    t.put(b, true);
                }
            }
            t
        })
        .collect()
}

pub fn cycle_from_terms(space: Space, codim: u32, terms: &[TermRecord]) -> Result<CycleClass> {
    let mut c = CycleClass::zero(space, codim);
    for t in terms {
        let m = match space {
            Space::Single(f) => Monomial::Single(t.take(&f, false)?),
            Space::Product(f, g) => {
                Monomial::Pair(t.take(&f, false)?, t.take(&g, same_kind(&f, &g))?)
            }
        };
        c.add_term(m, parse_decimal(&t.coeff)?)?;
    }
    Ok(c)
}

/// A class on `left x right`, or on `left` alone when `right` is absent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleRecord {
    pub left: Factor,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<Factor>,
    pub codim: u32,
    pub terms: Vec<TermRecord>,
}

impl From<&CycleClass> for CycleRecord {
    fn from(c: &CycleClass) -> Self {
        let (left, right) = match c.space() {
            Space::Single(f) => (f, None),
            Space::Product(f, g) => (f, Some(g)),
        };
        CycleRecord {
            left,
            right,
            codim: c.codim(),
            terms: terms_of(c),
        }
    }
}

impl TryFrom<&CycleRecord> for CycleClass {
    type Error = Error;

    fn try_from(r: &CycleRecord) -> Result<Self> {
        r.left.validate()?;
        let space = match r.right {
            None => Space::Single(r.left),
            Some(g) => {
                g.validate()?;
                Space::Product(r.left, g)
            }
        };
        cycle_from_terms(space, r.codim, &r.terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chow::{f_cycle, g_cycle, SignCase};

    #[test]
    fn term_layout() {
        let f = f_cycle(2, 5, SignCase::PlusOne).unwrap();
        let json = serde_json::to_value(CycleRecord::from(&f)).unwrap();
        assert_eq!(json["left"], serde_json::json!({"kind": "projective", "n": 5}));
        let first = &json["terms"][0];
        assert!(first.get("h").is_some() && first.get("mu").is_some());
        assert!(first["coeff"].is_string());
    }

    #[test]
    fn round_trip_through_json() {
        for c in [
            g_cycle(3, 7, 5).unwrap(),
            g_cycle(3, 7, 5).unwrap().transposed(),
            f_cycle(2, 5, SignCase::MinusOne).unwrap(),
        ] {
            let text = serde_json::to_string(&CycleRecord::from(&c)).unwrap();
            let back: CycleRecord = serde_json::from_str(&text).unwrap();
            assert_eq!(CycleClass::try_from(&back).unwrap(), c);
        }
    }

    #[test]
    fn rejects_bad_terms() {
        let bad = r#"{"left":{"kind":"projective","n":3},"right":{"kind":"projective","n":3},
                      "codim":2,"terms":[{"h":1,"coeff":"1"}]}"#;
        let rec: CycleRecord = serde_json::from_str(bad).unwrap();
        assert!(CycleClass::try_from(&rec).is_err());
        let bad = r#"{"left":{"kind":"projective","n":3},"codim":1,"terms":[{"h":1,"coeff":"x"}]}"#;
        let rec: CycleRecord = serde_json::from_str(bad).unwrap();
        assert!(CycleClass::try_from(&rec).is_err());
    }
}
