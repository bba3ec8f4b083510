//! Integer polynomials in `t` with positive exponents.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// `Σ b_m t^m` over exponents `m >= 1`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PolyJson", into = "PolyJson")]
pub struct IndexPolynomial {
    terms: BTreeMap<u32, i64>,
}

impl IndexPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Adds `coef · t^exp`. Panics if `exp == 0`.
    pub fn add_term(&mut self, exp: u32, coef: i64) {
        assert!(exp >= 1, "index polynomials have exponents >= 1");
        let entry = self.terms.entry(exp).or_insert(0);
        *entry += coef;
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, i64)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exp: u32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// Terms in descending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.terms.iter().rev().map(|(&e, &c)| (e, c))
    }

    pub fn abs_coefficient_sum(&self) -> u64 {
        self.terms.values().map(|c| c.unsigned_abs()).sum()
    }

    pub fn negated(&self) -> Self {
        IndexPolynomial {
            terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }

    pub fn equal_up_to_sign(&self, other: &IndexPolynomial) -> bool {
        self == other || *self == other.negated()
    }
}

impl fmt::Display for IndexPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (exp, coef)) in self.terms().enumerate() {
            let mag = coef.unsigned_abs();
            match (n, coef < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            f.write_str("t")?;
            if exp != 1 {
                write!(f, "^{exp}")?;
            }
        }
        Ok(())
    }
}

pub fn poly_to_string(p: &IndexPolynomial) -> String {
    p.to_string()
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: u32,
    coef: i64,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    terms: Vec<TermJson>,
}

impl From<IndexPolynomial> for PolyJson {
    fn from(p: IndexPolynomial) -> Self {
        PolyJson {
            terms: p.terms().map(|(exp, coef)| TermJson { exp, coef }).collect(),
        }
    }
}

impl TryFrom<PolyJson> for IndexPolynomial {
    type Error = Error;

    fn try_from(j: PolyJson) -> Result<Self, Error> {
        let mut terms = BTreeMap::new();
        for t in j.terms {
            if t.exp == 0 || t.coef == 0 {
                return Err(Error::MalformedPolynomial(format!("term {}t^{}", t.coef, t.exp)));
            }
            if terms.insert(t.exp, t.coef).is_some() {
                return Err(Error::MalformedPolynomial(format!("duplicate exponent {}", t.exp)));
            }
        }
        Ok(IndexPolynomial { terms })
    }
}
