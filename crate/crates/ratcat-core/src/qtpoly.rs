//! Exact bivariate polynomials in q and t.
//!
//! [`QtPoly`] is a sparse map from exponent pairs to nonzero BigInt
//! coefficients, kept canonical (no zero terms, (q,t)-lexicographic
//! iteration).  The only special construction the rest of the crate needs is
//! the two-variable Schur polynomial `s_{(a,b)}(q,t) = sum_{i=b..=a}
//! q^{a+b-i} t^i`, plus Laurent-safe exact division by powers of q or t.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A polynomial in q and t with arbitrary-precision integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QtPoly {
    /// (q-exponent, t-exponent) -> nonzero coefficient.
    terms: BTreeMap<(u32, u32), BigInt>,
}

/// Index of a two-row Schur polynomial.  Out-of-range shapes (a = b-1 in
/// particular) uniformly denote the zero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoRowPartition {
    pub a: i64,
    pub b: i64,
}

impl QtPoly {
    pub fn zero() -> Self {
        QtPoly::default()
    }

    pub fn one() -> Self {
        QtPoly::monomial(0, 0, 1)
    }

    pub fn monomial(q: u32, t: u32, coeff: impl Into<BigInt>) -> Self {
        let mut p = QtPoly::zero();
        p.add_term(q, t, coeff.into());
        p
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        QtPoly::monomial(0, 0, c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, q: u32, t: u32, coeff: impl Into<BigInt>) {
        let coeff = coeff.into();
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry((q, t)).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&(q, t));
        }
    }

    /// Coefficient of q^a t^b (zero if absent).
    pub fn coeff(&self, q: u32, t: u32) -> BigInt {
        self.terms.get(&(q, t)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in canonical order: ascending (q, t) lexicographically.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().map(|(&(q, t), c)| (q, t, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Largest total degree among terms, or None for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(q, t)| q + t).max()
    }

    /// Exchange q- and t-exponents in every monomial.
    pub fn swap_qt(&self) -> QtPoly {
        let mut out = QtPoly::zero();
        for (&(q, t), c) in &self.terms {
            out.terms.insert((t, q), c.clone());
        }
        out
    }

    /// Divide by q^k, requiring every monomial to have q-degree >= k.
    pub fn div_q_exact(&self, k: u32) -> Result<QtPoly> {
        let mut out = QtPoly::zero();
        for (&(q, t), c) in &self.terms {
            if q < k {
                return Err(Error::ExactDivision { var: 'q', k, q, t });
            }
            out.terms.insert((q - k, t), c.clone());
        }
        Ok(out)
    }

    /// Divide by t^k, requiring every monomial to have t-degree >= k.
    pub fn div_t_exact(&self, k: u32) -> Result<QtPoly> {
        let mut out = QtPoly::zero();
        for (&(q, t), c) in &self.terms {
            if t < k {
                return Err(Error::ExactDivision { var: 't', k, q, t });
            }
            out.terms.insert((q, t - k), c.clone());
        }
        Ok(out)
    }

    /// Render with exponent braces, terms sorted by descending total degree
    /// then descending q-degree (the order closed forms are usually written).
    pub fn to_latex(&self) -> String {
        self.render(true)
    }

    fn display_order(&self) -> Vec<((u32, u32), &BigInt)> {
        let mut terms: Vec<_> = self.terms.iter().map(|(&k, c)| (k, c)).collect();
        terms.sort_by(|a, b| {
            let da = a.0 .0 + a.0 .1;
            let db = b.0 .0 + b.0 .1;
            db.cmp(&da).then(b.0 .0.cmp(&a.0 .0))
        });
        terms
    }

    fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let pow = |var: char, e: u32| -> String {
            match e {
                0 => String::new(),
                1 => var.to_string(),
                _ if latex => format!("{var}^{{{e}}}"),
                _ => format!("{var}^{e}"),
            }
        };
        let mut out = String::new();
        for (i, ((q, t), c)) in self.display_order().into_iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let vars = match (latex, q, t) {
                (_, 0, 0) => String::new(),
                (true, _, _) => format!("{}{}", pow('q', q), pow('t', t)),
                (false, 0, _) | (false, _, 0) => format!("{}{}", pow('q', q), pow('t', t)),
                (false, _, _) => format!("{} {}", pow('q', q), pow('t', t)),
            };
            if vars.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    if !latex {
                        out.push(' ');
                    }
                }
                out.push_str(&vars);
            }
        }
        out
    }
}

impl fmt::Display for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl AddAssign<&QtPoly> for QtPoly {
    fn add_assign(&mut self, rhs: &QtPoly) {
        for (&(q, t), c) in &rhs.terms {
            self.add_term(q, t, c.clone());
        }
    }
}

impl SubAssign<&QtPoly> for QtPoly {
    fn sub_assign(&mut self, rhs: &QtPoly) {
        for (&(q, t), c) in &rhs.terms {
            self.add_term(q, t, -c.clone());
        }
    }
}

impl Add for &QtPoly {
    type Output = QtPoly;
    fn add(self, rhs: &QtPoly) -> QtPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &QtPoly {
    type Output = QtPoly;
    fn sub(self, rhs: &QtPoly) -> QtPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &QtPoly {
    type Output = QtPoly;
    fn mul(self, rhs: &QtPoly) -> QtPoly {
        let mut out = QtPoly::zero();
        for (&(qa, ta), ca) in &self.terms {
            for (&(qb, tb), cb) in &rhs.terms {
                out.add_term(qa + qb, ta + tb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &QtPoly {
    type Output = QtPoly;
    fn neg(self) -> QtPoly {
        let mut out = QtPoly::zero();
        for (&(q, t), c) in &self.terms {
            out.terms.insert((q, t), -c.clone());
        }
        out
    }
}

/// Two-variable Schur polynomial `s_{(a,b)}(q,t) = sum_{i=b..=a} q^{a+b-i} t^i`
/// for a >= b >= 0, and zero for every out-of-range shape (a = b-1 included).
pub fn schur2(part: TwoRowPartition) -> QtPoly {
    let TwoRowPartition { a, b } = part;
    let mut out = QtPoly::zero();
    if b < 0 || a < b {
        return out;
    }
    for i in b..=a {
        out.add_term((a + b - i) as u32, i as u32, 1);
    }
    out
}

// --- serde: a polynomial is an array of {"q": a, "t": b, "c": coeff} in
// canonical order; coefficients ride as JSON numbers when they fit i64 and
// as decimal strings otherwise.

#[derive(Serialize, Deserialize)]
struct TermRepr {
    q: u32,
    t: u32,
    c: CoeffRepr,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Small(i64),
    Big(String),
}

impl Serialize for QtPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let reprs: Vec<TermRepr> = self
            .terms()
            .map(|(q, t, c)| TermRepr {
                q,
                t,
                c: match i64::try_from(c.clone()) {
                    Ok(v) => CoeffRepr::Small(v),
                    Err(_) => CoeffRepr::Big(c.to_string()),
                },
            })
            .collect();
        reprs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QtPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let reprs = Vec::<TermRepr>::deserialize(deserializer)?;
        let mut out = QtPoly::zero();
        for TermRepr { q, t, c } in reprs {
            let coeff = match c {
                CoeffRepr::Small(v) => BigInt::from(v),
                CoeffRepr::Big(s) => s
                    .parse::<BigInt>()
                    .map_err(|e| D::Error::custom(format!("bad coefficient: {e}")))?,
            };
            out.add_term(q, t, coeff);
        }
        Ok(out)
    }
}
