use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::monomial::Monomial;
use crate::error::{Error, Result};

/// A polynomial over GF(2) in the weighted variables `w_1, w_2, ...`.
///
/// A monomial is present exactly when its coefficient is 1, so addition is
/// symmetric difference of term sets.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gf2Polynomial {
    terms: BTreeSet<Monomial>,
}

impl Gf2Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from(Monomial::one())
    }

    /// `w_index`.
    pub fn var(index: usize) -> Self {
        Self::from(Monomial::var_pow(index, 1))
    }

    /// Sum of the given monomials; repeated monomials cancel in pairs.
    pub fn from_monomials<I: IntoIterator<Item = Monomial>>(monomials: I) -> Self {
        let mut p = Self::zero();
        for m in monomials {
            p.toggle(m);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = &Monomial> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.last()
    }

    /// Removes and returns the leading monomial.
    pub fn pop_leading(&mut self) -> Option<Monomial> {
        self.terms.pop_last()
    }

    /// Adds a single monomial (GF(2): inserts it, or cancels an existing copy).
    pub fn toggle(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn add_assign(&mut self, other: &Gf2Polynomial) {
        for m in &other.terms {
            self.toggle(m.clone());
        }
    }

    /// `self + factor * other`, without materializing the product.
    pub fn add_scaled(&mut self, factor: &Monomial, other: &Gf2Polynomial) {
        for m in &other.terms {
            self.toggle(factor.mul(m));
        }
    }

    pub fn mul_monomial(&self, factor: &Monomial) -> Gf2Polynomial {
        // multiplication by a monomial is order-preserving, so no collisions
        Gf2Polynomial {
            terms: self.terms.iter().map(|m| factor.mul(m)).collect(),
        }
    }

    pub fn mul(&self, other: &Gf2Polynomial) -> Gf2Polynomial {
        let mut out = Gf2Polynomial::zero();
        for a in &self.terms {
            out.add_scaled(a, other);
        }
        out
    }

    /// Largest variable index used by any term (0 for constants and zero).
    pub fn max_variable(&self) -> usize {
        self.terms.iter().map(Monomial::max_variable).max().unwrap_or(0)
    }

    /// The common weighted degree of all terms, or `None` for zero or
    /// inhomogeneous polynomials.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut degrees = self.terms.iter().map(Monomial::weighted_degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// The part of weighted degree `degree`.
    pub fn component(&self, degree: u64) -> Gf2Polynomial {
        Gf2Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|m| m.weighted_degree() == degree)
                .cloned()
                .collect(),
        }
    }
}

impl From<Monomial> for Gf2Polynomial {
    fn from(m: Monomial) -> Self {
        Gf2Polynomial {
            terms: BTreeSet::from([m]),
        }
    }
}

impl std::ops::Add for &Gf2Polynomial {
    type Output = Gf2Polynomial;

    fn add(self, rhs: &Gf2Polynomial) -> Gf2Polynomial {
        Gf2Polynomial {
            terms: self.terms.symmetric_difference(&rhs.terms).cloned().collect(),
        }
    }
}

impl std::ops::Mul for &Gf2Polynomial {
    type Output = Gf2Polynomial;

    fn mul(self, rhs: &Gf2Polynomial) -> Gf2Polynomial {
        Gf2Polynomial::mul(self, rhs)
    }
}

/// Renders terms in decreasing monomial order, e.g. `w1^4+w1^2*w2+w2^2`.
impl fmt::Display for Gf2Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, m) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `polynomial := monomial ('+' monomial)*`,
/// `monomial := term ('*' term)* | '1'`, `term := 'w' INDEX ('^' EXPONENT)?`.
/// Whitespace is ignored; the literal `0` is accepted for the zero polynomial.
impl FromStr for Gf2Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if text == "0" {
            return Ok(Gf2Polynomial::zero());
        }
        let mut poly = Gf2Polynomial::zero();
        for monomial in text.split('+') {
            poly.toggle(monomial.parse()?);
        }
        Ok(poly)
    }
}

impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text == "1" {
            return Ok(Monomial::one());
        }
        let mut acc = Monomial::one();
        for term in text.split('*') {
            let rest = term
                .strip_prefix('w')
                .ok_or_else(|| Error::Parse(format!("expected 'w<index>' in term {term:?}")))?;
            let (index, power) = match rest.split_once('^') {
                Some((i, e)) => (i, e),
                None => (rest, "1"),
            };
            let index: usize = parse_number(index, term)?;
            let power: u32 = parse_number(power, term)?;
            if index == 0 {
                return Err(Error::Parse(format!("variable index 0 in term {term:?}")));
            }
            acc = acc.mul(&Monomial::var_pow(index, power));
        }
        Ok(acc)
    }
}

fn parse_number<T: FromStr>(digits: &str, term: &str) -> Result<T> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("bad number {digits:?} in term {term:?}")));
    }
    digits
        .parse()
        .map_err(|_| Error::Parse(format!("number {digits:?} out of range in term {term:?}")))
}
