//! Rational Poincaré polynomials of real Grassmannians via Gaussian binomials.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gf2_ring::reduce_by_duality;

/// Dense polynomial with big-integer coefficients, `coefficients[i]` at degree
/// `i`. Trailing zeros are trimmed, so the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntegerPolynomial {
    coefficients: Vec<BigInt>,
}

impl IntegerPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_coefficients(vec![BigInt::one()])
    }

    /// `x^degree`.
    pub fn monomial(degree: usize) -> Self {
        let mut c = vec![BigInt::zero(); degree + 1];
        c[degree] = BigInt::one();
        Self::from_coefficients(c)
    }

    pub fn from_coefficients(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        IntegerPolynomial { coefficients }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// Coefficient at `degree`, zero beyond the end.
    pub fn coefficient(&self, degree: usize) -> BigInt {
        self.coefficients.get(degree).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coefficients.len().max(other.coefficients.len());
        Self::from_coefficients(
            (0..len)
                .map(|i| self.coefficient(i) + other.coefficient(i))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigInt::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in other.coefficients.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::from_coefficients(c)
    }

    /// Multiplication by `x^shift`.
    pub fn shift(&self, shift: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigInt::zero(); shift];
        c.extend(self.coefficients.iter().cloned());
        Self::from_coefficients(c)
    }

    /// Substitutes `x -> x^stride`.
    pub fn stretch(&self, stride: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigInt::zero(); (self.coefficients.len() - 1) * stride + 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            c[i * stride] = a.clone();
        }
        Self::from_coefficients(c)
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coefficients
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Ascending sparse rendering such as `1+t^4+2t^7`, with no spaces.
    pub fn render(&self, var: &str) -> String {
        let mut out = String::new();
        for (i, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let abs = c.abs();
            match i {
                0 => out.push_str(&abs.to_string()),
                _ => {
                    if !abs.is_one() {
                        out.push_str(&abs.to_string());
                    }
                    out.push_str(var);
                    if i > 1 {
                        out.push('^');
                        out.push_str(&i.to_string());
                    }
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Nonzero `(degree, coefficient)` pairs, ascending.
    pub fn sparse_terms(&self) -> Vec<(usize, BigInt)> {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect()
    }
}

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

/// Gaussian binomial `[n k]_q`, built from `[n k] = [n-1 k-1] + q^k [n-1 k]`.
pub fn q_binomial(n: usize, k: usize) -> Result<IntegerPolynomial> {
    if k > n {
        return Err(Error::InvalidParameters(format!(
            "q-binomial needs 0 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    // row[j] = [m j] for the current m
    let mut row = vec![IntegerPolynomial::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(row.len() + 1);
        for j in 0..=m.min(k) {
            let poly = if j == 0 || j == m {
                IntegerPolynomial::one()
            } else {
                let upper = row.get(j).map(|p| p.shift(j)).unwrap_or_default();
                row[j - 1].add(&upper)
            };
            next.push(poly);
        }
        row = next;
    }
    Ok(row.swap_remove(k))
}

/// Rational Poincaré polynomial of `G_k(R^n)`:
/// `[m j]_{t^4}` for `(k, n) = (2j, 2m), (2j, 2m+1), (2j+1, 2m+1)`, and
/// `(1 + t^{2m-1}) [m-1 j]_{t^4}` for `(k, n) = (2j+1, 2m)`.
pub fn poincare_polynomial(k: usize, n: usize) -> Result<IntegerPolynomial> {
    let (k, n) = reduce_by_duality(k, n)?;
    let j = k / 2;
    let m = n / 2;
    if k % 2 == 1 && n % 2 == 0 {
        let orientation = IntegerPolynomial::one().add(&IntegerPolynomial::monomial(2 * m - 1));
        Ok(orientation.mul(&q_binomial(m - 1, j)?.stretch(4)))
    } else {
        Ok(q_binomial(m, j)?.stretch(4))
    }
}

/// Reduced Betti numbers `beta_{-1}, beta_0, ..., beta_d` of a `d`-manifold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiVector {
    d: usize,
    // reduced[i] holds beta_{i-1}
    reduced: Vec<BigInt>,
}

impl BettiVector {
    /// All-zero Betti numbers (a homology sphere up to the top class).
    pub fn zero(d: usize) -> Self {
        BettiVector {
            d,
            reduced: vec![BigInt::zero(); d + 2],
        }
    }

    /// Builds from `beta_0, ..., beta_d`; missing trailing entries are zero and
    /// `beta_{-1}` is zero.
    pub fn from_reduced(d: usize, betas: &[BigInt]) -> Result<Self> {
        if betas.len() > d + 1 {
            return Err(Error::InvalidParameters(format!(
                "{} Betti numbers given for dimension {d}",
                betas.len()
            )));
        }
        if betas.iter().any(Signed::is_negative) {
            return Err(Error::InvalidParameters("Betti numbers must be nonnegative".into()));
        }
        let mut b = Self::zero(d);
        for (i, beta) in betas.iter().enumerate() {
            b.reduced[i + 1] = beta.clone();
        }
        Ok(b)
    }

    pub fn dimension(&self) -> usize {
        self.d
    }

    /// `beta_i`, zero outside `-1 ..= d`.
    pub fn beta(&self, i: i64) -> BigInt {
        usize::try_from(i + 1)
            .ok()
            .and_then(|idx| self.reduced.get(idx).cloned())
            .unwrap_or_default()
    }

    /// `beta_{-1}, ..., beta_d`.
    pub fn as_slice(&self) -> &[BigInt] {
        &self.reduced
    }

    pub fn is_zero(&self) -> bool {
        self.reduced.iter().all(Zero::is_zero)
    }
}

/// Reduced rational Betti numbers of `G_k(R^n)`, with `d = k(n-k)`.
pub fn reduced_betti(k: usize, n: usize) -> Result<BettiVector> {
    let (k, n) = reduce_by_duality(k, n)?;
    let p = poincare_polynomial(k, n)?;
    let d = k * (n - k);
    let mut b = BettiVector::zero(d);
    for i in 1..=d {
        b.reduced[i + 1] = p.coefficient(i);
    }
    b.reduced[1] = p.coefficient(0) - 1;
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::from_coefficients(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn small_q_binomials() {
        assert_eq!(q_binomial(5, 0).unwrap(), IntegerPolynomial::one());
        assert_eq!(q_binomial(4, 2).unwrap(), poly(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(3, 1).unwrap(), poly(&[1, 1, 1]));
        assert!(q_binomial(2, 3).is_err());
    }

    #[test]
    fn q_binomial_at_one_is_binomial() {
        for n in 0..12usize {
            for k in 0..=n {
                let v = q_binomial(n, k).unwrap().evaluate(&BigInt::one());
                assert_eq!(v, crate::combinatorics::binomial(n as i64, k as i64));
            }
        }
    }

    #[test]
    fn poincare_examples() {
        assert_eq!(poincare_polynomial(3, 8).unwrap().to_string(), "1+t^4+t^7+t^8+t^11+t^15");
        assert_eq!(poincare_polynomial(1, 2).unwrap().to_string(), "1+t");
        assert_eq!(poincare_polynomial(2, 5).unwrap().to_string(), "1+t^4");
        assert_eq!(poincare_polynomial(5, 8).unwrap(), poincare_polynomial(3, 8).unwrap());
    }

    #[test]
    fn betti_examples() {
        let b = reduced_betti(3, 8).unwrap();
        assert_eq!(b.dimension(), 15);
        for i in -1..=15i64 {
            let expected = i64::from([4, 7, 8, 11, 15].contains(&i));
            assert_eq!(b.beta(i), BigInt::from(expected), "beta_{i}");
        }
        let b = reduced_betti(2, 6).unwrap();
        let nonzero: Vec<i64> = (-1..=8).filter(|&i| !b.beta(i).is_zero()).collect();
        assert_eq!(nonzero, vec![4, 8]);
    }

    #[test]
    fn render_general_coefficients() {
        assert_eq!(poly(&[1, 1, 2, 1, 1]).render("q"), "1+q+2q^2+q^3+q^4");
        assert_eq!(poly(&[0, -3, 0, 1]).render("t"), "-3t+t^3");
        assert_eq!(IntegerPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn betti_constructor_validation() {
        assert!(BettiVector::from_reduced(2, &[BigInt::from(-1)]).is_err());
        assert!(BettiVector::from_reduced(1, &[0.into(), 0.into(), 0.into()]).is_err());
        let b = BettiVector::from_reduced(2, &[0.into(), 2.into()]).unwrap();
        assert_eq!(b.beta(1), BigInt::from(2));
        assert_eq!(b.beta(2), BigInt::zero());
        assert_eq!(b.beta(-1), BigInt::zero());
        assert_eq!(b.beta(7), BigInt::zero());
    }
}
