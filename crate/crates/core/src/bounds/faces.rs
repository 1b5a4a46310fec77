//! Lower Bound Theorem family: per-dimension face-number bounds from a vertex
//! count, optionally strengthened by reduced Betti numbers.

use num_bigint::BigInt;

use crate::combinatorics::{binomial, pow2};
use crate::error::{Error, Result};
use crate::poincare::BettiVector;

fn check_lbt_domain(f0: &BigInt, d: usize) -> Result<()> {
    if d < 1 {
        return Err(Error::InvalidParameters("dimension must be at least 1".into()));
    }
    if *f0 < BigInt::from(d + 2) {
        return Err(Error::InvalidParameters(format!(
            "a closed {d}-manifold has at least {} vertices, got f0 = {f0}",
            d + 2
        )));
    }
    Ok(())
}

fn check_dims(d: usize, b: &BettiVector) -> Result<()> {
    if b.dimension() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: b.dimension(),
        });
    }
    Ok(())
}

/// `f_i >= f0 C(d+1, i) - i C(d+2, i+1)` for `i < d`, and
/// `f_d >= f0 d - (d+2)(d-1)`.
pub fn lbt_face_bounds(f0: &BigInt, d: usize) -> Result<Vec<BigInt>> {
    check_lbt_domain(f0, d)?;
    let di = d as i64;
    let mut bounds: Vec<BigInt> = (0..di)
        .map(|i| f0 * binomial(di + 1, i) - binomial(di + 2, i + 1) * i)
        .collect();
    bounds.push(f0 * di - (di + 2) * (di - 1));
    Ok(bounds)
}

/// LBT plus `C(d+1, i+1) sum_{j<=i} C(i, j) beta_j` (`i < d`) and
/// `sum_{j<d} C(d, j) beta_j` on the facet row.
pub fn lbtm_face_bounds(f0: &BigInt, d: usize, b: &BettiVector) -> Result<Vec<BigInt>> {
    check_dims(d, b)?;
    let mut bounds = lbt_face_bounds(f0, d)?;
    let di = d as i64;
    for (i, bound) in bounds.iter_mut().enumerate().take(d) {
        let i = i as i64;
        let betti: BigInt = (0..=i).map(|j| binomial(i, j) * b.beta(j)).sum();
        *bound += binomial(di + 1, i + 1) * betti;
    }
    bounds[d] += (0..di).map(|j| binomial(di, j) * b.beta(j)).sum::<BigInt>();
    Ok(bounds)
}

/// Manifold-g bounds plus, for `j = 2..=floor((d+2)/2)`,
/// `[C(d+2-j, d+1-i) - C(j, d+1-i)] C(d+1, j-1) beta_{j-1}`
/// (the bracket is `d+2-2j` on the facet row).
pub fn slbtm_face_bounds(f0: &BigInt, d: usize, b: &BettiVector) -> Result<Vec<BigInt>> {
    let mut bounds = lbtm_face_bounds(f0, d, b)?;
    let di = d as i64;
    for (i, bound) in bounds.iter_mut().enumerate() {
        let i = i as i64;
        let extra: BigInt = (2..=(di + 2) / 2)
            .map(|j| {
                let bracket = if i < di {
                    binomial(di + 2 - j, di + 1 - i) - binomial(j, di + 1 - i)
                } else {
                    BigInt::from(di + 2 - 2 * j)
                };
                bracket * binomial(di + 1, j - 1) * b.beta(j - 1)
            })
            .sum();
        *bound += extra;
    }
    Ok(bounds)
}

/// Bounds implied by `h'' >= 0` alone (no orientability needed): row `i < d` is
/// `C(d+1, i+1) sum_k C(i, k-1) beta_{k-1}`, the facet row is
/// [`h_nonneg_facet_bound`].
pub fn h_nonneg_face_bounds(d: usize, b: &BettiVector) -> Result<Vec<BigInt>> {
    check_dims(d, b)?;
    let di = d as i64;
    let mut bounds: Vec<BigInt> = (0..di)
        .map(|i| {
            let betti: BigInt = (0..=i + 1).map(|k| binomial(i, k - 1) * b.beta(k - 1)).sum();
            binomial(di + 1, i + 1) * betti
        })
        .collect();
    bounds.push(h_nonneg_facet_bound(d, b)?);
    Ok(bounds)
}

/// `f_d >= sum_{i=0}^{d+1} C(d, i-1) beta_{i-1}`.
pub fn h_nonneg_facet_bound(d: usize, b: &BettiVector) -> Result<BigInt> {
    check_dims(d, b)?;
    let di = d as i64;
    Ok((0..=di + 1).map(|i| binomial(di, i - 1) * b.beta(i - 1)).sum())
}

/// Exact sum of per-dimension bounds.
pub fn total_simplices(bounds: &[BigInt]) -> BigInt {
    bounds.iter().sum()
}

/// `2[(f0 - d)(2^e - 1) + 1]`; the LBT rows sum to this with `e = d`.
pub fn lbt_total_closed_form(f0: &BigInt, d: usize, e: u32) -> BigInt {
    ((f0 - d) * (pow2(e) - 1) + 1) * 2
}

/// LBT aggregate with exponent `e` plus
/// `sum_{j<d} [C(d, j) + sum_{i=j}^{d-1} C(d+1, i+1) C(i, j)] beta_j`.
pub fn lbtm_total_closed_form(f0: &BigInt, d: usize, b: &BettiVector, e: u32) -> Result<BigInt> {
    check_dims(d, b)?;
    let di = d as i64;
    let betti: BigInt = (0..di)
        .map(|j| {
            let inner: BigInt = (j..di).map(|i| binomial(di + 1, i + 1) * binomial(i, j)).sum();
            (binomial(di, j) + inner) * b.beta(j)
        })
        .sum();
    Ok(lbt_total_closed_form(f0, d, e) + betti)
}

/// Facet bound for `G_k(R^m)` from the generic vertex count `m(m+1)/2`; with
/// `n = m - k`: `(k/2)(n^3 + n^2) + (k(k+2)(k-1)/2) n + 2`.
pub fn facet_bound_generic(k: usize, m: usize) -> Result<BigInt> {
    if k < 2 || k > m.saturating_sub(k) {
        return Err(Error::InvalidParameters(format!(
            "generic facet bound needs 2 <= k <= m - k, got k = {k}, m = {m}"
        )));
    }
    let k = BigInt::from(k);
    let n = BigInt::from(m) - &k;
    let cubic = &k * (&n * &n * &n + &n * &n) / 2u32;
    let linear = &k * (&k + 2u32) * (&k - 1u32) / 2u32 * &n;
    Ok(cubic + linear + 2u32)
}

/// `sum_{k=1}^{m-2} C(4m-4, 4k)`, the Betti contribution to the facet bound of
/// `G_2(R^{2m})`.
pub fn g2_betti_binomial_sum(m: usize) -> BigInt {
    let top = 4 * m as i64 - 4;
    (1..=m as i64 - 2).map(|k| binomial(top, 4 * k)).sum()
}

/// Closed form `4^{2m-3} + (-1)^{m+1} 2^{2m-3} - 2` of [`g2_betti_binomial_sum`].
pub fn g2_betti_sum_closed_form(m: usize) -> BigInt {
    assert!(m >= 2, "closed form needs m >= 2");
    let e = 2 * m as u32 - 3;
    let sign = if m % 2 == 1 { 1 } else { -1 };
    pow2(2 * e) + pow2(e) * sign - 2
}

/// Facet bound for `G_2(R^n)`, `n` even:
/// `4^{n-3} + (-1)^{n/2+1} 2^{n-3} + (n-2)(n^2 - 3n + 6)`.
pub fn g2_exponential_facet_bound(n: usize) -> Result<BigInt> {
    if n < 6 || n % 2 == 1 {
        return Err(Error::InvalidParameters(format!(
            "the G_2 exponential bound needs even n >= 6, got {n}"
        )));
    }
    let m = n / 2;
    assert_eq!(
        g2_betti_binomial_sum(m),
        g2_betti_sum_closed_form(m),
        "binomial-sum identity failed at m = {m}"
    );
    let e = n as u32 - 3;
    let sign = if (n / 2 + 1).is_multiple_of(2) { 1 } else { -1 };
    let ni = BigInt::from(n);
    let cubic = (&ni - 2u32) * (&ni * &ni - &ni * 3u32 + 6u32);
    Ok(pow2(2 * e) + pow2(e) * sign + cubic)
}

/// Per-row check that `upper >= lower`.
pub fn dominates(upper: &[BigInt], lower: &[BigInt]) -> bool {
    upper.len() == lower.len() && upper.iter().zip(lower).all(|(u, l)| u >= l)
}
