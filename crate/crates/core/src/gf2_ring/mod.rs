//! Mod-2 cohomology of real Grassmannians.
//!
//! `H*(G_k(R^n); Z_2)` is presented as `Z_2[w_1, ..., w_k]` modulo the
//! relations obtained from `(1 + w_1 + ... + w_k)(1 + wbar_1 + ... + wbar_{n-k}) = 1`
//! in degrees `n-k+1 ..= n`. Vanishing of a class is decided by reduction modulo
//! a reduced Gröbner basis for the weighted graded revlex order.

mod cache;
mod groebner;
mod monomial;
mod polynomial;

pub use cache::{cache_file_name, load_cached_basis, make_ring_cached, store_basis};
pub use groebner::GroebnerLimits;
pub use monomial::Monomial;
pub use polynomial::Gf2Polynomial;

use groebner::{reduce, BasisElement, LimitHit};

use crate::error::{Error, Result};

/// Tag for the fixed monomial order, as written in cache headers.
pub const MONOMIAL_ORDER_TAG: &str = "wdegrevlex";

/// The presented ring `H*(G_k(R^n); Z_2)` with `k <= n - k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrassmannRing {
    k: usize,
    n: usize,
    ideal_generators: Vec<Gf2Polynomial>,
    basis: Vec<BasisElement>,
}

/// Maps `(k, n)` to the representative with `k <= n - k`.
pub fn reduce_by_duality(k: usize, n: usize) -> Result<(usize, usize)> {
    if k < 1 || k >= n {
        return Err(Error::InvalidParameters(format!(
            "G_k(R^n) needs 1 <= k < n, got k = {k}, n = {n}"
        )));
    }
    Ok((k.min(n - k), n))
}

/// The dual classes `wbar_1, ..., wbar_n` as polynomials in `w_1, ..., w_k`,
/// from `wbar_m = sum_{i=1}^{min(k,m)} w_i * wbar_{m-i}` with `wbar_0 = 1`.
pub fn dual_classes(k: usize, n: usize) -> Result<Vec<Gf2Polynomial>> {
    if k < 1 || n < k {
        return Err(Error::InvalidParameters(format!(
            "dual classes need 1 <= k <= n, got k = {k}, n = {n}"
        )));
    }
    let mut duals = vec![Gf2Polynomial::one()];
    for m in 1..=n {
        let mut next = Gf2Polynomial::zero();
        for i in 1..=k.min(m) {
            next.add_scaled(&Monomial::var_pow(i, 1), &duals[m - i]);
        }
        duals.push(next);
    }
    duals.remove(0);
    Ok(duals)
}

/// Degree-`j` components of `w * wbar` for `j = n-k+1 ..= n`, where `wbar` is
/// truncated at `wbar_{n-k}`.
fn relation_generators(k: usize, n: usize, duals: &[Gf2Polynomial]) -> Vec<Gf2Polynomial> {
    let codim = n - k;
    let dual = |m: usize| -> Gf2Polynomial {
        if m == 0 {
            Gf2Polynomial::one()
        } else {
            duals[m - 1].clone()
        }
    };
    (codim + 1..=n)
        .map(|j| {
            let mut r = Gf2Polynomial::zero();
            for i in (j - codim)..=k {
                r.add_scaled(&Monomial::var_pow(i, 1), &dual(j - i));
            }
            r
        })
        .collect()
}

/// Builds the ring with the default work limits.
pub fn make_ring(k: usize, n: usize) -> Result<GrassmannRing> {
    GrassmannRing::new(k, n, GroebnerLimits::default())
}

impl GrassmannRing {
    /// Builds the presentation and its reduced Gröbner basis. Inputs with
    /// `k > n - k` are replaced by the homeomorphic `G_{n-k}(R^n)`.
    pub fn new(k: usize, n: usize, limits: GroebnerLimits) -> Result<Self> {
        let (k, n) = reduce_by_duality(k, n)?;
        let ideal_generators = Self::presentation(k, n)?;
        let basis = groebner::reduced_groebner_basis(&ideal_generators, limits).map_err(|hit| {
            let detail = match hit {
                LimitHit::Pairs(p) => format!("{p} pending S-pairs > cap {}", limits.max_pairs),
                LimitHit::Terms(t) => format!("{t} basis terms > cap {}", limits.max_terms),
            };
            Error::ComplexityLimit { k, n, detail }
        })?;
        Ok(GrassmannRing {
            k,
            n,
            ideal_generators,
            basis,
        })
    }

    fn presentation(k: usize, n: usize) -> Result<Vec<Gf2Polynomial>> {
        let duals = dual_classes(k, n - k)?;
        Ok(relation_generators(k, n, &duals))
    }

    /// Accepts an externally supplied basis (e.g. from the cache) only if it is
    /// certified to be the reduced Gröbner basis of this ring's ideal.
    ///
    /// The candidate must be a reduced Gröbner basis, contain the ideal (every
    /// generator reduces to zero) and leave a quotient of dimension `C(n, k)`;
    /// together these force equality with the ideal.
    pub fn from_certified_basis(k: usize, n: usize, candidate: Vec<Gf2Polynomial>) -> Result<Self> {
        let (k, n) = reduce_by_duality(k, n)?;
        let reject = |why: &str| Error::InvalidParameters(format!("basis rejected: {why}"));
        if candidate.iter().any(|g| g.max_variable() > k) {
            return Err(reject("uses variables beyond w_k"));
        }
        if candidate.iter().any(|g| g.homogeneous_degree().is_none()) {
            return Err(reject("element is zero or inhomogeneous"));
        }
        let mut basis: Vec<BasisElement> =
            candidate.into_iter().filter_map(BasisElement::new).collect();
        basis.sort_by(|a, b| a.lead.cmp(&b.lead));
        if !groebner::is_reduced_groebner_basis(&basis) {
            return Err(reject("not a reduced Groebner basis"));
        }
        let ideal_generators = Self::presentation(k, n)?;
        if ideal_generators.iter().any(|g| !reduce(&basis, g).is_zero()) {
            return Err(reject("does not contain the defining relations"));
        }
        let ring = GrassmannRing {
            k,
            n,
            ideal_generators,
            basis,
        };
        let total: u128 = ring.gf2_betti().iter().map(|&c| c as u128).sum();
        if num_bigint::BigInt::from(total) != crate::combinatorics::binomial(n as i64, k as i64) {
            return Err(reject("quotient has the wrong dimension"));
        }
        Ok(ring)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `k(n-k)`, the manifold dimension.
    pub fn top_degree(&self) -> usize {
        self.k * (self.n - self.k)
    }

    pub fn ideal_generators(&self) -> &[Gf2Polynomial] {
        &self.ideal_generators
    }

    /// The reduced Gröbner basis, sorted by increasing leading monomial.
    pub fn groebner_basis(&self) -> Vec<Gf2Polynomial> {
        self.basis.iter().map(BasisElement::to_polynomial).collect()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.basis.iter().map(|g| &g.lead)
    }

    pub fn monomial_order(&self) -> &'static str {
        MONOMIAL_ORDER_TAG
    }

    fn check_variables(&self, p: &Gf2Polynomial) -> Result<()> {
        match p.max_variable() {
            index if index > self.k => Err(Error::VariableOutOfRange { index, k: self.k }),
            _ => Ok(()),
        }
    }

    /// Remainder of `p` modulo the Gröbner basis; zero iff the class vanishes.
    pub fn normal_form(&self, p: &Gf2Polynomial) -> Result<Gf2Polynomial> {
        self.check_variables(p)?;
        Ok(reduce(&self.basis, p))
    }

    pub fn is_nonzero_class(&self, p: &Gf2Polynomial) -> Result<bool> {
        Ok(!self.normal_form(p)?.is_zero())
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.basis.iter().any(|g| g.lead.divides(m))
    }

    /// Largest `m` with `w_1^m != 0`, found by repeated multiplication by `w_1`
    /// of the previous normal form.
    pub fn height_w1(&self) -> usize {
        let w1 = Monomial::var_pow(1, 1);
        let mut current = reduce(&self.basis, &Gf2Polynomial::from(w1.clone()));
        let mut height = 0;
        while !current.is_zero() {
            height += 1;
            current = reduce(&self.basis, &current.mul_monomial(&w1));
        }
        height
    }

    /// Number of standard monomials in each weighted degree `0 ..= k(n-k)`.
    pub fn gf2_betti(&self) -> Vec<u64> {
        (0..=self.top_degree())
            .map(|d| {
                monomials_of_degree(self.k, d)
                    .into_iter()
                    .filter(|m| self.is_standard(m))
                    .count() as u64
            })
            .collect()
    }
}

/// All monomials in `w_1..w_k` of weighted degree `degree`.
pub fn monomials_of_degree(k: usize, degree: usize) -> Vec<Monomial> {
    fn go(var: usize, remaining: usize, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if var == 0 {
            if remaining == 0 {
                out.push(Monomial::from_exponents(exps));
            }
            return;
        }
        for e in 0..=remaining / var {
            exps[var - 1] = e as u32;
            go(var - 1, remaining - e * var, exps, out);
        }
        exps[var - 1] = 0;
    }
    let mut out = Vec::new();
    let mut exps = vec![0u32; k];
    if k == 0 {
        if degree == 0 {
            out.push(Monomial::one());
        }
        return out;
    }
    go(k, degree, &mut exps, &mut out);
    out
}

/// The unique `s >= 0` with `2^s < n <= 2^{s+1}`.
pub fn dyadic_s(n: usize) -> Result<u32> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!("dyadic_s needs n >= 2, got {n}")));
    }
    // ceil(log2 n) - 1
    Ok(usize::BITS - (n - 1).leading_zeros() - 1)
}

/// Closed-form height of `w_1`: for `k >= 2` and `2^s < n <= 2^{s+1}` it is
/// `2^{s+1} - 2` when `k = 2` or (`k = 3`, `n = 2^s + 1`), else `2^{s+1} - 1`.
/// For `k = 1` (projective space) it is `n - 1`.
pub fn height_w1_formula(k: usize, n: usize) -> Result<usize> {
    let (k, n) = reduce_by_duality(k, n)?;
    if k == 1 {
        return Ok(n - 1);
    }
    let s = dyadic_s(n)?;
    let top = 1usize << (s + 1);
    if k == 2 || (k == 3 && n == (1 << s) + 1) {
        Ok(top - 2)
    } else {
        Ok(top - 1)
    }
}
