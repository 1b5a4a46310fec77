//! Nonzero top-degree products in `H*(G_k(R^n); Z_2)` for `k = 2, 3, 4`, and the
//! vertex-count bounds they imply.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2_ring::{dyadic_s, height_w1_formula, reduce_by_duality, Gf2Polynomial, GrassmannRing, Monomial};

/// Which closed-form family produced a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessCase {
    K2Generic,
    K3Case1,
    K3Case2,
    K3Case3,
    K4Pow2Plus1A,
    K4Pow2Plus1B,
    K4GenericA,
    K4GenericB,
    HeightOnly,
}

impl WitnessCase {
    pub fn name(self) -> &'static str {
        match self {
            WitnessCase::K2Generic => "k2_generic",
            WitnessCase::K3Case1 => "k3_case1",
            WitnessCase::K3Case2 => "k3_case2",
            WitnessCase::K3Case3 => "k3_case3",
            WitnessCase::K4Pow2Plus1A => "k4_pow2plus1_a",
            WitnessCase::K4Pow2Plus1B => "k4_pow2plus1_b",
            WitnessCase::K4GenericA => "k4_generic_a",
            WitnessCase::K4GenericB => "k4_generic_b",
            WitnessCase::HeightOnly => "height_only",
        }
    }
}

/// Case tag plus the dyadic parameters it was solved with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WitnessSource {
    pub case: WitnessCase,
    pub s: Option<u32>,
    pub p: Option<u32>,
    pub r: Option<u32>,
    pub t: Option<u64>,
}

impl WitnessSource {
    fn new(case: WitnessCase, s: Option<u32>) -> Self {
        WitnessSource {
            case,
            s,
            p: None,
            r: None,
            t: None,
        }
    }
}

impl fmt::Display for WitnessSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.case.name())?;
        let params = [
            ("s", self.s.map(u64::from)),
            ("p", self.p.map(u64::from)),
            ("r", self.r.map(u64::from)),
            ("t", self.t),
        ];
        for (name, value) in params {
            if let Some(v) = value {
                write!(f, " {name}={v}")?;
            }
        }
        Ok(())
    }
}

/// A product `w_{d_1}^{m_1} * w_{d_2}^{m_2} * ...` known to be nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CupWitness {
    /// `(dimension, multiplicity)` pairs.
    pub factors: Vec<(usize, u64)>,
    pub source: WitnessSource,
}

impl CupWitness {
    /// Total cohomological degree `sum dim * mult`.
    pub fn degree(&self) -> u64 {
        self.factors.iter().map(|&(dim, m)| dim as u64 * m).sum()
    }

    /// Number of single classes in the product.
    pub fn length(&self) -> u64 {
        self.factors.iter().map(|&(_, m)| m).sum()
    }

    /// The product as a monomial in the Stiefel–Whitney classes.
    pub fn to_monomial(&self) -> Monomial {
        self.factors
            .iter()
            .filter(|&&(_, m)| m > 0)
            .fold(Monomial::one(), |acc, &(dim, m)| {
                acc.mul(&Monomial::var_pow(dim, m as u32))
            })
    }
}

impl fmt::Display for CupWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_monomial())
    }
}

fn exponent(value: i64) -> Result<u64> {
    u64::try_from(value)
        .map_err(|_| Error::InvalidParameters(format!("negative witness exponent {value}")))
}

fn check_witness_domain(k: usize, n: usize) -> Result<()> {
    if k < 2 || k > n.saturating_sub(k) {
        return Err(Error::InvalidParameters(format!(
            "witnesses need 2 <= k <= n - k, got k = {k}, n = {n}"
        )));
    }
    Ok(())
}

/// Every applicable closed-form witness for `(k, n)`; for `k >= 5` only the
/// power of `w_1` given by the height formula.
pub fn stong_witness_candidates(k: usize, n: usize) -> Result<Vec<CupWitness>> {
    check_witness_domain(k, n)?;
    let s = dyadic_s(n)?;
    let two_s = 1i64 << s;
    let two_s1 = 2 * two_s;
    let n_i = n as i64;
    let w = |factors: &[(usize, i64)], source: WitnessSource| -> Result<CupWitness> {
        let factors = factors
            .iter()
            .map(|&(dim, e)| Ok((dim, exponent(e)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(CupWitness { factors, source })
    };

    match k {
        2 => {
            let source = WitnessSource::new(WitnessCase::K2Generic, Some(s));
            Ok(vec![w(&[(1, two_s1 - 2), (2, n_i - 1 - two_s)], source)?])
        }
        3 => {
            if n_i == two_s1 {
                let source = WitnessSource::new(WitnessCase::K3Case3, Some(s));
                return Ok(vec![w(&[(1, two_s1 - 1), (2, two_s1 - 4)], source)?]);
            }
            // n = 2^{s+1} - 2^p + 1 + t, 0 <= t < 2^{p-1}
            let gap = two_s1 + 1 - n_i;
            let p = 64 - (gap - 1).leading_zeros();
            let t = (1i64 << p) - gap;
            let half = 1i64 << (p - 1);
            if t == 0 {
                let source = WitnessSource {
                    p: Some(p),
                    ..WitnessSource::new(WitnessCase::K3Case1, Some(s))
                };
                Ok(vec![w(&[(1, two_s1 - 2), (2, two_s1 - 3 * half - 2)], source)?])
            } else {
                let source = WitnessSource {
                    p: Some(p),
                    t: Some(t as u64),
                    ..WitnessSource::new(WitnessCase::K3Case2, Some(s))
                };
                Ok(vec![w(
                    &[(1, two_s1 - 1), (2, two_s1 - 3 * half - 1), (3, t - 1)],
                    source,
                )?])
            }
        }
        4 => {
            if n_i == two_s + 1 {
                let a = WitnessSource::new(WitnessCase::K4Pow2Plus1A, Some(s));
                let b = WitnessSource::new(WitnessCase::K4Pow2Plus1B, Some(s));
                return Ok(vec![
                    w(&[(1, two_s1 - 2), (2, two_s - 5)], a)?,
                    w(&[(1, two_s1 - 1), (2, two_s - 7), (3, 1)], b)?,
                ]);
            }
            // n = 2^s + 2^r + 1 + t, 0 <= r < s, 0 <= t < 2^r
            let excess = n_i - two_s - 1;
            let r = 63 - excess.leading_zeros();
            let t = excess - (1i64 << r);
            let two_r1 = 1i64 << (r + 1);
            let params = |case| WitnessSource {
                r: Some(r),
                t: Some(t as u64),
                ..WitnessSource::new(case, Some(s))
            };
            let mut out = vec![w(
                &[(1, two_s1 - 2), (2, two_s + two_r1 - 5), (4, t)],
                params(WitnessCase::K4GenericA),
            )?];
            if r > 0 {
                out.push(w(
                    &[(1, two_s1 - 1), (2, two_s + two_r1 - 7), (3, 1), (4, t)],
                    params(WitnessCase::K4GenericB),
                )?);
            }
            Ok(out)
        }
        _ => {
            let h = height_w1_formula(k, n)?;
            let source = WitnessSource::new(WitnessCase::HeightOnly, Some(s));
            Ok(vec![w(&[(1, h as i64)], source)?])
        }
    }
}

/// The applicable witness giving the largest vertex bound.
pub fn stong_witness(k: usize, n: usize) -> Result<CupWitness> {
    let mut best: Option<(BigInt, CupWitness)> = None;
    for candidate in stong_witness_candidates(k, n)? {
        let bound = vertex_bound_from_witness(&candidate)?;
        if best.as_ref().is_none_or(|(b, _)| bound > *b) {
            best = Some((bound, candidate));
        }
    }
    best.map(|(_, w)| w).ok_or(Error::EmptyWitness)
}

/// `(h+1)(h+2)/2` vertices when some degree-1 class has `x^h != 0`.
pub fn vertex_bound_from_height(h: u64) -> Result<BigInt> {
    if h < 1 {
        return Err(Error::InvalidParameters("height must be at least 1".into()));
    }
    let h = BigInt::from(h);
    Ok((&h + 1u32) * (&h + 2u32) / 2u32)
}

/// Vertex bound from a nonzero product of `m` classes with dimensions sorted
/// ascending: `sum_i i * dim_i + (m + 2)`. Products of degree-1 classes only
/// fall back to the height bound.
pub fn vertex_bound_from_witness(w: &CupWitness) -> Result<BigInt> {
    let mut dims: Vec<usize> = w
        .factors
        .iter()
        .flat_map(|&(dim, m)| std::iter::repeat_n(dim, m as usize))
        .collect();
    if dims.is_empty() {
        return Err(Error::EmptyWitness);
    }
    dims.sort_unstable();
    if dims.iter().all(|&d| d == dims[0]) {
        if dims[0] == 1 {
            return vertex_bound_from_height(dims.len() as u64);
        }
        return Err(Error::InvalidParameters(format!(
            "product of classes all of dimension {} gives no weighted bound",
            dims[0]
        )));
    }
    let m = dims.len() as u64;
    let weighted: u64 = dims
        .iter()
        .enumerate()
        .map(|(i, &d)| (i as u64 + 1) * d as u64)
        .sum();
    Ok(BigInt::from(weighted) + m + 2u32)
}

/// Best available vertex bound with its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaBound {
    pub value: BigInt,
    pub witness: CupWitness,
    pub source: String,
}

/// Lower bound on the number of vertices of any triangulation of `G_k(R^n)`:
/// the best of the closed-form witnesses and the height of `w_1`.
pub fn delta_lower_bound(k: usize, n: usize) -> Result<DeltaBound> {
    let (k, n) = reduce_by_duality(k, n)?;
    let height = height_w1_formula(k, n)? as u64;
    let height_witness = CupWitness {
        factors: vec![(1, height)],
        source: WitnessSource::new(
            WitnessCase::HeightOnly,
            if k == 1 { None } else { Some(dyadic_s(n)?) },
        ),
    };
    let mut best = DeltaBound {
        value: vertex_bound_from_height(height)?,
        source: if k == 1 {
            format!("height of w1 in RP^{} is {height}", n - 1)
        } else {
            format!("height of w1 is {height}")
        },
        witness: height_witness,
    };
    if k >= 2 {
        for candidate in stong_witness_candidates(k, n)? {
            let value = vertex_bound_from_witness(&candidate)?;
            if value > best.value {
                best = DeltaBound {
                    value,
                    source: format!("nonzero product {candidate} ({})", candidate.source),
                    witness: candidate,
                };
            }
        }
    }
    Ok(best)
}

/// Decides in the ring whether the witness product is nonzero.
pub fn verify_witness(ring: &GrassmannRing, w: &CupWitness) -> Result<bool> {
    ring.is_nonzero_class(&Gf2Polynomial::from(w.to_monomial()))
}
