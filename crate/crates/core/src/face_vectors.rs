//! Face-number transforms for simplicial `d`-manifolds: `f <-> h <-> g`, the
//! Betti-corrected `h''`, `g''`, `g~` sequences, Dehn–Sommerville symmetry and
//! Macaulay's M-sequence test.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::poincare::BettiVector;

/// Face numbers `f_0, ..., f_d` of a `d`-dimensional complex; `f_{-1} = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceVector {
    d: usize,
    f: Vec<BigInt>,
}

impl FaceVector {
    /// `f` must hold `f_0..f_d` (so `d = f.len() - 1`), all nonnegative.
    pub fn new(f: Vec<BigInt>) -> Result<Self> {
        if f.is_empty() {
            return Err(Error::InvalidParameters("empty face vector".into()));
        }
        if f.iter().any(Signed::is_negative) {
            return Err(Error::InvalidParameters("face numbers must be nonnegative".into()));
        }
        Ok(FaceVector { d: f.len() - 1, f })
    }

    /// Face numbers of the boundary of the `(d+1)`-simplex.
    pub fn simplex_boundary(d: usize) -> Self {
        let f = (0..=d as i64).map(|i| binomial(d as i64 + 2, i + 1)).collect();
        FaceVector { d, f }
    }

    pub fn dimension(&self) -> usize {
        self.d
    }

    /// `f_i` with `f_{-1} = 1` and zero outside `-1..=d`.
    pub fn get(&self, i: i64) -> BigInt {
        match i {
            -1 => BigInt::one(),
            i if i < -1 => BigInt::zero(),
            i => self.f.get(i as usize).cloned().unwrap_or_default(),
        }
    }

    pub fn as_slice(&self) -> &[BigInt] {
        &self.f
    }
}

/// Which sequence an [`HVector`] carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SequenceTag {
    Plain,
    DoublePrime,
    G,
    GDoublePrime,
    GTilde,
    FDoublePrime,
}

/// Signed sequence indexed `0..=d+1` (h-, g-, h''-, g''-, g~-numbers), or
/// `-1..=d` shifted to `0..=d+1` for f''.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HVector {
    d: usize,
    tag: SequenceTag,
    h: Vec<BigInt>,
}

impl HVector {
    pub fn new(d: usize, tag: SequenceTag, h: Vec<BigInt>) -> Result<Self> {
        if h.len() != d + 2 {
            return Err(Error::InvalidParameters(format!(
                "sequence for d = {d} needs {} entries, got {}",
                d + 2,
                h.len()
            )));
        }
        Ok(HVector { d, tag, h })
    }

    pub fn dimension(&self) -> usize {
        self.d
    }

    pub fn tag(&self) -> SequenceTag {
        self.tag
    }

    /// Entry `j`, zero outside `0..=d+1`.
    pub fn get(&self, j: i64) -> BigInt {
        usize::try_from(j)
            .ok()
            .and_then(|j| self.h.get(j).cloned())
            .unwrap_or_default()
    }

    pub fn as_slice(&self) -> &[BigInt] {
        &self.h
    }

    /// Entries `0..=floor((d+1)/2)`, the range on which g-type sequences are
    /// constrained.
    pub fn lower_half(&self) -> &[BigInt] {
        &self.h[..=self.d.div_ceil(2)]
    }
}

fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// `h_j = sum_{i=0}^{j} (-1)^{j-i} C(d+1-i, d+1-j) f_{i-1}`.
pub fn f_to_h(fv: &FaceVector) -> HVector {
    let d = fv.d as i64;
    let h = (0..=d + 1)
        .map(|j| {
            (0..=j).fold(BigInt::zero(), |acc, i| {
                let term = binomial(d + 1 - i, d + 1 - j) * fv.get(i - 1);
                if (j - i) % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect();
    HVector {
        d: fv.d,
        tag: SequenceTag::Plain,
        h,
    }
}

/// `f_{i-1} = sum_{j=0}^{i} C(d+1-j, d+1-i) h_j`, applied to h- or h''-numbers
/// (the latter yields f''-numbers, entry `i` holding `f''_{i-1}`).
fn invert_h(hv: &HVector) -> Vec<BigInt> {
    let d = hv.d as i64;
    (0..=d + 1)
        .map(|i| {
            (0..=i)
                .map(|j| binomial(d + 1 - j, d + 1 - i) * hv.get(j))
                .sum()
        })
        .collect()
}

/// Inverse of [`f_to_h`].
pub fn h_to_f(hv: &HVector) -> Result<FaceVector> {
    if hv.tag != SequenceTag::Plain {
        return Err(Error::InvalidParameters(format!(
            "h_to_f expects a plain h-vector, got {:?}",
            hv.tag
        )));
    }
    let full = invert_h(hv);
    // full[0] is f_{-1}
    FaceVector::new(full[1..].to_vec())
}

/// `f''_{i-1}` for `i = 0..=d+1`, the face-number inversion of `h''`.
pub fn f_double_prime(hpp: &HVector) -> Result<HVector> {
    if hpp.tag != SequenceTag::DoublePrime {
        return Err(Error::InvalidParameters("f'' is defined from h''".into()));
    }
    HVector::new(hpp.d, SequenceTag::FDoublePrime, invert_h(hpp))
}

/// Successive differences `g_j = h_j - h_{j-1}`, kept for `j = 0..=d+1`.
pub fn h_to_g(hv: &HVector) -> Result<HVector> {
    let tag = match hv.tag {
        SequenceTag::Plain => SequenceTag::G,
        SequenceTag::DoublePrime => SequenceTag::GDoublePrime,
        other => {
            return Err(Error::InvalidParameters(format!(
                "g-numbers come from h or h'', got {other:?}"
            )))
        }
    };
    let g = (0..=hv.d as i64 + 1)
        .map(|j| hv.get(j) - hv.get(j - 1))
        .collect();
    Ok(HVector { d: hv.d, tag, h: g })
}

/// `h''_j = h_j - C(d+1, j) sum_{i=0}^{j} (-1)^{j-i} beta_{i-1}` for `j <= d`, and
/// `h''_{d+1} = h_{d+1} - sum_{i=0}^{d} (-1)^{d+1-i} beta_{i-1}`.
pub fn h_double_prime(hv: &HVector, betti: &BettiVector) -> Result<HVector> {
    check_dims(hv.d, betti.dimension())?;
    if hv.tag != SequenceTag::Plain {
        return Err(Error::InvalidParameters("h'' is defined from plain h".into()));
    }
    let d = hv.d as i64;
    let alternating = |j: i64, upto: i64| -> BigInt {
        (0..=upto).fold(BigInt::zero(), |acc, i| {
            if (j - i) % 2 == 0 {
                acc + betti.beta(i - 1)
            } else {
                acc - betti.beta(i - 1)
            }
        })
    };
    let mut h: Vec<BigInt> = (0..=d)
        .map(|j| hv.get(j) - binomial(d + 1, j) * alternating(j, j))
        .collect();
    h.push(hv.get(d + 1) - alternating(d + 1, d));
    Ok(HVector {
        d: hv.d,
        tag: SequenceTag::DoublePrime,
        h,
    })
}

/// `g~_j = g''_j - C(d+1, j-1) beta_{j-1}`, kept for `j = 0..=d+1`.
pub fn g_tilde(gpp: &HVector, betti: &BettiVector) -> Result<HVector> {
    check_dims(gpp.d, betti.dimension())?;
    if gpp.tag != SequenceTag::GDoublePrime {
        return Err(Error::InvalidParameters("g~ is defined from g''".into()));
    }
    let d = gpp.d as i64;
    let h = (0..=d + 1)
        .map(|j| gpp.get(j) - binomial(d + 1, j - 1) * betti.beta(j - 1))
        .collect();
    Ok(HVector {
        d: gpp.d,
        tag: SequenceTag::GTilde,
        h,
    })
}

/// `h''_j = h''_{d+1-j}` for all `j`.
pub fn check_dehn_sommerville(hpp: &HVector) -> bool {
    let n = hpp.h.len();
    (0..n).all(|j| hpp.h[j] == hpp.h[n - 1 - j])
}

/// Largest `x >= j` with `C(x, j) <= a`, for `a >= 1`.
fn largest_binomial_top(a: &BigInt, j: i64) -> i64 {
    let fits = |x: i64| binomial(x, j) <= *a;
    let mut lo = j;
    let mut hi = j + 1;
    while fits(hi) {
        lo = hi;
        hi = j + 2 * (hi - j);
    }
    // fits(lo), !fits(hi)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Macaulay's bound `a^<j>`: with the greedy representation
/// `a = C(a_j, j) + C(a_{j-1}, j-1) + ... + C(a_i, i)`, returns
/// `C(a_j+1, j+1) + ... + C(a_i+1, i+1)`.
pub fn macaulay_bound(a: &BigInt, j: i64) -> Result<BigInt> {
    if a.is_negative() || j < 1 {
        return Err(Error::InvalidParameters(format!(
            "Macaulay bound needs a >= 0 and j >= 1, got a = {a}, j = {j}"
        )));
    }
    let mut rest = a.clone();
    let mut bound = BigInt::zero();
    let mut level = j;
    while !rest.is_zero() {
        let top = largest_binomial_top(&rest, level);
        rest -= binomial(top, level);
        bound += binomial(top + 1, level + 1);
        level -= 1;
    }
    Ok(bound)
}

/// `seq_0 = 1`, all entries nonnegative, and `seq_{j+1} <= seq_j^<j>` for `j >= 1`.
pub fn is_m_sequence(seq: &[BigInt]) -> bool {
    let Some(first) = seq.first() else {
        return false;
    };
    if !first.is_one() || seq.iter().any(Signed::is_negative) {
        return false;
    }
    seq.windows(2).enumerate().skip(1).all(|(j, pair)| {
        macaulay_bound(&pair[0], j as i64).is_ok_and(|b| pair[1] <= b)
    })
}
