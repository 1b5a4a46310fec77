//! Buchberger's algorithm over GF(2) for the fixed weighted graded revlex order.

use std::collections::BTreeSet;

use super::monomial::Monomial;
use super::polynomial::Gf2Polynomial;

/// Work caps for a Gröbner basis computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroebnerLimits {
    /// Maximum number of pending S-pairs at any time.
    pub max_pairs: usize,
    /// Maximum number of terms summed over all basis elements.
    pub max_terms: usize,
}

impl GroebnerLimits {
    /// Same cap for both the pair queue and the term count.
    pub fn uniform(limit: usize) -> Self {
        GroebnerLimits {
            max_pairs: limit,
            max_terms: limit,
        }
    }
}

impl Default for GroebnerLimits {
    /// Admits every `G_k(R^n)` with `k <= 4`, `n <= 12`.
    fn default() -> Self {
        GroebnerLimits {
            max_pairs: 20_000,
            max_terms: 50_000,
        }
    }
}

/// A basis element split into leading monomial and tail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BasisElement {
    pub lead: Monomial,
    pub tail: Gf2Polynomial,
}

impl BasisElement {
    pub fn new(mut p: Gf2Polynomial) -> Option<Self> {
        let lead = p.pop_leading()?;
        Some(BasisElement { lead, tail: p })
    }

    pub fn to_polynomial(&self) -> Gf2Polynomial {
        let mut p = self.tail.clone();
        p.toggle(self.lead.clone());
        p
    }

    fn len(&self) -> usize {
        self.tail.len() + 1
    }
}

/// Full reduction of `p` modulo `basis`: the result has no term divisible by
/// any leading monomial of the basis.
pub(crate) fn reduce(basis: &[BasisElement], p: &Gf2Polynomial) -> Gf2Polynomial {
    let mut work = p.clone();
    let mut remainder = Gf2Polynomial::zero();
    while let Some(lead) = work.pop_leading() {
        match basis.iter().find(|g| g.lead.divides(&lead)) {
            Some(g) => {
                let factor = g
                    .lead
                    .quotient_of(&lead)
                    .expect("divisibility checked above");
                work.add_scaled(&factor, &g.tail);
            }
            None => remainder.toggle(lead),
        }
    }
    remainder
}

pub(crate) fn s_polynomial(a: &BasisElement, b: &BasisElement) -> Gf2Polynomial {
    let lcm = a.lead.lcm(&b.lead);
    let fa = a.lead.quotient_of(&lcm).expect("lcm is a multiple");
    let fb = b.lead.quotient_of(&lcm).expect("lcm is a multiple");
    // the lcm terms cancel, leaving only the scaled tails
    let mut s = a.tail.mul_monomial(&fa);
    s.add_scaled(&fb, &b.tail);
    s
}

/// Why a computation stopped early.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum LimitHit {
    Pairs(usize),
    Terms(usize),
}

/// Computes the reduced Gröbner basis of the ideal generated by `generators`,
/// sorted by increasing leading monomial.
pub(crate) fn reduced_groebner_basis(
    generators: &[Gf2Polynomial],
    limits: GroebnerLimits,
) -> Result<Vec<BasisElement>, LimitHit> {
    let mut basis: Vec<BasisElement> = Vec::new();
    // pending pairs ordered by (lcm, i, j) so lower degrees are processed first
    let mut queue: BTreeSet<(Monomial, usize, usize)> = BTreeSet::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut total_terms = 0usize;

    let push = |basis: &mut Vec<BasisElement>,
                    queue: &mut BTreeSet<(Monomial, usize, usize)>,
                    pending: &mut BTreeSet<(usize, usize)>,
                    total_terms: &mut usize,
                    element: BasisElement|
     -> Result<(), LimitHit> {
        let j = basis.len();
        for (i, g) in basis.iter().enumerate() {
            queue.insert((g.lead.lcm(&element.lead), i, j));
            pending.insert((i, j));
        }
        *total_terms += element.len();
        basis.push(element);
        if queue.len() > limits.max_pairs {
            return Err(LimitHit::Pairs(queue.len()));
        }
        if *total_terms > limits.max_terms {
            return Err(LimitHit::Terms(*total_terms));
        }
        Ok(())
    };

    for g in generators {
        let r = reduce(&basis, g);
        if let Some(element) = BasisElement::new(r) {
            push(&mut basis, &mut queue, &mut pending, &mut total_terms, element)?;
        }
    }

    while let Some((lcm, i, j)) = queue.pop_first() {
        pending.remove(&(i, j));
        if basis[i].lead.is_coprime(&basis[j].lead) {
            continue;
        }
        let chain = (0..basis.len()).any(|l| {
            l != i
                && l != j
                && basis[l].lead.divides(&lcm)
                && !pending.contains(&(i.min(l), i.max(l)))
                && !pending.contains(&(j.min(l), j.max(l)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let r = reduce(&basis, &s);
        if let Some(element) = BasisElement::new(r) {
            push(&mut basis, &mut queue, &mut pending, &mut total_terms, element)?;
        }
    }

    Ok(interreduce(basis))
}

/// Turns any Gröbner basis into the reduced one.
pub(crate) fn interreduce(basis: Vec<BasisElement>) -> Vec<BasisElement> {
    let mut minimal: Vec<BasisElement> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            j != i && h.lead.divides(&g.lead) && (h.lead != g.lead || j < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    minimal.sort_by(|a, b| a.lead.cmp(&b.lead));
    let reduced: Vec<BasisElement> = minimal
        .iter()
        .map(|g| BasisElement {
            lead: g.lead.clone(),
            tail: reduce(&minimal, &g.tail),
        })
        .collect();
    reduced
}

/// Checks that `basis` is a reduced Gröbner basis: distinct leading
/// monomials, no term of one element divisible by another's leading monomial,
/// and every S-polynomial reducing to zero.
pub(crate) fn is_reduced_groebner_basis(basis: &[BasisElement]) -> bool {
    for (i, g) in basis.iter().enumerate() {
        for (j, h) in basis.iter().enumerate() {
            if i == j {
                continue;
            }
            if h.lead.divides(&g.lead) || g.tail.terms().any(|t| h.lead.divides(t)) {
                return false;
            }
        }
        if g.tail.terms().any(|t| g.lead.divides(t)) {
            return false;
        }
    }
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if basis[i].lead.is_coprime(&basis[j].lead) {
                continue;
            }
            if !reduce(basis, &s_polynomial(&basis[i], &basis[j])).is_zero() {
                return false;
            }
        }
    }
    true
}
