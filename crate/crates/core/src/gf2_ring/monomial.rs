use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

type Exponents = SmallVec<[u32; 4]>;

/// A monomial `w_1^{e_1} ... w_k^{e_k}` with `deg w_i = i`.
///
/// Exponents are stored densely by variable index with trailing zeros trimmed,
/// so two monomials are equal exactly when their exponent maps agree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Exponents,
    degree: u64,
}

impl Monomial {
    /// The unit monomial `1`.
    pub fn one() -> Self {
        Self::default()
    }

    /// Builds `w_1^{exps[0]} w_2^{exps[1]} ...`.
    pub fn from_exponents(exps: &[u32]) -> Self {
        let mut m = Monomial {
            exps: exps.iter().copied().collect(),
            degree: 0,
        };
        m.normalize();
        m
    }

    /// `w_index^power`, with `index` starting at 1.
    pub fn var_pow(index: usize, power: u32) -> Self {
        assert!(index >= 1, "variables are indexed from 1");
        let mut exps = Exponents::from_elem(0, index);
        exps[index - 1] = power;
        let mut m = Monomial { exps, degree: 0 };
        m.normalize();
        m
    }

    fn normalize(&mut self) {
        while self.exps.last() == Some(&0) {
            self.exps.pop();
        }
        self.degree = self
            .exps
            .iter()
            .enumerate()
            .map(|(i, &e)| (i as u64 + 1) * e as u64)
            .sum();
    }

    /// Exponent of `w_index` (1-based); zero when absent.
    pub fn exponent(&self, index: usize) -> u32 {
        index
            .checked_sub(1)
            .and_then(|i| self.exps.get(i).copied())
            .unwrap_or(0)
    }

    /// Dense exponents `e_1, e_2, ...` up to the last variable present.
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Cohomological degree `sum i * e_i`.
    pub fn weighted_degree(&self) -> u64 {
        self.degree
    }

    /// Largest variable index with a nonzero exponent (0 for the unit).
    pub fn max_variable(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Nonzero `(index, exponent)` pairs in increasing index order.
    pub fn support(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i + 1, e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let len = self.exps.len().max(other.exps.len());
        let exps: Exponents = (0..len)
            .map(|i| self.exps.get(i).unwrap_or(&0) + other.exps.get(i).unwrap_or(&0))
            .collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() <= other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut q = Monomial {
            exps: other
                .exps
                .iter()
                .enumerate()
                .map(|(i, &e)| e - self.exps.get(i).unwrap_or(&0))
                .collect(),
            degree: other.degree - self.degree,
        };
        while q.exps.last() == Some(&0) {
            q.exps.pop();
        }
        Some(q)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let len = self.exps.len().max(other.exps.len());
        let exps: Exponents = (0..len)
            .map(|i| *self.exps.get(i).unwrap_or(&0).max(other.exps.get(i).unwrap_or(&0)))
            .collect();
        let mut m = Monomial { exps, degree: 0 };
        m.normalize();
        m
    }

    /// True when the two monomials share no variable.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }
}

/// Weighted degree first, then reverse lexicographic with `w_1` the largest
/// variable: among equal degrees, the monomial with the smaller exponent in the
/// highest-index variable where they differ is the larger one.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            let len = self.exps.len().max(other.exps.len());
            for i in (0..len).rev() {
                let a = self.exps.get(i).unwrap_or(&0);
                let b = other.exps.get(i).unwrap_or(&0);
                match a.cmp(b) {
                    Ordering::Equal => continue,
                    ord => return ord.reverse(),
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, e) in self.support() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "w{i}")?;
            } else {
                write!(f, "w{i}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
