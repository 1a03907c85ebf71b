//! Finite combinations of partitions with ℤ[β] coefficients.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::BetaScalar;
use crate::symfunc::Partition;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct PartitionCombo {
    terms: BTreeMap<Partition, BetaScalar>,
}

impl PartitionCombo {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(p: Partition) -> Self {
        Self::term(p, BetaScalar::one())
    }

    pub fn term(p: Partition, c: BetaScalar) -> Self {
        let mut out = Self::zero();
        out.add_term(p, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, BetaScalar)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (p, c) in iter {
            out.add_term(p, c);
        }
        out
    }

    pub fn add_term(&mut self, p: Partition, c: BetaScalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(p.clone()).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&BetaScalar::from_int(-1)))
    }

    pub fn scale(&self, c: &BetaScalar) -> Self {
        Self::from_terms(self.terms.iter().map(|(p, v)| (p.clone(), v * c)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, p: &Partition) -> BetaScalar {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BetaScalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order: graded-lex descending.
    pub fn canonical_terms(&self) -> impl Iterator<Item = (&Partition, &BetaScalar)> {
        self.terms.iter().rev()
    }

    pub fn at_beta_zero(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(p, v)| (p.clone(), v.at_beta_zero())))
    }

    /// Applies a linear map given on basis partitions.
    pub fn map_linear<F: FnMut(&Partition) -> PartitionCombo>(&self, mut f: F) -> Self {
        let mut out = Self::zero();
        for (p, c) in &self.terms {
            for (q, d) in f(p).terms {
                out.add_term(q, c * &d);
            }
        }
        out
    }
}

impl fmt::Debug for PartitionCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let txt: Vec<String> = self.canonical_terms().map(|(p, c)| format!("({c}) {p:?}")).collect();
        write!(f, "{}", txt.join(" + "))
    }
}
