//! Truncated symmetric functions in the monomial, complete and Schur bases.

use std::collections::BTreeMap;
use std::fmt;

use super::kostka::{h_to_schur, monomial_to_schur, schur_to_h, schur_to_monomial, Coeffs};
use super::partition::Partition;
use crate::algebra::{BetaScalar, Monomial, MultiPoly, Ring};
use crate::error::{Error, Result};

/// Number of retained variables and total degree cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TruncationCaps {
    pub n_vars: usize,
    pub max_degree: u32,
}

impl TruncationCaps {
    pub fn new(n_vars: usize, max_degree: u32) -> Self {
        assert!(n_vars >= 1, "at least one variable is required");
        TruncationCaps { n_vars, max_degree }
    }

    /// Whether the monomial basis is complete up to the degree cap, i.e.
    /// every partition of weight `≤ D` has at most `n` parts.
    pub fn is_injective(&self) -> bool {
        self.n_vars >= self.max_degree as usize
    }

    pub fn require_injective(&self) -> Result<()> {
        if self.is_injective() {
            Ok(())
        } else {
            Err(Error::CapsTooSmall(format!(
                "n_vars = {} is below max_degree = {}",
                self.n_vars, self.max_degree
            )))
        }
    }

    fn admits(&self, p: &Partition) -> bool {
        p.weight() <= self.max_degree
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Monomial,
    CompleteH,
    Schur,
}

/// The image of a symmetric function in `ℤ[β][x_1..x_n]`, truncated at total
/// x-degree `D`.
///
/// Monomial and Schur coefficients are canonical: partitions longer than `n`
/// are dropped since `m_λ` and `s_λ` vanish there. The complete basis keeps
/// an arbitrary representative, which is unique only when `n ≥ D`. Equality
/// compares the represented truncations, not the stored coefficients.
#[derive(Clone)]
pub struct SymmetricElement {
    basis: Basis,
    coeffs: Coeffs,
    caps: TruncationCaps,
}

impl SymmetricElement {
    pub fn zero(basis: Basis, caps: TruncationCaps) -> Self {
        SymmetricElement {
            basis,
            coeffs: Coeffs::new(),
            caps,
        }
    }

    pub fn one(caps: TruncationCaps) -> Self {
        Self::constant(BetaScalar::one(), caps)
    }

    pub fn constant(c: BetaScalar, caps: TruncationCaps) -> Self {
        Self::from_coeffs(Basis::CompleteH, [(Partition::empty(), c)], caps)
    }

    /// Builds an element, merging repeated partitions and applying the caps.
    pub fn from_coeffs<I: IntoIterator<Item = (Partition, BetaScalar)>>(
        basis: Basis,
        iter: I,
        caps: TruncationCaps,
    ) -> Self {
        let mut coeffs = Coeffs::new();
        for (p, c) in iter {
            if !caps.admits(&p) || (basis != Basis::CompleteH && p.len() > caps.n_vars) {
                continue;
            }
            let slot = coeffs.entry(p).or_default();
            *slot += &c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        SymmetricElement { basis, coeffs, caps }
    }

    pub fn basis_element(basis: Basis, p: Partition, caps: TruncationCaps) -> Self {
        Self::from_coeffs(basis, [(p, BetaScalar::one())], caps)
    }

    pub fn schur(p: Partition, caps: TruncationCaps) -> Self {
        Self::basis_element(Basis::Schur, p, caps)
    }

    pub fn monomial(p: Partition, caps: TruncationCaps) -> Self {
        Self::basis_element(Basis::Monomial, p, caps)
    }

    pub fn complete(p: Partition, caps: TruncationCaps) -> Self {
        Self::basis_element(Basis::CompleteH, p, caps)
    }

    /// `h_k`, zero for `k < 0`.
    pub fn h(k: i64, caps: TruncationCaps) -> Self {
        if k < 0 {
            return Self::zero(Basis::CompleteH, caps);
        }
        Self::complete(Partition::row(k as u32), caps)
    }

    /// `e_k = s_{(1^k)}` in the complete basis, zero for `k < 0`.
    pub fn e(k: i64, caps: TruncationCaps) -> Self {
        if k < 0 {
            return Self::zero(Basis::CompleteH, caps);
        }
        Self::schur(Partition::column(k as u32), caps).h_representative()
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn caps(&self) -> TruncationCaps {
        self.caps
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, BetaScalar> {
        &self.coeffs
    }

    pub fn coeff(&self, p: &Partition) -> BetaScalar {
        self.coeffs.get(p).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    fn with_coeffs(&self, basis: Basis, coeffs: Coeffs) -> Self {
        SymmetricElement {
            basis,
            coeffs,
            caps: self.caps,
        }
    }

    fn schur_coeffs(&self) -> Coeffs {
        let n = self.caps.n_vars;
        match self.basis {
            Basis::Schur => self.coeffs.clone(),
            Basis::Monomial => monomial_to_schur(&self.coeffs, n),
            Basis::CompleteH => h_to_schur(&self.coeffs, n),
        }
    }

    /// A complete-basis representative, without the injectivity check of
    /// [`Self::to_basis`]. Converting from the Schur or monomial basis gives
    /// a representative supported on lengths `≤ n`.
    pub fn h_representative(&self) -> Self {
        match self.basis {
            Basis::CompleteH => self.clone(),
            _ => self.with_coeffs(Basis::CompleteH, schur_to_h(&self.schur_coeffs())),
        }
    }

    /// Re-expresses the element. Producing the complete basis requires
    /// `n ≥ D` so that the result is unique.
    pub fn to_basis(&self, target: Basis) -> Result<Self> {
        if target == Basis::CompleteH && self.basis != Basis::CompleteH {
            self.caps.require_injective()?;
        }
        Ok(self.to_basis_unchecked(target))
    }

    fn to_basis_unchecked(&self, target: Basis) -> Self {
        if target == self.basis {
            return self.clone();
        }
        match target {
            Basis::Schur => self.with_coeffs(Basis::Schur, self.schur_coeffs()),
            Basis::Monomial => {
                let s = self.schur_coeffs();
                self.with_coeffs(Basis::Monomial, schur_to_monomial(&s, self.caps.n_vars))
            }
            Basis::CompleteH => self.h_representative(),
        }
    }

    /// Lowers the caps, dropping partitions that become too heavy or, in the
    /// canonical bases, too long.
    pub fn truncate(&self, caps: TruncationCaps) -> Result<Self> {
        if caps.n_vars > self.caps.n_vars || caps.max_degree > self.caps.max_degree {
            return Err(Error::IncompatibleCaps(format!(
                "cannot raise caps from {:?} to {:?}",
                self.caps, caps
            )));
        }
        Ok(Self::from_coeffs(self.basis, self.coeffs.clone(), caps))
    }

    /// Homogeneous component of x-degree `d`.
    pub fn homogeneous_component(&self, d: u32) -> Self {
        self.with_coeffs(
            self.basis,
            self.coeffs
                .iter()
                .filter(|(p, _)| p.weight() == d)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        )
    }

    pub fn map_coeffs<F: Fn(&BetaScalar) -> BetaScalar>(&self, f: F) -> Self {
        Self::from_coeffs(
            self.basis,
            self.coeffs.iter().map(|(p, c)| (p.clone(), f(c))),
            self.caps,
        )
    }

    pub fn at_beta_zero(&self) -> Self {
        self.map_coeffs(BetaScalar::at_beta_zero)
    }

    pub fn scale(&self, c: &BetaScalar) -> Self {
        self.map_coeffs(|x| x * c)
    }

    fn check_caps(&self, other: &Self) -> Result<()> {
        if self.caps != other.caps {
            return Err(Error::IncompatibleCaps(format!("{:?} vs {:?}", self.caps, other.caps)));
        }
        Ok(())
    }

    fn common_basis(&self, other: &Self) -> (Basis, Coeffs, Coeffs) {
        if self.basis == other.basis {
            (self.basis, self.coeffs.clone(), other.coeffs.clone())
        } else {
            (Basis::Schur, self.schur_coeffs(), other.schur_coeffs())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_caps(other)?;
        let (basis, a, b) = self.common_basis(other);
        Ok(Self::from_coeffs(basis, a.into_iter().chain(b), self.caps))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_caps(other)?;
        let (basis, a, b) = self.common_basis(other);
        Ok(Self::from_coeffs(
            basis,
            a.into_iter().chain(b.into_iter().map(|(p, c)| (p, -c))),
            self.caps,
        ))
    }

    /// Product, computed on complete-basis representatives where
    /// `h_λ h_μ = h_{λ ∪ μ}`. The result keeps the common basis of the
    /// factors, or the Schur basis if they differ.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_caps(other)?;
        let a = self.h_representative();
        let b = other.h_representative();
        let cap = self.caps.max_degree;
        let mut acc = Coeffs::new();
        for (p, c) in &a.coeffs {
            let w = p.weight();
            for (q, d) in &b.coeffs {
                if w + q.weight() > cap {
                    continue;
                }
                let slot = acc.entry(p.union(q)).or_default();
                *slot += &(c * d);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        let prod = self.with_coeffs(Basis::CompleteH, acc);
        let target = if self.basis == other.basis {
            self.basis
        } else {
            Basis::Schur
        };
        Ok(prod.to_basis_unchecked(target))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.caps).to_basis_unchecked(self.basis);
        for _ in 0..k {
            acc = acc.try_mul(self).expect("same caps");
        }
        acc
    }

    /// Expands into an explicit polynomial in `caps.n_vars` variables.
    pub fn to_polynomial(&self) -> MultiPoly {
        let n = self.caps.n_vars;
        let m = self.to_basis_unchecked(Basis::Monomial);
        let mut terms = Vec::new();
        for (p, c) in &m.coeffs {
            for e in distinct_permutations(&p.padded(n)) {
                terms.push((Monomial(e), c.clone()));
            }
        }
        MultiPoly::from_terms(n, terms)
    }

    /// Reads off monomial coefficients from a symmetric polynomial in
    /// `caps.n_vars` variables. Degrees above the cap are discarded.
    pub fn from_polynomial(p: &MultiPoly, caps: TruncationCaps) -> Result<Self> {
        if p.n_vars() != caps.n_vars {
            return Err(Error::IncompatibleCaps(format!(
                "polynomial has {} variables, caps expect {}",
                p.n_vars(),
                caps.n_vars
            )));
        }
        p.check_symmetric()?;
        let mut coeffs = Coeffs::new();
        for (m, c) in p.terms() {
            if m.degree() > caps.max_degree || m.0.windows(2).any(|w| w[0] < w[1]) {
                continue;
            }
            coeffs.insert(Partition::from_unsorted(m.0.clone()), c.clone());
        }
        Ok(SymmetricElement {
            basis: Basis::Monomial,
            coeffs,
            caps,
        })
    }

    /// Hall inner product with `⟨h_λ, m_μ⟩ = δ_{λμ}`.
    pub fn hall_pair(&self, other: &Self) -> Result<BetaScalar> {
        self.check_caps(other)?;
        self.caps.require_injective()?;
        let h = self.h_representative();
        let m = other.to_basis_unchecked(Basis::Monomial);
        let mut acc = BetaScalar::zero();
        for (p, c) in &h.coeffs {
            if let Some(d) = m.coeffs.get(p) {
                acc += &(c * d);
            }
        }
        Ok(acc)
    }

    /// Terms in canonical order: graded-lex descending on partitions.
    pub fn canonical_terms(&self) -> impl Iterator<Item = (&Partition, &BetaScalar)> {
        self.coeffs.iter().rev()
    }
}

fn distinct_permutations(v: &[u32]) -> Vec<Vec<u32>> {
    let mut sorted = v.to_vec();
    sorted.sort_unstable();
    let mut out = vec![sorted.clone()];
    // next lexicographic permutation
    while let Some(i) = (0..sorted.len().saturating_sub(1))
        .rev()
        .find(|&i| sorted[i] < sorted[i + 1])
    {
        let j = (i + 1..sorted.len()).rev().find(|&j| sorted[j] > sorted[i]).unwrap();
        sorted.swap(i, j);
        sorted[i + 1..].reverse();
        out.push(sorted.clone());
    }
    out
}

impl PartialEq for SymmetricElement {
    fn eq(&self, other: &Self) -> bool {
        if self.caps != other.caps {
            return false;
        }
        let canonical = self.basis != Basis::CompleteH || self.caps.is_injective();
        if self.basis == other.basis && canonical {
            return self.coeffs == other.coeffs;
        }
        self.schur_coeffs() == other.schur_coeffs()
    }
}

impl Ring for SymmetricElement {
    fn zero_like(&self) -> Self {
        Self::zero(self.basis, self.caps)
    }
    fn one_like(&self) -> Self {
        Self::one(self.caps).to_basis_unchecked(self.basis)
    }
    fn is_zero(&self) -> bool {
        SymmetricElement::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("ring operands must share caps")
    }
    fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("ring operands must share caps")
    }
    fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("ring operands must share caps")
    }
}

impl fmt::Debug for SymmetricElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?}[n={}, D={}] {}",
            self.basis, self.caps.n_vars, self.caps.max_degree, self
        )
    }
}

/// Text rendering such as `s(2,1) - b s(2,2)`; `m`, `h` or `s` names the basis.
impl fmt::Display for SymmetricElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let sym = match self.basis {
            Basis::Monomial => "m",
            Basis::CompleteH => "h",
            Basis::Schur => "s",
        };
        for (k, (p, c)) in self.canonical_terms().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{sym}({p})")?;
            } else {
                write!(f, "({c}) {sym}({p})")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::partition::part;

    #[test]
    fn permutations_are_distinct() {
        assert_eq!(distinct_permutations(&[1, 0, 0]).len(), 3);
        assert_eq!(distinct_permutations(&[2, 1, 0]).len(), 6);
        assert_eq!(distinct_permutations(&[1, 1]).len(), 1);
    }

    #[test]
    fn schur_polynomial_in_two_vars() {
        let caps = TruncationCaps::new(2, 4);
        let p = SymmetricElement::schur(part(&[2]), caps).to_polynomial();
        assert_eq!(p.to_string(), "x1^2 + x1 x2 + x2^2");
        assert!(SymmetricElement::schur(part(&[1, 1, 1]), caps).is_zero());
    }

    #[test]
    fn equality_is_semantic() {
        let caps = TruncationCaps::new(2, 3);
        // e_3 = h_111 - 2 h_21 + h_3 vanishes in two variables
        let e3 = SymmetricElement::from_coeffs(
            Basis::CompleteH,
            [
                (part(&[1, 1, 1]), BetaScalar::one()),
                (part(&[2, 1]), BetaScalar::from_int(-2)),
                (part(&[3]), BetaScalar::one()),
            ],
            caps,
        );
        assert!(!e3.is_zero());
        assert_eq!(e3, SymmetricElement::zero(Basis::Schur, caps));
    }
}
