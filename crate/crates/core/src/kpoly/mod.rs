//! Grothendieck polynomials `G_λ` and their duals `g_λ`, by every available
//! route.
//!
//! The one-row functions `G_k` for `k ≤ 0` are taken from the generating
//! function `Σ_k G_k z^k = (1 + β/z)^{-1} ∏ (1 + βx_i)/(1 - x_i z)`, whose
//! non-positive coefficients telescope to `G_k = (-β)^{-k}`.

use std::collections::HashMap;

use crate::algebra::{det_by_minors, exact_divide, integer_binomial, BetaScalar, Monomial, MultiPoly, RingMatrix};
use crate::error::{Error, Result};
use crate::fermion::{beta_shift_power, vacuum_expectation, OperatorAtom, OperatorWord};
use crate::symfunc::{Basis, Partition, SymmetricElement, TruncationCaps};

fn rank_check(lam: &Partition, r: usize) -> Result<()> {
    if r < lam.len() {
        return Err(Error::RankBound(format!("r = {r} is below the length of {lam:?}")));
    }
    Ok(())
}

/// `x^e (1 + βx)^p` in variable `var`, keeping degrees `≤ cap`.
fn entry_poly(n: usize, var: usize, e: u32, p: u32, cap: i64) -> MultiPoly {
    let terms = (0..=p).filter(|k| (e + k) as i64 <= cap).map(|k| {
        let mut exps = vec![0; n];
        exps[var] = e + k;
        (Monomial(exps), BetaScalar::monomial(integer_binomial(p as i64, k), k))
    });
    MultiPoly::from_terms(n, terms)
}

/// `G_λ(x_1..x_n)` as the ratio of `det(x_i^{λ_j+n-j}(1+βx_i)^{j-1})` and
/// the Vandermonde determinant, kept up to total degree `max_degree`.
///
/// Since the Vandermonde is homogeneous of degree `v = n(n-1)/2`, the
/// quotient up to degree `D` is the numerator up to degree `D + v` divided
/// by it, and only that part of the numerator is expanded.
pub fn bialternant_truncated(lam: &Partition, n: usize, max_degree: u32) -> Result<MultiPoly> {
    if lam.len() > n {
        return Err(Error::RankBound(format!("{lam:?} has more than {n} parts")));
    }
    let v = (n * (n - 1) / 2) as i64;
    let cap = max_degree as i64 + v;
    let exps: Vec<u32> = (0..n).map(|c| lam.part(c) + (n - 1 - c) as u32).collect();

    // row-by-row expansion over the set of used columns
    let mut layer: HashMap<usize, MultiPoly> = HashMap::from([(0usize, MultiPoly::one(n))]);
    for row in 0..n {
        let mut next: HashMap<usize, MultiPoly> = HashMap::new();
        for (mask, acc) in &layer {
            for c in 0..n {
                if mask & (1 << c) != 0 {
                    continue;
                }
                let new_mask = mask | (1 << c);
                let rest: i64 = (0..n)
                    .filter(|k| new_mask & (1 << k) == 0)
                    .map(|k| exps[k] as i64)
                    .sum();
                let room = cap - rest;
                if room < 0 {
                    continue;
                }
                let entry = entry_poly(n, row, exps[c], c as u32, room);
                let mut term = acc.mul_truncated(&entry, Some(room as u32));
                if (mask >> c).count_ones() % 2 == 1 {
                    term = -&term;
                }
                let slot = next.entry(new_mask).or_insert_with(|| MultiPoly::zero(n));
                *slot = &*slot + &term;
            }
        }
        layer = next;
    }
    let mut q = layer.remove(&((1usize << n) - 1)).unwrap_or_else(|| MultiPoly::zero(n));
    for a in 0..n {
        for b in a + 1..n {
            let lin = &MultiPoly::var(n, a) - &MultiPoly::var(n, b);
            q = exact_divide(&q, &lin)?;
        }
    }
    Ok(q.truncate(max_degree))
}

/// The full polynomial `G_λ(x_1..x_n)`.
pub fn bialternant(lam: &Partition, n: usize) -> Result<MultiPoly> {
    let top = lam.weight() + (n * (n - 1) / 2) as u32;
    bialternant_truncated(lam, n, top)
}

/// Number of rows used by default for determinants that restrict to
/// `G_λ(x_1..x_n)`: beyond `min(n, D)` rows nothing visible changes.
pub fn default_rows(lam: &Partition, caps: TruncationCaps) -> usize {
    lam.len().max(caps.n_vars.min(caps.max_degree as usize))
}

/// The r×r determinant `det(Σ_m binom(i-1, m) β^m h_{λ_i-i+j+m})`, in the
/// complete basis. Restricts to `G_λ(x_1..x_n)` for `ℓ(λ) ≤ n ≤ r`.
pub fn jacobi_trudi(lam: &Partition, r: usize, caps: TruncationCaps) -> Result<SymmetricElement> {
    rank_check(lam, r)?;
    let d = caps.max_degree as i64;
    let m = RingMatrix::from_fn(r, r, |i, j| {
        let base = lam.part(i) as i64 - i as i64 + j as i64;
        let terms = (0..=i as u32).filter_map(|k| {
            let idx = base + k as i64;
            (idx >= 0 && idx <= d).then(|| {
                (
                    Partition::row(idx as u32),
                    BetaScalar::monomial(integer_binomial(i as i64, k), k),
                )
            })
        });
        SymmetricElement::from_coeffs(Basis::CompleteH, terms, caps)
    });
    det_by_minors(&m, &SymmetricElement::one(caps))
}

/// `⟨0| e^{H(x)} ψ_{λ_1-1} e^Θ ... ψ_{λ_ℓ-ℓ} e^Θ |−ℓ⟩`, in the Schur basis.
pub fn fermionic(lam: &Partition, caps: TruncationCaps) -> Result<SymmetricElement> {
    let n: Vec<i64> = lam.parts().iter().map(|&p| p as i64).collect();
    let word = OperatorWord::interleaved(&n, lam.len(), Some(OperatorAtom::ExpTheta(1)));
    vacuum_expectation(&word, -(lam.len() as i64), caps)
}

fn g_r_word(lam: &Partition, r: usize) -> OperatorWord {
    let n: Vec<i64> = lam.parts().iter().map(|&p| p as i64).collect();
    let mut word = OperatorWord::interleaved(&n, r, Some(OperatorAtom::ExpTheta(1)));
    word.0.push(OperatorAtom::ExpTheta(-(r as i64)));
    word
}

/// The operator-word route alone, in the Schur basis.
pub fn g_r_fermionic(lam: &Partition, r: usize, caps: TruncationCaps) -> Result<SymmetricElement> {
    rank_check(lam, r)?;
    vacuum_expectation(&g_r_word(lam, r), -(r as i64), caps)
}

/// `G^r_λ = ⟨0| e^{H(x)} ψ_{λ_1-1}e^Θ ... ψ_{λ_r-r}e^Θ · e^{-rΘ} |−r⟩`.
/// Computed from the operator word and from the r×r determinant; the
/// routes must agree.
pub fn g_r(lam: &Partition, r: usize, caps: TruncationCaps) -> Result<SymmetricElement> {
    let fermionic = g_r_fermionic(lam, r, caps)?;
    let det = jacobi_trudi(lam, r, caps)?;
    if fermionic != det {
        return Err(Error::RouteMismatch(format!(
            "G^{r} of {lam:?}: word and determinant differ"
        )));
    }
    Ok(fermionic)
}

/// The one-row function `G_k`. For `k ≥ 1` this is
/// `∏(1+βx_i) Σ_m (-β)^m h_{k+m}`; for `k ≤ 0` it is `(-β)^{-k}`.
pub fn one_row(k: i64, caps: TruncationCaps) -> SymmetricElement {
    if k <= 0 {
        return SymmetricElement::constant(BetaScalar::neg_beta_pow((-k) as u32), caps).to_basis_schur();
    }
    one_row_series(k, caps)
}

/// Coefficient of `z^k` read directly off the generating function, valid for
/// every integer `k`.
pub fn one_row_series(k: i64, caps: TruncationCaps) -> SymmetricElement {
    let d = caps.max_degree as i64;
    let start = (-k).max(0);
    let tail = SymmetricElement::from_coeffs(
        Basis::CompleteH,
        (start..=d - k).map(|m| (Partition::row((k + m) as u32), BetaScalar::neg_beta_pow(m as u32))),
        caps,
    )
    .to_basis_schur();
    tail.try_mul(&beta_shift_power(1, caps)).expect("same caps")
}

/// `det(Σ_m binom(i-r, m) β^m G_{λ_i-i+j+m})` over one-row functions.
pub fn another_determinant(lam: &Partition, r: usize, caps: TruncationCaps) -> Result<SymmetricElement> {
    rank_check(lam, r)?;
    let d = caps.max_degree as i64;
    let mut cache: HashMap<i64, SymmetricElement> = HashMap::new();
    let mut row_fn = |k: i64| cache.entry(k).or_insert_with(|| one_row(k, caps)).clone();
    let mut entries = Vec::with_capacity(r * r);
    for i in 0..r {
        for j in 0..r {
            let base = lam.part(i) as i64 - i as i64 + j as i64;
            let top = i as i64 + 1 - r as i64;
            let mut acc = SymmetricElement::zero(Basis::Schur, caps);
            // G_k with k > D has no terms of degree ≤ D
            for m in 0..=(d - base).max(-1) {
                if top >= 0 && m > top {
                    break;
                }
                let c = integer_binomial(top, m as u32);
                if c != 0.into() {
                    let g = row_fn(base + m);
                    acc = acc.try_add(&g.scale(&BetaScalar::monomial(c, m as u32)))?;
                }
            }
            entries.push(acc);
        }
    }
    let mat = RingMatrix::new(r, r, entries)?;
    det_by_minors(&mat, &SymmetricElement::one(caps).to_basis_schur())
}

/// `g_λ = det(Σ_m binom(1-i, m) β^m h_{λ_i-i+j-m})`, in the complete basis.
pub fn dual_determinant(lam: &Partition, r: usize, caps: TruncationCaps) -> Result<SymmetricElement> {
    rank_check(lam, r)?;
    let m = RingMatrix::from_fn(r, r, |i, j| {
        let base = lam.part(i) as i64 - i as i64 + j as i64;
        let top = -(i as i64);
        let terms = (0..=base.max(-1)).map(|k| {
            (
                Partition::row((base - k) as u32),
                BetaScalar::monomial(integer_binomial(top, k as u32), k as u32),
            )
        });
        SymmetricElement::from_coeffs(Basis::CompleteH, terms, caps)
    });
    det_by_minors(&m, &SymmetricElement::one(caps))
}

/// `g_λ = ⟨0| e^{H(x)} ψ_{λ_1-1}e^{-θ} ... ψ_{λ_r-r}e^{-θ} |−r⟩`, checked to
/// be unchanged when one more row is used.
pub fn dual_fermionic(lam: &Partition, r: usize, caps: TruncationCaps) -> Result<SymmetricElement> {
    rank_check(lam, r)?;
    let eval = |rows: usize| {
        let n: Vec<i64> = lam.parts().iter().map(|&p| p as i64).collect();
        let word = OperatorWord::interleaved(&n, rows, Some(OperatorAtom::ExpThetaLower(-1)));
        vacuum_expectation(&word, -(rows as i64), caps)
    };
    let a = eval(r)?;
    let b = eval(r + 1)?;
    if a != b {
        return Err(Error::RouteMismatch(format!(
            "g of {lam:?}: {r} and {} rows differ",
            r + 1
        )));
    }
    Ok(a)
}

/// `⟨G_λ, g_μ⟩`, expected to be `δ_{λμ}`. Needs `D ≥ max(|λ|, |μ|)` and
/// `n ≥ D`.
pub fn duality_check(lam: &Partition, mu: &Partition, caps: TruncationCaps) -> Result<BetaScalar> {
    let need = lam.weight().max(mu.weight());
    if caps.max_degree < need {
        return Err(Error::CapsTooSmall(format!(
            "max_degree = {} is below {need}",
            caps.max_degree
        )));
    }
    caps.require_injective()?;
    let big = jacobi_trudi(lam, default_rows(lam, caps), caps)?;
    let small = dual_determinant(mu, mu.len(), caps)?;
    big.hall_pair(&small)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Bialternant,
    JacobiTrudi,
    Fermionic,
    AnotherDeterminant,
    Gr(usize),
}

/// A request for `G_λ` by one route.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrothendieckSpec {
    pub shape: Partition,
    pub method: Method,
    pub caps: TruncationCaps,
}

impl GrothendieckSpec {
    pub fn new(shape: Partition, method: Method, caps: TruncationCaps) -> Self {
        GrothendieckSpec { shape, method, caps }
    }

    pub fn compute(&self) -> Result<SymmetricElement> {
        let lam = &self.shape;
        let caps = self.caps;
        match self.method {
            Method::Bialternant => {
                let p = bialternant_truncated(lam, caps.n_vars, caps.max_degree)?;
                SymmetricElement::from_polynomial(&p, caps)
            }
            Method::JacobiTrudi => jacobi_trudi(lam, default_rows(lam, caps), caps),
            Method::Fermionic => fermionic(lam, caps),
            Method::AnotherDeterminant => another_determinant(lam, lam.len(), caps),
            Method::Gr(r) => g_r(lam, r, caps),
        }
    }
}

trait SchurExt {
    fn to_basis_schur(&self) -> SymmetricElement;
}

impl SchurExt for SymmetricElement {
    fn to_basis_schur(&self) -> SymmetricElement {
        self.to_basis(Basis::Schur)
            .expect("the Schur basis is always reachable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly_from_ints;
    use crate::symfunc::part;

    #[test]
    fn bialternant_small() {
        assert_eq!(bialternant(&Partition::empty(), 2).unwrap(), MultiPoly::one(2));
        let g1 = bialternant(&part(&[1]), 2).unwrap();
        assert_eq!(g1.to_string(), "x1 + x2 + b x1 x2");
        assert_eq!(g1.at_beta_zero(), poly_from_ints(2, &[(&[1, 0], 1), (&[0, 1], 1)]));
        assert!(bialternant(&part(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn one_row_values() {
        let caps = TruncationCaps::new(3, 4);
        assert_eq!(one_row(0, caps), SymmetricElement::one(caps));
        assert_eq!(
            one_row(-2, caps),
            SymmetricElement::constant(BetaScalar::beta_pow(2), caps)
        );
        for k in -3..=4 {
            assert_eq!(one_row(k, caps), one_row_series(k, caps), "k = {k}");
        }
        assert_eq!(one_row(1, caps).at_beta_zero(), SymmetricElement::h(1, caps));
    }
}
