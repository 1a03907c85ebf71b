//! Sparse multivariate polynomials over ℤ[β].

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;

use super::beta::BetaScalar;
use crate::error::{Error, Result};

/// Exponent vector, ordered graded-lexicographically: total degree first,
/// then lexicographic with `x1 > x2 > ...`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n_vars: usize) -> Self {
        Monomial(vec![0; n_vars])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `x1, ..., xn` with coefficients in ℤ[β].
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    n_vars: usize,
    terms: BTreeMap<Monomial, BetaScalar>,
}

impl MultiPoly {
    pub fn zero(n_vars: usize) -> Self {
        MultiPoly {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n_vars: usize) -> Self {
        Self::constant(n_vars, BetaScalar::one())
    }

    pub fn constant(n_vars: usize, c: BetaScalar) -> Self {
        Self::term(n_vars, Monomial::one(n_vars), c)
    }

    /// The variable `x_{i+1}` (zero-based index).
    pub fn var(n_vars: usize, i: usize) -> Self {
        assert!(i < n_vars, "variable index {i} out of range for {n_vars} variables");
        let mut e = vec![0; n_vars];
        e[i] = 1;
        Self::term(n_vars, Monomial(e), BetaScalar::one())
    }

    pub fn term(n_vars: usize, mono: Monomial, c: BetaScalar) -> Self {
        assert_eq!(mono.0.len(), n_vars);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        MultiPoly { n_vars, terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BetaScalar)>>(n_vars: usize, iter: I) -> Self {
        let mut acc: HashMap<Monomial, BetaScalar> = HashMap::new();
        for (m, c) in iter {
            assert_eq!(m.0.len(), n_vars);
            let slot = acc.entry(m).or_default();
            *slot += &c;
        }
        Self::from_map(n_vars, acc)
    }

    fn from_map(n_vars: usize, acc: HashMap<Monomial, BetaScalar>) -> Self {
        MultiPoly {
            n_vars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BetaScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> BetaScalar {
        self.terms.get(&Monomial(exps.to_vec())).cloned().unwrap_or_default()
    }

    /// Maximal total x-degree, `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BetaScalar)> {
        self.terms.iter().next_back()
    }

    /// Drops every term of total x-degree above `max_degree`.
    pub fn truncate(&self, max_degree: u32) -> Self {
        MultiPoly {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= max_degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn homogeneous_component(&self, degree: u32) -> Self {
        MultiPoly {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn map_coeffs<F: Fn(&BetaScalar) -> BetaScalar>(&self, f: F) -> Self {
        Self::from_terms(self.n_vars, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Specializes β to zero.
    pub fn at_beta_zero(&self) -> Self {
        self.map_coeffs(BetaScalar::at_beta_zero)
    }

    pub fn scale(&self, c: &BetaScalar) -> Self {
        self.map_coeffs(|x| x * c)
    }

    /// Product with every term above total degree `max_degree` discarded.
    pub fn mul_truncated(&self, other: &Self, max_degree: Option<u32>) -> Self {
        assert_eq!(self.n_vars, other.n_vars, "variable count mismatch");
        let mut acc: HashMap<Monomial, BetaScalar> = HashMap::new();
        for (m1, c1) in &self.terms {
            let d1 = m1.degree();
            for (m2, c2) in &other.terms {
                if let Some(cap) = max_degree {
                    if d1 + m2.degree() > cap {
                        continue;
                    }
                }
                let slot = acc.entry(m1.mul(m2)).or_default();
                *slot += &(c1 * c2);
            }
        }
        Self::from_map(self.n_vars, acc)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.n_vars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exchanges the variables with zero-based indices `i` and `j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        MultiPoly {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.swap(i, j);
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// Checks invariance under every adjacent transposition, which generate
    /// the symmetric group. Returns the first offending pair on failure.
    pub fn check_symmetric(&self) -> Result<()> {
        for i in 0..self.n_vars.saturating_sub(1) {
            if self.swap_vars(i, i + 1) != *self {
                return Err(Error::NotSymmetric(i + 1, i + 2));
            }
        }
        Ok(())
    }

    /// Appends `extra` variables that do not occur.
    pub fn extend_vars(&self, extra: usize) -> Self {
        MultiPoly {
            n_vars: self.n_vars + extra,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.resize(self.n_vars + extra, 0);
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// Sets every variable with index `>= keep` to zero and drops them.
    pub fn restrict_vars(&self, keep: usize) -> Self {
        assert!(keep <= self.n_vars);
        MultiPoly {
            n_vars: keep,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.0[keep..].iter().all(|&e| e == 0))
                .map(|(m, c)| (Monomial(m.0[..keep].to_vec()), c.clone()))
                .collect(),
        }
    }

    fn add_scaled_shifted(&mut self, other: &MultiPoly, c: &BetaScalar, shift: &Monomial, negate: bool) {
        for (m, oc) in &other.terms {
            let key = m.mul(shift);
            let delta = c * oc;
            let entry = self.terms.entry(key);
            match entry {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(if negate { -delta } else { delta });
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    let updated = if negate { o.get() - &delta } else { o.get() + &delta };
                    if updated.is_zero() {
                        o.remove();
                    } else {
                        *o.get_mut() = updated;
                    }
                }
            }
        }
    }
}

/// Exact quotient `num / den` by multivariate long division in graded-lex
/// order. Fails with [`Error::NotExact`] if any remainder is left.
pub fn exact_divide(num: &MultiPoly, den: &MultiPoly) -> Result<MultiPoly> {
    assert_eq!(num.n_vars, den.n_vars, "variable count mismatch");
    let (lead_mono, lead_coeff) = den
        .leading_term()
        .map(|(m, c)| (m.clone(), c.clone()))
        .ok_or_else(|| Error::NotExact("division by the zero polynomial".into()))?;
    let mut rem = num.clone();
    let mut quot = MultiPoly::zero(num.n_vars);
    while let Some((m, c)) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
        if !lead_mono.divides(&m) {
            return Err(Error::NotExact(format!(
                "leading monomial {:?} not divisible by {:?}",
                m.0, lead_mono.0
            )));
        }
        let qc = c.div_exact(&lead_coeff)?;
        let qm = m.div(&lead_mono);
        rem.add_scaled_shifted(den, &qc, &qm, true);
        quot.terms.insert(qm, qc);
    }
    Ok(quot)
}

/// `∏_{1 ≤ i < j ≤ n} (x_i - x_j)`.
pub fn vandermonde(n: usize) -> MultiPoly {
    assert!(n >= 1, "vandermonde needs at least one variable");
    let mut acc = MultiPoly::one(n);
    for i in 0..n {
        for j in i + 1..n {
            acc = &acc * &(&MultiPoly::var(n, i) - &MultiPoly::var(n, j));
        }
    }
    acc
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Text rendering: terms by ascending total degree, lex-descending within a
/// degree, `b` for β. Example: `x1 + x2 + b x1 x2`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| a.degree().cmp(&b.degree()).then_with(|| b.0.cmp(&a.0)));
        for (k, (m, c)) in ordered.into_iter().enumerate() {
            let mono: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        if e == 1 {
                            format!("x{}", i + 1)
                        } else {
                            format!("x{}^{}", i + 1, e)
                        }
                    })
                    .collect();
            let single = c.num_terms() == 1;
            let (neg, body) = if single {
                let (e, v) = c.terms().next().unwrap();
                let abs = BetaScalar::monomial(v.abs(), e);
                (v.is_negative(), abs)
            } else {
                (false, c.clone())
            };
            let coeff_txt = if single {
                let txt = body.to_string();
                if body.is_one() && !mono.is_empty() {
                    String::new()
                } else {
                    txt
                }
            } else {
                format!("({body})")
            };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mut parts = Vec::new();
            if !coeff_txt.is_empty() {
                parts.push(coeff_txt);
            }
            parts.extend(mono);
            write!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.n_vars, rhs.n_vars, "variable count mismatch");
        let mut out = self.clone();
        out.add_scaled_shifted(rhs, &BetaScalar::one(), &Monomial::one(self.n_vars), false);
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.n_vars, rhs.n_vars, "variable count mismatch");
        let mut out = self.clone();
        out.add_scaled_shifted(rhs, &BetaScalar::one(), &Monomial::one(self.n_vars), true);
        out
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.mul_truncated(rhs, None)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

/// Convenience constructor from integer coefficients `(exponents, c)`.
pub fn poly_from_ints(n_vars: usize, terms: &[(&[u32], i64)]) -> MultiPoly {
    MultiPoly::from_terms(
        n_vars,
        terms
            .iter()
            .map(|(e, c)| (Monomial(e.to_vec()), BetaScalar::from_bigint(BigInt::from(*c)))),
    )
}

/// `∏_{i ≤ n} (1 + β x_i)^k` for `k ≥ 0`.
pub fn beta_shift_product(n_vars: usize, k: u32) -> MultiPoly {
    let mut acc = MultiPoly::one(n_vars);
    for i in 0..n_vars {
        let factor = &MultiPoly::one(n_vars) + &MultiPoly::var(n_vars, i).scale(&BetaScalar::beta_pow(1));
        acc = &acc * &factor.pow(k);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    #[test]
    fn vandermonde_small() {
        assert_eq!(vandermonde(1), MultiPoly::one(1));
        assert_eq!(vandermonde(2), &x(2, 0) - &x(2, 1));
        // direct product oracle
        let n = 3;
        let direct = &(&(&x(n, 0) - &x(n, 1)) * &(&x(n, 0) - &x(n, 2))) * &(&x(n, 1) - &x(n, 2));
        assert_eq!(vandermonde(3), direct);
        assert_eq!(vandermonde(3).num_terms(), 6);
    }

    #[test]
    fn exact_divide_examples() {
        let n = 2;
        let num = &(&x(n, 0) * &x(n, 0)) - &(&x(n, 1) * &x(n, 1));
        let den = &x(n, 0) - &x(n, 1);
        assert_eq!(exact_divide(&num, &den).unwrap(), &x(n, 0) + &x(n, 1));

        let n = 3;
        let q = exact_divide(&vandermonde(3), &(&x(n, 1) - &x(n, 2))).unwrap();
        let expected = &(&x(n, 0) - &x(n, 1)) * &(&x(n, 0) - &x(n, 2));
        assert_eq!(q, expected);
        assert_eq!(&q * &(&x(n, 1) - &x(n, 2)), vandermonde(3));

        let n = 2;
        let err = exact_divide(&(&x(n, 0) + &x(n, 1)), &(&x(n, 0) * &x(n, 1)));
        assert!(matches!(err, Err(Error::NotExact(_))));
    }

    #[test]
    fn display_matches_cli_format() {
        let n = 2;
        let p = &(&x(n, 0) + &x(n, 1)) + &(&x(n, 0) * &x(n, 1)).scale(&BetaScalar::beta_pow(1));
        assert_eq!(p.to_string(), "x1 + x2 + b x1 x2");
        let q = &MultiPoly::one(n) - &x(n, 1).scale(&BetaScalar::from_int(3));
        assert_eq!(q.to_string(), "1 - 3 x2");
    }

    #[test]
    fn symmetry_check() {
        let p = &x(3, 0) + &x(3, 1);
        assert_eq!(p.check_symmetric(), Err(Error::NotSymmetric(2, 3)));
        assert!(beta_shift_product(3, 2).check_symmetric().is_ok());
    }
}
