//! Polynomials in the deformation parameter β with big-integer coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An element of ℤ[β].
///
/// Stored sparsely as `(exponent, coefficient)` pairs sorted by ascending
/// exponent. Zero coefficients are never stored, so the zero element has no
/// terms and [`BetaScalar::degree`] returns `None` for it.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BetaScalar {
    terms: Vec<(u32, BigInt)>,
}

impl BetaScalar {
    pub fn zero() -> Self {
        BetaScalar { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::monomial(BigInt::from(c), 0)
    }

    pub fn from_bigint(c: BigInt) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · β^exp`.
    pub fn monomial(c: BigInt, exp: u32) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            BetaScalar { terms: vec![(exp, c)] }
        }
    }

    /// `β^exp`.
    pub fn beta_pow(exp: u32) -> Self {
        Self::monomial(BigInt::one(), exp)
    }

    /// `(-β)^exp`.
    pub fn neg_beta_pow(exp: u32) -> Self {
        let c = if exp.is_multiple_of(2) { 1 } else { -1 };
        Self::monomial(BigInt::from(c), exp)
    }

    /// Builds from arbitrary `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms<I: IntoIterator<Item = (u32, BigInt)>>(iter: I) -> Self {
        let mut dense: Vec<BigInt> = Vec::new();
        for (e, c) in iter {
            let e = e as usize;
            if dense.len() <= e {
                dense.resize(e + 1, BigInt::zero());
            }
            dense[e] += c;
        }
        Self::from_dense(dense)
    }

    fn from_dense(dense: Vec<BigInt>) -> Self {
        let terms = dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as u32, c))
            .collect();
        BetaScalar { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Highest stored exponent, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|(e, _)| *e)
    }

    /// Lowest stored exponent, `None` for zero.
    pub fn low_degree(&self) -> Option<u32> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn coeff(&self, exp: u32) -> BigInt {
        match self.terms.binary_search_by_key(&exp, |(e, _)| *e) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Value at β = 0.
    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Evaluates at an integer value of β.
    pub fn eval(&self, beta: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut prev = self.degree().unwrap_or(0);
        // Horner over the sparse exponents, highest first.
        for (e, c) in self.terms.iter().rev() {
            for _ in *e..prev {
                acc *= beta;
            }
            acc += c;
            prev = *e;
        }
        for _ in 0..prev {
            acc *= beta;
        }
        acc
    }

    /// Specializes β to zero, keeping the result in ℤ[β].
    pub fn at_beta_zero(&self) -> Self {
        Self::from_bigint(self.constant_term())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        BetaScalar {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Multiplies by `β^k`.
    pub fn shift(&self, k: u32) -> Self {
        BetaScalar {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact division in ℤ[β]; fails when the remainder is nonzero or a
    /// coefficient quotient is not integral.
    pub fn div_exact(&self, den: &Self) -> Result<Self> {
        let den_deg = den
            .degree()
            .ok_or_else(|| Error::NotExact("division by zero in Z[beta]".into()))?;
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let lead = den.coeff(den_deg);
        let num_deg = self.degree().unwrap();
        if num_deg < den_deg {
            return Err(Error::NotExact(format!("{self} / {den}")));
        }
        let mut rem = vec![BigInt::zero(); num_deg as usize + 1];
        for (e, c) in &self.terms {
            rem[*e as usize] = c.clone();
        }
        let mut quot = vec![BigInt::zero(); (num_deg - den_deg) as usize + 1];
        for shift in (0..=(num_deg - den_deg) as usize).rev() {
            let top = &rem[shift + den_deg as usize];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::NotExact(format!("{self} / {den}")));
            }
            for (e, c) in &den.terms {
                rem[shift + *e as usize] -= &q * c;
            }
            quot[shift] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotExact(format!("{self} / {den}")));
        }
        Ok(Self::from_dense(quot))
    }

    fn combine(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let take_left = j >= other.terms.len() || (i < self.terms.len() && self.terms[i].0 < other.terms[j].0);
            let take_right = i >= self.terms.len() || (j < other.terms.len() && other.terms[j].0 < self.terms[i].0);
            if take_left {
                out.push(self.terms[i].clone());
                i += 1;
            } else if take_right {
                let (e, c) = &other.terms[j];
                out.push((*e, if negate_other { -c } else { c.clone() }));
                j += 1;
            } else {
                let e = self.terms[i].0;
                let c = if negate_other {
                    &self.terms[i].1 - &other.terms[j].1
                } else {
                    &self.terms[i].1 + &other.terms[j].1
                };
                if !c.is_zero() {
                    out.push((e, c));
                }
                i += 1;
                j += 1;
            }
        }
        BetaScalar { terms: out }
    }
}

impl fmt::Debug for BetaScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Plain-text rendering with `b` standing for β, ascending exponents.
impl fmt::Display for BetaScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            match (*e, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => {}
                (_, false) => write!(f, "{abs} ")?,
            }
            match *e {
                0 => {}
                1 => write!(f, "b")?,
                _ => write!(f, "b^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add<&BetaScalar> for &BetaScalar {
    type Output = BetaScalar;
    fn add(self, rhs: &BetaScalar) -> BetaScalar {
        self.combine(rhs, false)
    }
}

impl Sub<&BetaScalar> for &BetaScalar {
    type Output = BetaScalar;
    fn sub(self, rhs: &BetaScalar) -> BetaScalar {
        self.combine(rhs, true)
    }
}

impl Mul<&BetaScalar> for &BetaScalar {
    type Output = BetaScalar;
    fn mul(self, rhs: &BetaScalar) -> BetaScalar {
        if self.is_zero() || rhs.is_zero() {
            return BetaScalar::zero();
        }
        let deg = self.degree().unwrap() + rhs.degree().unwrap();
        let mut dense = vec![BigInt::zero(); deg as usize + 1];
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                dense[(e1 + e2) as usize] += c1 * c2;
            }
        }
        BetaScalar::from_dense(dense)
    }
}

impl Neg for &BetaScalar {
    type Output = BetaScalar;
    fn neg(self) -> BetaScalar {
        BetaScalar {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for BetaScalar {
    type Output = BetaScalar;
    fn neg(mut self) -> BetaScalar {
        for (_, c) in self.terms.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<BetaScalar> for BetaScalar {
            type Output = BetaScalar;
            fn $m(self, rhs: BetaScalar) -> BetaScalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&BetaScalar> for BetaScalar {
            type Output = BetaScalar;
            fn $m(self, rhs: &BetaScalar) -> BetaScalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&BetaScalar> for BetaScalar {
    fn add_assign(&mut self, rhs: &BetaScalar) {
        *self = self.combine(rhs, false);
    }
}

impl SubAssign<&BetaScalar> for BetaScalar {
    fn sub_assign(&mut self, rhs: &BetaScalar) {
        *self = self.combine(rhs, true);
    }
}

impl From<i64> for BetaScalar {
    fn from(c: i64) -> Self {
        BetaScalar::from_int(c)
    }
}

impl From<BigInt> for BetaScalar {
    fn from(c: BigInt) -> Self {
        BetaScalar::from_bigint(c)
    }
}
