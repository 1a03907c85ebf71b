//! Exact coefficient arithmetic: ℤ[β] scalars, sparse polynomials and
//! determinants.

mod beta;
mod matrix;
mod multipoly;

pub use beta::BetaScalar;
pub use matrix::{det_by_minors, RingMatrix};
pub use multipoly::{beta_shift_product, exact_divide, poly_from_ints, vandermonde, Monomial, MultiPoly};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;

/// Commutative ring operations needed by the determinant routines.
///
/// Elements carry their context (variable count, truncation caps), so the
/// identities are produced from an existing element.
pub trait Ring: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self {
        self.zero_like().sub(self)
    }
}

/// Rings with an exact division used by fraction-free elimination.
pub trait ExactDiv: Ring {
    fn div_exact(&self, den: &Self) -> Result<Self>;
}

impl Ring for BetaScalar {
    fn zero_like(&self) -> Self {
        BetaScalar::zero()
    }
    fn one_like(&self) -> Self {
        BetaScalar::one()
    }
    fn is_zero(&self) -> bool {
        BetaScalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl ExactDiv for BetaScalar {
    fn div_exact(&self, den: &Self) -> Result<Self> {
        BetaScalar::div_exact(self, den)
    }
}

impl Ring for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.n_vars())
    }
    fn one_like(&self) -> Self {
        MultiPoly::one(self.n_vars())
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl ExactDiv for MultiPoly {
    fn div_exact(&self, den: &Self) -> Result<Self> {
        exact_divide(self, den)
    }
}

/// Generalized binomial coefficient `a(a-1)...(a-m+1)/m!` for any integer `a`.
pub fn integer_binomial(a: i64, m: u32) -> BigInt {
    let mut res = BigInt::one();
    for i in 0..m as i64 {
        // binom(a,i)(a-i) = (i+1) binom(a,i+1), so the division is exact
        res = res * BigInt::from(a - i) / BigInt::from(i + 1);
        if res.is_zero() {
            break;
        }
    }
    res
}
