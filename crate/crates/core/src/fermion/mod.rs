//! Charged free fermions on the semi-infinite wedge.

mod maya;
mod word;

pub use maya::{
    anticommutator_check, apply_boson, apply_exp_component, apply_psi, apply_psi_star, FockVector, MayaKet,
};
pub use word::{
    beta_shift_power, conjugate_psi_by_exp_theta, straighten_lowering, straighten_raising, vacuum_expectation,
    OperatorAtom, OperatorWord, PsiSeries,
};

use crate::algebra::{BetaScalar, RingMatrix};
use crate::error::{Error, Result};

/// `⟨ψ_m ψ*_n⟩ = 1` if `m = n < 0`, else 0.
pub fn two_point(m: i64, n: i64) -> BetaScalar {
    if m == n && m < 0 {
        BetaScalar::one()
    } else {
        BetaScalar::zero()
    }
}

/// `⟨ψ_{m_1} ... ψ_{m_r} ψ*_{n_r} ... ψ*_{n_1}⟩ = det(⟨ψ_{m_i} ψ*_{n_j}⟩)`.
pub fn wick_expectation(ms: &[i64], ns: &[i64]) -> Result<BetaScalar> {
    if ms.len() != ns.len() {
        return Err(Error::LengthMismatch {
            left: ms.len(),
            right: ns.len(),
        });
    }
    let r = ms.len();
    let m = RingMatrix::from_fn(r, r, |i, j| two_point(ms[i], ns[j]));
    m.det_exact(&BetaScalar::one())
}

/// The same expectation by applying the word to `|0⟩` directly.
pub fn direct_expectation(ms: &[i64], ns: &[i64]) -> BetaScalar {
    let mut v = FockVector::vacuum(0);
    for &n in ns {
        v = apply_psi_star(n, &v);
    }
    for &m in ms.iter().rev() {
        v = apply_psi(m, &v);
    }
    v.coeff(&MayaKet::vacuum(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wick_small() {
        assert_eq!(wick_expectation(&[-1], &[-1]).unwrap(), BetaScalar::one());
        assert_eq!(wick_expectation(&[-1], &[0]).unwrap(), BetaScalar::zero());
        assert_eq!(
            wick_expectation(&[-1, -2], &[-2, -1]).unwrap(),
            BetaScalar::from_int(-1)
        );
        assert_eq!(direct_expectation(&[-1, -2], &[-2, -1]), BetaScalar::from_int(-1));
        assert!(wick_expectation(&[-1], &[]).is_err());
    }
}
