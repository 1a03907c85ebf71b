//! Symmetric functions indexed by partitions, with explicit truncation caps.

mod element;
mod kostka;
mod partition;

pub use element::{Basis, SymmetricElement, TruncationCaps};
pub use kostka::kostka_number;
pub use partition::{add_horizontal_strip, part, partitions_bounded, partitions_of, partitions_up_to, Partition};

use crate::algebra::{det_by_minors, integer_binomial, BetaScalar, Monomial, MultiPoly, RingMatrix};
use crate::error::{Error, Result};

fn compositions(k: u32, n: usize, max_part: u32) -> Vec<Vec<u32>> {
    fn rec(rem: u32, slots: usize, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 0 {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for a in 0..=rem.min(max_part) {
            cur.push(a);
            rec(rem - a, slots - 1, max_part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, n, max_part, &mut Vec::new(), &mut out);
    out
}

fn poly_of_exponents(n: usize, exps: Vec<Vec<u32>>) -> MultiPoly {
    MultiPoly::from_terms(n, exps.into_iter().map(|e| (Monomial(e), BetaScalar::one())))
}

/// Complete homogeneous symmetric polynomial `h_k(x_1..x_n)`; zero for `k < 0`.
pub fn h_poly(k: i64, n: usize) -> MultiPoly {
    if k < 0 {
        return MultiPoly::zero(n);
    }
    poly_of_exponents(n, compositions(k as u32, n, k as u32))
}

/// Elementary symmetric polynomial `e_k(x_1..x_n)`; zero for `k < 0` or `k > n`.
pub fn e_poly(k: i64, n: usize) -> MultiPoly {
    if k < 0 {
        return MultiPoly::zero(n);
    }
    poly_of_exponents(n, compositions(k as u32, n, 1))
}

/// Power sum `p_k(x_1..x_n)` for `k ≥ 1`.
pub fn p_poly(k: u32, n: usize) -> MultiPoly {
    assert!(k >= 1, "power sums start at p_1");
    poly_of_exponents(
        n,
        (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = k;
                e
            })
            .collect(),
    )
}

/// `s_λ = det(h_{λ_i - i + j})_{1 ≤ i,j ≤ r}` in the complete basis.
pub fn schur_jt(lam: &Partition, r: usize, caps: TruncationCaps) -> Result<SymmetricElement> {
    if r < lam.len() {
        return Err(Error::RankBound(format!("r = {r} is below the length of {lam:?}")));
    }
    let m = RingMatrix::from_fn(r, r, |i, j| {
        SymmetricElement::h(lam.part(i) as i64 - i as i64 + j as i64, caps)
    });
    det_by_minors(&m, &SymmetricElement::one(caps))
}

/// `h^{(p)}_i(x; -β)`: the coefficient of `t^i` in `(1 + βt)^{-p} H(t)`.
pub fn beta_prefix_h(i: i64, p: u32, caps: TruncationCaps) -> SymmetricElement {
    beta_prefix(i, caps, |k| {
        (
            BetaScalar::monomial(integer_binomial(-(p as i64), k), k),
            SymmetricElement::h(i - k as i64, caps),
        )
    })
}

/// `e^{(p)}_i(x; -β)`: the coefficient of `t^i` in `(1 - βt)^p E(t)`.
pub fn beta_prefix_e(i: i64, p: u32, caps: TruncationCaps) -> SymmetricElement {
    beta_prefix(i, caps, |k| {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        (
            BetaScalar::monomial(integer_binomial(p as i64, k) * sign, k),
            SymmetricElement::e(i - k as i64, caps),
        )
    })
}

fn beta_prefix<F>(i: i64, caps: TruncationCaps, term: F) -> SymmetricElement
where
    F: Fn(u32) -> (BetaScalar, SymmetricElement),
{
    let mut acc = SymmetricElement::zero(Basis::CompleteH, caps);
    if i < 0 {
        return acc;
    }
    for k in 0..=i as u32 {
        let (c, f) = term(k);
        if c.is_zero() {
            continue;
        }
        acc = acc.try_add(&f.scale(&c)).expect("same caps");
    }
    acc
}

/// `s^{(p)}_λ(x; -β) = s_λ(-β, ..., -β, x_1, x_2, ...)` with `p` copies of
/// `-β`, as the Jacobi–Trudi determinant of [`beta_prefix_h`] entries.
pub fn beta_prefix_schur(lam: &Partition, p: u32, caps: TruncationCaps) -> SymmetricElement {
    let r = lam.len();
    let m = RingMatrix::from_fn(r, r, |i, j| {
        beta_prefix_h(lam.part(i) as i64 - i as i64 + j as i64, p, caps)
    });
    det_by_minors(&m, &SymmetricElement::one(caps)).expect("square by construction")
}

/// Hall inner product. Requires equal caps with `n ≥ D`.
pub fn hall_pair(f: &SymmetricElement, g: &SymmetricElement) -> Result<BetaScalar> {
    f.hall_pair(g)
}
