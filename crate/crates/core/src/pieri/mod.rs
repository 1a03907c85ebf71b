//! Operators on the free module spanned by partitions, and the Pieri-type
//! expansions they produce.
//!
//! `u_i` adds a box to row `i` and rounds up to the nearest partition with a
//! `-β` per extra box; `d_i` adds a box when possible and multiplies by `-β`
//! otherwise. Read through `λ ↦ G_λ` the `u`-action expands `s_λ G_μ`, and
//! read through `λ ↦ g_λ` the `d`-action expands products with `g_μ`.
//!
//! Monomials act right to left: in `u_{w_1} ... u_{w_N}` the factor
//! `u_{w_N}` is applied first.

mod combo;
mod tableau;

pub use combo::PartitionCombo;
pub use tableau::{column_word, ssyt_enumerate, Tableau};

use crate::algebra::{integer_binomial, BetaScalar};
use crate::error::{Error, Result};
use crate::symfunc::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    U,
    D,
}

fn u_on(i: usize, lam: &Partition) -> PartitionCombo {
    assert!(i >= 1, "operators are indexed from 1");
    let mut n = lam.padded(i);
    n[i - 1] += 1;
    let before: u32 = n.iter().sum();
    for j in (0..n.len() - 1).rev() {
        n[j] = n[j].max(n[j + 1]);
    }
    let after: u32 = n.iter().sum();
    let p = Partition::new(n).expect("suffix maxima are weakly decreasing");
    PartitionCombo::term(p, BetaScalar::neg_beta_pow(after - before))
}

fn d_on(i: usize, lam: &Partition) -> PartitionCombo {
    assert!(i >= 1, "operators are indexed from 1");
    let row = lam.part(i - 1);
    if i == 1 || lam.part(i - 2) > row {
        let mut n = lam.padded(i);
        n[i - 1] += 1;
        PartitionCombo::single(Partition::new(n).expect("box addition keeps a partition"))
    } else {
        PartitionCombo::term(lam.clone(), BetaScalar::neg_beta_pow(1))
    }
}

pub fn u_apply(i: usize, c: &PartitionCombo) -> PartitionCombo {
    c.map_linear(|lam| u_on(i, lam))
}

pub fn d_apply(i: usize, c: &PartitionCombo) -> PartitionCombo {
    c.map_linear(|lam| d_on(i, lam))
}

pub fn apply_op(family: Family, i: usize, c: &PartitionCombo) -> PartitionCombo {
    match family {
        Family::U => u_apply(i, c),
        Family::D => d_apply(i, c),
    }
}

/// `op_{w_1} ... op_{w_N} · c`, rightmost factor first.
pub fn apply_word(family: Family, word: &[u32], c: &PartitionCombo) -> PartitionCombo {
    word.iter()
        .rev()
        .fold(c.clone(), |acc, &i| apply_op(family, i as usize, &acc))
}

/// `s_λ(op_1, ..., op_n) · c = Σ_T op^T · c` over semistandard tableaux.
pub fn noncomm_schur_apply(lam: &Partition, n: usize, family: Family, c: &PartitionCombo) -> PartitionCombo {
    let mut out = PartitionCombo::zero();
    for t in ssyt_enumerate(lam, n as u32) {
        out = out.add(&apply_word(family, &t.column_word(), c));
    }
    out
}

/// `e_k(op_1, ..., op_n) = Σ_{a_1 < ... < a_k} op_{a_k} ... op_{a_1}`.
pub fn noncomm_e_apply(k: i64, n: usize, family: Family, c: &PartitionCombo) -> PartitionCombo {
    if k < 0 || k as usize > n {
        return PartitionCombo::zero();
    }
    fn rec(start: usize, left: usize, n: usize, family: Family, cur: &PartitionCombo, out: &mut PartitionCombo) {
        if left == 0 {
            *out = out.add(cur);
            return;
        }
        for a in start..=n + 1 - left {
            let next = apply_op(family, a, cur);
            if !next.is_zero() {
                rec(a + 1, left - 1, n, family, &next, out);
            }
        }
    }
    let mut out = PartitionCombo::zero();
    rec(1, k as usize, n, family, c, &mut out);
    out
}

fn permutations(r: usize) -> Vec<(Vec<usize>, bool)> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, odd: bool, out: &mut Vec<(Vec<usize>, bool)>) {
        let r = used.len();
        if cur.len() == r {
            out.push((cur.clone(), odd));
            return;
        }
        for v in 0..r {
            if used[v] {
                continue;
            }
            // inversions created with the values placed so far
            let inv = cur.iter().filter(|&&x| x > v).count();
            used[v] = true;
            cur.push(v);
            rec(cur, used, odd ^ (inv % 2 == 1), out);
            cur.pop();
            used[v] = false;
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; r], false, &mut out);
    out
}

/// `s_λ(op) · c` as `det(e_{λ'_i - i + j}(op))` over the conjugate shape,
/// expanded over permutations. The `e_k(op)` commute, so the order inside
/// each product is immaterial.
pub fn noncomm_schur_via_jt(lam: &Partition, n: usize, family: Family, c: &PartitionCombo) -> PartitionCombo {
    let conj = lam.conjugate();
    let r = conj.len();
    let mut out = PartitionCombo::zero();
    for (perm, odd) in permutations(r) {
        let mut cur = c.clone();
        for (i, &j) in perm.iter().enumerate() {
            let k = conj.part(i) as i64 - i as i64 + j as i64;
            cur = noncomm_e_apply(k, n, family, &cur);
            if cur.is_zero() {
                break;
            }
        }
        out = if odd { out.sub(&cur) } else { out.add(&cur) };
    }
    out
}

/// Coefficients `c_ν` with `s_λ G_μ = Σ c_ν G_ν` in up to `r` variables.
#[allow(non_snake_case)]
pub fn expand_sG(lam: &Partition, mu: &Partition, r: usize) -> Result<PartitionCombo> {
    if lam.len() > r || mu.len() > r {
        return Err(Error::RankBound(format!("{lam:?} and {mu:?} need at most {r} rows")));
    }
    Ok(noncomm_schur_apply(
        lam,
        r,
        Family::U,
        &PartitionCombo::single(mu.clone()),
    ))
}

/// Coefficients `c_ν` with `s^{(r+s-1)}_λ(x; -β) g_μ = Σ c_ν g_ν`.
pub fn expand_sg(lam: &Partition, mu: &Partition, r: usize, s: usize) -> Result<PartitionCombo> {
    if lam.len() > s || mu.len() > r {
        return Err(Error::RankBound(format!(
            "need ℓ({lam:?}) ≤ s = {s} and ℓ({mu:?}) ≤ r = {r}"
        )));
    }
    Ok(noncomm_schur_apply(
        lam,
        r + s,
        Family::D,
        &PartitionCombo::single(mu.clone()),
    ))
}

/// `[t^i]` of `E(t) g_λ` for `i = 0..=max_i`, from the factorization into
/// `(1 - βt)^{1-r-s} ∏ (1 + d_k t)` with `r = ℓ(λ)`, `s = max_i`.
pub fn pieri_e_g(max_i: usize, lam: &Partition) -> Vec<PartitionCombo> {
    let n = lam.len() + max_i;
    let base = PartitionCombo::single(lam.clone());
    let es: Vec<PartitionCombo> = (0..=max_i)
        .map(|k| noncomm_e_apply(k as i64, n, Family::D, &base))
        .collect();
    let p = 1 - n as i64;
    (0..=max_i)
        .map(|i| {
            let mut acc = PartitionCombo::zero();
            for (k, e) in es.iter().enumerate().take(i + 1) {
                let j = (i - k) as u32;
                let sign = if j % 2 == 1 { -1 } else { 1 };
                let c = BetaScalar::monomial(integer_binomial(p, j) * sign, j);
                acc = acc.add(&e.scale(&c));
            }
            acc
        })
        .collect()
}

/// `[t^i]` of `H(t) g_λ` for `i = 0..=max_i`, from
/// `(1 + βt)^{N-1} (1 - d_1 t)^{-1} ... (1 - d_N t)^{-1}` with
/// `N = ℓ(λ) + max_i + 1`; `d_N` acts first.
pub fn pieri_h_g(max_i: usize, lam: &Partition) -> Vec<PartitionCombo> {
    let n = lam.len() + max_i + 1;
    let mut series: Vec<PartitionCombo> = vec![PartitionCombo::zero(); max_i + 1];
    series[0] = PartitionCombo::single(lam.clone());
    for k in (1..=n).rev() {
        // multiply by Σ_a d_k^a t^a
        let mut next = vec![PartitionCombo::zero(); max_i + 1];
        for (j, term) in series.iter().enumerate() {
            let mut cur = term.clone();
            for slot in next.iter_mut().skip(j) {
                *slot = slot.add(&cur);
                cur = d_apply(k, &cur);
            }
        }
        series = next;
    }
    (0..=max_i)
        .map(|i| {
            let mut acc = PartitionCombo::zero();
            for (j, term) in series.iter().enumerate().take(i + 1) {
                let e = (i - j) as u32;
                let c = BetaScalar::monomial(integer_binomial(n as i64 - 1, e), e);
                acc = acc.add(&term.scale(&c));
            }
            acc
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::part;

    fn combo(terms: &[(&[u32], BetaScalar)]) -> PartitionCombo {
        PartitionCombo::from_terms(terms.iter().map(|(p, c)| (part(p), c.clone())))
    }

    #[test]
    fn single_operators() {
        let lam = PartitionCombo::single(part(&[2, 2]));
        assert_eq!(u_apply(1, &lam), PartitionCombo::single(part(&[3, 2])));
        assert_eq!(
            u_apply(2, &lam),
            PartitionCombo::term(part(&[3, 3]), BetaScalar::neg_beta_pow(1))
        );
        assert_eq!(u_apply(3, &lam), PartitionCombo::single(part(&[2, 2, 1])));
        let mu = PartitionCombo::single(part(&[1, 1]));
        assert_eq!(d_apply(1, &mu), PartitionCombo::single(part(&[2, 1])));
        assert_eq!(d_apply(3, &mu), PartitionCombo::single(part(&[1, 1, 1])));
        assert_eq!(
            d_apply(2, &mu),
            PartitionCombo::term(part(&[1, 1]), BetaScalar::neg_beta_pow(1))
        );
    }

    #[test]
    fn right_to_left_order() {
        // h_2(u_1,u_2) = u_1u_1 + u_1u_2 + u_2u_2
        let got = noncomm_schur_apply(&part(&[2]), 2, Family::U, &PartitionCombo::single(Partition::empty()));
        let b = |k| BetaScalar::neg_beta_pow(k);
        assert_eq!(
            got,
            combo(&[(&[2], b(0)), (&[2, 1], b(1)), (&[2, 2], BetaScalar::beta_pow(2))])
        );
    }

    #[test]
    fn permutation_signs() {
        let perms = permutations(3);
        assert_eq!(perms.len(), 6);
        assert_eq!(perms.iter().filter(|(_, odd)| *odd).count(), 3);
        assert!(!perms[0].1);
    }

    #[test]
    fn e_series_empty_shape() {
        let rows = pieri_e_g(2, &Partition::empty());
        assert_eq!(rows[0], PartitionCombo::single(Partition::empty()));
        assert_eq!(rows[1], PartitionCombo::single(part(&[1])));
        assert_eq!(
            rows[2],
            combo(&[(&[1], BetaScalar::beta_pow(1)), (&[1, 1], BetaScalar::one())])
        );
    }

    #[test]
    fn h_series_one_box() {
        let rows = pieri_h_g(1, &part(&[1]));
        assert_eq!(
            rows[1],
            combo(&[
                (&[1], BetaScalar::beta_pow(1)),
                (&[2], BetaScalar::one()),
                (&[1, 1], BetaScalar::one())
            ])
        );
    }
}
