//! Kostka numbers and the basis transitions built on them.
//!
//! `K[λ][μ]` counts semistandard tableaux of shape λ and content μ. It is
//! unitriangular in graded-lex order, which drives every elimination here.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use super::partition::{add_horizontal_strip, partitions_bounded, Partition};
use crate::algebra::BetaScalar;

pub(crate) type Coeffs = BTreeMap<Partition, BetaScalar>;

pub struct KostkaTable {
    /// Partitions of the degree, up to the length bound, in ascending lex
    /// order.
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `rows[λ]` lists `(μ, K_{λμ})` with `K_{λμ} ≠ 0`.
    pub rows: Vec<Vec<(usize, u64)>>,
    /// `cols[μ]` lists `(λ, K_{λμ})` with `K_{λμ} ≠ 0`.
    pub cols: Vec<Vec<(usize, u64)>>,
}

impl KostkaTable {
    /// `K_{λμ} ≠ 0` forces `ℓ(λ) ≤ ℓ(μ)`, so bounding the length keeps the
    /// table closed.
    fn build(degree: u32, max_len: usize) -> Self {
        let mut parts = partitions_bounded(degree, max_len);
        parts.reverse();
        let index: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let n = parts.len();
        let mut rows = vec![Vec::new(); n];
        let mut cols = vec![Vec::new(); n];
        for (mu_idx, mu) in parts.iter().enumerate() {
            // grow shapes one horizontal strip per content part
            let mut shapes: HashMap<Partition, u64> = HashMap::from([(Partition::empty(), 1)]);
            for &m in mu.parts() {
                let mut next: HashMap<Partition, u64> = HashMap::new();
                for (nu, cnt) in &shapes {
                    for lam in add_horizontal_strip(nu, m) {
                        *next.entry(lam).or_insert(0) += cnt;
                    }
                }
                shapes = next;
            }
            let mut col: Vec<(usize, u64)> = shapes.into_iter().map(|(lam, k)| (index[&lam], k)).collect();
            col.sort_unstable();
            for &(lam_idx, k) in &col {
                rows[lam_idx].push((mu_idx, k));
            }
            cols[mu_idx] = col;
        }
        KostkaTable {
            parts,
            index,
            rows,
            cols,
        }
    }

    pub fn get(&self, lam: &Partition, mu: &Partition) -> u64 {
        let (Some(&l), Some(&m)) = (self.index.get(lam), self.index.get(mu)) else {
            return 0;
        };
        self.rows[l]
            .binary_search_by_key(&m, |&(i, _)| i)
            .map(|pos| self.rows[l][pos].1)
            .unwrap_or(0)
    }
}

pub fn kostka_table(degree: u32) -> Arc<KostkaTable> {
    kostka_table_bounded(degree, degree as usize)
}

type TableCache = HashMap<(u32, usize), Arc<KostkaTable>>;

/// The table restricted to partitions with at most `max_len` parts.
pub fn kostka_table_bounded(degree: u32, max_len: usize) -> Arc<KostkaTable> {
    static CACHE: OnceLock<Mutex<TableCache>> = OnceLock::new();
    let key = (degree, max_len.min(degree as usize));
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().expect("kostka cache poisoned").get(&key) {
        return t.clone();
    }
    let table = Arc::new(KostkaTable::build(key.0, key.1));
    cache
        .lock()
        .expect("kostka cache poisoned")
        .entry(key)
        .or_insert(table)
        .clone()
}

/// `K_{λμ}`; zero when the weights differ.
pub fn kostka_number(lam: &Partition, mu: &Partition) -> u64 {
    if lam.weight() != mu.weight() {
        return 0;
    }
    kostka_table(lam.weight()).get(lam, mu)
}

fn by_degree(c: &Coeffs) -> BTreeMap<u32, Vec<(&Partition, &BetaScalar)>> {
    let mut out: BTreeMap<u32, Vec<_>> = BTreeMap::new();
    for (p, v) in c {
        out.entry(p.weight()).or_default().push((p, v));
    }
    out
}

fn scaled(c: &BetaScalar, k: u64) -> BetaScalar {
    c.scale(&BigInt::from(k))
}

fn collect(parts: &[Partition], dense: Vec<BetaScalar>, out: &mut Coeffs) {
    for (p, v) in parts.iter().zip(dense) {
        if !v.is_zero() {
            out.insert(p.clone(), v);
        }
    }
}

/// `s_λ = Σ_μ K_{λμ} m_μ`, keeping `ℓ(μ) ≤ n`.
pub(crate) fn schur_to_monomial(c: &Coeffs, n: usize) -> Coeffs {
    let mut out = Coeffs::new();
    for (d, terms) in by_degree(c) {
        let t = kostka_table_bounded(d, n);
        let mut dense = vec![BetaScalar::zero(); t.parts.len()];
        for (lam, v) in terms {
            // s_λ vanishes in n variables when ℓ(λ) > n
            let Some(&l) = t.index.get(lam) else { continue };
            for &(mu, k) in &t.rows[l] {
                dense[mu] += &scaled(v, k);
            }
        }
        collect(&t.parts, dense, &mut out);
    }
    out
}

/// Inverse of [`schur_to_monomial`] on elements supported on `ℓ ≤ n`.
pub(crate) fn monomial_to_schur(c: &Coeffs, n: usize) -> Coeffs {
    let mut out = Coeffs::new();
    for (d, terms) in by_degree(c) {
        let t = kostka_table_bounded(d, n);
        let mut rem = vec![BetaScalar::zero(); t.parts.len()];
        for (mu, v) in terms {
            if let Some(&m) = t.index.get(mu) {
                rem[m] = v.clone();
            }
        }
        let mut res = vec![BetaScalar::zero(); t.parts.len()];
        for idx in (0..t.parts.len()).rev() {
            if rem[idx].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut rem[idx]);
            for &(mu, k) in &t.rows[idx] {
                if mu != idx {
                    rem[mu] -= &scaled(&c, k);
                }
            }
            res[idx] = c;
        }
        collect(&t.parts, res, &mut out);
    }
    out
}

/// `h_μ = Σ_λ K_{λμ} s_λ`, keeping `ℓ(λ) ≤ n`.
pub(crate) fn h_to_schur(c: &Coeffs, n: usize) -> Coeffs {
    let mut out = Coeffs::new();
    for (d, terms) in by_degree(c) {
        let t = kostka_table(d);
        let mut dense = vec![BetaScalar::zero(); t.parts.len()];
        for (mu, v) in terms {
            for &(lam, k) in &t.cols[t.index[mu]] {
                if t.parts[lam].len() <= n {
                    dense[lam] += &scaled(v, k);
                }
            }
        }
        collect(&t.parts, dense, &mut out);
    }
    out
}

/// Inverse of [`h_to_schur`]. The output is supported on lengths that occur
/// in the input, so it is canonical.
pub(crate) fn schur_to_h(c: &Coeffs) -> Coeffs {
    let mut out = Coeffs::new();
    for (d, terms) in by_degree(c) {
        let t = kostka_table(d);
        let mut rem = vec![BetaScalar::zero(); t.parts.len()];
        for (lam, v) in terms {
            rem[t.index[lam]] = v.clone();
        }
        let mut res = vec![BetaScalar::zero(); t.parts.len()];
        for idx in 0..t.parts.len() {
            if rem[idx].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut rem[idx]);
            for &(lam, k) in &t.cols[idx] {
                if lam != idx {
                    rem[lam] -= &scaled(&c, k);
                }
            }
            res[idx] = c;
        }
        collect(&t.parts, res, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::partition::part;

    #[test]
    fn small_kostka_numbers() {
        assert_eq!(kostka_number(&part(&[2, 1]), &part(&[1, 1, 1])), 2);
        assert_eq!(kostka_number(&part(&[2, 1]), &part(&[2, 1])), 1);
        assert_eq!(kostka_number(&part(&[2, 1]), &part(&[3])), 0);
        assert_eq!(kostka_number(&part(&[3, 2]), &part(&[2, 2, 1])), 2);
        // number of standard tableaux of (3,2) is 5
        assert_eq!(kostka_number(&part(&[3, 2]), &part(&[1; 5])), 5);
        assert_eq!(kostka_number(&Partition::empty(), &Partition::empty()), 1);
    }

    #[test]
    fn bounded_tables_agree() {
        let full = kostka_table(6);
        let short = kostka_table_bounded(6, 3);
        assert_eq!(short.parts.len(), 7);
        for lam in &short.parts {
            for mu in &short.parts {
                assert_eq!(short.get(lam, mu), full.get(lam, mu));
            }
        }
    }

    #[test]
    fn unitriangular() {
        for d in 1..=7 {
            let t = kostka_table(d);
            for (i, row) in t.rows.iter().enumerate() {
                assert!(row.iter().all(|&(j, _)| j <= i));
                assert_eq!(row.last(), Some(&(i, 1)));
            }
        }
    }
}
