//! Maya kets and the fermion and boson actions on them.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::BetaScalar;
use crate::symfunc::Partition;

/// The semi-infinite wedge `v_{i_1} ∧ v_{i_2} ∧ ...` with
/// `i_k = λ_k - k + charge`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MayaKet {
    pub charge: i64,
    pub shape: Partition,
}

impl MayaKet {
    pub fn new(charge: i64, shape: Partition) -> Self {
        MayaKet { charge, shape }
    }

    /// The shifted vacuum `|m⟩`.
    pub fn vacuum(charge: i64) -> Self {
        MayaKet {
            charge,
            shape: Partition::empty(),
        }
    }

    /// `i_k` for `k = 1..=len`.
    pub fn indices(&self, len: usize) -> Vec<i64> {
        (1..=len)
            .map(|k| self.shape.part(k - 1) as i64 - k as i64 + self.charge)
            .collect()
    }

    /// Every index below this one is occupied.
    pub fn sea_level(&self) -> i64 {
        self.charge - self.shape.len() as i64 - 1
    }

    pub fn is_occupied(&self, j: i64) -> bool {
        if j <= self.sea_level() {
            return true;
        }
        self.indices(self.shape.len()).contains(&j)
    }

    fn from_indices(charge: i64, idx: &[i64]) -> Self {
        let parts: Vec<u32> = idx
            .iter()
            .enumerate()
            .map(|(k, &i)| {
                let p = i + (k as i64 + 1) - charge;
                debug_assert!(p >= 0, "indices do not describe a partition");
                p as u32
            })
            .collect();
        MayaKet {
            charge,
            shape: Partition::new(parts).expect("strictly decreasing indices give a partition"),
        }
    }

    /// `ψ_j` on this ket: wedge `v_j` on the left. Returns the sign and the
    /// resulting ket, or `None` if `v_j` is already present.
    pub fn psi(&self, j: i64) -> Option<(bool, MayaKet)> {
        if self.is_occupied(j) {
            return None;
        }
        let mut idx = self.indices(self.shape.len());
        let p = idx.iter().filter(|&&i| i > j).count();
        idx.insert(p, j);
        Some((p % 2 == 1, Self::from_indices(self.charge + 1, &idx)))
    }

    /// `ψ*_j` on this ket: contract `v_j`. Returns the sign and the resulting
    /// ket, or `None` if `v_j` is absent.
    pub fn psi_star(&self, j: i64) -> Option<(bool, MayaKet)> {
        if !self.is_occupied(j) {
            return None;
        }
        let len = self.shape.len().max((self.charge - j).max(0) as usize);
        let mut idx = self.indices(len);
        let p = idx
            .iter()
            .position(|&i| i == j)
            .expect("occupied index lies in the prefix");
        idx.remove(p);
        Some((p % 2 == 1, Self::from_indices(self.charge - 1, &idx)))
    }
}

impl fmt::Debug for MayaKet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{}; {:?}⟩", self.charge, self.shape)
    }
}

/// A finite combination of Maya kets.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FockVector {
    terms: BTreeMap<MayaKet, BetaScalar>,
}

impl FockVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn ket(k: MayaKet) -> Self {
        Self::term(k, BetaScalar::one())
    }

    pub fn vacuum(charge: i64) -> Self {
        Self::ket(MayaKet::vacuum(charge))
    }

    pub fn term(k: MayaKet, c: BetaScalar) -> Self {
        let mut v = Self::zero();
        v.add_term(k, c);
        v
    }

    pub fn add_term(&mut self, k: MayaKet, c: BetaScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MayaKet, &BetaScalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &MayaKet) -> BetaScalar {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&BetaScalar::from_int(-1)))
    }

    pub fn scale(&self, c: &BetaScalar) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    fn map_kets<F: Fn(&MayaKet) -> Option<(bool, MayaKet)>>(&self, f: F) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            if let Some((neg, k2)) = f(k) {
                out.add_term(k2, if neg { -c } else { c.clone() });
            }
        }
        out
    }
}

impl fmt::Debug for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let txt: Vec<String> = self.terms.iter().map(|(k, c)| format!("({c}) {k:?}")).collect();
        write!(f, "{}", txt.join(" + "))
    }
}

pub fn apply_psi(j: i64, v: &FockVector) -> FockVector {
    v.map_kets(|k| k.psi(j))
}

pub fn apply_psi_star(j: i64, v: &FockVector) -> FockVector {
    v.map_kets(|k| k.psi_star(j))
}

/// `a_m = Σ_k ψ_k ψ*_{k+m}` for `m ≠ 0`. Normal ordering only matters at
/// `m = 0`, which is excluded.
pub fn apply_boson(m: i64, v: &FockVector) -> FockVector {
    assert!(m != 0, "the zero boson mode is not supported");
    let mut out = FockVector::zero();
    for (ket, c) in &v.terms {
        // below this bound both the removed and the refilled slot lie in the sea
        let lo = ket.sea_level() - m.abs();
        let hi = ket.charge + ket.shape.part(0) as i64;
        for i in lo..=hi {
            let Some((s1, k1)) = ket.psi_star(i) else { continue };
            let Some((s2, k2)) = k1.psi(i - m) else { continue };
            out.add_term(k2, if s1 ^ s2 { -c } else { c.clone() });
        }
    }
    out
}

/// The `β^j` part of `e^Θ` (or of `e^θ` when `lower` is set) applied to `v`.
///
/// `Θ = Σ_k (-1)^{k+1} β^k a_{-k} / k`, so `e^Θ = Σ_j β^j E_j` where `E_j` is
/// the elementary symmetric function in the commuting power sums `a_{-k}`.
/// Newton's identity `j E_j = Σ_k (-1)^{k-1} a_{-k} E_{j-k}` keeps the
/// arithmetic integral.
pub fn apply_exp_component(j: u32, lower: bool, v: &FockVector) -> FockVector {
    let sign = if lower { 1 } else { -1 };
    let mut parts = vec![v.clone()];
    for d in 1..=j as i64 {
        let mut acc = FockVector::zero();
        for k in 1..=d {
            let t = apply_boson(sign * k, &parts[(d - k) as usize]);
            acc = if k % 2 == 1 { acc.add(&t) } else { acc.sub(&t) };
        }
        let den = BetaScalar::from_int(d);
        let mut out = FockVector::zero();
        for (ket, c) in acc.terms() {
            out.add_term(
                ket.clone(),
                c.div_exact(&den).expect("Newton's identity divides exactly"),
            );
        }
        parts.push(out);
    }
    parts.pop().expect("at least the zeroth part")
}

/// Checks `(ψ_m ψ*_n + ψ*_n ψ_m) v = δ_{mn} v`.
pub fn anticommutator_check(m: i64, n: i64, v: &FockVector) -> bool {
    let lhs = apply_psi(m, &apply_psi_star(n, v)).add(&apply_psi_star(n, &apply_psi(m, v)));
    let rhs = if m == n { v.clone() } else { FockVector::zero() };
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::part;

    #[test]
    fn psi_on_vacua() {
        let v = FockVector::vacuum(-1);
        assert_eq!(apply_psi(0, &v), FockVector::ket(MayaKet::new(0, part(&[1]))));
        assert!(apply_psi(-1, &FockVector::vacuum(0)).is_zero());
        assert_eq!(apply_psi_star(-1, &FockVector::vacuum(0)), FockVector::vacuum(-1));
        // removing v_{-2} from the vacuum passes over v_{-1}
        assert_eq!(
            apply_psi_star(-2, &FockVector::vacuum(0)),
            FockVector::term(MayaKet::new(-1, part(&[1])), BetaScalar::from_int(-1))
        );
    }

    #[test]
    fn boson_on_vacuum() {
        assert!(apply_boson(1, &FockVector::vacuum(0)).is_zero());
        assert_eq!(
            apply_boson(-1, &FockVector::vacuum(0)),
            FockVector::ket(MayaKet::new(0, part(&[1])))
        );
        let v = FockVector::vacuum(0);
        let comm = apply_boson(1, &apply_boson(-1, &v)).sub(&apply_boson(-1, &apply_boson(1, &v)));
        assert_eq!(comm, v);
    }

    #[test]
    fn exp_theta_is_elementary_multiplication() {
        // E_2 |0⟩ corresponds to e_2 = s_(1,1)
        let v = FockVector::vacuum(0);
        assert_eq!(
            apply_exp_component(2, false, &v),
            FockVector::ket(MayaKet::new(0, part(&[1, 1])))
        );
        assert_eq!(apply_exp_component(0, false, &v), v);
        assert!(apply_exp_component(1, true, &v).is_zero());
        let w = FockVector::ket(MayaKet::new(0, part(&[1, 1])));
        assert_eq!(apply_exp_component(2, true, &w), v);
    }

    #[test]
    fn anticommutators_on_vacuum() {
        let v = FockVector::vacuum(0);
        assert!(anticommutator_check(1, 1, &v));
        assert!(anticommutator_check(1, 2, &v));
        assert!(anticommutator_check(-1, -1, &v));
    }
}
