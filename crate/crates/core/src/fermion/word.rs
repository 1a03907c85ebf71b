//! Operator words and their vacuum expectation values.

use std::fmt;

use super::maya::{apply_boson, FockVector, MayaKet};
use crate::algebra::{integer_binomial, BetaScalar};
use crate::error::{Error, Result};
use crate::symfunc::{Basis, Partition, SymmetricElement, TruncationCaps};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OperatorAtom {
    Psi(i64),
    PsiStar(i64),
    /// `a_m`, `m ≠ 0`.
    Boson(i64),
    /// `e^{kΘ}`
    ExpTheta(i64),
    /// `e^{kθ}`
    ExpThetaLower(i64),
}

/// Atoms listed left to right; the rightmost acts on the ket first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OperatorWord(pub Vec<OperatorAtom>);

impl OperatorWord {
    pub fn new(atoms: Vec<OperatorAtom>) -> Self {
        OperatorWord(atoms)
    }

    pub fn atoms(&self) -> &[OperatorAtom] {
        &self.0
    }

    /// Number of `ψ` minus number of `ψ*`.
    pub fn net_charge(&self) -> i64 {
        self.0
            .iter()
            .map(|a| match a {
                OperatorAtom::Psi(_) => 1,
                OperatorAtom::PsiStar(_) => -1,
                _ => 0,
            })
            .sum()
    }

    /// `ψ_{n_1-1} E ψ_{n_2-2} E ... ψ_{n_r-r} E` for the atom `E`, with
    /// zero-padding of `n` to `r` entries.
    pub fn interleaved(n: &[i64], r: usize, after_each: Option<OperatorAtom>) -> Self {
        let mut atoms = Vec::new();
        for i in 0..r {
            let ni = n.get(i).copied().unwrap_or(0);
            atoms.push(OperatorAtom::Psi(ni - (i as i64 + 1)));
            if let Some(a) = after_each {
                atoms.push(a);
            }
        }
        OperatorWord(atoms)
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let txt: Vec<String> = self
            .0
            .iter()
            .map(|a| match a {
                OperatorAtom::Psi(j) => format!("psi[{j}]"),
                OperatorAtom::PsiStar(j) => format!("psi*[{j}]"),
                OperatorAtom::Boson(m) => format!("a[{m}]"),
                OperatorAtom::ExpTheta(k) => format!("exp({k} Theta)"),
                OperatorAtom::ExpThetaLower(k) => format!("exp({k} theta)"),
            })
            .collect();
        write!(f, "{}", txt.join(" "))
    }
}

/// `e^{kΘ} ψ_j e^{-kΘ} = Σ_m binom(k, m) β^m ψ_{j+m}`, produced lazily.
/// Finite for `k ≥ 0`, an infinite series for `k < 0`.
#[derive(Clone, Copy, Debug)]
pub struct PsiSeries {
    pub k: i64,
    pub j: i64,
}

impl PsiSeries {
    pub fn coeff(&self, m: u32) -> BetaScalar {
        BetaScalar::monomial(integer_binomial(self.k, m), m)
    }

    /// `(index, coefficient)` pairs with nonzero coefficient.
    pub fn terms(self) -> impl Iterator<Item = (i64, BetaScalar)> {
        let last = if self.k >= 0 { Some(self.k as u32) } else { None };
        (0u32..)
            .take_while(move |&m| last.is_none_or(|l| m <= l))
            .map(move |m| (self.j + m as i64, self.coeff(m)))
    }
}

pub fn conjugate_psi_by_exp_theta(k: i64, j: i64) -> PsiSeries {
    PsiSeries { k, j }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Plain,
    /// exponentials of Θ, gathered on the left
    Upper,
    /// exponentials of θ, gathered on the right
    Lower,
}

/// One fermion in the rewritten word: `Σ_m binom(a, m) β^m ψ_{j ± m}`.
struct Expanded {
    star: bool,
    j: i64,
    binom_top: i64,
    /// index moves up with `m` when true
    up: bool,
}

enum Step {
    Fermion(Expanded),
    Boson(i64),
}

fn classify(word: &OperatorWord) -> Result<Mode> {
    let has = |f: fn(&OperatorAtom) -> bool| word.0.iter().any(f);
    let upper = has(|a| matches!(a, OperatorAtom::ExpTheta(_)));
    let lower = has(|a| matches!(a, OperatorAtom::ExpThetaLower(_)));
    let boson = has(|a| matches!(a, OperatorAtom::Boson(_)));
    if upper && lower {
        return Err(Error::UnsupportedWord(format!("{word}: mixes e^Θ and e^θ")));
    }
    if boson && (upper || lower) {
        return Err(Error::UnsupportedWord(format!(
            "{word}: mixes bosons with exponentials"
        )));
    }
    Ok(if upper {
        Mode::Upper
    } else if lower {
        Mode::Lower
    } else {
        Mode::Plain
    })
}

/// Rewrites the word so that every exponential has been commuted to the
/// boundary. Returns the steps in application order (rightmost first) and
/// the total exponent.
fn expand(word: &OperatorWord, mode: Mode) -> (Vec<Step>, i64) {
    let exponent = |a: &OperatorAtom| match a {
        OperatorAtom::ExpTheta(k) | OperatorAtom::ExpThetaLower(k) => *k,
        _ => 0,
    };
    let total: i64 = word.0.iter().map(exponent).sum();
    let mut steps = Vec::new();
    let mut left = 0i64;
    let mut expanded = Vec::new();
    for a in &word.0 {
        left += exponent(a);
        // exponent to the right of this atom, for the upper mode
        let right = total - left;
        let step = match *a {
            OperatorAtom::Psi(j) => Some(match mode {
                Mode::Upper => Step::Fermion(Expanded {
                    star: false,
                    j,
                    binom_top: -right,
                    up: true,
                }),
                Mode::Lower => Step::Fermion(Expanded {
                    star: false,
                    j,
                    binom_top: left,
                    up: false,
                }),
                Mode::Plain => Step::Fermion(Expanded {
                    star: false,
                    j,
                    binom_top: 0,
                    up: true,
                }),
            }),
            OperatorAtom::PsiStar(j) => Some(match mode {
                Mode::Upper => Step::Fermion(Expanded {
                    star: true,
                    j,
                    binom_top: right,
                    up: false,
                }),
                Mode::Lower => Step::Fermion(Expanded {
                    star: true,
                    j,
                    binom_top: -left,
                    up: true,
                }),
                Mode::Plain => Step::Fermion(Expanded {
                    star: true,
                    j,
                    binom_top: 0,
                    up: true,
                }),
            }),
            OperatorAtom::Boson(m) => Some(Step::Boson(m)),
            _ => None,
        };
        expanded.extend(step);
    }
    while let Some(s) = expanded.pop() {
        steps.push(s);
    }
    (steps, total)
}

/// Weight change of the `m = 0` term when the fermion acts at charge `c`.
fn base_delta(e: &Expanded, c: i64) -> i64 {
    if e.star {
        c - 1 - e.j
    } else {
        e.j - c
    }
}

/// `⟨0| e^{H(x)} · word · |right_charge⟩` as a truncated symmetric function
/// in the Schur basis.
///
/// Exponentials `e^{kΘ}` are commuted to the left, where they contribute
/// `∏ (1 + βx_i)^k`; exponentials `e^{kθ}` are commuted to the right, where
/// they fix the vacuum. A word may use one of the two kinds, and bosons only
/// appear in words without exponentials.
pub fn vacuum_expectation(word: &OperatorWord, right_charge: i64, caps: TruncationCaps) -> Result<SymmetricElement> {
    let mode = classify(word)?;
    if right_charge + word.net_charge() != 0 {
        return Ok(SymmetricElement::zero(Basis::Schur, caps));
    }
    let (steps, total) = expand(word, mode);
    let d = caps.max_degree as i64;

    // charges and base weight changes in application order
    let mut charges = Vec::with_capacity(steps.len());
    let mut c = right_charge;
    for s in &steps {
        charges.push(c);
        if let Step::Fermion(e) = s {
            c += if e.star { -1 } else { 1 };
        }
    }
    let bases: Vec<i64> = steps
        .iter()
        .zip(&charges)
        .map(|(s, &c)| match s {
            Step::Fermion(e) => base_delta(e, c),
            Step::Boson(_) => 0,
        })
        .collect();
    let mut future = vec![0i64; steps.len() + 1];
    for i in (0..steps.len()).rev() {
        future[i] = future[i + 1] + bases[i];
    }
    if mode != Mode::Lower && !steps.iter().any(|s| matches!(s, Step::Boson(_))) && future[0] > d {
        return Err(Error::CapsTooSmall(format!(
            "{word}: lowest term has degree {} above the cap {d}",
            future[0]
        )));
    }

    let mut state = FockVector::vacuum(right_charge);
    for (idx, s) in steps.iter().enumerate() {
        state = match s {
            Step::Boson(m) => apply_boson(*m, &state),
            Step::Fermion(e) => {
                let mut next = FockVector::zero();
                for (ket, coeff) in state.terms() {
                    let w = ket.shape.weight() as i64;
                    let lowest = w + bases[idx] + future[idx + 1];
                    let budget = match mode {
                        Mode::Plain => 0,
                        Mode::Upper => d - lowest,
                        // final weight cannot drop below zero
                        Mode::Lower => lowest,
                    };
                    if budget < 0 {
                        continue;
                    }
                    apply_expanded(e, ket, coeff, budget as u32, &mut next);
                }
                next
            }
        };
    }

    let mut out = Vec::new();
    for (ket, c) in state.terms() {
        if ket.charge == 0 && ket.shape.weight() as i64 <= d {
            out.push((ket.shape.clone(), c.clone()));
        }
    }
    let body = SymmetricElement::from_coeffs(Basis::Schur, out, caps);
    if mode != Mode::Upper || total == 0 || body.is_zero() {
        return Ok(body);
    }
    let factor = beta_shift_power(total, caps);
    body.try_mul(&factor)
}

fn apply_expanded(e: &Expanded, ket: &MayaKet, coeff: &BetaScalar, budget: u32, out: &mut FockVector) {
    let top_occupied = ket.charge + ket.shape.part(0) as i64 - 1;
    for m in 0..=budget {
        let c = integer_binomial(e.binom_top, m);
        if e.binom_top >= 0 && m as i64 > e.binom_top {
            break;
        }
        let j = if e.up { e.j + m as i64 } else { e.j - m as i64 };
        // past these indices every further term vanishes
        if !e.star && !e.up && j <= ket.sea_level() {
            break;
        }
        if e.star && e.up && j > top_occupied {
            break;
        }
        if c == 0.into() {
            continue;
        }
        let res = if e.star { ket.psi_star(j) } else { ket.psi(j) };
        if let Some((neg, k2)) = res {
            let amp = BetaScalar::monomial(c, m);
            let v = coeff * &amp;
            out.add_term(k2, if neg { -v } else { v });
        }
    }
}

/// `∏_{i ≤ n} (1 + β x_i)^k`, truncated. For negative `k` this uses
/// `∏ (1 + β x_i)^{-1} = Σ_j (-β)^j h_j`.
pub fn beta_shift_power(k: i64, caps: TruncationCaps) -> SymmetricElement {
    let top = caps.max_degree.min(caps.n_vars as u32);
    let base = if k >= 0 {
        SymmetricElement::from_coeffs(
            Basis::Schur,
            (0..=top).map(|j| (Partition::column(j), BetaScalar::beta_pow(j))),
            caps,
        )
    } else {
        SymmetricElement::from_coeffs(
            Basis::CompleteH,
            (0..=caps.max_degree).map(|j| (Partition::row(j), BetaScalar::neg_beta_pow(j))),
            caps,
        )
        .to_basis(Basis::Schur)
        .expect("the Schur basis is always reachable")
    };
    base.pow(k.unsigned_abs() as u32)
}

fn check_chain(n: &[i64]) -> Result<()> {
    if n.iter().any(|&x| x < 0) {
        return Err(Error::Precondition(format!("{n:?} has a negative entry")));
    }
    if n.windows(2).any(|w| w[1] > w[0] + 1) {
        return Err(Error::Precondition(format!(
            "{n:?} violates n_j - j >= n_(j+1) - j - 1"
        )));
    }
    Ok(())
}

fn to_partition(v: Vec<i64>) -> Partition {
    Partition::new(v.into_iter().map(|x| x as u32).collect()).expect("weakly decreasing by construction")
}

fn signed_beta_power(exp: i64) -> BetaScalar {
    BetaScalar::neg_beta_pow(exp as u32)
}

/// `ψ_{n_1-1}e^Θ ... ψ_{n_r-r}e^Θ = (-β)^{|n̄|-|n|} ψ_{n̄_1-1}e^Θ ... ψ_{n̄_r-r}e^Θ`
/// with `n̄_j = max(n_j, ..., n_r)`. Entries must be non-negative.
pub fn straighten_raising(n: &[i64]) -> Result<(BetaScalar, Partition)> {
    check_chain(n)?;
    let mut bar = n.to_vec();
    for j in (0..bar.len().saturating_sub(1)).rev() {
        bar[j] = bar[j].max(bar[j + 1]);
    }
    let diff = bar.iter().sum::<i64>() - n.iter().sum::<i64>();
    Ok((signed_beta_power(diff), to_partition(bar)))
}

/// `ψ_{n_1-1}e^{-θ} ... = (-β)^{|n|-|n̲|} ψ_{n̲_1-1}e^{-θ} ...` with
/// `n̲_j = min(n_1, ..., n_j)`. Entries must be non-negative.
pub fn straighten_lowering(n: &[i64]) -> Result<(BetaScalar, Partition)> {
    check_chain(n)?;
    let mut under = n.to_vec();
    for j in 1..under.len() {
        under[j] = under[j].min(under[j - 1]);
    }
    let diff = n.iter().sum::<i64>() - under.iter().sum::<i64>();
    Ok((signed_beta_power(diff), to_partition(under)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::part;
    use OperatorAtom::*;

    #[test]
    fn series_terms() {
        let t: Vec<_> = conjugate_psi_by_exp_theta(2, 3).terms().collect();
        assert_eq!(
            t,
            vec![
                (3, BetaScalar::one()),
                (4, BetaScalar::monomial(2.into(), 1)),
                (5, BetaScalar::beta_pow(2))
            ]
        );
        assert_eq!(conjugate_psi_by_exp_theta(0, 1).terms().count(), 1);
        let neg: Vec<_> = conjugate_psi_by_exp_theta(-1, 0).terms().take(3).collect();
        assert_eq!(neg[2], (2, BetaScalar::beta_pow(2)));
    }

    #[test]
    fn schur_words() {
        let caps = TruncationCaps::new(4, 5);
        let w = OperatorWord::new(vec![Psi(1), Psi(-1)]);
        assert_eq!(
            vacuum_expectation(&w, -2, caps).unwrap(),
            SymmetricElement::schur(part(&[2, 1]), caps)
        );
        assert_eq!(
            vacuum_expectation(&OperatorWord::default(), 0, caps).unwrap(),
            SymmetricElement::one(caps)
        );
        assert!(vacuum_expectation(&w, -1, caps).unwrap().is_zero());
    }

    #[test]
    fn rejects_mixed_words() {
        let caps = TruncationCaps::new(2, 2);
        let w = OperatorWord::new(vec![Psi(0), ExpTheta(1), ExpThetaLower(-1)]);
        assert!(matches!(
            vacuum_expectation(&w, -1, caps),
            Err(Error::UnsupportedWord(_))
        ));
        let w = OperatorWord::new(vec![Boson(-1), ExpTheta(1)]);
        assert!(matches!(
            vacuum_expectation(&w, 0, caps),
            Err(Error::UnsupportedWord(_))
        ));
    }

    #[test]
    fn straightening() {
        assert_eq!(straighten_raising(&[2, 1]).unwrap(), (BetaScalar::one(), part(&[2, 1])));
        assert_eq!(
            straighten_raising(&[1, 2]).unwrap(),
            (BetaScalar::neg_beta_pow(1), part(&[2, 2]))
        );
        assert_eq!(
            straighten_raising(&[0, 0, 0]).unwrap(),
            (BetaScalar::one(), Partition::empty())
        );
        assert_eq!(
            straighten_lowering(&[2, 2]).unwrap(),
            (BetaScalar::one(), part(&[2, 2]))
        );
        assert_eq!(
            straighten_lowering(&[3, 1]).unwrap(),
            (BetaScalar::one(), part(&[3, 1]))
        );
        assert_eq!(
            straighten_lowering(&[1, 2]).unwrap(),
            (BetaScalar::neg_beta_pow(1), part(&[1, 1]))
        );
        assert!(straighten_raising(&[0, 2]).is_err());
    }
}
