use grothendieck::algebra::BetaScalar;
use grothendieck::fermion::*;
use grothendieck::kpoly::{bialternant, one_row};
use grothendieck::symfunc::*;
use grothendieck::Error;
use proptest::prelude::*;
use OperatorAtom::*;

fn caps(n: usize, d: u32) -> TruncationCaps {
    TruncationCaps::new(n, d)
}

fn ket(charge: i64, p: &[u32]) -> FockVector {
    FockVector::ket(MayaKet::new(charge, part(p)))
}

#[test]
fn fermion_actions() {
    assert_eq!(apply_psi(0, &FockVector::vacuum(-1)), ket(0, &[1]));
    assert!(apply_psi(-1, &FockVector::vacuum(0)).is_zero());
    assert_eq!(apply_psi_star(-1, &FockVector::vacuum(0)), FockVector::vacuum(-1));
    for (m, n) in [(1, 1), (1, 2), (0, 0), (-3, 2)] {
        assert!(anticommutator_check(m, n, &FockVector::vacuum(0)));
        assert!(anticommutator_check(m, n, &ket(1, &[3, 1])));
    }
}

#[test]
fn boson_actions() {
    assert!(apply_boson(1, &FockVector::vacuum(0)).is_zero());
    assert_eq!(apply_boson(-1, &FockVector::vacuum(0)), ket(0, &[1]));
    let v = FockVector::vacuum(0);
    let c = apply_boson(1, &apply_boson(-1, &v)).sub(&apply_boson(-1, &apply_boson(1, &v)));
    assert_eq!(c, v);
    // a_{-2}|0⟩ = p_2 = s_(2) - s_(1,1)
    let want = ket(0, &[2]).sub(&ket(0, &[1, 1]));
    assert_eq!(apply_boson(-2, &v), want);
}

#[test]
fn wick_examples() {
    assert_eq!(wick_expectation(&[-1], &[-1]).unwrap(), BetaScalar::one());
    assert_eq!(wick_expectation(&[-1], &[0]).unwrap(), BetaScalar::zero());
    assert_eq!(
        wick_expectation(&[-1, -2], &[-2, -1]).unwrap(),
        BetaScalar::from_int(-1)
    );
    assert!(matches!(
        wick_expectation(&[-1, -2], &[-1]),
        Err(Error::LengthMismatch { left: 2, right: 1 })
    ));
}

#[test]
fn conjugation_series() {
    let one: Vec<_> = conjugate_psi_by_exp_theta(1, 4).terms().collect();
    assert_eq!(one, vec![(4, BetaScalar::one()), (5, BetaScalar::beta_pow(1))]);
    let two: Vec<_> = conjugate_psi_by_exp_theta(2, 4).terms().collect();
    assert_eq!(
        two,
        vec![
            (4, BetaScalar::one()),
            (5, BetaScalar::monomial(2.into(), 1)),
            (6, BetaScalar::beta_pow(2))
        ]
    );
    let zero: Vec<_> = conjugate_psi_by_exp_theta(0, 4).terms().collect();
    assert_eq!(zero, vec![(4, BetaScalar::one())]);
}

#[test]
fn vacuum_expectation_examples() {
    let c = caps(3, 5);
    let s21 = vacuum_expectation(&OperatorWord::new(vec![Psi(1), Psi(-1)]), -2, c).unwrap();
    assert_eq!(s21, SymmetricElement::schur(part(&[2, 1]), c));
    assert_eq!(
        vacuum_expectation(&OperatorWord::default(), 0, c).unwrap(),
        SymmetricElement::one(c)
    );

    let g1 = vacuum_expectation(&OperatorWord::new(vec![Psi(0), ExpTheta(1)]), -1, c).unwrap();
    let poly = bialternant(&part(&[1]), 3).unwrap().truncate(5);
    assert_eq!(g1, SymmetricElement::from_polynomial(&poly, c).unwrap());
    assert_eq!(g1, one_row(1, c));
}

#[test]
fn charge_bookkeeping() {
    let c = caps(3, 4);
    let w = OperatorWord::new(vec![Psi(0), Psi(-1)]);
    assert!(vacuum_expectation(&w, -1, c).unwrap().is_zero());
    assert!(vacuum_expectation(&w, 0, c).unwrap().is_zero());
    let w = OperatorWord::new(vec![PsiStar(-1), Psi(0), ExpTheta(1)]);
    assert_eq!(w.net_charge(), 0);
    assert!(vacuum_expectation(&w, -1, c).unwrap().is_zero());
}

#[test]
fn boson_words_give_power_sums() {
    let c = caps(3, 4);
    let w = OperatorWord::new(vec![Boson(-2)]);
    let got = vacuum_expectation(&w, 0, c).unwrap();
    assert_eq!(got.to_polynomial(), p_poly(2, 3));
}

#[test]
fn straightening_matches_words() {
    let c = caps(4, 8);
    let upper = |n: &[i64]| {
        let w = OperatorWord::interleaved(n, n.len(), Some(ExpTheta(1)));
        vacuum_expectation(&w, -(n.len() as i64), c).unwrap()
    };
    let lower = |n: &[i64]| {
        let w = OperatorWord::interleaved(n, n.len(), Some(ExpThetaLower(-1)));
        vacuum_expectation(&w, -(n.len() as i64), c).unwrap()
    };
    for n in [
        vec![2, 1],
        vec![1, 2],
        vec![0, 0, 0],
        vec![0, 1],
        vec![1, 2, 2],
        vec![2, 3, 1],
    ] {
        let (k, p) = straighten_raising(&n).unwrap();
        let rhs = upper(&p.padded(n.len()).iter().map(|&x| x as i64).collect::<Vec<_>>()).scale(&k);
        assert_eq!(upper(&n), rhs, "raising {n:?}");
        let (k, p) = straighten_lowering(&n).unwrap();
        let rhs = lower(&p.padded(n.len()).iter().map(|&x| x as i64).collect::<Vec<_>>()).scale(&k);
        assert_eq!(lower(&n), rhs, "lowering {n:?}");
    }
    assert_eq!(
        straighten_raising(&[1, 2]).unwrap(),
        (BetaScalar::neg_beta_pow(1), part(&[2, 2]))
    );
    assert_eq!(
        straighten_lowering(&[2, 2]).unwrap(),
        (BetaScalar::one(), part(&[2, 2]))
    );
    assert!(matches!(straighten_raising(&[-1, 0]), Err(Error::Precondition(_))));
}

#[test]
fn exp_theta_prefactor() {
    // e^{H} e^{Θ} = ∏(1+βx) e^{Θ} e^{H}: ⟨0|e^H e^Θ|0⟩ is ∏(1+βx_i)
    let c = caps(3, 3);
    let got = vacuum_expectation(&OperatorWord::new(vec![ExpTheta(1)]), 0, c).unwrap();
    assert_eq!(got, beta_shift_power(1, c));
    let poly = grothendieck::algebra::beta_shift_product(3, 1);
    assert_eq!(got, SymmetricElement::from_polynomial(&poly, c).unwrap());
}

fn arb_ket() -> impl Strategy<Value = FockVector> {
    (-3i64..=3, prop::sample::select(partitions_up_to(6, 4))).prop_map(|(c, p)| FockVector::ket(MayaKet::new(c, p)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn anticommutation(v in arb_ket(), m in -6i64..=6, n in -6i64..=6) {
        prop_assert!(anticommutator_check(m, n, &v));
    }

    #[test]
    fn boson_fermion_commutator(v in arb_ket(), m in prop::sample::select(vec![-4i64, -3, -2, -1, 1, 2, 3, 4]), n in -5i64..=5) {
        let lhs = apply_boson(m, &apply_psi(n, &v)).sub(&apply_psi(n, &apply_boson(m, &v)));
        prop_assert_eq!(lhs, apply_psi(n - m, &v));
    }

    #[test]
    fn wick_theorem(ms in prop::collection::vec(-5i64..=1, 1..=4), ns in prop::collection::vec(-5i64..=1, 4)) {
        let ns = &ns[..ms.len()];
        prop_assert_eq!(wick_expectation(&ms, ns).unwrap(), direct_expectation(&ms, ns));
    }

    #[test]
    fn cap_consistency(lam in prop::sample::select(partitions_up_to(4, 3)), extra in 1u32..3) {
        let n: Vec<i64> = lam.parts().iter().map(|&p| p as i64).collect();
        let w = OperatorWord::interleaved(&n, lam.len(), Some(ExpTheta(1)));
        let d = lam.weight() + 1;
        let low = vacuum_expectation(&w, -(lam.len() as i64), caps(3, d)).unwrap();
        let high = vacuum_expectation(&w, -(lam.len() as i64), caps(3, d + extra)).unwrap();
        prop_assert_eq!(high.truncate(caps(3, d)).unwrap(), low);
    }
}
