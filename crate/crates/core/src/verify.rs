//! Self-checks over finite ranges, shared by the acceptance tests and the
//! `verify` command.
//!
//! Each check counts the instances it covered and keeps the first
//! counterexample. Library errors raised while checking count as failures.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{integer_binomial, BetaScalar, MultiPoly};
use crate::fermion::{
    anticommutator_check, apply_boson, apply_exp_component, apply_psi, apply_psi_star, conjugate_psi_by_exp_theta,
    direct_expectation, wick_expectation, FockVector, MayaKet,
};
use crate::kpoly::{
    bialternant, default_rows, dual_determinant, dual_fermionic, g_r, g_r_fermionic, jacobi_trudi, GrothendieckSpec,
    Method,
};
use crate::pieri::{
    apply_word, column_word, d_apply, expand_sG, expand_sg, noncomm_e_apply, noncomm_schur_apply, noncomm_schur_via_jt,
    pieri_e_g, pieri_h_g, u_apply, Family, PartitionCombo, Tableau,
};
use crate::symfunc::{
    beta_prefix_schur, part, partitions_up_to, schur_jt, Basis, Partition, SymmetricElement, TruncationCaps,
};
use crate::{Error, Result};

pub const DEFAULT_SEED: u64 = 20_240_601;
pub const DEFAULT_INSTANCES: usize = 200;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub checked: usize,
    pub failure: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "{}: PASS ({} checked)", self.name, self.checked),
            Some(why) => write!(
                f,
                "{}: FAIL ({} checked; first counterexample: {why})",
                self.name, self.checked
            ),
        }
    }
}

struct Tally {
    name: String,
    checked: usize,
    failure: Option<String>,
}

impl Tally {
    fn new(name: impl Into<String>) -> Self {
        Tally {
            name: name.into(),
            checked: 0,
            failure: None,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn check_result(&mut self, r: Result<bool>, what: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.check(ok, what),
            Err(e) => {
                let msg = format!("{} ({e})", what());
                self.check(false, || msg);
            }
        }
    }

    fn finish(self) -> CheckReport {
        CheckReport {
            name: self.name,
            checked: self.checked,
            failure: self.failure,
        }
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn b(c: i64, e: u32) -> BetaScalar {
    BetaScalar::monomial(c.into(), e)
}

fn combo(terms: &[(&[u32], BetaScalar)]) -> PartitionCombo {
    PartitionCombo::from_terms(terms.iter().map(|(p, c)| (part(p), c.clone())))
}

// ---------------------------------------------------------------- routes

const G_ROUTES: [(Method, &str); 4] = [
    (Method::Bialternant, "bialternant"),
    (Method::JacobiTrudi, "jacobi-trudi"),
    (Method::Fermionic, "fermionic"),
    (Method::AnotherDeterminant, "another-determinant"),
];

/// The four `G_λ` constructors agree for every shape in range.
pub fn route_agreement(max_weight: u32, max_len: usize, caps: TruncationCaps) -> CheckReport {
    let shapes = partitions_up_to(max_weight, max_len);
    let mut t = Tally::new(format!(
        "G routes agree on {} shapes at caps ({},{})",
        shapes.len(),
        caps.n_vars,
        caps.max_degree
    ));
    for lam in &shapes {
        let r = (|| {
            let vals = G_ROUTES
                .iter()
                .map(|(m, _)| GrothendieckSpec::new(lam.clone(), *m, caps).compute())
                .collect::<Result<Vec<_>>>()?;
            let mut ok = vals.iter().all(|v| v == &vals[0]);
            if lam.is_empty() {
                ok &= vals[0] == SymmetricElement::one(caps);
            }
            Ok(ok)
        })();
        t.check_result(r, || format!("{lam:?}"));
    }
    t.finish()
}

/// The determinant and operator-word routes for `g_λ` agree.
pub fn dual_route_agreement(max_weight: u32, max_len: usize, caps: TruncationCaps) -> CheckReport {
    let shapes = partitions_up_to(max_weight, max_len);
    let mut t = Tally::new(format!("g routes agree on {} shapes", shapes.len()));
    for lam in &shapes {
        let r = (|| Ok(dual_determinant(lam, lam.len(), caps)? == dual_fermionic(lam, lam.len(), caps)?))();
        t.check_result(r, || format!("{lam:?}"));
    }
    t.finish()
}

/// Every `G` and `g` constructor reduces to `s_λ` at `β = 0`.
pub fn beta_zero_constructors(max_weight: u32, max_len: usize, caps: TruncationCaps) -> CheckReport {
    let shapes = partitions_up_to(max_weight, max_len);
    let mut t = Tally::new(format!(
        "beta = 0 gives s_lambda for every constructor on {} shapes",
        shapes.len()
    ));
    for lam in &shapes {
        let s = match schur_jt(lam, lam.len(), caps) {
            Ok(s) => s,
            Err(e) => {
                t.check(false, || format!("{lam:?}: schur_jt ({e})"));
                continue;
            }
        };
        for (m, name) in G_ROUTES {
            let r = GrothendieckSpec::new(lam.clone(), m, caps)
                .compute()
                .map(|g| g.at_beta_zero() == s);
            t.check_result(r, || format!("{lam:?} by {name}"));
        }
        let r = dual_determinant(lam, lam.len(), caps).map(|g| g.at_beta_zero() == s);
        t.check_result(r, || format!("g{lam:?} by determinant"));
        let r = dual_fermionic(lam, lam.len(), caps).map(|g| g.at_beta_zero() == s);
        t.check_result(r, || format!("g{lam:?} by operator word"));
    }
    t.finish()
}

// ---------------------------------------------------------------- duality

/// `⟨G_λ, g_μ⟩ = δ_{λμ}` for all shapes of weight at most `max_weight`.
pub fn gram_identity(max_weight: u32, caps: TruncationCaps) -> CheckReport {
    let shapes = partitions_up_to(max_weight, max_weight as usize);
    let n = shapes.len();
    let mut t = Tally::new(format!("{n}x{n} Gram block == identity"));
    let big: Result<Vec<_>> = shapes
        .iter()
        .map(|l| jacobi_trudi(l, default_rows(l, caps), caps))
        .collect();
    let small: Result<Vec<_>> = shapes.iter().map(|m| dual_determinant(m, m.len(), caps)).collect();
    let (big, small) = match (big, small) {
        (Ok(b), Ok(s)) => (b, s),
        (Err(e), _) | (_, Err(e)) => {
            t.check(false, || format!("constructing the bases ({e})"));
            return t.finish();
        }
    };
    for (i, g) in big.iter().enumerate() {
        for (j, d) in small.iter().enumerate() {
            let want = if i == j { BetaScalar::one() } else { BetaScalar::zero() };
            let r = g.hall_pair(d).map(|v| v == want);
            t.check_result(r, || format!("<G{:?}, g{:?}>", shapes[i], shapes[j]));
        }
    }
    t.finish()
}

// ---------------------------------------------------------------- knuth

fn family_name(f: Family) -> &'static str {
    match f {
        Family::U => "u",
        Family::D => "d",
    }
}

fn random_shapes(seed: u64, instances: usize) -> Vec<Partition> {
    let pool = partitions_up_to(8, 6);
    let mut r = rng(seed);
    (0..instances)
        .map(|_| pool.choose(&mut r).expect("nonempty pool").clone())
        .collect()
}

/// `op_i op_k op_j = op_k op_i op_j` for `i ≤ j < k` and
/// `op_j op_i op_k = op_j op_k op_i` for `i < j ≤ k`, on random shapes.
pub fn knuth_relations(family: Family, seed: u64, instances: usize, max_index: u32) -> CheckReport {
    let mut t = Tally::new(format!(
        "Knuth relations for {} on {instances} random shapes, indices <= {max_index}",
        family_name(family)
    ));
    for lam in random_shapes(seed, instances) {
        let c = PartitionCombo::single(lam.clone());
        let mut ok = true;
        let mut bad = None;
        for i in 1..=max_index {
            for j in 1..=max_index {
                for k in 1..=max_index {
                    if i <= j && j < k && apply_word(family, &[i, k, j], &c) != apply_word(family, &[k, i, j], &c) {
                        ok = false;
                        bad.get_or_insert((i, j, k));
                    }
                    if i < j && j <= k && apply_word(family, &[j, i, k], &c) != apply_word(family, &[j, k, i], &c) {
                        ok = false;
                        bad.get_or_insert((i, j, k));
                    }
                }
            }
        }
        t.check(ok, || format!("{lam:?} at (i,j,k) = {:?}", bad.unwrap()));
    }
    t.finish()
}

/// `e_a(op) e_b(op) = e_b(op) e_a(op)` in `n` operators, on random shapes.
pub fn elementary_commute(family: Family, seed: u64, instances: usize, n: usize, max_k: i64) -> CheckReport {
    let mut t = Tally::new(format!(
        "e_a e_b = e_b e_a for {} on {instances} random shapes, a,b <= {max_k}",
        family_name(family)
    ));
    for lam in random_shapes(seed ^ 0x9e37_79b9, instances) {
        let c = PartitionCombo::single(lam.clone());
        let mut bad = None;
        for a in 1..=max_k {
            for b in a + 1..=max_k {
                let ab = noncomm_e_apply(a, n, family, &noncomm_e_apply(b, n, family, &c));
                let ba = noncomm_e_apply(b, n, family, &noncomm_e_apply(a, n, family, &c));
                if ab != ba {
                    bad.get_or_insert((a, b));
                }
            }
        }
        t.check(bad.is_none(), || format!("{lam:?} at (a,b) = {:?}", bad.unwrap()));
    }
    t.finish()
}

// ---------------------------------------------------------------- wick

fn random_vector(r: &mut ChaCha8Rng, pool: &[Partition]) -> FockVector {
    let mut v = FockVector::zero();
    for _ in 0..r.gen_range(1..=2) {
        let ket = MayaKet::new(r.gen_range(-3..=3), pool.choose(r).expect("nonempty pool").clone());
        v.add_term(ket, BetaScalar::from_int(r.gen_range(1..=3)));
    }
    v
}

/// `{ψ_m, ψ*_n} = δ_{mn}` and `{ψ_m, ψ_n} = {ψ*_m, ψ*_n} = 0` on random
/// vectors.
pub fn anticommutators(seed: u64, instances: usize) -> CheckReport {
    let pool = partitions_up_to(6, 4);
    let mut r = rng(seed);
    let mut t = Tally::new(format!("fermion anticommutators on {instances} random instances"));
    for _ in 0..instances {
        let v = random_vector(&mut r, &pool);
        let m = r.gen_range(-6..=6);
        let n = r.gen_range(-6..=6);
        let pp = apply_psi(m, &apply_psi(n, &v)).add(&apply_psi(n, &apply_psi(m, &v)));
        let ss = apply_psi_star(m, &apply_psi_star(n, &v)).add(&apply_psi_star(n, &apply_psi_star(m, &v)));
        let ok = anticommutator_check(m, n, &v) && pp.is_zero() && ss.is_zero();
        t.check(ok, || format!("m = {m}, n = {n}, v = {v:?}"));
    }
    t.finish()
}

/// `[a_m, a_n] = m δ_{m+n,0}` on random vectors.
pub fn boson_commutators(seed: u64, instances: usize) -> CheckReport {
    let pool = partitions_up_to(6, 4);
    let mut r = rng(seed.wrapping_add(1));
    let mut t = Tally::new(format!("boson commutators on {instances} random instances"));
    let mode = |r: &mut ChaCha8Rng| {
        let k: i64 = r.gen_range(1..=4);
        if r.gen_bool(0.5) {
            k
        } else {
            -k
        }
    };
    for _ in 0..instances {
        let v = random_vector(&mut r, &pool);
        let m = mode(&mut r);
        let n = mode(&mut r);
        let lhs = apply_boson(m, &apply_boson(n, &v)).sub(&apply_boson(n, &apply_boson(m, &v)));
        let rhs = if m + n == 0 {
            v.scale(&BetaScalar::from_int(m))
        } else {
            FockVector::zero()
        };
        t.check(lhs == rhs, || format!("m = {m}, n = {n}, v = {v:?}"));
    }
    t.finish()
}

/// The Wick determinant equals direct evaluation of the word on `|0⟩`.
pub fn wick_vs_direct(seed: u64, instances: usize) -> CheckReport {
    let mut r = rng(seed.wrapping_add(2));
    let mut t = Tally::new(format!(
        "Wick determinant == direct evaluation on {instances} random words"
    ));
    for _ in 0..instances {
        let len = r.gen_range(1..=3);
        let ms: Vec<i64> = (0..len).map(|_| r.gen_range(-5..=1)).collect();
        let ns: Vec<i64> = (0..len).map(|_| r.gen_range(-5..=1)).collect();
        let res = wick_expectation(&ms, &ns).map(|w| w == direct_expectation(&ms, &ns));
        t.check_result(res, || format!("ms = {ms:?}, ns = {ns:?}"));
    }
    t.finish()
}

/// The `β^d` part of `e^{kΘ}` (`k ≥ 0`) applied to `v`.
fn exp_power_component(k: u32, d: u32, lower: bool, v: &FockVector) -> FockVector {
    if k == 0 {
        return if d == 0 { v.clone() } else { FockVector::zero() };
    }
    let mut acc = FockVector::zero();
    for a in 0..=d {
        let inner = exp_power_component(k - 1, d - a, lower, v);
        acc = acc.add(&apply_exp_component(a, lower, &inner));
    }
    acc
}

/// `e^{kΘ} ψ_n e^{-kΘ} = Σ_m binom(k,m) β^m ψ_{n+m}` and its `θ` mirror
/// `ψ_n + βψ_{n-1}`, with `e^Θ` built from bosons independently of the
/// word evaluator. Compared degree by degree in `β`.
pub fn theta_conjugation(seed: u64, instances: usize, max_beta_degree: u32) -> CheckReport {
    let pool = partitions_up_to(5, 3);
    let mut r = rng(seed.wrapping_add(3));
    let mut t = Tally::new(format!(
        "exp(Theta) conjugation of psi_n on {instances} random instances"
    ));
    for _ in 0..instances {
        let v = random_vector(&mut r, &pool);
        let n = r.gen_range(-5..=5);
        let lower = r.gen_bool(0.3);
        let k: u32 = if lower { 1 } else { r.gen_range(1..=2) };
        let series: Vec<(i64, BetaScalar)> = if lower {
            vec![(n, BetaScalar::one()), (n - 1, BetaScalar::beta_pow(1))]
        } else {
            conjugate_psi_by_exp_theta(k as i64, n).terms().collect()
        };
        let mut ok = true;
        for d in 0..=max_beta_degree {
            let lhs = exp_power_component(k, d, lower, &apply_psi(n, &v));
            let mut rhs = FockVector::zero();
            for (idx, c) in &series {
                let m = c.low_degree().unwrap_or(0);
                if m > d {
                    continue;
                }
                let coeff = BetaScalar::from_bigint(c.coeff(m));
                rhs = rhs.add(&apply_psi(*idx, &exp_power_component(k, d - m, lower, &v)).scale(&coeff));
            }
            ok &= lhs == rhs;
        }
        let which = if lower { "theta" } else { "Theta" };
        t.check(ok, || format!("{which}, k = {k}, n = {n}, v = {v:?}"));
    }
    t.finish()
}

// ---------------------------------------------------------------- pieri

/// Every displayed value this library is pinned to.
pub fn reference_fixtures() -> CheckReport {
    let mut t = Tally::new("reference fixtures");
    let e = Partition::empty();
    let one = BetaScalar::one;

    let c22 = PartitionCombo::single(part(&[2, 2]));
    t.check(u_apply(1, &c22) == combo(&[(&[3, 2], one())]), || "u_1 (2,2)".into());
    t.check(u_apply(2, &c22) == combo(&[(&[3, 3], b(-1, 1))]), || "u_2 (2,2)".into());
    t.check(u_apply(3, &c22) == combo(&[(&[2, 2, 1], one())]), || "u_3 (2,2)".into());
    let c11 = PartitionCombo::single(part(&[1, 1]));
    t.check(d_apply(1, &c11) == combo(&[(&[2, 1], one())]), || "d_1 (1,1)".into());
    t.check(d_apply(3, &c11) == combo(&[(&[1, 1, 1], one())]), || "d_3 (1,1)".into());
    t.check(d_apply(2, &c11) == combo(&[(&[1, 1], b(-1, 1))]), || "d_2 (1,1)".into());

    let tab = Tableau::new(vec![vec![1, 3, 4, 4], vec![2, 5], vec![3]], 5);
    t.check(
        tab.map(|t| column_word(&t) == vec![3, 2, 1, 5, 3, 4, 4])
            .unwrap_or(false),
        || "column word 3215344".into(),
    );

    let sg = |l: &[u32], m: &[u32], r: usize| expand_sG(&part(l), &part(m), r);
    let displays: [(Result<PartitionCombo>, PartitionCombo, &str); 5] = [
        (
            sg(&[2], &[], 2),
            combo(&[(&[2], one()), (&[2, 1], b(-1, 1)), (&[2, 2], b(1, 2))]),
            "h_2 G_()",
        ),
        (
            sg(&[2], &[1], 2),
            combo(&[(&[3], one()), (&[2, 1], one()), (&[2, 2], b(-1, 1))]),
            "h_2 G_(1)",
        ),
        (
            sg(&[2], &[2], 2),
            combo(&[(&[4], one()), (&[3, 1], one()), (&[2, 2], one())]),
            "h_2 G_(2)",
        ),
        (
            sg(&[2, 1], &[], 3),
            combo(&[
                (&[2, 1], one()),
                (&[2, 2], b(-1, 1)),
                (&[2, 1, 1], b(-2, 1)),
                (&[2, 2, 1], b(2, 2)),
                (&[2, 2, 2], b(-2, 3)),
            ]),
            "s_(2,1) G_()",
        ),
        (
            sg(&[2, 1], &[1], 3),
            combo(&[
                (&[3, 1], one()),
                (&[2, 2], one()),
                (&[2, 1, 1], one()),
                (&[2, 2, 1], b(-2, 1)),
                (&[3, 1, 1], b(-1, 1)),
                (&[2, 2, 2], b(2, 2)),
            ]),
            "s_(2,1) G_(1)",
        ),
    ];
    for (got, want, name) in displays {
        t.check(got.map(|g| g == want).unwrap_or(false), || name.into());
    }

    let e_empty = pieri_e_g(3, &e);
    let e_want = [
        combo(&[(&[], one())]),
        combo(&[(&[1], one())]),
        combo(&[(&[1], b(1, 1)), (&[1, 1], one())]),
        combo(&[(&[1], b(1, 2)), (&[1, 1], b(2, 1)), (&[1, 1, 1], one())]),
    ];
    for (i, w) in e_want.iter().enumerate() {
        t.check(&e_empty[i] == w, || format!("E(t) at t^{i}"));
    }
    let e_one = pieri_e_g(2, &part(&[1]));
    let e1_want = [
        combo(&[(&[1], one())]),
        combo(&[(&[1], b(1, 1)), (&[1, 1], one()), (&[2], one())]),
        combo(&[
            (&[1], b(1, 2)),
            (&[1, 1], b(2, 1)),
            (&[2], b(1, 1)),
            (&[1, 1, 1], one()),
            (&[2, 1], one()),
        ]),
    ];
    for (i, w) in e1_want.iter().enumerate() {
        t.check(&e_one[i] == w, || format!("E(t) g_(1) at t^{i}"));
    }

    let h_empty = pieri_h_g(3, &e);
    for (k, got) in h_empty.iter().enumerate() {
        let want = PartitionCombo::single(Partition::row(k as u32));
        t.check(got == &want, || format!("H(t) at t^{k}"));
    }
    let h_one = pieri_h_g(2, &part(&[1]));
    let h1_want = [
        combo(&[(&[1], one())]),
        combo(&[(&[1], b(1, 1)), (&[2], one()), (&[1, 1], one())]),
        combo(&[(&[2], b(1, 1)), (&[3], one()), (&[2, 1], one())]),
    ];
    for (i, w) in h1_want.iter().enumerate() {
        t.check(&h_one[i] == w, || format!("H(t) g_(1) at t^{i}"));
    }
    let h_two = pieri_h_g(2, &part(&[2]));
    let h2_want = [
        combo(&[(&[2], one())]),
        combo(&[(&[2], b(1, 1)), (&[2, 1], one()), (&[3], one())]),
        combo(&[
            (&[3], b(1, 1)),
            (&[2, 1], b(1, 1)),
            (&[4], one()),
            (&[3, 1], one()),
            (&[2, 2], one()),
        ]),
    ];
    for (i, w) in h2_want.iter().enumerate() {
        t.check(&h_two[i] == w, || format!("H(t) g_(2) at t^{i}"));
    }

    // the two factor actions displayed before the H(t) series
    let c2 = PartitionCombo::single(part(&[2]));
    let d1 = [c2.clone(), d_apply(1, &c2), d_apply(1, &d_apply(1, &c2))];
    t.check(
        d1[1] == combo(&[(&[3], one())]) && d1[2] == combo(&[(&[4], one())]),
        || "(1 - d_1 t)^-1 (2)".into(),
    );
    let d2_1 = d_apply(2, &c2);
    let d2_2 = d_apply(2, &d2_1);
    let t1 = d2_1.add(&c2.scale(&b(1, 1)));
    let t2 = d2_2.add(&d2_1.scale(&b(1, 1)));
    t.check(
        t1 == combo(&[(&[2], b(1, 1)), (&[2, 1], one())]) && t2 == combo(&[(&[2, 1], b(1, 1)), (&[2, 2], one())]),
        || "(1 + b t)(1 - d_2 t)^-1 (2)".into(),
    );

    // g_(n) = h_n and g_(1^n) = Σ_j (-β)^j binom(n-1, j) e_{n-j}
    let caps = TruncationCaps::new(5, 5);
    for n in 1..=5u32 {
        let row = dual_determinant(&Partition::row(n), 1, caps).map(|g| g == SymmetricElement::h(n as i64, caps));
        t.check_result(row, || format!("g_({n}) = h_{n}"));
        let mut want = SymmetricElement::zero(Basis::Schur, caps);
        for j in 0..n {
            let c = BetaScalar::monomial(integer_binomial(n as i64 - 1, j), j).scale(&if j % 2 == 1 {
                (-1).into()
            } else {
                1.into()
            });
            want = want
                .try_add(&SymmetricElement::e((n - j) as i64, caps).scale(&c))
                .expect("same caps");
        }
        let col = dual_determinant(&Partition::column(n), n as usize, caps).map(|g| g == want);
        t.check_result(col, || format!("g_(1^{n})"));
    }
    t.finish()
}

/// Tableau sums agree with the determinant in elementary operators.
pub fn tableau_vs_jt(max_weight: u32, max_n: usize) -> CheckReport {
    let starts = [Partition::empty(), part(&[1]), part(&[2, 1])];
    let mut t = Tally::new(format!(
        "tableau route == determinant route, |lambda| <= {max_weight}, n <= {max_n}"
    ));
    for family in [Family::U, Family::D] {
        for lam in partitions_up_to(max_weight, max_n) {
            for n in lam.len().max(1)..=max_n {
                for s in &starts {
                    let c = PartitionCombo::single(s.clone());
                    let ok = noncomm_schur_apply(&lam, n, family, &c) == noncomm_schur_via_jt(&lam, n, family, &c);
                    t.check(ok, || {
                        format!("{} family, lambda = {lam:?}, n = {n}, c = {s:?}", family_name(family))
                    });
                }
            }
        }
    }
    t.finish()
}

fn poly_cache(n: usize) -> impl FnMut(&Partition) -> Result<MultiPoly> {
    let mut cache: HashMap<Partition, MultiPoly> = HashMap::new();
    move |nu: &Partition| {
        if nu.len() > n {
            return Ok(MultiPoly::zero(n));
        }
        if let Some(p) = cache.get(nu) {
            return Ok(p.clone());
        }
        let p = bialternant(nu, n)?;
        cache.insert(nu.clone(), p.clone());
        Ok(p)
    }
}

/// `Σ c_ν G_ν(x_1..x_r) = s_λ(x_1..x_r) G_μ(x_1..x_r)` as full polynomials,
/// with `G` from the bialternant formula.
#[allow(non_snake_case)]
pub fn expand_sG_soundness(max_weight: u32, r: usize) -> CheckReport {
    let shapes = partitions_up_to(max_weight, r);
    let mut t = Tally::new(format!(
        "s_lambda G_mu expansions in {r} variables, |lambda|, |mu| <= {max_weight}"
    ));
    let mut g = poly_cache(r);
    let mut schur: HashMap<Partition, MultiPoly> = HashMap::new();
    for lam in &shapes {
        let s = schur
            .entry(lam.clone())
            .or_insert_with(|| {
                SymmetricElement::schur(lam.clone(), TruncationCaps::new(r, lam.weight())).to_polynomial()
            })
            .clone();
        for mu in &shapes {
            let res = (|| {
                let c = expand_sG(lam, mu, r)?;
                let lhs = &s * &g(mu)?;
                let mut rhs = MultiPoly::zero(r);
                for (nu, k) in c.terms() {
                    rhs = &rhs + &g(nu)?.scale(k);
                }
                Ok(lhs == rhs)
            })();
            t.check_result(res, || format!("lambda = {lam:?}, mu = {mu:?}"));
        }
    }
    t.finish()
}

fn rho(
    c: &PartitionCombo,
    cache: &mut HashMap<Partition, SymmetricElement>,
    caps: TruncationCaps,
) -> Result<SymmetricElement> {
    let mut acc = SymmetricElement::zero(Basis::CompleteH, caps);
    for (nu, k) in c.terms() {
        if !cache.contains_key(nu) {
            cache.insert(nu.clone(), dual_determinant(nu, nu.len(), caps)?);
        }
        acc = acc.try_add(&cache[nu].scale(k))?;
    }
    Ok(acc)
}

fn require_injective(t: &mut Tally, caps: TruncationCaps) -> bool {
    if let Err(e) = caps.require_injective() {
        t.check(false, || format!("caps ({},{}): {e}", caps.n_vars, caps.max_degree));
        return false;
    }
    true
}

/// `Σ c_ν g_ν = s^{(r+s-1)}_λ(x;-β) g_μ` for `r ∈ {ℓ(μ), ℓ(μ)+1}` and
/// `s ∈ {ℓ(λ), ℓ(λ)+1}`.
pub fn expand_sg_soundness(max_weight: u32, caps: TruncationCaps) -> CheckReport {
    let shapes = partitions_up_to(max_weight, max_weight as usize);
    let mut t = Tally::new(format!("s_lambda g_mu expansions, |lambda|, |mu| <= {max_weight}"));
    if !require_injective(&mut t, caps) {
        return t.finish();
    }
    let mut cache = HashMap::new();
    for lam in &shapes {
        for mu in &shapes {
            for r in mu.len()..=mu.len() + 1 {
                for s in lam.len()..=lam.len() + 1 {
                    if r + s == 0 {
                        continue;
                    }
                    let res = (|| {
                        let c = expand_sg(lam, mu, r, s)?;
                        let g_mu = dual_determinant(mu, mu.len(), caps)?;
                        let lhs = beta_prefix_schur(lam, (r + s - 1) as u32, caps).try_mul(&g_mu)?;
                        Ok(lhs == rho(&c, &mut cache, caps)?)
                    })();
                    t.check_result(res, || format!("lambda = {lam:?}, mu = {mu:?}, r = {r}, s = {s}"));
                }
            }
        }
    }
    t.finish()
}

/// `e_i g_λ` and `h_i g_λ` expansions against symmetric-function products.
pub fn pieri_series_soundness(max_i: usize, max_weight: u32, caps: TruncationCaps) -> CheckReport {
    let mut t = Tally::new(format!(
        "e_i g_lambda and h_i g_lambda expansions, i <= {max_i}, |lambda| <= {max_weight}"
    ));
    if !require_injective(&mut t, caps) {
        return t.finish();
    }
    let mut cache = HashMap::new();
    for lam in partitions_up_to(max_weight, max_weight as usize) {
        let g = match dual_determinant(&lam, lam.len(), caps) {
            Ok(g) => g,
            Err(e) => {
                t.check(false, || format!("g{lam:?} ({e})"));
                continue;
            }
        };
        let es = pieri_e_g(max_i, &lam);
        let hs = pieri_h_g(max_i, &lam);
        for i in 0..=max_i {
            let res = (|| Ok(SymmetricElement::e(i as i64, caps).try_mul(&g)? == rho(&es[i], &mut cache, caps)?))();
            t.check_result(res, || format!("e_{i} g{lam:?}"));
            let res = (|| Ok(SymmetricElement::h(i as i64, caps).try_mul(&g)? == rho(&hs[i], &mut cache, caps)?))();
            t.check_result(res, || format!("h_{i} g{lam:?}"));
        }
    }
    t.finish()
}

fn schur_combo(f: &SymmetricElement, max_len: usize) -> Result<PartitionCombo> {
    let s = f.to_basis(Basis::Schur)?;
    Ok(PartitionCombo::from_terms(
        s.coeffs()
            .iter()
            .filter(|(p, _)| p.len() <= max_len)
            .map(|(p, c)| (p.clone(), c.clone())),
    ))
}

/// At `β = 0` every expansion coefficient is the classical
/// Littlewood–Richardson or Pieri number.
pub fn beta_zero_expansions(sg_weight: u32, r: usize, g_weight: u32, max_i: usize) -> CheckReport {
    let mut t = Tally::new("beta = 0 expansions give Littlewood-Richardson coefficients");
    let top = (2 * sg_weight).max(2 * g_weight).max(g_weight + max_i as u32);
    let caps = TruncationCaps::new(top as usize, top);
    let s = |p: &Partition| SymmetricElement::schur(p.clone(), caps);
    for lam in partitions_up_to(sg_weight, r) {
        for mu in partitions_up_to(sg_weight, r) {
            let res = (|| Ok(expand_sG(&lam, &mu, r)?.at_beta_zero() == schur_combo(&s(&lam).try_mul(&s(&mu))?, r)?))();
            t.check_result(res, || format!("s{lam:?} G{mu:?}"));
        }
    }
    let small = partitions_up_to(g_weight, g_weight as usize);
    for lam in &small {
        for mu in &small {
            let res = (|| {
                let c = expand_sg(lam, mu, mu.len(), lam.len().max(1))?;
                Ok(c.at_beta_zero() == schur_combo(&s(lam).try_mul(&s(mu))?, usize::MAX)?)
            })();
            t.check_result(res, || format!("s{lam:?} g{mu:?}"));
        }
        let es = pieri_e_g(max_i, lam);
        let hs = pieri_h_g(max_i, lam);
        for i in 0..=max_i {
            let res = (|| {
                let e = SymmetricElement::e(i as i64, caps).try_mul(&s(lam))?;
                let h = SymmetricElement::h(i as i64, caps).try_mul(&s(lam))?;
                Ok(es[i].at_beta_zero() == schur_combo(&e, usize::MAX)?
                    && hs[i].at_beta_zero() == schur_combo(&h, usize::MAX)?)
            })();
            t.check_result(res, || format!("e_{i}, h_{i} times s{lam:?}"));
        }
    }
    t.finish()
}

// ---------------------------------------------------------------- stability

/// `G^r_λ(x_1..x_n, 0, 0, ...) = G_λ(x_1..x_n)` for `ℓ(λ) ≤ n ≤ r ≤ max_n`.
///
/// Each variable occurs at most `λ_1` times in a monomial of
/// `G_λ(x_1..x_n)`, so degree `n λ_1` is the top; the comparison runs one
/// degree past it.
pub fn stability(max_weight: u32, max_n: usize) -> CheckReport {
    let mut t = Tally::new(format!(
        "G^r restricts to G in n variables, n <= r <= {max_n}, |lambda| <= {max_weight}"
    ));
    for lam in partitions_up_to(max_weight, max_n) {
        for n in lam.len().max(1)..=max_n {
            let top = n as u32 * lam.part(0) + 1;
            let caps = TruncationCaps::new(n, top);
            let reference = bialternant(&lam, n).and_then(|p| {
                let ok = p.total_degree().unwrap_or(0) < top;
                SymmetricElement::from_polynomial(&p, caps).map(|f| (f, ok))
            });
            let (reference, fits) = match reference {
                Ok(v) => v,
                Err(e) => {
                    t.check(false, || format!("{lam:?} in {n} variables ({e})"));
                    continue;
                }
            };
            t.check(fits, || format!("degree bound fails for {lam:?} in {n} variables"));
            for r in n..=max_n {
                let res = g_r_fermionic(&lam, r, caps).map(|g| g == reference);
                t.check_result(res, || format!("lambda = {lam:?}, n = {n}, r = {r}"));
            }
        }
    }
    t.finish()
}

/// The `G^r` operator word and its determinant agree at low degree.
pub fn g_r_routes(max_weight: u32, max_n: usize) -> CheckReport {
    let mut t = Tally::new(format!(
        "G^r word == G^r determinant, r <= {max_n}, |lambda| <= {max_weight}"
    ));
    for lam in partitions_up_to(max_weight, max_n) {
        for n in lam.len().max(1)..=max_n {
            let caps = TruncationCaps::new(n, lam.weight() + 2);
            for r in n..=max_n {
                let res = g_r(&lam, r, caps).map(|_| true);
                t.check_result(res, || format!("lambda = {lam:?}, n = {n}, r = {r}"));
            }
        }
    }
    t.finish()
}

// ---------------------------------------------------------------- suites

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Routes,
    Duality,
    Knuth,
    Wick,
    Pieri,
    Stability,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "routes" => Suite::Routes,
            "duality" => Suite::Duality,
            "knuth" => Suite::Knuth,
            "wick" => Suite::Wick,
            "pieri" => Suite::Pieri,
            "stability" => Suite::Stability,
            "all" => Suite::All,
            other => return Err(Error::Precondition(format!("unknown suite {other:?}"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Overrides the per-suite weight bound.
    pub max_weight: Option<u32>,
    pub seed: u64,
    pub instances: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_weight: None,
            seed: DEFAULT_SEED,
            instances: DEFAULT_INSTANCES,
        }
    }
}

/// Runs a suite and returns its reports sorted by check name.
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Vec<CheckReport> {
    let w = |default: u32| cfg.max_weight.unwrap_or(default);
    let (seed, inst) = (cfg.seed, cfg.instances);
    let mut out = match suite {
        Suite::Routes => {
            let mw = w(6);
            let caps = TruncationCaps::new(6, 8.max(mw + 2));
            vec![
                route_agreement(mw, 3, caps),
                dual_route_agreement(mw, 3, caps),
                beta_zero_constructors(mw, 3, caps),
            ]
        }
        Suite::Duality => {
            let mw = w(5);
            let d = mw.max(8);
            vec![gram_identity(mw, TruncationCaps::new(d as usize, d))]
        }
        Suite::Knuth => vec![
            knuth_relations(Family::U, seed, inst, 5),
            knuth_relations(Family::D, seed, inst, 5),
            elementary_commute(Family::U, seed, inst, 5, 4),
            elementary_commute(Family::D, seed, inst, 5, 4),
        ],
        Suite::Wick => vec![
            anticommutators(seed, inst),
            boson_commutators(seed, inst),
            wick_vs_direct(seed, inst),
            theta_conjugation(seed, inst, 3),
        ],
        Suite::Pieri => {
            let big = w(4);
            let small = big.min(3);
            let caps = TruncationCaps::new(2 * small as usize, 2 * small);
            vec![
                reference_fixtures(),
                tableau_vs_jt(big, 4),
                expand_sG_soundness(big, 4),
                expand_sg_soundness(small, caps),
                pieri_series_soundness(
                    3,
                    small,
                    TruncationCaps::new(6.max(2 * small as usize), 6.max(2 * small)),
                ),
                beta_zero_expansions(big, 4, small, 3),
            ]
        }
        Suite::Stability => {
            let mw = w(5);
            vec![stability(mw, 5), g_r_routes(mw, 4)]
        }
        Suite::All => [
            Suite::Routes,
            Suite::Duality,
            Suite::Knuth,
            Suite::Wick,
            Suite::Pieri,
            Suite::Stability,
        ]
        .into_iter()
        .flat_map(|s| run_suite(s, cfg))
        .collect(),
    };
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}
