//! Acceptance gate: one PASS/FAIL line per criterion.
//!
//! Every comparison is exact equality in ℤ[β]; no numeric tolerance is
//! involved. Time budgets are printed next to the measured time and
//! enforced. Runs without the libtest harness so the lines always print.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use grothendieck::pieri::Family;
use grothendieck::symfunc::TruncationCaps;
use grothendieck::verify::{self, CheckReport, DEFAULT_SEED};

const INSTANCES: usize = 200;

fn criterion(id: u32, title: &str, budget: Duration, run: impl FnOnce() -> Vec<CheckReport>) -> bool {
    let start = Instant::now();
    let reports = run();
    let elapsed = start.elapsed();
    let ok = reports.iter().all(CheckReport::passed) && elapsed <= budget;
    println!(
        "criterion {id} [{}] {title} ({:.1}s of {}s)",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        budget.as_secs()
    );
    for r in &reports {
        println!("    {r}");
    }
    ok
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let results = [
        criterion(1, "route agreement", secs(60), || {
            vec![verify::route_agreement(6, 3, TruncationCaps::new(6, 8))]
        }),
        criterion(2, "duality Gram block", secs(120), || {
            vec![verify::gram_identity(5, TruncationCaps::new(8, 8))]
        }),
        criterion(3, "reference fixtures", secs(60), || vec![verify::reference_fixtures()]),
        criterion(4, "fermion relations", secs(30), || {
            vec![
                verify::anticommutators(DEFAULT_SEED, INSTANCES),
                verify::boson_commutators(DEFAULT_SEED, INSTANCES),
                verify::wick_vs_direct(DEFAULT_SEED, INSTANCES),
                verify::theta_conjugation(DEFAULT_SEED, INSTANCES, 3),
            ]
        }),
        criterion(5, "Pieri soundness", secs(180), || {
            vec![
                verify::expand_sG_soundness(4, 4),
                verify::expand_sg_soundness(3, TruncationCaps::new(6, 6)),
                verify::pieri_series_soundness(3, 3, TruncationCaps::new(6, 6)),
                verify::tableau_vs_jt(4, 4),
                verify::knuth_relations(Family::U, DEFAULT_SEED, INSTANCES, 5),
                verify::knuth_relations(Family::D, DEFAULT_SEED, INSTANCES, 5),
            ]
        }),
        criterion(6, "beta = 0 degenerations", secs(180), || {
            vec![
                verify::beta_zero_constructors(6, 3, TruncationCaps::new(6, 8)),
                verify::beta_zero_expansions(4, 4, 3, 3),
            ]
        }),
        criterion(7, "stability", secs(120), || vec![verify::stability(5, 5)]),
    ];
    let failed: Vec<usize> = (1..=7).filter(|&i| !results[i - 1]).collect();
    if failed.is_empty() {
        println!("acceptance: all 7 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: criteria failed: {failed:?}");
        ExitCode::FAILURE
    }
}
