use grothendieck::symfunc::TruncationCaps;
use grothendieck::verify::*;

fn small(max_weight: u32) -> VerifyConfig {
    VerifyConfig {
        max_weight: Some(max_weight),
        instances: 20,
        ..VerifyConfig::default()
    }
}

#[test]
fn suites_parse() {
    for name in ["routes", "duality", "knuth", "wick", "pieri", "stability", "all"] {
        assert!(name.parse::<Suite>().is_ok(), "{name}");
    }
    assert!("nope".parse::<Suite>().is_err());
}

#[test]
fn small_suites_pass_in_order() {
    for suite in [
        Suite::Routes,
        Suite::Duality,
        Suite::Knuth,
        Suite::Wick,
        Suite::Stability,
    ] {
        let reports = run_suite(suite, &small(3));
        assert!(!reports.is_empty());
        for r in &reports {
            assert!(r.passed(), "{r}");
        }
        let names: Vec<_> = reports.iter().map(|r| r.name.clone()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
    }
}

#[test]
fn weight_zero_routes_pass() {
    let reports = run_suite(Suite::Routes, &small(0));
    assert!(reports.iter().all(CheckReport::passed));
    assert!(reports.iter().all(|r| r.checked >= 1));
}

#[test]
fn report_lines() {
    let r = route_agreement(2, 2, TruncationCaps::new(4, 4));
    assert!(r.passed());
    assert!(r.to_string().ends_with(&format!("PASS ({} checked)", r.checked)));
    let f = reference_fixtures();
    assert!(f.passed(), "{f}");
}

#[test]
fn same_seed_same_reports() {
    let a = run_suite(Suite::Wick, &small(3));
    let b = run_suite(Suite::Wick, &small(3));
    assert_eq!(
        a.iter().map(ToString::to_string).collect::<Vec<_>>(),
        b.iter().map(ToString::to_string).collect::<Vec<_>>()
    );
}
