use jetframe::verify::{parse_suites, run_suite, Suite, VerifyConfig};
use jetframe::Error;

fn config(seed: u64) -> VerifyConfig {
    VerifyConfig {
        seed,
        samples: Some(10),
        ..VerifyConfig::default()
    }
}

#[test]
fn reports_are_deterministic() {
    let a = run_suite(&config(7)).unwrap();
    let b = run_suite(&config(7)).unwrap();
    assert_eq!(a.len(), Suite::ALL.len());
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(x.max_defect.to_bits(), y.max_defect.to_bits(), "{}", x.name);
        assert_eq!(x, y);
    }
    assert!(a.windows(2).all(|w| w[0].name < w[1].name));
}

#[test]
fn seeds_change_the_samples() {
    let a = run_suite(&config(1)).unwrap();
    let b = run_suite(&config(2)).unwrap();
    assert!(a.iter().zip(&b).any(|(x, y)| x.max_defect != y.max_defect));
}

#[test]
fn every_suite_passes_with_defaults() {
    for report in run_suite(&VerifyConfig::default()).unwrap() {
        assert!(report.passed, "{report}");
    }
}

#[test]
fn suite_lists_parse() {
    assert_eq!(parse_suites("all").unwrap(), Suite::ALL.to_vec());
    assert_eq!(
        parse_suites("phantom, invariance,phantom").unwrap(),
        vec![Suite::Invariance, Suite::Phantom]
    );
    assert!(matches!(parse_suites("nosuch"), Err(Error::Usage(_))));
    assert!(matches!(parse_suites(""), Err(Error::Usage(_))));
}

#[test]
fn low_orders_are_usage_errors() {
    let cfg = VerifyConfig {
        suites: vec![Suite::Recurrences],
        order: 2,
        ..VerifyConfig::default()
    };
    assert!(matches!(run_suite(&cfg), Err(Error::Usage(_))));
}

#[test]
fn tolerance_overrides_apply() {
    let mut cfg = VerifyConfig {
        suites: vec![Suite::Infinitesimal],
        samples: Some(5),
        ..VerifyConfig::default()
    };
    cfg.tolerance_overrides.insert(Suite::Infinitesimal, 0.0);
    let report = &run_suite(&cfg).unwrap()[0];
    assert_eq!(report.tolerance, 0.0);
    assert!(!report.passed);
}
