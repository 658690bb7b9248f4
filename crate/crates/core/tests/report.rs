use ordercert_core::report::{certify, CertificationReport, CertifyOptions, Status};

#[test]
fn json_round_trip_preserves_the_report() {
    let params = CertifyOptions::new(2).resolve().unwrap();
    let report = certify(&params);
    let text = serde_json::to_string(&report).unwrap();
    let back: CertificationReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, report);
}

#[test]
fn documented_small_case_passes() {
    let opts = CertifyOptions {
        p: Some(13),
        depth: Some(10),
        data: Some(vec![1, 1, 1]),
        ..CertifyOptions::new(3)
    };
    let report = certify(&opts.resolve().unwrap());
    assert!(report.all_passed(), "{}", report.to_text());
    assert!(report.checks.iter().all(|c| c.status == Status::Pass));
}

#[test]
fn non_basic_data_skips_only_the_pushforward_section() {
    let opts = CertifyOptions {
        data: Some(vec![2, 2, 1]),
        ..CertifyOptions::new(3)
    };
    let report = certify(&opts.resolve().unwrap());
    assert!(report.all_passed(), "{}", report.to_text());
    let skipped: Vec<&str> = report
        .checks
        .iter()
        .filter(|c| c.status == Status::Skipped)
        .map(|c| c.id.as_str())
        .collect();
    assert!(skipped.iter().all(|id| id.starts_with("pushforward.")));
    assert_eq!(skipped.len(), 3);
    assert_eq!(report.check("order.overorders").unwrap().status, Status::Pass);
}

#[test]
fn seeds_change_only_the_randomized_witnesses() {
    let run = |seed| {
        let opts = CertifyOptions {
            seed: Some(seed),
            ..CertifyOptions::new(3)
        };
        certify(&opts.resolve().unwrap()).without_timings()
    };
    assert_eq!(run(1), run(1));
    let (a, b) = (run(1), run(2));
    assert_eq!(a.check("ext.simples"), b.check("ext.simples"));
    assert!(b.all_passed());
}
