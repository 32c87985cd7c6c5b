use super::*;

fn small(trials: u64) -> SuiteConfig {
    SuiteConfig { trials, seed: 11, ..SuiteConfig::default() }
}

#[test]
fn certified_cells_hold() {
    let r = run_suite(&small(5)).unwrap();
    assert_eq!(r.cells.len(), 17 * 8);
    assert_eq!(r.totals.violations, 0);
    assert_eq!(r.totals.hypothesis_failures, 0);
    assert_eq!(r.totals.eval_errors, 0);
    assert!(r.totals.min_slack.unwrap() >= -1e-7);
}

#[test]
fn corruption_always_fails_a_hypothesis() {
    let r = run_suite(&SuiteConfig { corrupt: true, ..small(8) }).unwrap();
    for c in &r.cells {
        assert_eq!(c.hypothesis_failures, c.reports, "{} {}", c.checker, c.kind);
    }
    assert_eq!(r.totals.violations, 0);
}

#[test]
fn every_corruption_variant_is_caught() {
    for &checker in &Checker::ALL {
        for v in 0..corruption_count(checker) {
            let spec = InstanceSpec {
                corruption: Some(v),
                ..small(1).instance(checker, FunctionalKind::Riemann, 3)
            };
            let out = run_trial(&spec);
            assert!(
                out.reports.iter().all(|r| r.verdict == Verdict::HypothesisFailed),
                "{checker} variant {v}"
            );
        }
    }
}

#[test]
fn single_trial_report_is_reproducible() {
    let cfg = SuiteConfig { kinds: vec![FunctionalKind::Discrete], keep_rows: true, ..small(1) };
    let a = serde_json::to_string(&run_suite(&cfg).unwrap()).unwrap();
    let b = serde_json::to_string(&run_suite(&cfg).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn thread_count_does_not_change_the_report() {
    let base = SuiteConfig { keep_rows: true, ..small(3) };
    let one = serde_json::to_string(&run_suite(&SuiteConfig { threads: 1, ..base.clone() }).unwrap()).unwrap();
    for threads in [4, 8] {
        let other = run_suite(&SuiteConfig { threads, ..base.clone() }).unwrap();
        assert_eq!(serde_json::to_string(&other).unwrap(), one, "threads = {threads}");
    }
}

#[test]
fn report_round_trips() {
    let r = run_suite(&SuiteConfig { keep_rows: true, ..small(2) }).unwrap();
    let back: SuiteReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
    assert_eq!(back, r);
    let threaded = run_suite(&SuiteConfig { keep_rows: true, threads: 2, ..small(2) }).unwrap();
    let back: SuiteReport = serde_json::from_str(&serde_json::to_string(&threaded).unwrap()).unwrap();
    assert_eq!(back.config.threads, 0);
}

#[test]
fn wall_time_only_when_asked() {
    let cfg = SuiteConfig { kinds: vec![FunctionalKind::Discrete], checkers: vec![Checker::ChebyshevTwo], ..small(1) };
    assert!(run_suite(&cfg).unwrap().wall_time_ms.is_none());
    assert!(run_suite(&SuiteConfig { timing: true, ..cfg }).unwrap().wall_time_ms.is_some());
}

#[test]
fn invalid_config() {
    assert!(run_suite(&small(0)).is_err());
    assert!(run_suite(&SuiteConfig { kinds: vec![], ..small(1) }).is_err());
}

#[test]
fn shrink_leaves_passing_instance_alone() {
    let spec = small(1).instance(Checker::ChebyshevTwo, FunctionalKind::Riemann, 0);
    assert_eq!(shrink(&spec), spec);
}

#[test]
fn shrink_reduces_a_synthetic_failure() {
    let spec = InstanceSpec { nodes: 64, ..small(1).instance(Checker::HolderPair, FunctionalKind::Riemann, 0) };
    // fails while the instance is still "large"
    let fails = |s: &InstanceSpec| s.amplitude > 0.1 && s.nodes >= 8;
    let shrunk = shrink_by(&spec, fails);
    assert!(fails(&shrunk));
    assert!(shrunk.nodes <= spec.nodes);
    assert!(shrunk.amplitude <= spec.amplitude);
    assert_eq!(shrunk.nodes, 8);
    assert!(shrunk.amplitude < 0.25);
}

#[test]
fn shrink_with_zero_tolerance_on_quadrature() {
    // with no tolerance at all, roundoff alone can push a tight instance below zero
    let tol = ToleranceSpec { abs: 0.0, rel: 0.0 };
    let cfg = SuiteConfig { tolerance: Some(tol), ..small(1) };
    let found = (0..200)
        .map(|t| cfg.instance(Checker::ChebyshevTwo, FunctionalKind::RiemannLiouville, t))
        .find(is_violated);
    if let Some(spec) = found {
        let shrunk = shrink(&spec);
        assert!(is_violated(&shrunk));
        assert!(shrunk.nodes <= spec.nodes);
        assert!(shrunk.amplitude <= spec.amplitude);
    }
}

#[test]
fn doubling_is_limited() {
    let spec = small(1).instance(Checker::ChebyshevTwo, FunctionalKind::Riemann, 0);
    let violated = |s: &InstanceSpec| {
        let mut r = s.run().unwrap();
        r[0].verdict = Verdict::Violated;
        r
    };
    let out = run_trial_with(&spec, violated);
    assert_eq!(out.doublings, MAX_DOUBLINGS);
    assert_eq!(out.spec.nodes, spec.nodes * 4);
    assert_eq!(out.reports[0].verdict, Verdict::Violated);

    // exact kinds are reported without doubling
    let exact = small(1).instance(Checker::ChebyshevTwo, FunctionalKind::Discrete, 0);
    assert_eq!(run_trial_with(&exact, violated).doublings, 0);
}

#[test]
fn doubling_stops_once_the_violation_clears() {
    let spec = small(1).instance(Checker::ChebyshevTwo, FunctionalKind::Riemann, 0);
    let out = run_trial_with(&spec, |s| {
        let mut r = s.run().unwrap();
        if s.nodes == spec.nodes {
            r[0].verdict = Verdict::Violated;
        }
        r
    });
    assert_eq!(out.doublings, 1);
    assert!(out.reports[0].holds());
}

#[test]
fn trial_seeds_differ_across_cells() {
    let s = |k, c, t| trial_seed(5, k, c, t);
    let base = s(FunctionalKind::Discrete, Checker::ChebyshevTwo, 0);
    assert_ne!(base, s(FunctionalKind::Riemann, Checker::ChebyshevTwo, 0));
    assert_ne!(base, s(FunctionalKind::Discrete, Checker::HolderPair, 0));
    assert_ne!(base, s(FunctionalKind::Discrete, Checker::ChebyshevTwo, 1));
}
