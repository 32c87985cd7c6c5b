#![no_main]

use isoineq_core::operators::OperatorSpec;
use libfuzzer_sys::fuzz_target;

fn small(s: &OperatorSpec) -> bool {
    s.n.unwrap_or(64) <= 256 && s.k.unwrap_or(128) <= 512 && s.m_cap.unwrap_or(512) <= 1024 && s.points.len() <= 256
}

fuzz_target!(|data: &str| {
    let parsed = [OperatorSpec::parse_compact(data), OperatorSpec::from_json(data)];
    for spec in parsed.into_iter().flatten() {
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(OperatorSpec::from_json(&json).unwrap(), spec);
        if small(&spec) {
            if let Ok(f) = spec.build() {
                assert!(f.weights().iter().all(|&w| w >= 0.0));
            }
        }
    }
});
