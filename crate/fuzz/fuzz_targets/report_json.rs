#![no_main]

use isoineq_core::harness::{InstanceSpec, SuiteReport};
use isoineq_core::inequalities::InequalityReport;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(r) = serde_json::from_slice::<InequalityReport>(data) {
        let text = serde_json::to_string(&r).unwrap();
        let _: InequalityReport = serde_json::from_str(&text).unwrap();
    }
    if let Ok(s) = serde_json::from_slice::<InstanceSpec>(data) {
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(serde_json::from_str::<InstanceSpec>(&text).unwrap(), s);
    }
    let _ = serde_json::from_slice::<SuiteReport>(data);
});
