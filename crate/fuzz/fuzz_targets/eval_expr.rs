#![no_main]

use isoineq_core::functional::ScalarFunction;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() < 8 {
        return;
    }
    let (x, text) = data.split_at(8);
    let x = f64::from_le_bytes(x.try_into().unwrap());
    let Ok(text) = std::str::from_utf8(text) else { return };
    if let Ok(f) = ScalarFunction::parse(text) {
        // evaluation failures are values, never panics
        for at in [x, 0.0, -1.0, 0.5, 2.0, f64::NAN] {
            let _ = f.eval(at);
        }
    }
});
