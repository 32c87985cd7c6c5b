#![no_main]

use isoineq_core::expr::parse;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    // printing a parsed expression must give text that parses to the same tree
    if let Ok(e) = parse(data) {
        let printed = e.to_string();
        let again = parse(&printed).expect("printed expression reparses");
        assert_eq!(again.to_string(), printed);
    }
});
