//! Young-diagram statistic descriptors ("size", "hook:1,2", "theta:1/2", …):
//! parse, and on success require an exact Display/parse roundtrip.

#![no_main]

use libfuzzer_sys::fuzz_target;
use qfkg::young::YoungEval;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(desc) = YoungEval::parse(text) {
        let reparsed = YoungEval::parse(&desc.to_string()).expect("display reparses");
        assert_eq!(reparsed.to_string(), desc.to_string());
    }
});
