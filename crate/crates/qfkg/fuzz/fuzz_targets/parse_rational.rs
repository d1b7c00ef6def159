//! Exact rational literals ("3/2", "-7"): parse, then require the canonical
//! formatting to roundtrip to the same value.

#![no_main]

use libfuzzer_sys::fuzz_target;
use qfkg::rat::{format_q, parse_q};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(q) = parse_q(text) {
        let again = parse_q(&format_q(&q)).expect("canonical form reparses");
        assert_eq!(again, q);
    }
});
